#include <doctest.h>

#include "kschur/bender_knuth.hpp"

using namespace kschur;

namespace {

// Builds a bar tableau from explicit bars; sorted tableaux and intermediate
// swap states need not be semistandard, so no validation here.
BarTableau make_bt(const SkewShape& shape,
                   const std::vector<std::pair<std::vector<Box>, const char*>>& bars) {
    BarTableau t;
    t.shape = shape;
    for (const auto& [boxes, entry] : bars) {
        int code = Entry::parse(entry).code();
        t.bars.push_back(boxes);
        for (const auto& b : boxes) t.cells[b] = code;
    }
    t.normalize();
    REQUIRE(t.cells.size() == shape.boxes.size());
    return t;
}

} // namespace

TEST_CASE("sortedness of the displayed two-diagonal examples") {
    // case (b) examples
    CHECK(is_sorted(make_bt(shifted_diagram({3, 1}),
                            {{{{1, 1}}, "2'"}, {{{1, 2}, {1, 3}}, "1"}, {{{2, 2}}, "2'"}})));
    CHECK(is_sorted(make_bt(shifted_diagram({3, 1}),
                            {{{{1, 1}, {1, 2}, {1, 3}}, "1"}, {{{2, 2}}, "2'"}})));
    SkewShape tall = shifted_diagram({4, 3, 2, 1}, {2, 1});
    CHECK(is_sorted(make_bt(tall, {{{{4, 4}}, "2'"},
                                   {{{3, 3}}, "2'"},
                                   {{{3, 4}}, "1"},
                                   {{{2, 3}, {1, 3}}, "1'"},
                                   {{{2, 4}, {1, 4}}, "2'"}})));
    CHECK(is_sorted(make_bt(tall, {{{{4, 4}}, "2'"},
                                   {{{3, 3}, {3, 4}}, "1"},
                                   {{{2, 3}, {1, 3}}, "1'"},
                                   {{{2, 4}, {1, 4}}, "2'"}})));

    // case (c) examples
    SkewShape hook = shifted_diagram({3, 2, 1}, {2});
    CHECK(is_sorted(make_bt(hook, {{{{3, 3}}, "1"}, {{{2, 2}}, "1"}, {{{2, 3}, {1, 3}}, "2'"}})));
    CHECK(is_sorted(make_bt(hook, {{{{2, 2}}, "1"}, {{{3, 3}, {2, 3}, {1, 3}}, "2'"}})));
    SkewShape wide = shifted_diagram({4, 3});
    CHECK(is_sorted(make_bt(wide, {{{{2, 2}}, "1"},
                                   {{{2, 3}, {2, 4}}, "2"},
                                   {{{1, 1}}, "1"},
                                   {{{1, 2}}, "2'"},
                                   {{{1, 3}, {1, 4}}, "1"}})));
    CHECK(is_sorted(make_bt(wide, {{{{2, 2}, {1, 2}}, "2'"},
                                   {{{2, 3}, {2, 4}}, "2"},
                                   {{{1, 1}}, "1"},
                                   {{{1, 3}, {1, 4}}, "1"}})));

    // the row pattern (1, 2') off the diagonal is never sorted
    CHECK_FALSE(is_sorted(make_bt(shifted_diagram({3, 1}), {{{{1, 1}}, "1'"},
                                                            {{{1, 2}}, "1"},
                                                            {{{1, 3}}, "2'"},
                                                            {{{2, 2}}, "2"}})));
}

TEST_CASE("excluded swap configurations stay unchanged") {
    // 2' directly left of the 1-bar's first box
    BarTableau a = make_bt(shifted_diagram({2, 1}),
                           {{{{1, 1}}, "2'"}, {{{1, 2}}, "1"}, {{{2, 2}}, "2'"}});
    // bars are sorted: locate references
    auto find_bar = [](const BarTableau& t, int code) {
        for (size_t k = 0; k < t.bars.size(); ++k)
            if (t.cells.at(t.bars[k].front()) == code) return static_cast<int>(k);
        return -1;
    };
    int v = -1, h = find_bar(a, Entry::parse("1").code());
    for (size_t k = 0; k < a.bars.size(); ++k)
        if (a.cells.at(a.bars[k].front()) == Entry::parse("2'").code() && a.bars[k][0] == Box{2, 2})
            v = static_cast<int>(k);
    auto [a2, vref] = swap_step(a, v, h);
    CHECK(a2 == a);

    // 1 directly below the 2'-bar's last box
    BarTableau b = make_bt(shifted_diagram({2, 1}),
                           {{{{1, 1}}, "1"}, {{{1, 2}}, "2'"}, {{{2, 2}}, "1"}});
    int vb = find_bar(b, Entry::parse("2'").code());
    int hb = -1;
    for (size_t k = 0; k < b.bars.size(); ++k)
        if (b.cells.at(b.bars[k].front()) == Entry::parse("1").code() && b.bars[k][0] == Box{1, 1})
            hb = static_cast<int>(k);
    auto [b2, vbref] = swap_step(b, vb, hb);
    CHECK(b2 == b);
}

TEST_CASE("the worked multi-panel ascending swap") {
    SkewShape shape = shifted_diagram({11, 9, 5, 4, 1}, {9, 5, 4});
    BarTableau start = make_bt(shape, {{{{1, 10}, {1, 11}}, "1"},
                                       {{{2, 8}, {2, 9}}, "1"},
                                       {{{2, 7}}, "1"},
                                       {{{4, 5}, {4, 6}}, "1"},
                                       {{{4, 4}}, "1"},
                                       {{{2, 10}}, "2'"},
                                       {{{3, 7}, {4, 7}}, "2'"},
                                       {{{5, 5}}, "2'"}});
    BarTableau expect = make_bt(shape, {{{{1, 11}}, "1"},
                                        {{{2, 8}, {2, 9}, {2, 10}}, "1"},
                                        {{{4, 7}}, "1"},
                                        {{{4, 6}}, "1"},
                                        {{{4, 4}}, "1"},
                                        {{{1, 10}}, "2'"},
                                        {{{2, 7}, {3, 7}}, "2'"},
                                        {{{4, 5}, {5, 5}}, "2'"}});
    std::vector<BarTableau> trace;
    BarTableau got = swap_all(start, &trace);
    CHECK(got == expect);
    CHECK(trace.size() == 4); // four individual swaps change the tableau
    CHECK(is_sorted(got));

    std::vector<BarTableau> back_trace;
    CHECK(unswap_all(expect, &back_trace) == start);
    CHECK(back_trace.size() == 4);
}

TEST_CASE("conjugation") {
    SkewShape left_shape = shifted_diagram({4, 3});
    BarTableau left = make_bt(left_shape, {{{{1, 1}}, "1"},
                                           {{{2, 2}, {1, 2}}, "2'"},
                                           {{{2, 3}, {2, 4}}, "2"},
                                           {{{1, 3}, {1, 4}}, "1"}});
    SkewShape right_shape = shifted_diagram({4, 3, 2, 1}, {2, 1});
    BarTableau right = make_bt(right_shape, {{{{4, 4}}, "2'"},
                                             {{{3, 3}, {3, 4}}, "1"},
                                             {{{2, 3}, {1, 3}}, "1'"},
                                             {{{2, 4}, {1, 4}}, "2'"}});
    CHECK(conjugate(left, 5) == right);
    CHECK(conjugate(right, 5) == left);

    // involution for fixed N, and the entry map 1' <-> 2, 1 <-> 2'
    int checked = 0;
    enumerate_bt(shifted_diagram({3, 1}), DiagonalFamily::Q, 2, [&](const BarTableau& t) {
        BarTableau c = conjugate(t, 6);
        CHECK(conjugate(c, 6) == t);
        for (const auto& [b, code] : t.cells) {
            Box image{6 - b.col, 6 - b.row};
            CHECK(c.cells.at(image) == 5 - code);
        }
        return ++checked < 50;
    });
}

TEST_CASE("group classification on the displayed classes") {
    // one row [1][11? -> [1 1][2 2] with two bars is a single one-row group
    BarTableau row = make_bt(shifted_diagram({4}),
                             {{{{1, 1}, {1, 2}}, "1"}, {{{1, 3}, {1, 4}}, "2"}});
    auto groups = classify_groups(row);
    REQUIRE(groups.size() == 1);
    CHECK(groups[0].kind == GroupKind::one_row);

    // first display: a two-row-group
    BarTableau g1 = make_bt(shifted_diagram({2, 1}),
                            {{{{1, 1}, {1, 2}}, "1"}, {{{2, 2}}, "2"}});
    auto c1 = classify_groups(g1);
    REQUIRE(c1.size() == 1);
    CHECK(c1[0].kind == GroupKind::two_row);

    // the other two displays: two-column-groups
    BarTableau g2 = make_bt(shifted_diagram({2, 1}),
                            {{{{1, 1}}, "1'"}, {{{1, 2}}, "2'"}, {{{2, 2}}, "1"}});
    auto c2 = classify_groups(g2);
    REQUIRE(c2.size() == 1);
    CHECK(c2[0].kind == GroupKind::two_column);

    BarTableau g3 = make_bt(shifted_diagram({2, 1}),
                            {{{{1, 1}}, "1'"}, {{{1, 2}}, "2'"}, {{{2, 2}}, "2'"}});
    auto c3 = classify_groups(g3);
    REQUIRE(c3.size() == 1);
    CHECK(c3[0].kind == GroupKind::two_column);
}

TEST_CASE("toggling the labels in one-row groups") {
    SkewShape row7 = shifted_diagram({7});
    auto bars_of = [](std::vector<int> cuts, std::vector<const char*> entries) {
        // boxes (1,1)..(1,7) split after the listed columns
        std::vector<std::pair<std::vector<Box>, const char*>> out;
        int start = 1;
        size_t e = 0;
        cuts.push_back(7);
        for (int cut : cuts) {
            std::vector<Box> boxes;
            for (int c = start; c <= cut; ++c) boxes.push_back(Box{1, c});
            out.emplace_back(boxes, entries[e++]);
            start = cut + 1;
        }
        return out;
    };
    // [1][11][1][222] -> [1][22][2][222]
    BarTableau t1 = make_bt(row7, bars_of({1, 3, 4}, {"1", "1", "1", "2"}));
    BarTableau e1 = make_bt(row7, bars_of({1, 3, 4}, {"1", "2", "2", "2"}));
    CHECK(reverse_weight(t1) == e1);
    CHECK(reverse_weight(e1) == t1);

    // [1'][11][1][222] -> [1'][22][2][222]
    BarTableau t2 = make_bt(row7, bars_of({1, 3, 4}, {"1'", "1", "1", "2"}));
    BarTableau e2 = make_bt(row7, bars_of({1, 3, 4}, {"1'", "2", "2", "2"}));
    CHECK(reverse_weight(t2) == e2);
    CHECK(reverse_weight(e2) == t2);

    // [2'][1][22][2][22] -> [2'][1][11][1][11]
    BarTableau t3 = make_bt(row7, bars_of({1, 2, 4, 5}, {"2'", "1", "2", "2", "2"}));
    BarTableau e3 = make_bt(row7, bars_of({1, 2, 4, 5}, {"2'", "1", "1", "1", "1"}));
    CHECK(reverse_weight(t3) == e3);

    // [1][11][1][111] -> all twos
    BarTableau t4 = make_bt(row7, bars_of({1, 3, 4}, {"1", "1", "1", "1"}));
    BarTableau e4 = make_bt(row7, bars_of({1, 3, 4}, {"2", "2", "2", "2"}));
    CHECK(reverse_weight(t4) == e4);
}

TEST_CASE("toggling the divisions in a two-row group") {
    SkewShape shape = shifted_diagram({8, 6}, {3, 1});
    // rows: upper (2,3..7), lower (1,4..8)
    BarTableau t = make_bt(shape, {{{{2, 3}, {2, 4}, {2, 5}, {2, 6}}, "2"},
                                   {{{2, 7}}, "2"},
                                   {{{1, 4}}, "1"},
                                   {{{1, 5}, {1, 6}, {1, 7}, {1, 8}}, "1"}});
    BarTableau e = make_bt(shape, {{{{2, 3}, {2, 4}}, "2"},
                                   {{{2, 5}, {2, 6}, {2, 7}}, "2"},
                                   {{{1, 4}, {1, 5}, {1, 6}}, "1"},
                                   {{{1, 7}, {1, 8}}, "1"}});
    CHECK(reverse_weight(t) == e);
    CHECK(reverse_weight(e) == t);
}

TEST_CASE("diagonal cases (R1) and (R2)") {
    SkewShape shape = shifted_diagram({8, 6});
    // (R1): one-box 1 at the diagonal under a 2
    BarTableau r1 = make_bt(shape, {{{{1, 1}}, "1"},
                                    {{{1, 2}, {1, 3}, {1, 4}}, "1"},
                                    {{{1, 5}, {1, 6}, {1, 7}, {1, 8}}, "1"},
                                    {{{2, 2}, {2, 3}, {2, 4}, {2, 5}}, "2"},
                                    {{{2, 6}, {2, 7}}, "2"}});
    BarTableau r1_expect = make_bt(shape, {{{{1, 1}}, "2'"},
                                           {{{1, 2}, {1, 3}, {1, 4}, {1, 5}}, "1"},
                                           {{{1, 6}, {1, 7}, {1, 8}}, "1"},
                                           {{{2, 2}, {2, 3}, {2, 4}}, "2"},
                                           {{{2, 5}, {2, 6}, {2, 7}}, "2"}});
    CHECK(reverse_weight(r1) == r1_expect);
    CHECK(reverse_weight(r1_expect) == r1);

    // (R2): one-box 1' at the diagonal, long bar to its right
    BarTableau r2 = make_bt(shape, {{{{1, 1}}, "1'"},
                                    {{{1, 2}, {1, 3}, {1, 4}}, "1"},
                                    {{{1, 5}, {1, 6}, {1, 7}, {1, 8}}, "1"},
                                    {{{2, 2}, {2, 3}, {2, 4}, {2, 5}}, "2"},
                                    {{{2, 6}, {2, 7}}, "2"}});
    BarTableau r2_expect = make_bt(shape, {{{{1, 1}, {1, 2}, {1, 3}, {1, 4}, {1, 5}}, "1"},
                                           {{{1, 6}, {1, 7}, {1, 8}}, "1"},
                                           {{{2, 2}}, "2'"},
                                           {{{2, 3}, {2, 4}}, "2"},
                                           {{{2, 5}, {2, 6}, {2, 7}}, "2"}});
    CHECK(reverse_weight(r2) == r2_expect);
    CHECK(reverse_weight(r2_expect) == r2); // this is the (R3) direction
}

TEST_CASE("diagonal cases (C4) and (C5)") {
    SkewShape shape = shifted_diagram({3, 2, 1}, {2});
    BarTableau c4 = make_bt(shape, {{{{3, 3}}, "2"}, {{{2, 2}}, "1'"}, {{{2, 3}, {1, 3}}, "2'"}});
    BarTableau c5 = make_bt(shape, {{{{3, 3}}, "1"}, {{{2, 2}}, "1"}, {{{2, 3}, {1, 3}}, "2'"}});
    CHECK(reverse_weight(c4) == c5);
    CHECK(reverse_weight(c5) == c4);
}

TEST_CASE("tau on a single box") {
    BarTableau t = make_bt(shifted_diagram({1}), {{{{1, 1}}, "1"}});
    BarTableau expect = make_bt(shifted_diagram({1}), {{{{1, 1}}, "2"}});
    CHECK(tau(t, 1) == expect);
    CHECK(tau(expect, 1) == t);
}

TEST_CASE("exhaustive battery on small shapes") {
    for (const auto& spec : std::vector<std::pair<StrictPartition, StrictPartition>>{
             {{3, 1}, {}}, {{2, 1}, {}}, {{4}, {}}, {{3, 2}, {}}, {{3, 2}, {1}}, {{2, 1}, {1}}}) {
        SkewShape shape = shifted_diagram(spec.first, spec.second);
        enumerate_bt(shape, DiagonalFamily::Q, 2, [&](const BarTableau& t) {
            BarTableau sorted = swap_all(t);
            REQUIRE(is_sorted(sorted));
            REQUIRE(unswap_all(sorted) == t);
            REQUIRE(weight_vector(sorted, 2) == weight_vector(t, 2));

            // reverse_weight is a weight-reversing involution on the sorted side
            BarTableau rev = reverse_weight(sorted);
            REQUIRE(is_sorted(rev));
            auto w = weight_vector(sorted, 2);
            std::swap(w[0], w[1]);
            REQUIRE(weight_vector(rev, 2) == w);
            REQUIRE(reverse_weight(rev) == sorted);
            // groups of the image occupy the same box sets, after uniting the
            // groups of the two-diagonal-box complex (the diagonal cases may
            // rearrange divisions across the whole complex)
            auto boxes_of = [](const std::vector<Group>& gs) {
                int diag_row = 0;
                GroupKind diag_kind = GroupKind::one_row;
                for (const auto& g : gs) {
                    int nd = 0, lo = 0;
                    for (const auto& b : g.boxes)
                        if (b.row == b.col) {
                            ++nd;
                            lo = lo == 0 ? b.row : std::min(lo, b.row);
                        }
                    if (nd == 2) {
                        diag_row = lo;
                        diag_kind = g.kind;
                    }
                }
                std::set<std::set<Box>> out;
                std::set<Box> complex_boxes;
                for (const auto& g : gs) {
                    bool inside = diag_row > 0 && g.kind == diag_kind;
                    for (const auto& b : g.boxes) {
                        int line = diag_kind == GroupKind::two_row ? b.row : b.col;
                        inside &= line == diag_row || line == diag_row + 1;
                    }
                    if (inside) complex_boxes.insert(g.boxes.begin(), g.boxes.end());
                    else out.insert(g.boxes);
                }
                if (!complex_boxes.empty()) out.insert(complex_boxes);
                return out;
            };
            REQUIRE(boxes_of(classify_groups(rev)) == boxes_of(classify_groups(sorted)));

            // swap is inverse to unswap on the sorted side too
            REQUIRE(swap_all(unswap_all(sorted)) == sorted);
            return true;
        });
    }
}

TEST_CASE("tau preserves the P subset and acts locally") {
    SkewShape shape = shifted_diagram({3, 2}, {1});
    enumerate_bt(shape, DiagonalFamily::Q, 3, [&](const BarTableau& t) {
        for (int k : {1, 2}) {
            BarTableau image = tau(t, k);
            REQUIRE(validate(image, DiagonalFamily::Q).ok);
            auto w = weight_vector(t, 3), wi = weight_vector(image, 3);
            std::swap(w[k - 1], w[k]);
            REQUIRE(wi == w);
            REQUIRE(tau(image, k) == t);
            REQUIRE(primed_diagonal_count(image) == primed_diagonal_count(t));
            // locality: cells outside the working alphabet are untouched
            for (const auto& [b, c] : t.cells) {
                int lo = 2 * k - 1, hi = 2 * k + 2;
                if (c < lo || c > hi) REQUIRE(image.cells.at(b) == c);
            }
        }
        return true;
    });
    // for BT_P inputs, the image stays in BT_P
    enumerate_bt(shape, DiagonalFamily::P, 2, [&](const BarTableau& t) {
        REQUIRE(validate(tau(t, 1), DiagonalFamily::P).ok);
        return true;
    });
}

namespace {

// 180-degree rotation of the occupied boxes (translated back into the
// shifted quadrant); entries and bar structure travel along
BarTableau rotate180(const BarTableau& t) {
    int rmin = 1 << 20, rmax = 0, cmin = 1 << 20, cmax = 0;
    for (const auto& [b, c] : t.cells) {
        rmin = std::min(rmin, b.row);
        rmax = std::max(rmax, b.row);
        cmin = std::min(cmin, b.col);
        cmax = std::max(cmax, b.col);
    }
    int R = rmin + rmax, C = cmin + cmax;
    int shift = 0;
    for (const auto& [b, c] : t.cells) shift = std::max(shift, (R - b.row) - (C - b.col));
    BarTableau out;
    std::set<Box> boxes;
    for (const auto& [b, c] : t.cells) {
        Box nb{R - b.row, C - b.col + shift};
        out.cells[nb] = c;
        boxes.insert(nb);
    }
    for (const auto& bar : t.bars) {
        Bar nb;
        for (const auto& b : bar) nb.push_back(Box{R - b.row, C - b.col + shift});
        out.bars.push_back(nb);
    }
    out.shape = skew_from_boxes(boxes);
    out.normalize();
    return out;
}

} // namespace

TEST_CASE("rotation intertwines swap and unswap away from the diagonal") {
    // On {1, 2'}-filled tableaux of diagonal-free shapes, rotating by 180
    // degrees exchanges the sorted and semistandard sides, and
    // swap(rotate(T)) = rotate(unswap(T)) for sorted T.
    int checked = 0;
    for (const auto& spec : std::vector<std::pair<StrictPartition, StrictPartition>>{
             {{4, 2}, {2}}, {{5, 3}, {2, 1}}, {{4, 3}, {3, 1}}, {{6, 3}, {4, 1}}, {{5, 4}, {3, 2}}}) {
        SkewShape shape = shifted_diagram(spec.first, spec.second);
        enumerate_bt(shape, DiagonalFamily::Q, 2, [&](const BarTableau& t) {
            for (const auto& [b, c] : t.cells)
                if (c != Entry{1, false}.code() && c != Entry{2, true}.code()) return true;
            BarTableau sorted = swap_all(t);
            REQUIRE(swap_all(rotate180(sorted)) == rotate180(unswap_all(sorted)));
            ++checked;
            return true;
        });
    }
    CHECK(checked > 0);
}
