#include <doctest.h>

#include <map>

#include "kschur/tableaux.hpp"

using namespace kschur;

namespace {

int code(int v, bool primed = false) { return Entry{v, primed}.code(); }

SetValuedTableau make_svt(const SkewShape& shape,
                          const std::map<Box, std::set<int>>& cells) {
    SetValuedTableau t;
    t.shape = shape;
    t.cells = cells;
    return t;
}

// the two displayed shape-(4,2,1) set-valued tableaux
SetValuedTableau svt_example_a() {
    return make_svt(shifted_diagram({4, 2, 1}),
                    {{{3, 3}, {code(3), code(4), code(5)}},
                     {{2, 2}, {code(2, true)}},
                     {{2, 3}, {code(3, true)}},
                     {{1, 1}, {code(1)}},
                     {{1, 2}, {code(2, true)}},
                     {{1, 3}, {code(2)}},
                     {{1, 4}, {code(3, true), code(3)}}});
}

SetValuedTableau svt_example_b() {
    return make_svt(shifted_diagram({4, 2, 1}),
                    {{{3, 3}, {code(5)}},
                     {{2, 2}, {code(3, true)}},
                     {{2, 3}, {code(3)}},
                     {{1, 1}, {code(1), code(2)}},
                     {{1, 2}, {code(2)}},
                     {{1, 3}, {code(2), code(3, true)}},
                     {{1, 4}, {code(3), code(4)}}});
}

} // namespace

TEST_CASE("entries") {
    CHECK(Entry{1, true}.code() == 1);
    CHECK(Entry{1, false}.code() == 2);
    CHECK(Entry{2, true}.code() == 3);
    CHECK(Entry::parse("3'") == Entry{3, true});
    CHECK(Entry::parse("3") == Entry{3, false});
    CHECK(Entry::from_code(5).str() == "3'");
    CHECK(Entry{1, false} < Entry{2, true});
}

TEST_CASE("set-valued tableau validation and weight") {
    SetValuedTableau a = svt_example_a(), b = svt_example_b();
    CHECK(validate(a, DiagonalFamily::Q).ok);
    CHECK(validate(b, DiagonalFamily::Q).ok);
    CHECK_FALSE(validate(a, DiagonalFamily::P).ok); // primed diagonal 2' at (2,2)
    CHECK_FALSE(validate(b, DiagonalFamily::P).ok); // primed diagonal 3' at (2,2)

    for (const auto& t : {a, b}) {
        Weight w = weight(t);
        CHECK(w.size == 10);
        Monomial expect = Monomial::var(xvar(1), 1) * Monomial::var(xvar(2), 3) *
                          Monomial::var(xvar(3), 4) * Monomial::var(xvar(4), 1) *
                          Monomial::var(xvar(5), 1);
        CHECK(w.monomial == expect);
    }

    // an empty entry set violates S1
    SetValuedTableau bad = make_svt(shifted_diagram({1}), {{{1, 1}, {}}});
    CHECK_FALSE(validate(bad, DiagonalFamily::Q).ok);
}

TEST_CASE("plane partition validation and weight") {
    SkewShape shape = shifted_diagram({5, 3, 2, 1});
    PlanePartition a;
    a.shape = shape;
    a.cells = {{{4, 4}, code(3)},       {{3, 3}, code(2)},       {{3, 4}, code(3)},
               {{2, 2}, code(1)},       {{2, 3}, code(2, true)}, {{2, 4}, code(2)},
               {{1, 1}, code(1, true)}, {{1, 2}, code(1, true)}, {{1, 3}, code(1)},
               {{1, 4}, code(1)},       {{1, 5}, code(5, true)}};
    PlanePartition b;
    b.shape = shape;
    b.cells = {{{4, 4}, code(3, true)}, {{3, 3}, code(2, true)}, {{3, 4}, code(2)},
               {{2, 2}, code(1)},       {{2, 3}, code(2, true)}, {{2, 4}, code(2)},
               {{1, 1}, code(1)},       {{1, 2}, code(1)},       {{1, 3}, code(1)},
               {{1, 4}, code(1)},       {{1, 5}, code(5)}};
    CHECK(validate(a, DiagonalFamily::Q).ok);
    CHECK(validate(b, DiagonalFamily::Q).ok);
    CHECK_FALSE(validate(a, DiagonalFamily::P).ok); // unprimed diagonal entries
    CHECK_FALSE(validate(b, DiagonalFamily::P).ok);

    for (const auto& t : {a, b}) {
        Weight w = weight(t);
        CHECK(w.size == 9);
        Monomial expect = Monomial::var(xvar(1), 4) * Monomial::var(xvar(2), 3) *
                          Monomial::var(xvar(3), 1) * Monomial::var(xvar(5), 1);
        CHECK(w.monomial == expect);
    }
}

TEST_CASE("bar tableau validation and weight") {
    // shape (5,3): rows (1,1..5) and (2,2..4)
    BarTableau t;
    t.shape = shifted_diagram({5, 3});
    t.cells = {{{2, 2}, code(2)}, {{2, 3}, code(2)}, {{2, 4}, code(3, true)},
               {{1, 1}, code(1)}, {{1, 2}, code(1)}, {{1, 3}, code(1)},
               {{1, 4}, code(3, true)}, {{1, 5}, code(3)}};
    t.bars = {{{1, 1}, {1, 2}}, {{1, 3}}, {{2, 2}, {2, 3}}, {{1, 4}, {2, 4}}, {{1, 5}}};
    t.normalize();
    CHECK(validate(t, DiagonalFamily::Q).ok);
    Weight w = weight(t);
    CHECK(w.size == 5);
    CHECK(w.monomial == Monomial::var(xvar(1), 2) * Monomial::var(xvar(2), 1) * Monomial::var(xvar(3), 2));

    // bars with unprimed entries span one row, primed entries one column
    BarTableau bad = t;
    bad.bars = {{{1, 1}, {1, 2}}, {{1, 3}}, {{2, 2}, {2, 3}}, {{1, 4}}, {{2, 4}}, {{1, 5}}};
    CHECK(validate(bad, DiagonalFamily::Q).ok); // splitting the vertical bar is fine
    bad.cells[Box{1, 4}] = code(3);
    bad.cells[Box{2, 4}] = code(3);
    CHECK_FALSE(validate(bad, DiagonalFamily::Q).ok); // unprimed repeated in a column
}

TEST_CASE("enumeration examples") {
    // shape (2), bar tableaux, one value: [1'|1], [1 1], [1|1]
    auto bt = all_bt(shifted_diagram({2}), DiagonalFamily::Q, 1);
    CHECK(bt.size() == 3);
    for (const auto& t : bt) CHECK(validate(t, DiagonalFamily::Q).ok);

    // shape (1), set-valued, one value: {1}, {1'}, {1',1}
    auto svt = all_svt(shifted_diagram({1}), DiagonalFamily::Q, 1);
    CHECK(svt.size() == 3);

    // shape (1), plane partitions with primed diagonal: entries 1'..m'
    for (int m = 1; m <= 4; ++m)
        CHECK(all_pp(shifted_diagram({1}), DiagonalFamily::P, m).size() == m);

    // the empty shape has exactly one (empty) filling
    CHECK(all_bt(shifted_diagram({2}, {2}), DiagonalFamily::Q, 2).size() == 1);
    CHECK(all_svt(shifted_diagram({}), DiagonalFamily::P, 2).size() == 1);
}

TEST_CASE("enumeration agrees with brute force and validation") {
    std::vector<std::pair<StrictPartition, StrictPartition>> shapes = {
        {{3}, {}}, {{2, 1}, {}}, {{3, 1}, {}}, {{3, 2}, {1}}, {{4, 1}, {2}}, {{3, 2, 1}, {}}};
    for (const auto& [outer, inner] : shapes) {
        SkewShape shape = shifted_diagram(outer, inner);
        std::vector<Box> boxes(shape.boxes.begin(), shape.boxes.end());
        int n = static_cast<int>(boxes.size());
        const int max_value = 2, max_code = 4;

        for (DiagonalFamily fam : {DiagonalFamily::P, DiagonalFamily::Q}) {
            // set-valued: brute force over all assignments of nonempty subsets
            long long brute = 0;
            std::vector<int> masks(n, 1);
            for (bool done = false; !done;) {
                SetValuedTableau t;
                t.shape = shape;
                for (int k = 0; k < n; ++k) {
                    std::set<int> s;
                    for (int c = 1; c <= max_code; ++c)
                        if (masks[k] & (1 << (c - 1))) s.insert(c);
                    t.cells[boxes[k]] = s;
                }
                if (validate(t, fam).ok) ++brute;
                int k = 0;
                while (k < n && ++masks[k] == 16) masks[k++] = 1;
                done = k == n;
            }
            auto enumerated = all_svt(shape, fam, max_value);
            CHECK(static_cast<long long>(enumerated.size()) == brute);
            for (const auto& t : enumerated) CHECK(validate(t, fam).ok);
            // each yielded exactly once
            for (size_t i = 1; i < enumerated.size(); ++i) CHECK(!(enumerated[i] == enumerated[i - 1]));
        }

        // plane partitions against brute force
        for (DiagonalFamily fam : {DiagonalFamily::P, DiagonalFamily::Q}) {
            long long brute = 0;
            std::vector<int> fill(n, 1);
            for (bool done = false; !done;) {
                PlanePartition t;
                t.shape = shape;
                for (int k = 0; k < n; ++k) t.cells[boxes[k]] = fill[k];
                if (validate(t, fam).ok) ++brute;
                int k = 0;
                while (k < n && ++fill[k] == max_code + 1) fill[k++] = 1;
                done = k == n;
            }
            CHECK(static_cast<long long>(all_pp(shape, fam, max_value).size()) == brute);
        }
    }
}

TEST_CASE("bar tableaux against brute force over fillings and set partitions") {
    SkewShape shape = shifted_diagram({3, 1});
    std::vector<Box> boxes(shape.boxes.begin(), shape.boxes.end());
    int n = static_cast<int>(boxes.size());
    // all fillings times all partitions of the boxes, filtered by validate
    long long brute = 0;
    std::vector<int> fill(n, 1);
    for (bool done = false; !done;) {
        // enumerate set partitions of n boxes by restricted growth strings
        std::vector<int> rg(n, 0);
        for (bool pdone = false; !pdone;) {
            int nblocks = 0;
            for (int k = 0; k < n; ++k) nblocks = std::max(nblocks, rg[k] + 1);
            BarTableau t;
            t.shape = shape;
            for (int k = 0; k < n; ++k) t.cells[boxes[k]] = fill[k];
            t.bars.assign(nblocks, {});
            for (int k = 0; k < n; ++k) t.bars[rg[k]].push_back(boxes[k]);
            t.normalize();
            if (validate(t, DiagonalFamily::Q).ok) ++brute;
            // next restricted growth string
            int k = n - 1;
            for (; k > 0; --k) {
                int maxv = 0;
                for (int j = 0; j < k; ++j) maxv = std::max(maxv, rg[j]);
                if (rg[k] <= maxv) {
                    ++rg[k];
                    for (int j = k + 1; j < n; ++j) rg[j] = 0;
                    break;
                }
                rg[k] = 0;
            }
            pdone = k == 0;
        }
        int k = 0;
        while (k < n && ++fill[k] == 5) fill[k++] = 1;
        done = k == n;
    }
    auto enumerated = all_bt(shape, DiagonalFamily::Q, 2);
    CHECK(static_cast<long long>(enumerated.size()) == brute);
    for (size_t i = 1; i < enumerated.size(); ++i) CHECK(!(enumerated[i] == enumerated[i - 1]));
}

TEST_CASE("family containment") {
    SkewShape shape = shifted_diagram({3, 1});
    auto psvt = all_svt(shape, DiagonalFamily::P, 2);
    auto qsvt = all_svt(shape, DiagonalFamily::Q, 2);
    CHECK(psvt.size() < qsvt.size());
    for (const auto& t : psvt) CHECK(validate(t, DiagonalFamily::Q).ok);
    auto pbt = all_bt(shape, DiagonalFamily::P, 2);
    for (const auto& t : pbt) CHECK(validate(t, DiagonalFamily::Q).ok);
}
