#include "kschur/bender_knuth.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>

namespace kschur {

namespace {

// Entry codes on the working alphabet: 1' = 1, 1 = 2, 2' = 3, 2 = 4.
constexpr int kOnePrimed = 1;
constexpr int kOne = 2;
constexpr int kTwoPrimed = 3;
constexpr int kTwo = 4;

bool code_primed(int c) { return c % 2 == 1; }

// Order for sortedness: 1' < 2' < 1 < 2.
int sorted_key(int code) {
    switch (code) {
        case kOnePrimed: return 1;
        case kTwoPrimed: return 2;
        case kOne: return 3;
        case kTwo: return 4;
    }
    throw std::invalid_argument("entry outside the {1',1,2',2} alphabet");
}

// Internal working state; bar indices are stable under all operations.
struct State {
    std::map<Box, int> cells;
    std::vector<Bar> bars; // each bar sorted

    int cell(int i, int j) const {
        auto it = cells.find(Box{i, j});
        return it == cells.end() ? 0 : it->second;
    }
    bool has(int i, int j) const { return cells.count(Box{i, j}) > 0; }
    int bar_of(const Box& b) const {
        for (size_t k = 0; k < bars.size(); ++k)
            for (const auto& x : bars[k])
                if (x == b) return static_cast<int>(k);
        throw std::logic_error("bar_of: box not covered");
    }
    void set_bar_entries(int ref, int code) {
        for (const auto& b : bars[ref]) cells[b] = code;
    }
};

State to_state(const BarTableau& t) {
    State s;
    s.cells = t.cells;
    s.bars = t.bars;
    for (auto& bar : s.bars) std::sort(bar.begin(), bar.end());
    return s;
}

BarTableau from_state(const State& s, const SkewShape& shape) {
    BarTableau t;
    t.shape = shape;
    t.cells = s.cells;
    t.bars = s.bars;
    t.normalize();
    return t;
}

bool blanket_ok(const State& s) {
    std::map<std::pair<int, int>, int> col_unprimed, row_primed;
    for (const auto& [b, c] : s.cells) {
        if (!code_primed(c)) {
            if (++col_unprimed[{b.col, c}] > 1) return false;
        } else {
            if (++row_primed[{b.row, c}] > 1) return false;
        }
    }
    return true;
}

bool sorted_condition_a(const State& s) {
    for (const auto& [b, c] : s.cells) {
        int rt = s.cell(b.row, b.col + 1);
        if (rt && sorted_key(c) > sorted_key(rt)) return false;
        int up = s.cell(b.row + 1, b.col);
        if (up && sorted_key(c) > sorted_key(up)) return false;
    }
    return true;
}

std::vector<Box> diagonal_boxes(const State& s) {
    std::vector<Box> d;
    for (const auto& [b, c] : s.cells)
        if (b.row == b.col) d.push_back(b);
    std::sort(d.begin(), d.end());
    return d;
}

bool is_sorted_state(const State& s) {
    if (!blanket_ok(s)) return false;
    if (sorted_condition_a(s)) return true;
    auto diag = diagonal_boxes(s);
    if (diag.size() != 2 || diag[1].row != diag[0].row + 1) return false;
    int i = diag[0].row;
    // (b): T(i,i+1) = 1, T(i+1,i+1) = 2', and T(i,i) = 2' or (i,i),(i,i+1)
    // share a bar with entry 1; changing (i+1,i+1) to 2 must satisfy (a)
    if (s.cell(i, i + 1) == kOne && s.cell(i + 1, i + 1) == kTwoPrimed) {
        bool head_ok = s.cell(i, i) == kTwoPrimed ||
                       (s.cell(i, i) == kOne && s.bar_of(Box{i, i}) == s.bar_of(Box{i, i + 1}));
        if (head_ok) {
            State mod = s;
            mod.cells[Box{i + 1, i + 1}] = kTwo;
            if (blanket_ok(mod) && sorted_condition_a(mod)) return true;
        }
    }
    // (c): T(i,i) = 1, T(i,i+1) = 2', and T(i+1,i+1) = 1 or (i+1,i+1),(i,i+1)
    // share a bar with entry 2'; changing (i,i) to 1' must satisfy (a)
    if (s.cell(i, i) == kOne && s.cell(i, i + 1) == kTwoPrimed) {
        bool head_ok = s.cell(i + 1, i + 1) == kOne ||
                       (s.cell(i + 1, i + 1) == kTwoPrimed &&
                        s.bar_of(Box{i + 1, i + 1}) == s.bar_of(Box{i, i + 1}));
        if (head_ok) {
            State mod = s;
            mod.cells[Box{i, i}] = kOnePrimed;
            if (blanket_ok(mod) && sorted_condition_a(mod)) return true;
        }
    }
    return false;
}

// ---------------------------------------------------------------------------
// Swap steps.  V is a 2'-bar (vertical or single), H a 1-bar (horizontal or
// single).  Entries never move between values; only box ownership changes.

bool do_swap_step(State& s, int vref, int href) {
    Bar& H = s.bars[href];
    Bar& V = s.bars[vref];
    Box hf = H.front(), hl = H.back();
    Box vf = V.front(), vl = V.back();
    // (a) first boxes (i,j) of H and (i+1,j) of V, and T(i,j-1) != 2'
    if (vf.row == hf.row + 1 && vf.col == hf.col) {
        if (s.cell(hf.row, hf.col - 1) == kTwoPrimed) return false;
        if (H.size() > 1) {
            H.erase(H.begin());
            V.insert(V.begin(), hf);
        } else {
            Bar moved;
            for (const auto& b : V) moved.push_back(Box{b.row - 1, b.col});
            H = Bar{vl};
            V = moved;
        }
        s.set_bar_entries(href, kOne);
        s.set_bar_entries(vref, kTwoPrimed);
        return true;
    }
    // (b) last boxes (i,j) of H and (i,j+1) of V, and T(i+1,j+1) != 1
    if (vl.row == hl.row && vl.col == hl.col + 1) {
        if (s.cell(hl.row + 1, hl.col + 1) == kOne) return false;
        if (V.size() > 1) {
            V.pop_back();
            H.push_back(vl);
        } else {
            Bar moved;
            for (const auto& b : H) moved.push_back(Box{b.row, b.col + 1});
            V = Bar{hf};
            H = moved;
        }
        s.set_bar_entries(href, kOne);
        s.set_bar_entries(vref, kTwoPrimed);
        return true;
    }
    return false;
}

bool do_unswap_step(State& s, int vref, int href) {
    Bar& H = s.bars[href];
    Bar& V = s.bars[vref];
    Box hf = H.front(), hl = H.back();
    Box vf = V.front(), vl = V.back();
    // (a) first boxes (i,j) of V and (i,j+1) of H
    if (hf.row == vf.row && hf.col == vf.col + 1) {
        if (V.size() > 1) {
            V.erase(V.begin());
            H.insert(H.begin(), vf);
        } else {
            Bar moved;
            for (const auto& b : H) moved.push_back(Box{b.row, b.col - 1});
            V = Bar{hl};
            H = moved;
        }
        s.set_bar_entries(href, kOne);
        s.set_bar_entries(vref, kTwoPrimed);
        return true;
    }
    // (b) last boxes (i,j) of V and (i+1,j) of H
    if (hl.row == vl.row + 1 && hl.col == vl.col) {
        if (H.size() > 1) {
            H.pop_back();
            V.push_back(hl);
        } else {
            Bar moved;
            for (const auto& b : V) moved.push_back(Box{b.row + 1, b.col});
            H = Bar{vf};
            V = moved;
        }
        s.set_bar_entries(href, kOne);
        s.set_bar_entries(vref, kTwoPrimed);
        return true;
    }
    return false;
}

// 1-bars right to left (disjoint column ranges), 2'-bars bottom to top
// (disjoint row ranges).
std::vector<int> one_bars_right_to_left(const State& s) {
    std::vector<std::pair<int, int>> keyed; // (-max col, ref)
    for (size_t k = 0; k < s.bars.size(); ++k)
        if (s.cells.at(s.bars[k].front()) == kOne)
            keyed.emplace_back(-s.bars[k].back().col, static_cast<int>(k));
    std::sort(keyed.begin(), keyed.end());
    std::vector<int> out;
    for (const auto& [key, ref] : keyed) out.push_back(ref);
    return out;
}

std::vector<int> twoprime_bars_bottom_to_top(const State& s) {
    std::vector<std::pair<int, int>> keyed; // (min row, ref)
    for (size_t k = 0; k < s.bars.size(); ++k)
        if (s.cells.at(s.bars[k].front()) == kTwoPrimed)
            keyed.emplace_back(s.bars[k].front().row, static_cast<int>(k));
    std::sort(keyed.begin(), keyed.end());
    std::vector<int> out;
    for (const auto& [key, ref] : keyed) out.push_back(ref);
    return out;
}

void check_alphabet(const State& s) {
    for (const auto& [b, c] : s.cells) sorted_key(c);
}

State swap_all_state(State s, const SkewShape& shape, std::vector<BarTableau>* trace) {
    check_alphabet(s);
    for (int vref : twoprime_bars_bottom_to_top(s)) {
        for (int href : one_bars_right_to_left(s)) {
            if (do_swap_step(s, vref, href) && trace) trace->push_back(from_state(s, shape));
        }
    }
    return s;
}

State unswap_all_state(State s, const SkewShape& shape, std::vector<BarTableau>* trace) {
    check_alphabet(s);
    auto vs = twoprime_bars_bottom_to_top(s);
    std::reverse(vs.begin(), vs.end());
    for (int vref : vs) {
        auto hs = one_bars_right_to_left(s);
        std::reverse(hs.begin(), hs.end());
        for (int href : hs) {
            if (do_unswap_step(s, vref, href) && trace) trace->push_back(from_state(s, shape));
        }
    }
    return s;
}

int auto_bound(const State& s) {
    int m = 1;
    for (const auto& [b, c] : s.cells) m = std::max({m, b.row + 1, b.col + 1});
    return m;
}

State conjugate_state(const State& s, int N) {
    for (const auto& [b, c] : s.cells)
        if (b.row > N - 1 || b.col > N - 1)
            throw std::invalid_argument("conjugate: N too small");
    State r;
    for (const auto& [b, c] : s.cells) r.cells[Box{N - b.col, N - b.row}] = 5 - c;
    for (const auto& bar : s.bars) {
        Bar nb;
        for (const auto& b : bar) nb.push_back(Box{N - b.col, N - b.row});
        std::sort(nb.begin(), nb.end());
        r.bars.push_back(nb);
    }
    return r;
}

} // namespace

// ---------------------------------------------------------------------------
// Public wrappers

bool is_sorted(const BarTableau& t) {
    return is_sorted_state(to_state(t));
}

std::pair<BarTableau, BarRef> swap_step(const BarTableau& t, BarRef v, BarRef h) {
    State s = to_state(t);
    if (v < 0 || v >= static_cast<int>(s.bars.size()) || h < 0 || h >= static_cast<int>(s.bars.size()))
        throw std::invalid_argument("swap_step: bad bar reference");
    if (s.cells.at(s.bars[v].front()) != kTwoPrimed || s.cells.at(s.bars[h].front()) != kOne)
        throw std::invalid_argument("swap_step: bars must carry entries 2' and 1");
    do_swap_step(s, v, h);
    BarTableau out;
    out.shape = t.shape;
    out.cells = s.cells;
    out.bars = s.bars; // keep index stability; caller sees v unchanged
    return {out, v};
}

std::pair<BarTableau, BarRef> unswap_step(const BarTableau& t, BarRef v, BarRef h) {
    State s = to_state(t);
    if (v < 0 || v >= static_cast<int>(s.bars.size()) || h < 0 || h >= static_cast<int>(s.bars.size()))
        throw std::invalid_argument("unswap_step: bad bar reference");
    if (s.cells.at(s.bars[v].front()) != kTwoPrimed || s.cells.at(s.bars[h].front()) != kOne)
        throw std::invalid_argument("unswap_step: bars must carry entries 2' and 1");
    do_unswap_step(s, v, h);
    BarTableau out;
    out.shape = t.shape;
    out.cells = s.cells;
    out.bars = s.bars;
    return {out, v};
}

BarTableau swap_all(const BarTableau& t, std::vector<BarTableau>* trace) {
    return from_state(swap_all_state(to_state(t), t.shape, trace), t.shape);
}

BarTableau unswap_all(const BarTableau& t, std::vector<BarTableau>* trace) {
    return from_state(unswap_all_state(to_state(t), t.shape, trace), t.shape);
}

BarTableau conjugate(const BarTableau& t, int N) {
    State s = to_state(t);
    if (N == 0) N = auto_bound(s);
    State r = conjugate_state(s, N);
    std::set<Box> boxes;
    for (const auto& [b, c] : r.cells) boxes.insert(b);
    BarTableau out;
    out.shape = skew_from_boxes(boxes);
    out.cells = r.cells;
    out.bars = r.bars;
    out.normalize();
    return out;
}

// ---------------------------------------------------------------------------
// Groups

namespace {

struct GroupsResult {
    std::vector<std::vector<int>> members; // bar refs per group
    std::vector<GroupKind> kinds;
};

GroupsResult classify_state(const State& s) {
    size_t n = s.bars.size();
    auto diag = diagonal_boxes(s);
    bool two_diag = diag.size() == 2 && diag[1].row == diag[0].row + 1;
    Box between{0, 0};
    if (two_diag) between = Box{diag[0].row, diag[0].col + 1};

    auto entry = [&](int ref) { return s.cells.at(s.bars[ref].front()); };
    auto is_single_diag = [&](int ref) {
        return s.bars[ref].size() == 1 && s.bars[ref][0].row == s.bars[ref][0].col;
    };
    auto bar_contains = [&](int ref, const Box& b) {
        return std::find(s.bars[ref].begin(), s.bars[ref].end(), b) != s.bars[ref].end();
    };

    // union-find over the approx relation
    std::vector<int> parent(n);
    for (size_t k = 0; k < n; ++k) parent[k] = static_cast<int>(k);
    std::function<int(int)> find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };

    for (size_t a = 0; a < n; ++a)
        for (size_t b = a + 1; b < n; ++b) {
            int ea = entry(static_cast<int>(a)), eb = entry(static_cast<int>(b));
            bool rel = false;
            if (!code_primed(ea) && !code_primed(eb)) {
                for (const auto& x : s.bars[a])
                    for (const auto& y : s.bars[b]) rel |= (x.col == y.col);
            } else if (code_primed(ea) && code_primed(eb)) {
                for (const auto& x : s.bars[a])
                    for (const auto& y : s.bars[b]) rel |= (x.row == y.row);
            }
            if (!rel && two_diag) {
                auto exceptional = [&](int u, int v) {
                    return is_single_diag(u) &&
                           (s.bars[u][0] == diag[0] || s.bars[u][0] == diag[1]) &&
                           bar_contains(v, between);
                };
                rel = exceptional(static_cast<int>(a), static_cast<int>(b)) ||
                      exceptional(static_cast<int>(b), static_cast<int>(a));
            }
            if (rel) unite(static_cast<int>(a), static_cast<int>(b));
        }

    std::map<int, std::vector<int>> approx_classes;
    for (size_t k = 0; k < n; ++k) approx_classes[find(static_cast<int>(k))].push_back(static_cast<int>(k));

    GroupsResult out;
    std::vector<int> loose; // singleton approx classes go to the ~ stage
    for (const auto& [root, refs] : approx_classes) {
        if (refs.size() < 2) {
            loose.push_back(refs[0]);
            continue;
        }
        std::set<Box> boxes;
        for (int r : refs)
            for (const auto& b : s.bars[r]) boxes.insert(b);
        bool any_primed_offdiag = false, any_unprimed_offdiag = false;
        for (const auto& b : boxes) {
            if (b.row == b.col) continue;
            (code_primed(s.cells.at(b)) ? any_primed_offdiag : any_unprimed_offdiag) = true;
        }
        if (any_primed_offdiag && any_unprimed_offdiag)
            throw std::logic_error("classify_groups: mixed off-diagonal entries in a two-line group");
        if (!any_primed_offdiag && !any_unprimed_offdiag)
            throw std::logic_error("classify_groups: two-line group with no off-diagonal boxes");
        out.members.push_back(refs);
        out.kinds.push_back(any_unprimed_offdiag ? GroupKind::two_row : GroupKind::two_column);
    }

    // ~ relation among the remaining bars
    std::map<int, int> loose_index;
    for (size_t k = 0; k < loose.size(); ++k) loose_index[loose[k]] = static_cast<int>(k);
    std::vector<int> lparent(loose.size());
    for (size_t k = 0; k < loose.size(); ++k) lparent[k] = static_cast<int>(k);
    std::function<int(int)> lfind = [&](int a) {
        while (lparent[a] != a) a = lparent[a] = lparent[lparent[a]];
        return a;
    };
    auto adjacent = [&](int u, int v) {
        for (const auto& x : s.bars[u])
            for (const auto& y : s.bars[v]) {
                int dr = x.row - y.row, dc = x.col - y.col;
                if ((std::abs(dr) == 1 && dc == 0) || (dr == 0 && std::abs(dc) == 1)) return true;
            }
        return false;
    };
    for (size_t a = 0; a < loose.size(); ++a)
        for (size_t b = a + 1; b < loose.size(); ++b) {
            int u = loose[a], v = loose[b];
            int eu = entry(u), ev = entry(v);
            bool rel = false;
            if (!code_primed(eu) && !code_primed(ev)) {
                // adjacent in the same row
                Box ub = s.bars[u].back(), vf = s.bars[v].front();
                Box vb = s.bars[v].back(), uf = s.bars[u].front();
                rel = (ub.row == vf.row && ub.col + 1 == vf.col) ||
                      (vb.row == uf.row && vb.col + 1 == uf.col);
            } else if (code_primed(eu) && code_primed(ev)) {
                Box ub = s.bars[u].back(), vf = s.bars[v].front();
                Box vb = s.bars[v].back(), uf = s.bars[u].front();
                rel = (ub.col == vf.col && ub.row + 1 == vf.row) ||
                      (vb.col == uf.col && vb.row + 1 == uf.row);
            }
            if (!rel && (is_single_diag(u) || is_single_diag(v))) rel = adjacent(u, v);
            if (rel) lparent[lfind(static_cast<int>(a))] = lfind(static_cast<int>(b));
        }
    std::map<int, std::vector<int>> tilde_classes;
    for (size_t k = 0; k < loose.size(); ++k) tilde_classes[lfind(static_cast<int>(k))].push_back(loose[k]);
    for (const auto& [root, refs] : tilde_classes) {
        std::set<int> rows, cols;
        std::set<Box> boxes;
        for (int r : refs)
            for (const auto& b : s.bars[r]) {
                rows.insert(b.row);
                cols.insert(b.col);
                boxes.insert(b);
            }
        GroupKind kind;
        if (boxes.size() == 1) {
            kind = code_primed(s.cells.at(*boxes.begin())) ? GroupKind::one_column : GroupKind::one_row;
        } else if (rows.size() == 1) {
            kind = GroupKind::one_row;
        } else if (cols.size() == 1) {
            kind = GroupKind::one_column;
        } else {
            throw std::logic_error("classify_groups: ~ class spans several rows and columns");
        }
        out.members.push_back(refs);
        out.kinds.push_back(kind);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Local weight-reversing transformations.  All operate in place on the state;
// column variants go through conjugation.

void toggle_labels_row(State& s, const std::vector<int>& refs) {
    // bars of a one-row group ordered left to right
    std::vector<int> order = refs;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return s.bars[a].front().col < s.bars[b].front().col; });
    int primed_diag_ref = -1;
    for (int r : order) {
        const Bar& bar = s.bars[r];
        if (bar.size() == 1 && bar[0].row == bar[0].col && code_primed(s.cells.at(bar[0])))
            primed_diag_ref = r;
    }
    if (primed_diag_ref >= 0) {
        int c = s.cells.at(s.bars[primed_diag_ref][0]);
        s.set_bar_entries(primed_diag_ref, c + 1); // 1'->1, 2'->2
    }
    int p = 0, q = 0;
    int diag_two_ref = -1;
    for (int r : order) {
        int e = s.cells.at(s.bars[r].front());
        if (e == kOne) ++p;
        else if (e == kTwo) ++q;
        else throw std::logic_error("toggle_labels_row: unexpected entry in one-row group");
        if (e == kTwo && s.bars[r].size() == 1 && s.bars[r][0].row == s.bars[r][0].col)
            diag_two_ref = r;
    }
    if (diag_two_ref >= 0) {
        order.erase(std::remove(order.begin(), order.end(), diag_two_ref), order.end());
        order.push_back(diag_two_ref);
    }
    for (size_t k = 0; k < order.size(); ++k)
        s.set_bar_entries(order[k], k < static_cast<size_t>(q) ? kOne : kTwo);
    if (primed_diag_ref >= 0) {
        int c = s.cells.at(s.bars[primed_diag_ref][0]);
        s.set_bar_entries(primed_diag_ref, c - 1); // restore the prime
    }
}

// Rebuild the bars of a two-row group so that each row inherits the other
// row's divisions.  When the group has two diagonal boxes (i,i), (i+1,i+1),
// the pair (i,i),(i,i+1) keeps its same-bar status.
void toggle_divisions_two_row(State& s, const std::vector<int>& refs) {
    std::set<Box> boxes;
    for (int r : refs)
        for (const auto& b : s.bars[r]) boxes.insert(b);
    std::set<int> rows;
    for (const auto& b : boxes) rows.insert(b.row);
    if (rows.size() != 2 || *rows.rbegin() != *rows.begin() + 1)
        throw std::logic_error("toggle_divisions_two_row: group does not span two adjacent rows");
    int lo = *rows.begin(), hi = lo + 1;

    bool two_diag = boxes.count(Box{lo, lo}) && boxes.count(Box{hi, hi});
    bool mandate_same = false;
    if (two_diag) {
        if (!boxes.count(Box{lo, lo + 1}))
            throw std::logic_error("toggle_divisions_two_row: missing the between-diagonals box");
        mandate_same = s.bar_of(Box{lo, lo}) == s.bar_of(Box{lo, lo + 1});
    }

    auto row_boxes = [&](int row) {
        std::vector<Box> out;
        for (const auto& b : boxes)
            if (b.row == row) out.push_back(b);
        std::sort(out.begin(), out.end());
        return out;
    };
    auto divided = [&](int row, int col) { // division between (row,col) and (row,col+1)
        Box a{row, col}, b{row, col + 1};
        if (!boxes.count(a) || !boxes.count(b)) return false;
        return s.bar_of(a) != s.bar_of(b);
    };

    std::vector<Bar> new_bars;
    for (int row : {lo, hi}) {
        int other = row == lo ? hi : lo;
        Bar cur;
        for (const auto& b : row_boxes(row)) {
            bool cut = false;
            if (!cur.empty()) {
                cut = b.col != cur.back().col + 1 || divided(other, b.col - 1);
                if (two_diag && row == lo && b.col == lo + 1) cut = !mandate_same;
            }
            if (cut) {
                new_bars.push_back(cur);
                cur.clear();
            }
            cur.push_back(b);
        }
        if (!cur.empty()) new_bars.push_back(cur);
    }
    // the excluded 2'-next-to-2 merge must never be reached
    for (const auto& bar : new_bars)
        for (const auto& b : bar)
            if (s.cells.at(b) != s.cells.at(bar.front()))
                throw std::logic_error("toggle_divisions_two_row: toggling merged unequal entries");
    // replace the group's bars in place, reusing the old slots
    std::vector<int> slots = refs;
    std::sort(slots.begin(), slots.end());
    if (new_bars.size() != slots.size())
        throw std::logic_error("toggle_divisions_two_row: bar count changed");
    for (size_t k = 0; k < slots.size(); ++k) s.bars[slots[k]] = new_bars[k];
}

// Detach a box from its bar into a fresh single-box bar occupying a new slot;
// returns the new bar's index.
int split_out_box(State& s, const Box& b) {
    int ref = s.bar_of(b);
    Bar& bar = s.bars[ref];
    if (bar.size() == 1) return ref;
    bar.erase(std::remove(bar.begin(), bar.end(), b), bar.end());
    s.bars.push_back(Bar{b});
    return static_cast<int>(s.bars.size()) - 1;
}

// Merge the single-box bar holding `from` into the bar holding `to`;
// the emptied slot is removed.
void merge_box_into(State& s, const Box& from, const Box& to) {
    int a = s.bar_of(from), b = s.bar_of(to);
    if (a == b) return;
    if (s.bars[a].size() != 1) throw std::logic_error("merge_box_into: source bar not a single box");
    s.bars[b].push_back(from);
    std::sort(s.bars[b].begin(), s.bars[b].end());
    s.bars.erase(s.bars.begin() + a);
}

std::vector<int> bars_on_boxes(const State& s, const std::set<Box>& boxes) {
    std::set<int> refs;
    for (const auto& b : boxes) refs.insert(s.bar_of(b));
    return std::vector<int>(refs.begin(), refs.end());
}

// Cases (R1)-(R6) on a two-row group whose diagonal boxes are (i,i), (i+1,i+1).
void two_row_diagonal_cases(State& s, std::set<Box> boxes) {
    int i = 0;
    for (const auto& b : boxes)
        if (b.row == b.col) i = i == 0 ? b.row : std::min(i, b.row);
    Box dlo{i, i}, dmid{i, i + 1}, dhi{i + 1, i + 1};
    auto refs = [&]() { return bars_on_boxes(s, boxes); };
    auto single = [&](const Box& b) { return s.bars[s.bar_of(b)].size() == 1; };
    int e_lo = s.cells.at(dlo), e_hi = s.cells.at(dhi);

    if (single(dlo) && (e_lo == kOne || e_lo == kTwoPrimed) && e_hi == kTwo) { // (R1)
        toggle_divisions_two_row(s, refs());
        s.cells[dlo] = e_lo == kOne ? kTwoPrimed : kOne;
        return;
    }
    if (single(dlo) && e_lo == kOnePrimed) {
        bool r2 = s.has(i, i + 2) && boxes.count(Box{i, i + 2}) &&
                  s.bar_of(dmid) == s.bar_of(Box{i, i + 2}) && boxes.count(Box{i + 1, i + 2});
        if (r2) { // (R2)
            s.cells[dlo] = kOne;
            merge_box_into(s, dlo, dmid);
            toggle_divisions_two_row(s, refs());
            int nref = split_out_box(s, dhi);
            s.set_bar_entries(nref, kTwoPrimed);
        } else { // (R4)
            if (e_hi != kTwo) throw std::logic_error("(R4): expected 2 at the upper diagonal box");
            toggle_divisions_two_row(s, refs());
            s.cells[dlo] = kTwoPrimed;
            s.cells[dhi] = kTwoPrimed;
        }
        return;
    }
    if (single(dhi) && e_hi == kTwoPrimed && s.bar_of(dlo) == s.bar_of(dmid) &&
        s.cells.at(dlo) == kOne && boxes.count(Box{i + 1, i + 2})) { // (R3)
        s.cells[dhi] = kTwo;
        merge_box_into(s, dhi, Box{i + 1, i + 2});
        toggle_divisions_two_row(s, refs());
        int nref = split_out_box(s, dlo);
        s.set_bar_entries(nref, kOnePrimed);
        return;
    }
    if (single(dlo) && e_lo == kTwoPrimed && single(dhi) && e_hi == kTwoPrimed) { // (R5)
        s.cells[dlo] = kOnePrimed;
        s.cells[dhi] = kTwo;
        toggle_divisions_two_row(s, refs());
        return;
    }
    toggle_divisions_two_row(s, refs()); // (R6)
}

State reverse_weight_state(const State& input) {
    State s = input;
    GroupsResult groups = classify_state(s);

    // groups are identified by their box sets; bar indices shift when the
    // diagonal cases split/merge bars, so resolve refs through boxes
    std::vector<std::set<Box>> group_boxes(groups.members.size());
    for (size_t g = 0; g < groups.members.size(); ++g)
        for (int r : groups.members[g])
            for (const auto& b : s.bars[r]) group_boxes[g].insert(b);

    int diag_group = -1;
    for (size_t g = 0; g < groups.members.size(); ++g) {
        int ndiag = 0;
        for (const auto& b : group_boxes[g]) ndiag += (b.row == b.col) ? 1 : 0;
        if (ndiag == 2) diag_group = static_cast<int>(g);
    }

    // The diagonal cases operate on the whole two-line complex: the group
    // with the two diagonal boxes together with every other group of the
    // same kind confined to the same two rows (or columns).  Division
    // toggling is local to each column gap, so absorbing the neighbors
    // changes nothing for them, but the (R2)/(R3) merge conditions must see
    // the boxes beyond the diagonal group's own column reach.
    std::set<size_t> absorbed;
    std::set<Box> complex_boxes;
    if (diag_group >= 0) {
        complex_boxes = group_boxes[diag_group];
        int lo = 0;
        for (const auto& b : complex_boxes)
            if (b.row == b.col) lo = lo == 0 ? b.row : std::min(lo, b.row);
        for (size_t g = 0; g < groups.members.size(); ++g) {
            if (static_cast<int>(g) == diag_group || groups.kinds[g] != groups.kinds[diag_group])
                continue;
            bool inside = true;
            for (const auto& b : group_boxes[g]) {
                bool in_lines = groups.kinds[diag_group] == GroupKind::two_row
                                    ? (b.row == lo || b.row == lo + 1)
                                    : (b.col == lo || b.col == lo + 1);
                inside &= in_lines;
            }
            if (inside) {
                absorbed.insert(g);
                complex_boxes.insert(group_boxes[g].begin(), group_boxes[g].end());
            }
        }
    }

    // step 1: all groups outside the diagonal complex
    for (size_t g = 0; g < groups.members.size(); ++g) {
        if (static_cast<int>(g) == diag_group || absorbed.count(g)) continue;
        switch (groups.kinds[g]) {
            case GroupKind::one_row:
                toggle_labels_row(s, bars_on_boxes(s, group_boxes[g]));
                break;
            case GroupKind::one_column: {
                int N = auto_bound(s);
                State c = conjugate_state(s, N);
                std::set<Box> cb;
                for (const auto& b : group_boxes[g]) cb.insert(Box{N - b.col, N - b.row});
                toggle_labels_row(c, bars_on_boxes(c, cb));
                s = conjugate_state(c, N);
                break;
            }
            case GroupKind::two_row:
                toggle_divisions_two_row(s, bars_on_boxes(s, group_boxes[g]));
                break;
            case GroupKind::two_column: {
                int N = auto_bound(s);
                State c = conjugate_state(s, N);
                std::set<Box> cb;
                for (const auto& b : group_boxes[g]) cb.insert(Box{N - b.col, N - b.row});
                toggle_divisions_two_row(c, bars_on_boxes(c, cb));
                s = conjugate_state(c, N);
                break;
            }
        }
    }

    // step 2: the two-diagonal-box complex
    if (diag_group >= 0) {
        if (groups.kinds[diag_group] == GroupKind::two_row) {
            two_row_diagonal_cases(s, complex_boxes);
        } else if (groups.kinds[diag_group] == GroupKind::two_column) {
            int N = auto_bound(s);
            State c = conjugate_state(s, N);
            std::set<Box> cb;
            for (const auto& b : complex_boxes) cb.insert(Box{N - b.col, N - b.row});
            two_row_diagonal_cases(c, cb);
            s = conjugate_state(c, N);
        } else {
            throw std::logic_error("reverse_weight: diagonal group is not a two-line group");
        }
    }
    return s;
}

} // namespace

std::vector<Group> classify_groups(const BarTableau& t) {
    if (!is_sorted(t)) throw std::invalid_argument("classify_groups: tableau is not sorted");
    State s = to_state(t);
    GroupsResult gr = classify_state(s);
    std::vector<Group> out;
    for (size_t g = 0; g < gr.members.size(); ++g) {
        Group grp;
        grp.kind = gr.kinds[g];
        grp.bars = gr.members[g];
        for (int r : gr.members[g])
            for (const auto& b : s.bars[r]) grp.boxes.insert(b);
        out.push_back(grp);
    }
    return out;
}

BarTableau reverse_weight(const BarTableau& t) {
    if (!is_sorted(t)) throw std::invalid_argument("reverse_weight: tableau is not sorted");
    return from_state(reverse_weight_state(to_state(t)), t.shape);
}

BarTableau tau(const BarTableau& t, int k) {
    if (k < 1) throw std::invalid_argument("tau: k must be >= 1");
    ValidationReport rep = validate(t, DiagonalFamily::Q);
    if (!rep.ok) throw std::invalid_argument("tau: input is not a semistandard bar tableau");
    const int base = 2 * k - 2; // codes base+1..base+4 form the working alphabet
    State sub;
    for (const auto& [b, c] : t.cells)
        if (c > base && c <= base + 4) sub.cells[b] = c - base;
    std::vector<Bar> rest;
    for (const auto& bar : t.bars) {
        int c = t.cells.at(bar.front());
        if (c > base && c <= base + 4) sub.bars.push_back(bar);
        else rest.push_back(bar);
    }
    for (auto& bar : sub.bars) std::sort(bar.begin(), bar.end());
    std::set<Box> sub_boxes;
    for (const auto& [b, c] : sub.cells) sub_boxes.insert(b);
    SkewShape sub_shape = skew_from_boxes(sub_boxes);

    State sorted = swap_all_state(std::move(sub), sub_shape, nullptr);
    State reversed = reverse_weight_state(sorted);
    State back = unswap_all_state(std::move(reversed), sub_shape, nullptr);

    BarTableau out;
    out.shape = t.shape;
    out.cells = t.cells;
    for (const auto& [b, c] : back.cells) out.cells[b] = c + base;
    out.bars = rest;
    for (const auto& bar : back.bars) out.bars.push_back(bar);
    out.normalize();
    return out;
}

std::vector<int> weight_vector(const BarTableau& t, int max_value) {
    std::vector<int> w(max_value, 0);
    for (const auto& bar : t.bars) {
        int v = (t.cells.at(bar.front()) + 1) / 2;
        if (v >= 1 && v <= max_value) w[v - 1] += 1;
    }
    return w;
}

int primed_diagonal_count(const BarTableau& t) {
    int n = 0;
    for (const auto& [b, c] : t.cells)
        if (b.row == b.col && c % 2 == 1) n += 1;
    return n;
}

} // namespace kschur
