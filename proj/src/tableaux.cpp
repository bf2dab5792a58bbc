#include "kschur/tableaux.hpp"

#include <algorithm>
#include <sstream>

namespace kschur {

namespace {

std::string box_str(const Box& b) {
    return "(" + std::to_string(b.row) + "," + std::to_string(b.col) + ")";
}

int mask_min(unsigned m) { return __builtin_ctz(m) + 1; }
int mask_max(unsigned m) { return 31 - __builtin_clz(m) + 1; }
bool code_primed(int c) { return c % 2 == 1; }
int code_value(int c) { return (c + 1) / 2; }
unsigned primed_bits(int max_code) {
    unsigned m = 0;
    for (int c = 1; c <= max_code; c += 2) m |= 1u << (c - 1);
    return m;
}

} // namespace

std::vector<Box> reading_order(const SkewShape& shape) {
    std::vector<Box> boxes(shape.boxes.begin(), shape.boxes.end());
    std::sort(boxes.begin(), boxes.end(), [](const Box& a, const Box& b) {
        if (a.row != b.row) return a.row > b.row;
        return a.col < b.col;
    });
    return boxes;
}

void BarTableau::normalize() {
    for (auto& bar : bars) std::sort(bar.begin(), bar.end());
    std::sort(bars.begin(), bars.end());
}

// ---------------------------------------------------------------------------
// Validation

ValidationReport validate(const SetValuedTableau& t, DiagonalFamily family) {
    ValidationReport rep;
    for (const auto& b : t.shape.boxes)
        if (!t.cells.count(b) || t.cells.at(b).empty())
            rep.fail("S1: box " + box_str(b) + " has no nonempty entry set");
    for (const auto& [b, s] : t.cells) {
        if (!t.shape.boxes.count(b)) rep.fail("cell outside shape at " + box_str(b));
        for (int c : s)
            if (c < 1) rep.fail("S1: bad entry code at " + box_str(b));
    }
    if (!rep.ok) return rep;
    auto cell = [&](int i, int j) -> const std::set<int>* {
        auto it = t.cells.find(Box{i, j});
        return it == t.cells.end() ? nullptr : &it->second;
    };
    for (const auto& [b, s] : t.cells) {
        if (const auto* up = cell(b.row + 1, b.col))
            if (*s.rbegin() > *up->begin())
                rep.fail("S2: max" + box_str(b) + " > min" + box_str(Box{b.row + 1, b.col}));
        if (const auto* rt = cell(b.row, b.col + 1))
            if (*s.rbegin() > *rt->begin())
                rep.fail("S2: max" + box_str(b) + " > min" + box_str(Box{b.row, b.col + 1}));
    }
    std::map<std::pair<int, int>, Box> col_unprimed, row_primed; // (col,value)/(row,value) -> first box
    for (const auto& [b, s] : t.cells) {
        for (int c : s) {
            if (!code_primed(c)) {
                auto key = std::make_pair(b.col, code_value(c));
                auto [it, fresh] = col_unprimed.emplace(key, b);
                if (!fresh && !(it->second == b))
                    rep.fail("S3: unprimed " + std::to_string(code_value(c)) + " twice in column " +
                             std::to_string(b.col));
            } else {
                auto key = std::make_pair(b.row, code_value(c));
                auto [it, fresh] = row_primed.emplace(key, b);
                if (!fresh && !(it->second == b))
                    rep.fail("S4: primed " + std::to_string(code_value(c)) + "' twice in row " +
                             std::to_string(b.row));
            }
        }
    }
    if (family == DiagonalFamily::P) {
        for (const auto& [b, s] : t.cells)
            if (b.row == b.col)
                for (int c : s)
                    if (code_primed(c)) rep.fail("P: primed entry on diagonal at " + box_str(b));
    }
    return rep;
}

ValidationReport validate(const PlanePartition& t, DiagonalFamily family) {
    ValidationReport rep;
    for (const auto& b : t.shape.boxes)
        if (!t.cells.count(b)) rep.fail("missing entry at " + box_str(b));
    for (const auto& [b, c] : t.cells) {
        if (!t.shape.boxes.count(b)) rep.fail("cell outside shape at " + box_str(b));
        if (c < 1) rep.fail("bad entry code at " + box_str(b));
    }
    if (!rep.ok) return rep;
    for (const auto& [b, c] : t.cells) {
        auto rt = t.cells.find(Box{b.row, b.col + 1});
        if (rt != t.cells.end() && c > rt->second)
            rep.fail("row not weakly increasing at " + box_str(b));
        auto up = t.cells.find(Box{b.row + 1, b.col});
        if (up != t.cells.end() && c > up->second)
            rep.fail("column not weakly increasing at " + box_str(b));
    }
    if (family == DiagonalFamily::P) {
        for (const auto& [b, c] : t.cells)
            if (b.row == b.col && !code_primed(c))
                rep.fail("P: unprimed entry on diagonal at " + box_str(b));
    }
    return rep;
}

ValidationReport validate(const BarTableau& t, DiagonalFamily family) {
    ValidationReport rep;
    for (const auto& b : t.shape.boxes)
        if (!t.cells.count(b)) rep.fail("missing entry at " + box_str(b));
    for (const auto& [b, c] : t.cells) {
        if (!t.shape.boxes.count(b)) rep.fail("cell outside shape at " + box_str(b));
        if (c < 1) rep.fail("bad entry code at " + box_str(b));
    }
    if (!rep.ok) return rep;
    std::set<Box> covered;
    for (const auto& bar : t.bars) {
        if (bar.empty()) {
            rep.fail("empty bar");
            continue;
        }
        for (const auto& b : bar) {
            if (!t.shape.boxes.count(b)) rep.fail("bar box outside shape at " + box_str(b));
            if (covered.count(b)) rep.fail("bars overlap at " + box_str(b));
            covered.insert(b);
        }
        int c0 = t.cells.count(bar.front()) ? t.cells.at(bar.front()) : -1;
        bool same_row = true, same_col = true, equal = true;
        for (const auto& b : bar) {
            same_row &= b.row == bar.front().row;
            same_col &= b.col == bar.front().col;
            equal &= t.cells.count(b) && t.cells.at(b) == c0;
        }
        if (!equal) rep.fail("bar with unequal entries at " + box_str(bar.front()));
        if (!same_row && !same_col) rep.fail("bar not confined to one row or column");
        std::vector<Box> sorted = bar;
        std::sort(sorted.begin(), sorted.end());
        for (size_t k = 0; k + 1 < sorted.size(); ++k) {
            bool adj = (same_row && sorted[k].col + 1 == sorted[k + 1].col) ||
                       (same_col && sorted[k].row + 1 == sorted[k + 1].row);
            if (!adj) rep.fail("bar not contiguous at " + box_str(sorted[k]));
        }
        if (sorted.size() > 1 && c0 > 0) {
            if (!code_primed(c0) && !same_row) rep.fail("multi-box unprimed bar must lie in one row");
            if (code_primed(c0) && !same_col) rep.fail("multi-box primed bar must lie in one column");
        }
    }
    if (covered != t.shape.boxes) rep.fail("bars do not partition the shape");
    if (!rep.ok) return rep;
    std::map<std::pair<int, int>, int> col_unprimed, row_primed; // -> count of boxes
    for (const auto& [b, c] : t.cells) {
        auto rt = t.cells.find(Box{b.row, b.col + 1});
        if (rt != t.cells.end() && c > rt->second)
            rep.fail("row not weakly increasing at " + box_str(b));
        auto up = t.cells.find(Box{b.row + 1, b.col});
        if (up != t.cells.end() && c > up->second)
            rep.fail("column not weakly increasing at " + box_str(b));
        if (!code_primed(c)) {
            if (++col_unprimed[{b.col, code_value(c)}] == 2)
                rep.fail("unprimed " + std::to_string(code_value(c)) + " repeated in column " +
                         std::to_string(b.col));
        } else {
            if (++row_primed[{b.row, code_value(c)}] == 2)
                rep.fail("primed " + std::to_string(code_value(c)) + "' repeated in row " +
                         std::to_string(b.row));
        }
    }
    if (family == DiagonalFamily::P) {
        for (const auto& [b, c] : t.cells)
            if (b.row == b.col && code_primed(c))
                rep.fail("P: primed entry on diagonal at " + box_str(b));
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Weights

Weight weight(const SetValuedTableau& t) {
    Weight w;
    std::map<int, int> mult; // value -> a_i + b_i
    for (const auto& [b, s] : t.cells) {
        w.size += static_cast<int>(s.size());
        for (int c : s) mult[code_value(c)] += 1;
    }
    for (const auto& [v, e] : mult) w.monomial *= Monomial::var(xvar(v), e);
    return w;
}

Weight weight(const PlanePartition& t) {
    std::map<int, std::set<int>> cols_with_value, rows_with_primed;
    for (const auto& [b, c] : t.cells) {
        if (code_primed(c)) rows_with_primed[code_value(c)].insert(b.row);
        else cols_with_value[code_value(c)].insert(b.col);
    }
    std::map<int, int> mult;
    for (const auto& [v, cols] : cols_with_value) mult[v] += static_cast<int>(cols.size());
    for (const auto& [v, rows] : rows_with_primed) mult[v] += static_cast<int>(rows.size());
    Weight w;
    for (const auto& [v, e] : mult) {
        w.monomial *= Monomial::var(xvar(v), e);
        w.size += e;
    }
    return w;
}

Weight weight(const BarTableau& t) {
    Weight w;
    std::map<int, int> mult;
    for (const auto& bar : t.bars) {
        mult[code_value(t.cells.at(bar.front()))] += 1;
        w.size += 1;
    }
    for (const auto& [v, e] : mult) w.monomial *= Monomial::var(xvar(v), e);
    return w;
}

// ---------------------------------------------------------------------------
// Enumeration.  Boxes are processed in row reading order so that the already
// filled neighbors of (i,j) are (i,j-1) and (i+1,j).

namespace {

struct EnumContext {
    std::vector<Box> boxes;
    std::vector<int> left;  // index of (i,j-1) in boxes, or -1
    std::vector<int> above; // index of (i+1,j) in boxes, or -1
    std::vector<bool> diagonal;
};

EnumContext make_context(const SkewShape& shape) {
    EnumContext ctx;
    ctx.boxes = reading_order(shape);
    std::map<Box, int> index;
    for (size_t k = 0; k < ctx.boxes.size(); ++k) index[ctx.boxes[k]] = static_cast<int>(k);
    for (const auto& b : ctx.boxes) {
        auto fi = [&](int i, int j) {
            auto it = index.find(Box{i, j});
            return it == index.end() ? -1 : it->second;
        };
        ctx.left.push_back(fi(b.row, b.col - 1));
        ctx.above.push_back(fi(b.row + 1, b.col));
        ctx.diagonal.push_back(b.row == b.col);
    }
    return ctx;
}

} // namespace

void enumerate_svt(const SkewShape& shape, DiagonalFamily family, int max_value,
                   const std::function<bool(const SetValuedTableau&)>& fn) {
    if (max_value < 1) throw std::invalid_argument("enumerate: max_value must be >= 1");
    if (!shape.contained) return;
    EnumContext ctx = make_context(shape);
    int max_code = 2 * max_value;
    unsigned primed = primed_bits(max_code);
    size_t n = ctx.boxes.size();
    std::vector<unsigned> fill(n, 0);
    SetValuedTableau t;
    t.shape = shape;
    bool stop = false;

    std::function<void(size_t)> rec = [&](size_t k) {
        if (stop) return;
        if (k == n) {
            t.cells.clear();
            for (size_t q = 0; q < n; ++q) {
                std::set<int>& s = t.cells[ctx.boxes[q]];
                for (int c = 1; c <= max_code; ++c)
                    if (fill[q] & (1u << (c - 1))) s.insert(c);
            }
            if (!fn(t)) stop = true;
            return;
        }
        unsigned left = ctx.left[k] >= 0 ? fill[ctx.left[k]] : 0;
        unsigned above = ctx.above[k] >= 0 ? fill[ctx.above[k]] : 0;
        int lo = left ? mask_max(left) : 1;
        int hi = above ? mask_min(above) : max_code;
        if (lo > hi) return;
        unsigned window = 0;
        for (int c = lo; c <= hi; ++c) window |= 1u << (c - 1);
        if (family == DiagonalFamily::P && ctx.diagonal[k]) window &= ~primed;
        // every nonempty subset of the window, subject to the boundary rules:
        // a value shared with a neighbor is necessarily the single boundary
        // value, so S4 bans shared primed values with the left box and S3
        // bans shared unprimed values with the box above
        for (unsigned s = window;; s = (s - 1) & window) {
            if (s != 0) {
                bool ok = !(left && (s & left & primed)) && !(above && (s & above & ~primed));
                if (ok) {
                    fill[k] = s;
                    rec(k + 1);
                    if (stop) return;
                }
            }
            if (s == 0) break;
        }
    };
    rec(0);
}

void enumerate_pp(const SkewShape& shape, DiagonalFamily family, int max_value,
                  const std::function<bool(const PlanePartition&)>& fn) {
    if (max_value < 1) throw std::invalid_argument("enumerate: max_value must be >= 1");
    if (!shape.contained) return;
    EnumContext ctx = make_context(shape);
    int max_code = 2 * max_value;
    size_t n = ctx.boxes.size();
    std::vector<int> fill(n, 0);
    PlanePartition t;
    t.shape = shape;
    bool stop = false;

    std::function<void(size_t)> rec = [&](size_t k) {
        if (stop) return;
        if (k == n) {
            t.cells.clear();
            for (size_t q = 0; q < n; ++q) t.cells[ctx.boxes[q]] = fill[q];
            if (!fn(t)) stop = true;
            return;
        }
        int lo = ctx.left[k] >= 0 ? fill[ctx.left[k]] : 1;
        int hi = ctx.above[k] >= 0 ? fill[ctx.above[k]] : max_code;
        for (int c = lo; c <= hi; ++c) {
            if (family == DiagonalFamily::P && ctx.diagonal[k] && !code_primed(c)) continue;
            fill[k] = c;
            rec(k + 1);
            if (stop) return;
        }
    };
    rec(0);
}

void enumerate_bt(const SkewShape& shape, DiagonalFamily family, int max_value,
                  const std::function<bool(const BarTableau&)>& fn) {
    if (max_value < 1) throw std::invalid_argument("enumerate: max_value must be >= 1");
    if (!shape.contained) return;
    EnumContext ctx = make_context(shape);
    int max_code = 2 * max_value;
    size_t n = ctx.boxes.size();
    std::vector<int> fill(n, 0);
    bool stop = false;

    std::function<void(size_t)> rec = [&](size_t k) {
        if (stop) return;
        if (k == n) {
            // mergeable gaps: equal unprimed neighbors in a row, equal primed
            // neighbors in a column
            std::vector<std::pair<int, int>> gaps; // (index a, index b)
            std::map<Box, int> index;
            for (size_t q = 0; q < n; ++q) index[ctx.boxes[q]] = static_cast<int>(q);
            for (size_t q = 0; q < n; ++q) {
                const Box& b = ctx.boxes[q];
                auto rt = index.find(Box{b.row, b.col + 1});
                if (rt != index.end() && fill[q] == fill[rt->second] && !code_primed(fill[q]))
                    gaps.emplace_back(static_cast<int>(q), rt->second);
                auto up = index.find(Box{b.row + 1, b.col});
                if (up != index.end() && fill[q] == fill[up->second] && code_primed(fill[q]))
                    gaps.emplace_back(static_cast<int>(q), up->second);
            }
            std::sort(gaps.begin(), gaps.end());
            for (unsigned mask = 0; mask < (1u << gaps.size()); ++mask) {
                // union-find over merged gaps
                std::vector<int> parent(n);
                for (size_t q = 0; q < n; ++q) parent[q] = static_cast<int>(q);
                std::function<int(int)> find = [&](int a) {
                    while (parent[a] != a) a = parent[a] = parent[parent[a]];
                    return a;
                };
                for (size_t g = 0; g < gaps.size(); ++g)
                    if (mask & (1u << g)) parent[find(gaps[g].first)] = find(gaps[g].second);
                std::map<int, Bar> bars;
                for (size_t q = 0; q < n; ++q) bars[find(static_cast<int>(q))].push_back(ctx.boxes[q]);
                BarTableau t;
                t.shape = shape;
                for (size_t q = 0; q < n; ++q) t.cells[ctx.boxes[q]] = fill[q];
                for (auto& [root, bar] : bars) t.bars.push_back(bar);
                t.normalize();
                if (!fn(t)) {
                    stop = true;
                    return;
                }
            }
            return;
        }
        int lo = ctx.left[k] >= 0 ? fill[ctx.left[k]] : 1;
        int hi = ctx.above[k] >= 0 ? fill[ctx.above[k]] : max_code;
        for (int c = lo; c <= hi; ++c) {
            if (family == DiagonalFamily::P && ctx.diagonal[k] && code_primed(c)) continue;
            if (ctx.left[k] >= 0 && fill[ctx.left[k]] == c && code_primed(c)) continue;
            if (ctx.above[k] >= 0 && fill[ctx.above[k]] == c && !code_primed(c)) continue;
            fill[k] = c;
            rec(k + 1);
            if (stop) return;
        }
    };
    rec(0);
}

namespace {

template <class T>
std::vector<int> entry_sequence(const T& t, const std::vector<Box>& order);

template <>
std::vector<int> entry_sequence(const SetValuedTableau& t, const std::vector<Box>& order) {
    std::vector<int> seq;
    for (const auto& b : order) {
        const auto& s = t.cells.at(b);
        seq.insert(seq.end(), s.begin(), s.end());
        seq.push_back(0); // box delimiter so prefixes compare correctly
    }
    return seq;
}

} // namespace

std::vector<SetValuedTableau> all_svt(const SkewShape& shape, DiagonalFamily family, int max_value) {
    std::vector<SetValuedTableau> out;
    enumerate_svt(shape, family, max_value, [&](const SetValuedTableau& t) {
        out.push_back(t);
        return true;
    });
    auto order = reading_order(shape);
    std::sort(out.begin(), out.end(), [&](const SetValuedTableau& a, const SetValuedTableau& b) {
        return entry_sequence(a, order) < entry_sequence(b, order);
    });
    return out;
}

std::vector<PlanePartition> all_pp(const SkewShape& shape, DiagonalFamily family, int max_value) {
    std::vector<PlanePartition> out;
    enumerate_pp(shape, family, max_value, [&](const PlanePartition& t) {
        out.push_back(t);
        return true;
    });
    auto order = reading_order(shape);
    std::sort(out.begin(), out.end(), [&](const PlanePartition& a, const PlanePartition& b) {
        for (const auto& box : order) {
            if (a.cells.at(box) != b.cells.at(box)) return a.cells.at(box) < b.cells.at(box);
        }
        return false;
    });
    return out;
}

std::vector<BarTableau> all_bt(const SkewShape& shape, DiagonalFamily family, int max_value) {
    std::vector<BarTableau> out;
    enumerate_bt(shape, family, max_value, [&](const BarTableau& t) {
        out.push_back(t);
        return true;
    });
    auto order = reading_order(shape);
    std::sort(out.begin(), out.end(), [&](const BarTableau& a, const BarTableau& b) {
        for (const auto& box : order) {
            if (a.cells.at(box) != b.cells.at(box)) return a.cells.at(box) < b.cells.at(box);
        }
        return a.bars < b.bars;
    });
    return out;
}

} // namespace kschur
