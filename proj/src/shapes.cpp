#include "kschur/shapes.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace kschur {

std::string SkewShape::str() const {
    std::ostringstream os;
    os << partition_str(outer);
    if (!inner.empty()) os << "/" << partition_str(inner);
    if (!shifted) os << " (unshifted)";
    if (!contained) os << " (inner not contained)";
    return os.str();
}

SkewShape shifted_diagram(const StrictPartition& outer, const StrictPartition& inner) {
    if (!is_strict_partition(outer) || !is_strict_partition(inner))
        throw std::invalid_argument("shifted_diagram: arguments must be strict partitions");
    SkewShape s;
    s.outer = outer;
    s.inner = inner;
    s.shifted = true;
    s.contained = contains(outer, inner);
    if (!s.contained) return s;
    for (int i = 1; i <= static_cast<int>(outer.size()); ++i)
        for (int j = i + part(inner, i); j <= i + part(outer, i) - 1; ++j)
            s.boxes.insert(Box{i, j});
    return s;
}

SkewShape unshifted_diagram(const std::vector<int>& outer, const std::vector<int>& inner) {
    if (!is_partition(outer) || !is_partition(inner))
        throw std::invalid_argument("unshifted_diagram: arguments must be partitions");
    SkewShape s;
    s.outer = outer;
    s.inner = inner;
    s.shifted = false;
    s.contained = contains(outer, inner);
    if (!s.contained) return s;
    for (int i = 1; i <= static_cast<int>(outer.size()); ++i)
        for (int j = part(inner, i) + 1; j <= part(outer, i); ++j)
            s.boxes.insert(Box{i, j});
    return s;
}

std::set<Box> removable_corners(const StrictPartition& lambda) {
    std::set<Box> out;
    for (int i = 1; i <= static_cast<int>(lambda.size()); ++i) {
        StrictPartition mu = lambda;
        mu[i - 1] -= 1;
        if (mu[i - 1] == 0) mu.erase(mu.begin() + (i - 1));
        if (is_strict_partition(mu)) out.insert(Box{i, i + lambda[i - 1] - 1});
    }
    return out;
}

std::vector<StrictPartition> corner_deletions(const StrictPartition& mu) {
    std::set<Box> corners = removable_corners(mu);
    std::vector<Box> rc(corners.begin(), corners.end());
    std::vector<StrictPartition> out;
    for (unsigned mask = 0; mask < (1u << rc.size()); ++mask) {
        StrictPartition nu = mu;
        for (size_t k = 0; k < rc.size(); ++k)
            if (mask & (1u << k)) nu[rc[k].row - 1] -= 1;
        while (!nu.empty() && nu.back() == 0) nu.pop_back();
        if (!is_strict_partition(nu)) continue; // cannot happen for corner subsets
        out.push_back(nu);
    }
    std::sort(out.begin(), out.end(), precedes);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool is_shifted_ribbon(const SkewShape& shape) {
    for (const auto& a : shape.boxes)
        for (const auto& b : shape.boxes)
            if (a.row < b.row && a.col < b.col) return false;
    return true;
}

namespace {

std::vector<std::set<Box>> connected_components(const std::set<Box>& boxes) {
    std::vector<std::set<Box>> comps;
    std::set<Box> seen;
    for (const auto& start : boxes) {
        if (seen.count(start)) continue;
        std::set<Box> comp;
        std::vector<Box> stack{start};
        while (!stack.empty()) {
            Box b = stack.back();
            stack.pop_back();
            if (comp.count(b)) continue;
            comp.insert(b);
            seen.insert(b);
            for (Box n : {Box{b.row + 1, b.col}, Box{b.row - 1, b.col}, Box{b.row, b.col + 1}, Box{b.row, b.col - 1}})
                if (boxes.count(n) && !comp.count(n)) stack.push_back(n);
        }
        comps.push_back(std::move(comp));
    }
    return comps;
}

void require_ribbon_triple(const StrictPartition& Lambda, const StrictPartition& Psi) {
    StrictPartition Gamma(Lambda.begin() + (Lambda.empty() ? 0 : 1), Lambda.end());
    if (!contains(Psi, Gamma) || !contains(Lambda, Psi))
        throw std::invalid_argument("requires (Lambda_2,Lambda_3,...) <= Psi <= Lambda");
}

bool forced_box(const std::set<Box>& s, const Box& b) {
    auto in = [&](int i, int j) { return s.count(Box{i, j}) > 0; };
    return (in(b.row + 1, b.col) && in(b.row + 1, b.col - 1)) ||
           (in(b.row, b.col - 1) && in(b.row + 1, b.col - 1));
}

bool diagonally_forced_box(const std::set<Box>& s, const Box& b) {
    if (b.row == b.col) return true;
    return b.row + 1 == b.col && s.count(Box{b.col, b.col}) > 0;
}

} // namespace

RibbonParams ribbon_params(const StrictPartition& Lambda, const StrictPartition& Psi) {
    require_ribbon_triple(Lambda, Psi);
    SkewShape shape = shifted_diagram(Lambda, Psi);
    const auto& s = shape.boxes;
    RibbonParams p;
    for (const auto& comp : connected_components(s)) {
        bool touches_diag = false;
        for (const auto& b : comp) touches_diag |= (b.row == b.col);
        if (comp.size() == 1) {
            p.scc += 1;
            if (!touches_diag) p.scc_star += 1;
        } else {
            p.mcc += 1;
            if (!touches_diag) p.mcc_star += 1;
        }
    }
    for (const auto& b : s) {
        bool f = forced_box(s, b);
        if (f) p.fb += 1;
        if (f || diagonally_forced_box(s, b)) p.fb_star += 1;
    }
    int n = shape.box_count();
    p.res = n - p.scc - 2 * p.mcc - p.fb + 2;
    p.res_star = n - p.scc_star - 2 * p.mcc_star - p.fb_star + 1;
    if (p.res < 2 || p.res_star < 1)
        throw std::logic_error("ribbon_params: residual out of range for " + shape.str());
    return p;
}

CornerClasses corner_classes(const StrictPartition& Lambda, const StrictPartition& Psi) {
    require_ribbon_triple(Lambda, Psi);
    StrictPartition Gamma(Lambda.begin() + (Lambda.empty() ? 0 : 1), Lambda.end());
    SkewShape psi_over_gamma = shifted_diagram(Psi, Gamma);
    const auto& pg = psi_over_gamma.boxes;
    CornerClasses cc;
    for (const auto& b : removable_corners(Gamma)) {
        if (pg.count(Box{b.row + 1, b.col + 1})) continue;
        bool right = pg.count(Box{b.row, b.col + 1}) > 0;
        bool above = pg.count(Box{b.row + 1, b.col}) > 0;
        if (b.row == b.col) {
            (right ? cc.U : cc.V).insert(b);
        } else {
            if (right && above) cc.U.insert(b);
            else if (right || above) cc.V.insert(b);
            else cc.W.insert(b);
        }
        int k = (right ? 1 : 0) + (above ? 1 : 0);
        (k == 2 ? cc.U_star : k == 1 ? cc.V_star : cc.W_star).insert(b);
    }
    return cc;
}

SkewShape skew_from_boxes(const std::set<Box>& boxes) {
    if (boxes.empty()) {
        SkewShape s;
        return s;
    }
    std::map<int, std::pair<int, int>> rows; // row -> [min col, max col]
    int max_row = 0;
    for (const auto& b : boxes) {
        if (b.row < 1 || b.col < b.row)
            throw std::invalid_argument("skew_from_boxes: box outside the shifted quadrant");
        auto it = rows.find(b.row);
        if (it == rows.end()) rows[b.row] = {b.col, b.col};
        else {
            it->second.first = std::min(it->second.first, b.col);
            it->second.second = std::max(it->second.second, b.col);
        }
        max_row = std::max(max_row, b.row);
    }
    for (const auto& [r, span] : rows) {
        for (int j = span.first; j <= span.second; ++j)
            if (!boxes.count(Box{r, j}))
                throw std::invalid_argument("skew_from_boxes: row not contiguous");
    }
    StrictPartition outer(max_row, 0), inner(max_row, 0);
    for (int i = max_row; i >= 1; --i) {
        auto it = rows.find(i);
        if (it != rows.end()) {
            inner[i - 1] = it->second.first - i;
            outer[i - 1] = it->second.second - i + 1;
        } else {
            // empty row below a nonempty one: pad with equal outer/inner parts
            int next_outer = (i == max_row) ? 0 : outer[i];
            inner[i - 1] = outer[i - 1] = next_outer + 1;
        }
    }
    while (!inner.empty() && inner.back() == 0) inner.pop_back();
    SkewShape s = shifted_diagram(outer, inner);
    if (s.boxes != boxes)
        throw std::invalid_argument("skew_from_boxes: box set is not a shifted skew shape");
    return s;
}

SkewShape compose_shapes(const SkewShape& rho, const SkewShape& tau, ComposeOp op) {
    if (rho.boxes.empty() || tau.boxes.empty())
        throw std::invalid_argument("compose_shapes: shapes must be nonempty");
    if (!rho.shifted || tau.shifted)
        throw std::invalid_argument("compose_shapes: expects shifted rho and unshifted tau");
    // (i,j): bottom row of rho, rightmost box; (k,l): top row of tau, leftmost box.
    int i = rho.boxes.begin()->row;
    int j = 0;
    for (const auto& b : rho.boxes)
        if (b.row == i) j = std::max(j, b.col);
    int k = 0;
    for (const auto& b : tau.boxes) k = std::max(k, b.row);
    int l = 0;
    for (const auto& b : tau.boxes)
        if (b.row == k) l = (l == 0) ? b.col : std::min(l, b.col);
    int d1 = k - i;
    int d2 = d1 + j + 1 - l;

    std::set<Box> out;
    int rho_shift = (op == ComposeOp::below) ? d1 + 1 : d1;
    int tau_shift = (op == ComposeOp::merge) ? d2 - 1 : d2;
    for (const auto& b : rho.boxes) out.insert(Box{b.row + rho_shift, b.col + rho_shift});
    for (const auto& b : tau.boxes) out.insert(Box{b.row, b.col + tau_shift});
    if (op != ComposeOp::merge &&
        out.size() != rho.boxes.size() + tau.boxes.size())
        throw std::logic_error("compose_shapes: translated shapes overlap unexpectedly");
    if (op == ComposeOp::merge &&
        out.size() != rho.boxes.size() + tau.boxes.size() - 1)
        throw std::logic_error("compose_shapes: merge must overlap in exactly one box");
    return skew_from_boxes(out);
}

} // namespace kschur
