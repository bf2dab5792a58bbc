#pragma once

// Shifted diagrams, skew shapes, removable corners, shifted ribbons and
// their combinatorial parameters, and the three shape composition operators.

#include <set>
#include <vector>

#include "kschur/partitions.hpp"

namespace kschur {

struct SkewShape {
    StrictPartition outer;          // strict when shifted, weakly decreasing otherwise
    StrictPartition inner;
    bool shifted = true;
    bool contained = true;          // false when inner is not contained in outer
    std::set<Box> boxes;            // empty when !contained

    int box_count() const { return static_cast<int>(boxes.size()); }
    bool has_box(int i, int j) const { return boxes.count(Box{i, j}) > 0; }
    int diagonal_boxes() const {
        int n = 0;
        for (const auto& b : boxes) n += (b.row == b.col) ? 1 : 0;
        return n;
    }
    std::string str() const;
};

// SD_{outer/inner}; inner not contained in outer yields the flagged empty shape.
SkewShape shifted_diagram(const StrictPartition& outer, const StrictPartition& inner = {});
// D_{outer/inner} for ordinary (weakly decreasing) partitions.
SkewShape unshifted_diagram(const std::vector<int>& outer, const std::vector<int>& inner = {});

// Boxes (i,j) with SD_lambda - {(i,j)} = SD_mu for a strict partition mu != lambda.
std::set<Box> removable_corners(const StrictPartition& lambda);

// Strict partitions nu obtained by deleting a subset of removable corner
// boxes from SD_mu (so SD_{mu/nu} is a subset of the removable corners),
// in deterministic order, including mu itself.
std::vector<StrictPartition> corner_deletions(const StrictPartition& mu);

// No two boxes (i1,j1), (i2,j2) with i1<i2 and j1<j2.
bool is_shifted_ribbon(const SkewShape& shape);

struct RibbonParams {
    int scc = 0, mcc = 0, fb = 0, res = 0;
    int scc_star = 0, mcc_star = 0, fb_star = 0, res_star = 0;
};

// Requires (Lambda_2, Lambda_3, ...) <= Psi <= Lambda, so SD_{Lambda/Psi}
// is a shifted ribbon.
RibbonParams ribbon_params(const StrictPartition& Lambda, const StrictPartition& Psi);

struct CornerClasses {
    std::set<Box> U, V, W;
    std::set<Box> U_star, V_star, W_star;
};

CornerClasses corner_classes(const StrictPartition& Lambda, const StrictPartition& Psi);

enum class ComposeOp { right, below, merge }; // the three translated unions

// rho a nonempty shifted skew shape, tau a nonempty unshifted skew shape.
SkewShape compose_shapes(const SkewShape& rho, const SkewShape& tau, ComposeOp op);

// Reconstruct (outer, inner) from an explicit box set of a shifted skew shape.
SkewShape skew_from_boxes(const std::set<Box>& boxes);

} // namespace kschur
