#pragma once

// Series-level building blocks: the bar substitution, Cauchy kernels and the
// beta specialization.

#include "kschur/multipoly.hpp"

namespace kschur {

enum class RingOp { add, sub, mul };
MultiPoly ring_op(const MultiPoly& a, const MultiPoly& b, RingOp op);

// Truncated series of xbar = -x/(1+beta x) = -x + beta x^2 - beta^2 x^3 + ...
MultiPoly bar_expand(Var v, int maxdeg);

enum class KernelKind { standard, dual };

// standard: prod_{i<=nx, j<=ny} (1 - xbar_i y_j) / (1 - x_i y_j)
// dual:     prod_{i<=nx, j<=ny} (1 + x_i y_j) / (1 + xbar_i y_j)
// both truncated to total degree <= maxdeg, constant term 1.
MultiPoly cauchy_kernel(KernelKind kind, int nx, int ny, int maxdeg);

// The reciprocal of the standard kernel (x and xbar in swapped roles),
// prod (1 - x_i y_j) / (1 - xbar_i y_j); used by the invertibility check.
MultiPoly cauchy_kernel_reciprocal(int nx, int ny, int maxdeg);

enum class BetaValue { zero, keep };
MultiPoly beta_specialize(const MultiPoly& f, BetaValue value);

} // namespace kschur
