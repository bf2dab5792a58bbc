#include "kschur/algebra.hpp"

#include <stdexcept>

namespace kschur {

MultiPoly ring_op(const MultiPoly& a, const MultiPoly& b, RingOp op) {
    switch (op) {
        case RingOp::add: return a + b;
        case RingOp::sub: return a - b;
        case RingOp::mul: return a * b;
    }
    throw std::invalid_argument("ring_op: bad op");
}

MultiPoly bar_expand(Var v, int maxdeg) {
    if (maxdeg < 1) throw std::invalid_argument("bar_expand: maxdeg must be >= 1");
    MultiPoly r(maxdeg);
    for (int k = 1; k <= maxdeg; ++k) {
        Int sign = (k % 2 == 0) ? 1 : -1;
        r.add_term(Monomial::var(v, k), BetaInt::monomial(sign, k - 1));
    }
    return r;
}

namespace {

// 1/(1 - g) = 1 + g + g^2 + ... for g with positive minimal degree.
MultiPoly geometric_inverse(const MultiPoly& g, int maxdeg) {
    MultiPoly r = MultiPoly::constant(BetaInt(1), maxdeg);
    MultiPoly p = MultiPoly::constant(BetaInt(1), maxdeg);
    int mind = g.min_total_degree();
    if (mind <= 0) throw std::invalid_argument("geometric_inverse: series must have positive valuation");
    for (int k = 1; k * mind <= maxdeg; ++k) {
        p *= g;
        if (p.is_zero()) break;
        r += p;
    }
    return r;
}

} // namespace

MultiPoly cauchy_kernel(KernelKind kind, int nx, int ny, int maxdeg) {
    if (nx < 1 || ny < 1 || maxdeg < 0) throw std::invalid_argument("cauchy_kernel: bad arguments");
    MultiPoly r = MultiPoly::constant(BetaInt(1), maxdeg);
    if (maxdeg == 0) return r;
    for (int i = 1; i <= nx; ++i) {
        MultiPoly xb = bar_expand(xvar(i), maxdeg);
        MultiPoly x = MultiPoly::variable(xvar(i)).truncated(maxdeg);
        for (int j = 1; j <= ny; ++j) {
            MultiPoly y = MultiPoly::variable(yvar(j)).truncated(maxdeg);
            if (kind == KernelKind::standard) {
                // (1 - xbar_i y_j) * 1/(1 - x_i y_j)
                r *= MultiPoly::constant(BetaInt(1), maxdeg) - xb * y;
                r *= geometric_inverse(x * y, maxdeg);
            } else {
                // (1 + x_i y_j) * 1/(1 + xbar_i y_j)
                r *= MultiPoly::constant(BetaInt(1), maxdeg) + x * y;
                r *= geometric_inverse(-(xb * y), maxdeg);
            }
        }
    }
    return r;
}

MultiPoly cauchy_kernel_reciprocal(int nx, int ny, int maxdeg) {
    MultiPoly r = MultiPoly::constant(BetaInt(1), maxdeg);
    if (maxdeg == 0) return r;
    for (int i = 1; i <= nx; ++i) {
        MultiPoly xb = bar_expand(xvar(i), maxdeg);
        MultiPoly x = MultiPoly::variable(xvar(i)).truncated(maxdeg);
        for (int j = 1; j <= ny; ++j) {
            MultiPoly y = MultiPoly::variable(yvar(j)).truncated(maxdeg);
            r *= MultiPoly::constant(BetaInt(1), maxdeg) - x * y;
            r *= geometric_inverse(xb * y, maxdeg);
        }
    }
    return r;
}

MultiPoly beta_specialize(const MultiPoly& f, BetaValue value) {
    if (value == BetaValue::keep) return f;
    MultiPoly r(f.trunc());
    for (const auto& [m, c] : f.terms()) {
        BetaInt c0 = c.at_beta_zero();
        if (!c0.is_zero()) r.add_term(m, c0);
    }
    return r;
}

} // namespace kschur
