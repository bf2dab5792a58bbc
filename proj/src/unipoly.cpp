#include "kschur/unipoly.hpp"

#include <stdexcept>

namespace kschur {

UniPoly to_unipoly(const MultiPoly& f, Var v) {
    UniPoly r;
    for (const auto& [m, c] : f.terms()) {
        int e = m.exponent(v);
        if (e != m.total_degree())
            throw std::invalid_argument("to_unipoly: polynomial uses a variable other than " + v.str());
        r.add_term(e, to_rational(c));
    }
    return r;
}

UniPoly one_row_basis_poly(OneRowBasis basis, int n) {
    if (n < 0) throw std::invalid_argument("one_row_basis_poly: n must be >= 0");
    if (n == 0) return UniPoly::one();
    UniPoly t = UniPoly::t();
    UniPoly t_minus_beta = t - UniPoly::constant(BetaRat::beta());
    if (basis == OneRowBasis::jp) return t * t_minus_beta.pow(n - 1);
    if (n == 1) return t.scaled(BetaRat(2));
    UniPoly head = t * t.scaled(BetaRat(2)) - t.scaled(BetaRat::beta());
    return head * t_minus_beta.pow(n - 2);
}

std::map<int, BetaRat> solve_in_basis(const UniPoly& f, OneRowBasis basis) {
    std::map<int, BetaRat> out;
    UniPoly rem = f;
    while (!rem.is_zero()) {
        int d = rem.degree();
        UniPoly b = one_row_basis_poly(basis, d);
        BetaRat lead = b.coeff(d);
        // Leading t-coefficient is a nonzero rational (1 or 2) in both bases.
        if (!lead.is_monomial() || lead.coeff(0) == 0)
            throw std::domain_error("solve_in_basis: unexpected basis leading coefficient");
        BetaRat c = rem.coeff(d).scaled(Rat(1) / lead.coeff(0));
        out[d] = c;
        rem -= b.scaled(c);
        if (!rem.is_zero() && rem.degree() >= d)
            throw std::domain_error("solve_in_basis: elimination failed to reduce degree");
    }
    return out;
}

} // namespace kschur
