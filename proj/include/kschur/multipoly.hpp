#pragma once

// Sparse multivariate polynomials / degree-truncated series over Z[beta]
// (or Q[beta] inside solvers).  Truncation is by total x+y degree; beta never
// counts toward the degree.

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "kschur/beta.hpp"
#include "kschur/monomial.hpp"

namespace kschur {

template <class BP>
class PolyT {
public:
    using Coeff = BP;
    using Terms = std::map<Monomial, BP>;

    PolyT() = default;
    explicit PolyT(std::optional<int> trunc) : trunc_(trunc) {}

    static PolyT zero(std::optional<int> trunc = std::nullopt) { return PolyT(trunc); }
    static PolyT constant(const BP& c, std::optional<int> trunc = std::nullopt) {
        PolyT p(trunc);
        p.add_term(Monomial::one(), c);
        return p;
    }
    static PolyT one() { return constant(BP(1)); }
    static PolyT term(const Monomial& m, const BP& c, std::optional<int> trunc = std::nullopt) {
        PolyT p(trunc);
        p.add_term(m, c);
        return p;
    }
    static PolyT variable(Var v) { return term(Monomial::var(v), BP(1)); }

    bool is_zero() const { return t_.empty(); }
    size_t term_count() const { return t_.size(); }
    const Terms& terms() const { return t_; }
    std::optional<int> trunc() const { return trunc_; }

    void set_trunc(std::optional<int> d) {
        trunc_ = d;
        if (!trunc_) return;
        for (auto it = t_.begin(); it != t_.end();) {
            if (it->first.total_degree() > *trunc_) it = t_.erase(it);
            else ++it;
        }
    }
    PolyT truncated(int d) const {
        PolyT r = *this;
        r.set_trunc(d);
        return r;
    }
    // Drop the truncation marker without changing terms.
    PolyT untruncated() const {
        PolyT r = *this;
        r.trunc_ = std::nullopt;
        return r;
    }

    BP coeff(const Monomial& m) const {
        auto it = t_.find(m);
        return it == t_.end() ? BP() : it->second;
    }

    void add_term(const Monomial& m, const BP& c) {
        if (c.is_zero()) return;
        if (trunc_ && m.total_degree() > *trunc_) return;
        auto [it, fresh] = t_.emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    int min_total_degree() const { // infinity encoded as -1 for the zero polynomial
        int d = -1;
        for (const auto& [m, c] : t_) {
            int md = m.total_degree();
            if (d < 0 || md < d) d = md;
        }
        return d;
    }
    int max_total_degree() const {
        int d = -1;
        for (const auto& [m, c] : t_) d = std::max(d, m.total_degree());
        return d;
    }
    int max_index(Alpha a) const {
        int m = 0;
        for (const auto& [mon, c] : t_) m = std::max(m, mon.max_index(a));
        return m;
    }

    PolyT& operator+=(const PolyT& o) {
        merge_trunc(o);
        for (const auto& [m, c] : o.t_) add_term(m, c);
        return *this;
    }
    PolyT& operator-=(const PolyT& o) {
        merge_trunc(o);
        for (const auto& [m, c] : o.t_) add_term(m, -c);
        return *this;
    }
    friend PolyT operator+(PolyT a, const PolyT& b) { return a += b; }
    friend PolyT operator-(PolyT a, const PolyT& b) { return a -= b; }
    friend PolyT operator-(const PolyT& a) {
        PolyT r(a.trunc_);
        for (const auto& [m, c] : a.t_) r.t_.emplace(m, -c);
        return r;
    }
    friend PolyT operator*(const PolyT& a, const PolyT& b) {
        PolyT r;
        r.trunc_ = min_opt(a.trunc_, b.trunc_);
        for (const auto& [ma, ca] : a.t_) {
            if (r.trunc_ && ma.total_degree() > *r.trunc_) continue;
            for (const auto& [mb, cb] : b.t_) {
                if (r.trunc_ && ma.total_degree() + mb.total_degree() > *r.trunc_) continue;
                r.add_term(ma * mb, ca * cb);
            }
        }
        return r;
    }
    PolyT& operator*=(const PolyT& o) { return *this = *this * o; }

    PolyT scaled(const BP& c) const {
        PolyT r(trunc_);
        for (const auto& [m, co] : t_) r.add_term(m, co * c);
        return r;
    }

    PolyT pow(int n) const {
        if (n < 0) throw std::invalid_argument("PolyT::pow: negative exponent");
        PolyT r = constant(BP(1), trunc_);
        PolyT b = *this;
        while (n > 0) {
            if (n & 1) r = r * b;
            n >>= 1;
            if (n) b = b * b;
        }
        return r;
    }

    friend bool operator==(const PolyT& a, const PolyT& b) { return a.t_ == b.t_; }
    friend bool operator!=(const PolyT& a, const PolyT& b) { return !(a == b); }

    PolyT swapped_vars(Var u, Var v) const {
        PolyT r(trunc_);
        for (const auto& [m, c] : t_) r.add_term(m.swapped(u, v), c);
        return r;
    }
    PolyT renamed_var(Var from, Var to) const {
        PolyT r(trunc_);
        for (const auto& [m, c] : t_) r.add_term(m.renamed(from, to), c);
        return r;
    }
    PolyT with_var_zero(Var v) const {
        PolyT r(trunc_);
        for (const auto& [m, c] : t_)
            if (!m.uses(v)) r.add_term(m, c);
        return r;
    }

    // Collect coefficients of powers of one variable: result[k] has v^k removed.
    std::map<int, PolyT> coefficients_of(Var v) const {
        std::map<int, PolyT> out;
        for (const auto& [m, c] : t_) {
            int e = m.exponent(v);
            Monomial rest;
            for (const auto& [w, we] : m.exps())
                if (!(w == v)) rest *= Monomial::var(w, we);
            out[e].add_term(rest, c);
        }
        return out;
    }

    std::string str() const {
        if (t_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : t_) {
            std::string cs = c.str();
            bool wrap = cs.find(' ') != std::string::npos;
            if (!first) os << " + ";
            first = false;
            if (m.is_one()) { os << (wrap ? "(" + cs + ")" : cs); continue; }
            if (cs == "1") os << m.str();
            else if (cs == "-1") os << "-" << m.str();
            else os << (wrap ? "(" + cs + ")" : cs) << "*" << m.str();
        }
        return os.str();
    }

private:
    static std::optional<int> min_opt(std::optional<int> a, std::optional<int> b) {
        if (!a) return b;
        if (!b) return a;
        return std::min(*a, *b);
    }
    void merge_trunc(const PolyT& o) {
        auto t = min_opt(trunc_, o.trunc_);
        if (t != trunc_) set_trunc(t);
    }

    Terms t_;
    std::optional<int> trunc_;
};

using MultiPoly = PolyT<BetaInt>;
using MultiPolyQ = PolyT<BetaRat>;

inline MultiPolyQ to_rational(const MultiPoly& p) {
    MultiPolyQ r(p.trunc());
    for (const auto& [m, c] : p.terms()) r.add_term(m, to_rational(c));
    return r;
}
inline MultiPoly to_integral(const MultiPolyQ& p) {
    MultiPoly r(p.trunc());
    for (const auto& [m, c] : p.terms()) r.add_term(m, to_integral(c));
    return r;
}

} // namespace kschur
