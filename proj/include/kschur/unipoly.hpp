#pragma once

// One-variable specializations f(t) with exact Q[beta] coefficients, and the
// triangular solver expressing such f in the one-row bases jp_n(t)/jq_n(t).

#include <map>
#include <string>

#include "kschur/multipoly.hpp"

namespace kschur {

class UniPoly {
public:
    UniPoly() = default;

    static UniPoly zero() { return {}; }
    static UniPoly constant(const BetaRat& c) {
        UniPoly p;
        p.add_term(0, c);
        return p;
    }
    static UniPoly one() { return constant(BetaRat(1)); }
    static UniPoly t(int e = 1) {
        UniPoly p;
        p.add_term(e, BetaRat(1));
        return p;
    }

    void add_term(int e, const BetaRat& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = t_.emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    bool is_zero() const { return t_.empty(); }
    int degree() const { return t_.empty() ? -1 : t_.rbegin()->first; }
    BetaRat coeff(int e) const {
        auto it = t_.find(e);
        return it == t_.end() ? BetaRat() : it->second;
    }
    const std::map<int, BetaRat>& terms() const { return t_; }

    UniPoly& operator+=(const UniPoly& o) {
        for (const auto& [e, c] : o.t_) add_term(e, c);
        return *this;
    }
    UniPoly& operator-=(const UniPoly& o) {
        for (const auto& [e, c] : o.t_) add_term(e, -c);
        return *this;
    }
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        UniPoly r;
        for (const auto& [ea, ca] : a.t_)
            for (const auto& [eb, cb] : b.t_) r.add_term(ea + eb, ca * cb);
        return r;
    }
    UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }
    UniPoly scaled(const BetaRat& c) const {
        UniPoly r;
        for (const auto& [e, co] : t_) r.add_term(e, co * c);
        return r;
    }
    UniPoly pow(int n) const {
        UniPoly r = one();
        UniPoly b = *this;
        while (n > 0) {
            if (n & 1) r = r * b;
            n >>= 1;
            if (n) b = b * b;
        }
        return r;
    }

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.t_ == b.t_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    std::string str() const {
        if (t_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
            std::string cs = it->second.str();
            bool wrap = cs.find(' ') != std::string::npos;
            if (!first) os << " + ";
            first = false;
            if (it->first == 0) { os << (wrap ? "(" + cs + ")" : cs); continue; }
            std::string tv = it->first == 1 ? "t" : "t^" + std::to_string(it->first);
            if (cs == "1") os << tv;
            else if (cs == "-1") os << "-" << tv;
            else os << (wrap ? "(" + cs + ")" : cs) << "*" << tv;
        }
        return os.str();
    }

private:
    std::map<int, BetaRat> t_;
};

// A one-variable polynomial from a MultiPoly that only uses variable v.
UniPoly to_unipoly(const MultiPoly& f, Var v);

enum class OneRowBasis { jp, jq };

// jp_n(t) = t (t-beta)^{n-1} for n >= 1, jp_0 = 1;
// jq_n(t) = (2t^2 - beta t)(t-beta)^{n-2} for n >= 2, jq_1 = 2t, jq_0 = 1.
UniPoly one_row_basis_poly(OneRowBasis basis, int n);

// Unique coefficients c_n with f = sum_n c_n * basis_n(t), found by
// descending t-degree elimination.  Throws on a nonzero remainder.
std::map<int, BetaRat> solve_in_basis(const UniPoly& f, OneRowBasis basis);

} // namespace kschur
