#pragma once

// Dense polynomials in the deformation parameter beta, over exact integer or
// rational coefficients.  These are the coefficient rings used everywhere:
// Z[beta] for generating functions, Q[beta] inside basis solves.

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "kschur/bigint.hpp"

namespace kschur {

template <class C>
class BetaPoly {
public:
    BetaPoly() = default;
    BetaPoly(int v) { *this = from_coeff(C(v)); }            // NOLINT(google-explicit-constructor)
    explicit BetaPoly(const C& c) { *this = from_coeff(c); }

    static BetaPoly zero() { return {}; }
    static BetaPoly from_coeff(const C& c) {
        BetaPoly p;
        if (!(c == 0)) p.c_.push_back(c);
        return p;
    }
    // c * beta^k
    static BetaPoly monomial(const C& c, int k) {
        if (k < 0) throw std::invalid_argument("BetaPoly: negative beta exponent");
        BetaPoly p;
        if (c == 0) return p;
        p.c_.assign(static_cast<size_t>(k) + 1, C(0));
        p.c_.back() = c;
        return p;
    }
    static BetaPoly beta(int k = 1) { return monomial(C(1), k); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return c_.empty() ? -1 : static_cast<int>(c_.size()) - 1; }
    const C& coeff(int k) const {
        static const C kZero(0);
        if (k < 0 || k > degree()) return kZero;
        return c_[static_cast<size_t>(k)];
    }
    // True iff the polynomial is c * beta^k for a single k (or zero).
    bool is_monomial() const {
        int nz = 0;
        for (const auto& c : c_) nz += (c == 0) ? 0 : 1;
        return nz <= 1;
    }

    BetaPoly& operator+=(const BetaPoly& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), C(0));
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    BetaPoly& operator-=(const BetaPoly& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), C(0));
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    friend BetaPoly operator+(BetaPoly a, const BetaPoly& b) { return a += b; }
    friend BetaPoly operator-(BetaPoly a, const BetaPoly& b) { return a -= b; }
    friend BetaPoly operator-(const BetaPoly& a) {
        BetaPoly r = a;
        for (auto& c : r.c_) c = -c;
        return r;
    }
    friend BetaPoly operator*(const BetaPoly& a, const BetaPoly& b) {
        BetaPoly r;
        if (a.is_zero() || b.is_zero()) return r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, C(0));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        r.trim();
        return r;
    }
    BetaPoly& operator*=(const BetaPoly& o) { return *this = *this * o; }

    BetaPoly scaled(const C& s) const {
        BetaPoly r = *this;
        for (auto& c : r.c_) c *= s;
        r.trim();
        return r;
    }
    BetaPoly beta_shifted(int k) const { return *this * beta(k); }

    // Keep only the beta^0 coefficient (the beta = 0 specialization).
    BetaPoly at_beta_zero() const { return from_coeff(coeff(0)); }

    friend bool operator==(const BetaPoly& a, const BetaPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const BetaPoly& a, const BetaPoly& b) { return !(a == b); }

    std::string str() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (int k = degree(); k >= 0; --k) {
            const C& c = coeff(k);
            if (c == 0) continue;
            C a = c;
            bool neg = c < 0;
            if (neg) a = -c;
            if (first) {
                if (neg) os << "-";
                first = false;
            } else {
                os << (neg ? " - " : " + ");
            }
            bool unit = (a == 1);
            if (k == 0 || !unit) os << a;
            if (k > 0) {
                if (!unit) os << "*";
                os << "beta";
                if (k > 1) os << "^" << k;
            }
        }
        return os.str();
    }

    const std::vector<C>& coeffs() const { return c_; }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<C> c_; // c_[k] is the coefficient of beta^k; no trailing zeros
};

using BetaInt = BetaPoly<Int>;
using BetaRat = BetaPoly<Rat>;

inline BetaRat to_rational(const BetaInt& p) {
    BetaRat r;
    for (int k = 0; k <= p.degree(); ++k)
        r += BetaRat::monomial(Rat(p.coeff(k)), k);
    return r;
}

// Conversion back to Z[beta]; throws if any denominator is not 1.
inline BetaInt to_integral(const BetaRat& p) {
    BetaInt r;
    for (int k = 0; k <= p.degree(); ++k) {
        const Rat& c = p.coeff(k);
        if (c == 0) continue;
        if (denominator(c) != 1) throw std::domain_error("BetaRat has non-integer coefficient: " + p.str());
        r += BetaInt::monomial(numerator(c), k);
    }
    return r;
}

} // namespace kschur
