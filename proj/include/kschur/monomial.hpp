#pragma once

// Monomials in finitely many commuting variables drawn from two disjoint
// alphabets "x" and "y".  beta is not part of the monomial; it lives in the
// coefficient ring.

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kschur {

enum class Alpha : uint8_t { X = 0, Y = 1 };

struct Var {
    Alpha alpha = Alpha::X;
    int index = 1; // 1-based

    friend bool operator==(const Var& a, const Var& b) {
        return a.alpha == b.alpha && a.index == b.index;
    }
    friend bool operator<(const Var& a, const Var& b) {
        if (a.alpha != b.alpha) return a.alpha < b.alpha;
        return a.index < b.index;
    }
    std::string str() const {
        return (alpha == Alpha::X ? "x" : "y") + std::to_string(index);
    }
};

inline Var xvar(int i) { return Var{Alpha::X, i}; }
inline Var yvar(int i) { return Var{Alpha::Y, i}; }

class Monomial {
public:
    Monomial() = default;

    static Monomial one() { return {}; }
    static Monomial var(Var v, int e = 1) {
        Monomial m;
        if (e < 0) throw std::invalid_argument("Monomial: negative exponent");
        if (e > 0) m.e_.emplace_back(v, e);
        return m;
    }

    bool is_one() const { return e_.empty(); }
    int total_degree() const {
        int d = 0;
        for (const auto& [v, e] : e_) d += e;
        return d;
    }
    int exponent(Var v) const {
        for (const auto& [w, e] : e_)
            if (w == v) return e;
        return 0;
    }
    int max_index(Alpha a) const {
        int m = 0;
        for (const auto& [v, e] : e_)
            if (v.alpha == a) m = std::max(m, v.index);
        return m;
    }
    bool uses(Var v) const { return exponent(v) > 0; }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial r;
        size_t i = 0, j = 0;
        while (i < a.e_.size() && j < b.e_.size()) {
            if (a.e_[i].first < b.e_[j].first) r.e_.push_back(a.e_[i++]);
            else if (b.e_[j].first < a.e_[i].first) r.e_.push_back(b.e_[j++]);
            else {
                r.e_.emplace_back(a.e_[i].first, a.e_[i].second + b.e_[j].second);
                ++i; ++j;
            }
        }
        for (; i < a.e_.size(); ++i) r.e_.push_back(a.e_[i]);
        for (; j < b.e_.size(); ++j) r.e_.push_back(b.e_[j]);
        return r;
    }

    Monomial& operator*=(const Monomial& o) { return *this = *this * o; }

    // Exchange two variables (used by symmetry checks).
    Monomial swapped(Var a, Var b) const {
        Monomial r = *this;
        for (auto& [v, e] : r.e_) {
            if (v == a) v = b;
            else if (v == b) v = a;
        }
        std::sort(r.e_.begin(), r.e_.end());
        return r;
    }
    // Rename one variable (it must not collide with an existing one).
    Monomial renamed(Var from, Var to) const {
        Monomial r = *this;
        for (auto& [v, e] : r.e_)
            if (v == from) v = to;
        std::sort(r.e_.begin(), r.e_.end());
        return r;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

    // Graded order: total degree first, then lexicographic on the exponent
    // sequence ordered by (alphabet, index).  Deterministic output everywhere.
    friend bool operator<(const Monomial& a, const Monomial& b) {
        int da = a.total_degree(), db = b.total_degree();
        if (da != db) return da < db;
        size_t i = 0;
        while (i < a.e_.size() && i < b.e_.size()) {
            if (a.e_[i].first < b.e_[i].first) return true;   // earlier variable present => smaller position sorts first
            if (b.e_[i].first < a.e_[i].first) return false;
            if (a.e_[i].second != b.e_[i].second) return a.e_[i].second > b.e_[i].second;
            ++i;
        }
        return a.e_.size() < b.e_.size();
    }

    const std::vector<std::pair<Var, int>>& exps() const { return e_; }

    std::string str() const {
        if (e_.empty()) return "1";
        std::ostringstream os;
        bool first = true;
        for (const auto& [v, e] : e_) {
            if (!first) os << "*";
            first = false;
            os << v.str();
            if (e > 1) os << "^" << e;
        }
        return os.str();
    }

private:
    std::vector<std::pair<Var, int>> e_; // sorted by Var, all exponents > 0
};

} // namespace kschur
