#include "kschur/genfun.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace kschur {

const char* family_name(Family f) {
    switch (f) {
        case Family::GP: return "GP";
        case Family::GQ: return "GQ";
        case Family::GPss: return "GPss";
        case Family::GQss: return "GQss";
        case Family::gp: return "gp";
        case Family::gq: return "gq";
        case Family::jp: return "jp";
        case Family::jq: return "jq";
    }
    return "?";
}

Family parse_family(const std::string& name) {
    for (Family f : {Family::GP, Family::GQ, Family::GPss, Family::GQss, Family::gp, Family::gq,
                     Family::jp, Family::jq})
        if (name == family_name(f)) return f;
    throw std::invalid_argument("unknown family '" + name + "'");
}

namespace {

bool code_primed(int c) { return c % 2 == 1; }
int code_value(int c) { return (c + 1) / 2; }

// Weight monomial with values 1..nx mapped to x_1..x_nx and values
// nx+1..nx+ny mapped to y_1..y_ny.
Var split_var(int value, int nx) {
    return value <= nx ? xvar(value) : yvar(value - nx);
}

MultiPoly genfun_boxes_split(Family family, const SkewShape& shape, int nx, int ny) {
    int nvars = nx + ny;
    if (nvars < 1) throw std::invalid_argument("genfun: need at least one variable");
    MultiPoly out;
    if (!shape.contained) return out;
    const int nboxes = shape.box_count();

    switch (family) {
        case Family::GP:
        case Family::GQ: {
            DiagonalFamily fam = family == Family::GP ? DiagonalFamily::P : DiagonalFamily::Q;
            enumerate_svt(shape, fam, nvars, [&](const SetValuedTableau& t) {
                int sz = 0;
                std::map<int, int> mult;
                for (const auto& [b, s] : t.cells) {
                    sz += static_cast<int>(s.size());
                    for (int c : s) mult[code_value(c)] += 1;
                }
                Monomial m;
                for (const auto& [v, e] : mult) m *= Monomial::var(split_var(v, nx), e);
                out.add_term(m, BetaInt::beta(sz - nboxes)); // beta^{|T| - |shape|}
                return true;
            });
            return out;
        }
        case Family::gp:
        case Family::gq: {
            DiagonalFamily fam = family == Family::gp ? DiagonalFamily::P : DiagonalFamily::Q;
            enumerate_pp(shape, fam, nvars, [&](const PlanePartition& t) {
                std::map<int, std::set<int>> cols_with_value, rows_with_primed;
                for (const auto& [b, c] : t.cells) {
                    if (code_primed(c)) rows_with_primed[code_value(c)].insert(b.row);
                    else cols_with_value[code_value(c)].insert(b.col);
                }
                std::map<int, int> mult;
                for (const auto& [v, cols] : cols_with_value) mult[v] += static_cast<int>(cols.size());
                for (const auto& [v, rows] : rows_with_primed) mult[v] += static_cast<int>(rows.size());
                Monomial m;
                int wt = 0;
                for (const auto& [v, e] : mult) {
                    m *= Monomial::var(split_var(v, nx), e);
                    wt += e;
                }
                Int sign = ((nboxes - wt) % 2 == 0) ? 1 : -1; // (-beta)^{|shape| - |wt|}
                out.add_term(m, BetaInt::monomial(sign, nboxes - wt));
                return true;
            });
            return out;
        }
        case Family::jp:
        case Family::jq: {
            // Per semistandard filling, each maximal run of equal entries that
            // can be cut into bars contributes x_v (x_v - beta)^{len-1}.
            DiagonalFamily fam = family == Family::jp ? DiagonalFamily::P : DiagonalFamily::Q;
            // walk fillings only; the bar cuts are summed in closed form
            std::vector<Box> order = reading_order(shape);
            std::map<Box, int> index;
            for (size_t k = 0; k < order.size(); ++k) index[order[k]] = static_cast<int>(k);
            std::vector<int> left(order.size(), -1), above(order.size(), -1);
            std::vector<bool> diag(order.size(), false);
            for (size_t k = 0; k < order.size(); ++k) {
                auto it = index.find(Box{order[k].row, order[k].col - 1});
                if (it != index.end()) left[k] = it->second;
                it = index.find(Box{order[k].row + 1, order[k].col});
                if (it != index.end()) above[k] = it->second;
                diag[k] = order[k].row == order[k].col;
            }
            int max_code = 2 * nvars;
            std::vector<int> fill(order.size(), 0);
            std::function<void(size_t)> rec = [&](size_t k) {
                if (k == order.size()) {
                    // maximal runs: horizontal for unprimed, vertical for primed
                    MultiPoly contrib = MultiPoly::one();
                    for (size_t q = 0; q < order.size(); ++q) {
                        const Box& b = order[q];
                        int c = fill[q];
                        bool starts_run;
                        if (!code_primed(c)) {
                            auto lt = index.find(Box{b.row, b.col - 1});
                            starts_run = !(lt != index.end() && fill[lt->second] == c);
                        } else {
                            auto up = index.find(Box{b.row + 1, b.col});
                            starts_run = !(up != index.end() && fill[up->second] == c);
                        }
                        MultiPoly x = MultiPoly::variable(split_var(code_value(c), nx));
                        if (starts_run) contrib *= x;
                        else contrib *= x - MultiPoly::constant(BetaInt::beta());
                    }
                    // summing (-beta)^{#boxes-#bars} x^T over all bar cuts of
                    // this filling gives prod_runs x_v (x_v - beta)^{len-1}
                    out += contrib;
                    return;
                }
                int lo = left[k] >= 0 ? fill[left[k]] : 1;
                int hi = above[k] >= 0 ? fill[above[k]] : max_code;
                for (int c = lo; c <= hi; ++c) {
                    if (fam == DiagonalFamily::P && diag[k] && code_primed(c)) continue;
                    if (left[k] >= 0 && fill[left[k]] == c && code_primed(c)) continue;
                    if (above[k] >= 0 && fill[above[k]] == c && !code_primed(c)) continue;
                    fill[k] = c;
                    rec(k + 1);
                }
            };
            rec(0);
            return out;
        }
        case Family::GPss:
        case Family::GQss:
            throw std::invalid_argument("genfun_boxes: double-slash families need outer/inner partitions");
    }
    return out;
}

struct CacheKey {
    Family family;
    StrictPartition outer, inner;
    int nx, ny;
    bool operator<(const CacheKey& o) const {
        return std::tie(family, outer, inner, nx, ny) <
               std::tie(o.family, o.outer, o.inner, o.nx, o.ny);
    }
};

std::map<CacheKey, MultiPoly>& cache() {
    static std::map<CacheKey, MultiPoly> c;
    return c;
}
std::mutex& cache_mutex() {
    static std::mutex m;
    return m;
}

MultiPoly genfun_split_impl(Family family, const StrictPartition& outer, const StrictPartition& inner,
                            int nx, int ny) {
    if (family == Family::GPss || family == Family::GQss) {
        Family base = family == Family::GPss ? Family::GP : Family::GQ;
        MultiPoly out;
        if (!contains(outer, inner)) return out;
        for (const auto& nu : corner_deletions(inner)) {
            // beta exponent |T| - |outer/inner| = (|T| - |outer/nu|) + (|inner| - |nu|)
            MultiPoly part = genfun_split_impl(base, outer, nu, nx, ny);
            int shift = partition_size(inner) - partition_size(nu);
            MultiPoly shifted;
            for (const auto& [m, c] : part.terms())
                shifted.add_term(m, c * BetaInt::beta(shift));
            out += shifted;
        }
        return out;
    }
    return genfun_boxes_split(family, shifted_diagram(outer, inner), nx, ny);
}

} // namespace

MultiPoly genfun_split(Family family, const StrictPartition& outer, const StrictPartition& inner,
                       int nx, int ny) {
    CacheKey key{family, outer, inner, nx, ny};
    {
        std::lock_guard<std::mutex> lock(cache_mutex());
        auto it = cache().find(key);
        if (it != cache().end()) return it->second;
    }
    MultiPoly r = genfun_split_impl(family, outer, inner, nx, ny);
    std::lock_guard<std::mutex> lock(cache_mutex());
    cache().emplace(key, r);
    return r;
}

MultiPoly genfun(Family family, const StrictPartition& outer, const StrictPartition& inner, int nvars) {
    return genfun_split(family, outer, inner, nvars, 0);
}

MultiPoly genfun_boxes(Family family, const SkewShape& shape, int nvars) {
    return genfun_boxes_split(family, shape, nvars, 0);
}

UniPoly genfun_one_var(Family family, const StrictPartition& outer, const StrictPartition& inner) {
    return to_unipoly(genfun(family, outer, inner, 1), xvar(1));
}

UniPoly ribbon_closed_form(RibbonKind kind, const StrictPartition& Lambda, const StrictPartition& Psi) {
    RibbonParams p = ribbon_params(Lambda, Psi);
    UniPoly t = UniPoly::t();
    UniPoly two_t_minus_beta = t.scaled(BetaRat(2)) - UniPoly::constant(BetaRat::beta());
    UniPoly t_minus_beta = t - UniPoly::constant(BetaRat::beta());
    if (kind == RibbonKind::jq) {
        UniPoly r = UniPoly::constant(BetaRat(Rat(1) * (Int(1) << p.scc)));
        return r * t.pow(p.scc + p.mcc + p.fb) * two_t_minus_beta.pow(p.mcc) * t_minus_beta.pow(p.res - 2);
    }
    UniPoly r = UniPoly::constant(BetaRat(Rat(1) * (Int(1) << p.scc_star)));
    return r * t.pow(p.scc_star + p.mcc_star + p.fb_star) * two_t_minus_beta.pow(p.mcc_star) *
           t_minus_beta.pow(p.res_star - 1);
}

bool is_symmetric(const MultiPoly& f, int nvars) {
    if (f.max_index(Alpha::X) > nvars)
        throw std::invalid_argument("is_symmetric: polynomial uses more x variables than stated");
    for (int i = 1; i < nvars; ++i)
        if (f.swapped_vars(xvar(i), xvar(i + 1)) != f) return false;
    return true;
}

} // namespace kschur
