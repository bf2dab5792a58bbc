#include "kschur/identities.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <stdexcept>

namespace kschur {

MultiPoly to_y_alphabet(const MultiPoly& p) {
    MultiPoly r(p.trunc());
    for (const auto& [m, c] : p.terms()) {
        Monomial nm;
        for (const auto& [v, e] : m.exps()) {
            if (v.alpha == Alpha::Y) throw std::invalid_argument("to_y_alphabet: already uses y variables");
            nm *= Monomial::var(yvar(v.index), e);
        }
        r.add_term(nm, c);
    }
    return r;
}

namespace {

MultiPoly from_unipoly(const UniPoly& u, Var v) {
    MultiPoly r;
    for (const auto& [e, c] : u.terms()) r.add_term(Monomial::var(v, e), to_integral(c));
    return r;
}

UniPoly negate_variable(const UniPoly& u) { // t -> -t
    UniPoly r;
    for (const auto& [e, c] : u.terms()) r.add_term(e, e % 2 == 0 ? c : -c);
    return r;
}

// ---------------------------------------------------------------------------
// Graded triangular basis expansion.  The basis polynomials are graded with
// their pivot layer (the classical P/Q polynomials) at the bottom (G-type,
// beta raises degree) or at the top (dual type, beta lowers degree); the pivot
// of basis_nu is the monomial x^nu.

struct BasisSolve {
    enum class Status { exact, partial, singular };
    std::map<StrictPartition, BetaRat> coeffs;
    Status status = Status::exact;
};

Monomial pivot_monomial(const StrictPartition& nu) {
    Monomial m;
    for (size_t i = 0; i < nu.size(); ++i) m *= Monomial::var(xvar(static_cast<int>(i) + 1), nu[i]);
    return m;
}

// All strict partitions of size s with parts sorted lex-descending, which is
// compatible with dominance so the pivot elimination is triangular.
std::vector<StrictPartition> partitions_lex_desc(int s) {
    auto parts = strict_partitions_of(s);
    std::sort(parts.begin(), parts.end(), [](const StrictPartition& a, const StrictPartition& b) {
        return a > b; // vector lex
    });
    return parts;
}

BasisSolve expand_in_graded_basis(MultiPolyQ rem,
                                  const std::function<MultiPolyQ(const StrictPartition&)>& basis,
                                  bool pivot_at_bottom, int max_size, int nvars) {
    BasisSolve out;
    std::vector<int> sizes;
    for (int s = 0; s <= max_size; ++s) sizes.push_back(s);
    if (!pivot_at_bottom) std::reverse(sizes.begin(), sizes.end());
    for (int s : sizes) {
        for (const auto& nu : partitions_lex_desc(s)) {
            if (static_cast<int>(nu.size()) > nvars) continue; // pivot vanishes in nvars variables
            Monomial pivot = pivot_monomial(nu);
            BetaRat c = rem.coeff(pivot);
            if (c.is_zero()) continue;
            MultiPolyQ b = basis(nu);
            BetaRat lead = b.coeff(pivot);
            if (lead.is_zero() || !lead.is_monomial() || lead.coeff(0) == 0)
                throw std::domain_error("expand_in_graded_basis: missing pivot for " + partition_str(nu));
            BetaRat gamma = c.scaled(Rat(1) / lead.coeff(0));
            out.coeffs[nu] = gamma;
            rem -= b.scaled(gamma);
        }
        // after handling size s, no terms of that degree may remain
        for (const auto& [m, c] : rem.terms()) {
            if (m.total_degree() == s) {
                out.status = BasisSolve::Status::singular;
                return out;
            }
        }
    }
    if (!rem.is_zero())
        out.status = pivot_at_bottom ? BasisSolve::Status::partial : BasisSolve::Status::singular;
    return out;
}

// Split f into (y-monomial -> x-part) slices.
std::map<Monomial, MultiPolyQ> split_by_y(const MultiPolyQ& f) {
    std::map<Monomial, MultiPolyQ> out;
    for (const auto& [m, c] : f.terms()) {
        Monomial xs, ys;
        for (const auto& [v, e] : m.exps())
            (v.alpha == Alpha::X ? xs : ys) *= Monomial::var(v, e);
        out[ys].add_term(xs, c);
    }
    return out;
}

Int expect_integer_beta_monomial(const BetaRat& c, int beta_exp, const std::string& what) {
    if (c.is_zero()) return 0;
    if (!c.is_monomial() || c.degree() != beta_exp)
        throw std::domain_error(what + ": coefficient " + c.str() + " is not an integer times beta^" +
                                std::to_string(beta_exp));
    const Rat& v = c.coeff(beta_exp);
    if (denominator(v) != 1)
        throw std::domain_error(what + ": coefficient is not integral: " + c.str());
    return numerator(v);
}

std::vector<StrictPartition> partitions_contained_in(const StrictPartition& nu) {
    std::vector<StrictPartition> out;
    for (const auto& k : strict_partitions_up_to(partition_size(nu)))
        if (contains(nu, k)) out.push_back(k);
    return out;
}

} // namespace

// ---------------------------------------------------------------------------
// Cauchy residuals

Residual verify_cauchy(CauchyKind kind, int nx, int ny, int maxdeg,
                       const StrictPartition& mu, const StrictPartition& nu) {
    if (maxdeg < 0 || nx < 1 || ny < 1) throw std::invalid_argument("verify_cauchy: bad arguments");
    if ((kind == CauchyKind::QP || kind == CauchyKind::PQ) && (!mu.empty() || !nu.empty()))
        throw std::invalid_argument("verify_cauchy: QP/PQ require mu = nu = {}");
    Residual res;
    res.max_checked_degree = maxdeg;
    MultiPoly acc(maxdeg);

    if (kind == CauchyKind::QP || kind == CauchyKind::PQ) {
        Family gfam = kind == CauchyKind::QP ? Family::GQ : Family::GP;
        Family dfam = kind == CauchyKind::QP ? Family::gp : Family::gq;
        for (const auto& lam : strict_partitions_up_to(maxdeg)) {
            MultiPoly g = genfun(gfam, lam, {}, nx);
            if (g.is_zero()) continue;
            if (g.min_total_degree() < partition_size(lam))
                throw std::logic_error("verify_cauchy: minimal degree below |lambda|");
            MultiPoly d = to_y_alphabet(genfun(dfam, lam, {}, ny));
            acc += g.truncated(maxdeg) * d.truncated(maxdeg);
        }
        acc -= cauchy_kernel(KernelKind::standard, nx, ny, maxdeg);
    } else {
        Family gss = kind == CauchyKind::skewP ? Family::GPss : Family::GQss;
        Family jfam = kind == CauchyKind::skewP ? Family::jq : Family::jp;
        int skew = partition_size(mu);
        for (const auto& lam : strict_partitions_up_to(maxdeg + skew)) {
            MultiPoly g = genfun(gss, lam, mu, nx);
            if (g.is_zero()) continue;
            if (g.min_total_degree() < partition_size(lam) - skew)
                throw std::logic_error("verify_cauchy: minimal degree below |lambda/mu|");
            MultiPoly j = to_y_alphabet(genfun(jfam, lam, nu, ny));
            if (j.is_zero()) continue;
            acc += g.truncated(maxdeg) * j.truncated(maxdeg);
        }
        MultiPoly rhs(maxdeg);
        for (const auto& kap : partitions_contained_in(nu)) {
            MultiPoly g = genfun(gss, nu, kap, nx);
            if (g.is_zero()) continue;
            MultiPoly j = to_y_alphabet(genfun(jfam, mu, kap, ny));
            if (j.is_zero()) continue;
            rhs += g.truncated(maxdeg) * j.truncated(maxdeg);
        }
        acc -= cauchy_kernel(KernelKind::dual, nx, ny, maxdeg) * rhs;
    }
    res.value = acc;
    res.status = acc.is_zero() ? Residual::Status::pass : Residual::Status::fail;
    return res;
}

// ---------------------------------------------------------------------------
// Pieri coefficients

Int pieri_coeff(PieriKind kind, const StrictPartition& lambda, const StrictPartition& nu, int n) {
    if (n < 0) throw std::invalid_argument("pieri_coeff: n must be >= 0");
    if (!contains(nu, lambda)) return 0; // the ribbon sets are empty for lambda not inside nu
    DiagonalFamily fam = kind == PieriKind::bhat ? DiagonalFamily::P : DiagonalFamily::Q;
    Int count = 0;
    for (const auto& m : corner_deletions(lambda)) {
        SkewShape shape = shifted_diagram(nu, m);
        enumerate_svt(shape, fam, 1, [&](const SetValuedTableau& t) {
            int entries = 0;
            for (const auto& [b, s] : t.cells) entries += static_cast<int>(s.size());
            if (entries == n) count += 1;
            return true;
        });
    }
    return count;
}

namespace {

std::map<std::pair<StrictPartition, int>, Int>
build_pieri_oracle_table(PieriKind kind, const StrictPartition& nu) {
    Family fam = kind == PieriKind::bhat ? Family::GP : Family::GQ;
    int size = partition_size(nu);
    int k = std::max<int>(static_cast<int>(nu.size()) + 1, 2);
    for (;; ++k) {
        if (k > std::max(size, 2))
            throw std::domain_error("pieri_oracle_table: basis solve stayed singular up to |nu| variables");
        MultiPolyQ f = to_rational(genfun_split(fam, nu, {}, k, 1));
        auto slices = split_by_y(f); // y1 plays the role of t
        auto basis = [&](const StrictPartition& lam) { return to_rational(genfun(fam, lam, {}, k)); };
        std::map<std::pair<StrictPartition, int>, Int> table;
        bool singular = false;
        for (const auto& [ym, slice] : slices) {
            int t_exp = ym.total_degree();
            BasisSolve sol = expand_in_graded_basis(slice, basis, /*pivot_at_bottom=*/true, size, k);
            if (sol.status != BasisSolve::Status::exact) {
                singular = true;
                break;
            }
            for (const auto& [lam, c] : sol.coeffs) {
                int beta_exp = partition_size(lam) + t_exp - size;
                Int v = expect_integer_beta_monomial(c, beta_exp, "pieri_oracle_table");
                if (v != 0) table[{lam, t_exp}] = v;
            }
        }
        if (!singular) return table;
    }
}

std::map<std::pair<PieriKind, StrictPartition>, std::map<std::pair<StrictPartition, int>, Int>>&
pieri_cache() {
    static std::map<std::pair<PieriKind, StrictPartition>, std::map<std::pair<StrictPartition, int>, Int>> c;
    return c;
}
std::mutex& pieri_cache_mutex() {
    static std::mutex m;
    return m;
}

} // namespace

std::map<std::pair<StrictPartition, int>, Int> pieri_oracle_table(PieriKind kind, const StrictPartition& nu) {
    std::pair<PieriKind, StrictPartition> key{kind, nu};
    {
        std::lock_guard<std::mutex> lock(pieri_cache_mutex());
        auto it = pieri_cache().find(key);
        if (it != pieri_cache().end()) return it->second;
    }
    auto table = build_pieri_oracle_table(kind, nu);
    std::lock_guard<std::mutex> lock(pieri_cache_mutex());
    pieri_cache().emplace(key, table);
    return table;
}

Int pieri_coeff_oracle(PieriKind kind, const StrictPartition& lambda, const StrictPartition& nu, int n) {
    auto table = pieri_oracle_table(kind, nu);
    auto it = table.find({lambda, n});
    return it == table.end() ? Int(0) : it->second;
}

// ---------------------------------------------------------------------------
// Expansion tables and the difference formulas

std::map<int, Rat> expansion_table(ExpansionKind kind, const StrictPartition& Lambda,
                                   const StrictPartition& Psi) {
    Family fam = kind == ExpansionKind::y ? Family::jq : Family::jp;
    OneRowBasis basis = kind == ExpansionKind::y ? OneRowBasis::jq : OneRowBasis::jp;
    (void)ribbon_params(Lambda, Psi); // enforces the ribbon precondition
    UniPoly f = genfun_one_var(fam, Lambda, Psi);
    auto solved = solve_in_basis(f, basis);
    int total = partition_size(Lambda) - partition_size(Psi);
    std::map<int, Rat> out;
    for (const auto& [n, c] : solved) {
        if (c.is_zero()) continue;
        if (!c.is_monomial() || c.degree() != total - n)
            throw std::domain_error("expansion_table: coefficient " + c.str() +
                                    " is not a number times beta^" + std::to_string(total - n));
        out[n] = c.coeff(total - n);
    }
    return out;
}

bool lemma_difference_check(RibbonKind kind, const StrictPartition& Lambda, const StrictPartition& Psi) {
    if (Lambda.size() < 2 || Lambda[1] <= 0)
        throw std::invalid_argument("lemma_difference_check: requires Lambda_2 > 0");
    StrictPartition Gamma(Lambda.begin() + 1, Lambda.end());
    int n = Lambda[0] - Lambda[1];
    int m = Lambda[1];
    PieriKind pk = kind == RibbonKind::jq ? PieriKind::bhat : PieriKind::chat;
    ExpansionKind ek = kind == RibbonKind::jq ? ExpansionKind::y : ExpansionKind::z;
    Rat lhs = Rat(pieri_coeff(pk, Gamma, Psi, n));
    auto tab = expansion_table(ek, Lambda, Psi);
    auto it = tab.find(m);
    Rat rhs = it == tab.end() ? Rat(0) : it->second;
    StrictPartition special1{Lambda[0]};
    StrictPartition special2{Lambda[0] - 1};
    for (size_t i = 2; i < Lambda.size(); ++i) {
        special1.push_back(Lambda[i]);
        special2.push_back(Lambda[i]);
    }
    Rat expected = (Psi == special1 || Psi == special2) ? 1 : 0;
    return lhs - rhs == expected;
}

// ---------------------------------------------------------------------------
// Structure constants

StructTable structure_constants(StructKind kind, const StrictPartition& lambda,
                                const StrictPartition& mu, int cap) {
    StructTable out;
    bool hatted = kind == StructKind::ahat || kind == StructKind::bhat_full || kind == StructKind::chat_full;
    int degree = partition_size(lambda) + partition_size(mu);
    if (!hatted && cap < degree)
        throw std::invalid_argument("structure_constants: cap must be at least |lambda|+|mu|");
    if (cap < 0) throw std::invalid_argument("structure_constants: cap must be >= 0");
    int max_size = hatted ? degree : cap;
    int nvars = std::max(max_size, 1); // the degree cap, which dominates every l(nu)
    out.cap = max_size;

    Family left, right, basis_fam;
    switch (kind) {
        case StructKind::ahat: left = Family::gp; right = Family::gp; basis_fam = Family::gp; break;
        case StructKind::bhat_full: left = Family::gq; right = Family::gq; basis_fam = Family::gq; break;
        case StructKind::chat_full: left = Family::gp; right = Family::gq; basis_fam = Family::gp; break;
        case StructKind::a: left = Family::GP; right = Family::GP; basis_fam = Family::GP; break;
        case StructKind::b: left = Family::GQ; right = Family::GQ; basis_fam = Family::GQ; break;
        default: throw std::invalid_argument("structure_constants: bad kind");
    }

    MultiPoly product = genfun(left, lambda, {}, nvars) * genfun(right, mu, {}, nvars);
    MultiPolyQ f = to_rational(hatted ? product : product.truncated(max_size).untruncated());
    auto basis = [&](const StrictPartition& nu) {
        MultiPoly b = genfun(basis_fam, nu, {}, nvars);
        return to_rational(hatted ? b : b.truncated(max_size).untruncated());
    };
    BasisSolve sol = expand_in_graded_basis(f, basis, /*pivot_at_bottom=*/!hatted, max_size, nvars);
    if (sol.status == BasisSolve::Status::singular)
        throw std::domain_error("structure_constants: singular basis solve; increase the variable count");
    // the unhatted expansions always continue past the cap
    out.partial = !hatted || sol.status == BasisSolve::Status::partial;
    for (const auto& [nu, c] : sol.coeffs) {
        int beta_exp = hatted ? degree - partition_size(nu) : partition_size(nu) - degree;
        Int v = expect_integer_beta_monomial(c, beta_exp, "structure_constants");
        if (v != 0) out.values[nu] = v;
    }
    return out;
}

std::map<std::pair<StrictPartition, StrictPartition>, Int>
coproduct_constants(StructKind kind, const StrictPartition& nu, int mu_cap) {
    Family split_fam, xbasis_fam, ybasis_fam;
    switch (kind) {
        case StructKind::ahat: split_fam = Family::GQ; xbasis_fam = Family::GQ; ybasis_fam = Family::GQ; break;
        case StructKind::bhat_full: split_fam = Family::GP; xbasis_fam = Family::GP; ybasis_fam = Family::GP; break;
        case StructKind::chat_full: split_fam = Family::GQ; xbasis_fam = Family::GQ; ybasis_fam = Family::GP; break;
        default: throw std::invalid_argument("coproduct_constants: only hatted kinds have a coproduct side");
    }
    int size = partition_size(nu);
    if (mu_cap < 0) mu_cap = size;
    // smallest k with every strict partition of size <= max(|nu|, mu_cap)
    // having at most k parts
    int k = 1;
    while ((k + 1) * (k + 2) / 2 <= std::max(size, mu_cap)) ++k;
    MultiPolyQ f = to_rational(genfun_split(split_fam, nu, {}, k, k));
    auto xbasis = [&](const StrictPartition& lam) { return to_rational(genfun(xbasis_fam, lam, {}, k)); };
    auto ybasis = [&](const StrictPartition& lam) { return to_rational(genfun(ybasis_fam, lam, {}, k)); };

    // first solve in the x basis with y-polynomial coefficients; the lambda
    // support lies inside nu so this solve is exact
    std::map<StrictPartition, MultiPolyQ> h; // lambda -> coefficient in the y variables
    for (const auto& [ym, slice] : split_by_y(f)) {
        BasisSolve sol = expand_in_graded_basis(slice, xbasis, true, size, k);
        if (sol.status != BasisSolve::Status::exact)
            throw std::domain_error("coproduct_constants: x-side solve failed");
        for (const auto& [lam, c] : sol.coeffs) h[lam].add_term(ym, c);
    }
    // then solve each y-coefficient in the y basis (renamed to x for the
    // solver); the mu support is unbounded so the solve runs to mu_cap and
    // the leftover beyond it is dropped
    std::map<std::pair<StrictPartition, StrictPartition>, Int> out;
    for (const auto& [lam, hy] : h) {
        MultiPolyQ hx;
        for (const auto& [m, c] : hy.terms()) {
            Monomial nm;
            for (const auto& [v, e] : m.exps()) nm *= Monomial::var(xvar(v.index), e);
            hx.add_term(nm, c);
        }
        BasisSolve sol = expand_in_graded_basis(hx, ybasis, true, mu_cap, k);
        if (sol.status == BasisSolve::Status::singular)
            throw std::domain_error("coproduct_constants: y-side solve failed");
        for (const auto& [m2, c] : sol.coeffs) {
            int beta_exp = partition_size(lam) + partition_size(m2) - size;
            Int v = expect_integer_beta_monomial(c, beta_exp, "coproduct_constants");
            if (v != 0) out[{lam, m2}] = v;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Product formulas

Residual one_row_product_check(const StrictPartition& lambda, int n, RibbonKind family, int nvars) {
    if (lambda.empty() || n < 1)
        throw std::invalid_argument("one_row_product_check: lambda nonempty, n >= 1");
    Family jfam = family == RibbonKind::jp ? Family::jp : Family::jq;
    StrictPartition grow = lambda, shrink = lambda, skew_outer = lambda;
    grow[0] += n;
    shrink[0] += n - 1;
    skew_outer.insert(skew_outer.begin(), lambda[0] + n);
    StrictPartition skew_inner{lambda[0]};

    MultiPoly lhs = genfun(jfam, lambda, {}, nvars) * genfun(Family::jq, {n}, {}, nvars);
    MultiPoly rhs = genfun(jfam, grow, {}, nvars);
    MultiPoly shr = genfun(jfam, shrink, {}, nvars);
    MultiPoly shr_beta;
    for (const auto& [m, c] : shr.terms()) shr_beta.add_term(m, c * BetaInt::beta());
    rhs += shr_beta;
    rhs += genfun(jfam, skew_outer, skew_inner, nvars);

    Residual res;
    res.value = lhs - rhs;
    res.max_checked_degree = res.value.is_zero() ? lhs.max_total_degree() : res.value.max_total_degree();
    res.status = res.value.is_zero() ? Residual::Status::pass : Residual::Status::fail;
    return res;
}

Residual shape_product_check(const SkewShape& rho, const SkewShape& tau, RibbonKind family, int nvars) {
    Family jfam = family == RibbonKind::jp ? Family::jp : Family::jq;
    MultiPoly lhs = genfun_boxes(jfam, rho, nvars) * genfun_boxes(Family::jq, tau, nvars);
    MultiPoly rhs = genfun_boxes(jfam, compose_shapes(rho, tau, ComposeOp::right), nvars);
    rhs += genfun_boxes(jfam, compose_shapes(rho, tau, ComposeOp::below), nvars);
    MultiPoly merged = genfun_boxes(jfam, compose_shapes(rho, tau, ComposeOp::merge), nvars);
    for (const auto& [m, c] : merged.terms()) rhs.add_term(m, c * BetaInt::beta());

    Residual res;
    res.value = lhs - rhs;
    res.max_checked_degree = lhs.max_total_degree();
    res.status = res.value.is_zero() ? Residual::Status::pass : Residual::Status::fail;
    return res;
}

// ---------------------------------------------------------------------------
// Operator relations

Residual operator_check(OperatorKind kind, int size_cap, int deg_cap) {
    if (size_cap < 1 || deg_cap < 1) throw std::invalid_argument("operator_check: caps must be >= 1");
    Residual res;
    res.max_checked_degree = deg_cap;
    auto partitions = strict_partitions_up_to(size_cap);

    if (kind == OperatorKind::inverse) {
        // <p(-t) pt(t) lambda, nu> = sum_{nu <= mu <= lambda} gp_{mu/nu}(-t) jp_{lambda/mu}(t);
        // exact polynomial identities, no truncation required
        for (auto [dual, conj] : {std::pair<Family, Family>{Family::gp, Family::jp},
                                  std::pair<Family, Family>{Family::gq, Family::jq}}) {
            for (const auto& lam : partitions) {
                for (const auto& nu : partitions) {
                    if (!contains(lam, nu)) continue;
                    UniPoly acc;
                    for (const auto& m : partitions) {
                        if (!contains(lam, m) || !contains(m, nu)) continue;
                        UniPoly left = negate_variable(genfun_one_var(dual, m, nu));
                        UniPoly right = genfun_one_var(conj, lam, m);
                        acc += left * right;
                    }
                    if (lam == nu) acc -= UniPoly::one();
                    if (!acc.is_zero()) {
                        res.status = Residual::Status::fail;
                        res.value += from_unipoly(acc, xvar(1));
                    }
                }
            }
        }
        if (res.status == Residual::Status::pass) res.max_checked_degree = size_cap;
        return res;
    }

    // commute: q(v) P(u) = (1 - ubar v)/(1 - u v) P(u) q(v), and p(v) Q(u)
    // likewise, applied to every mu0 whose image stays inside size_cap;
    // u = x1, v = y1
    MultiPoly kernel = cauchy_kernel(KernelKind::standard, 1, 1, deg_cap);
    bool any = false;
    for (auto [dual, gss] : {std::pair<Family, Family>{Family::gq, Family::GPss},
                             std::pair<Family, Family>{Family::gp, Family::GQss}}) {
        for (const auto& mu0 : partitions) {
            if (partition_size(mu0) + deg_cap > size_cap) continue;
            any = true;
            for (const auto& nu : partitions) {
                MultiPoly lhs(deg_cap);
                for (const auto& lam : strict_partitions_up_to(partition_size(mu0) + deg_cap)) {
                    MultiPoly g = genfun(gss, lam, mu0, 1); // in u = x1
                    if (g.is_zero()) continue;
                    MultiPoly d = to_y_alphabet(genfun(dual, lam, nu, 1)); // in v = y1
                    if (d.is_zero()) continue;
                    lhs += g.truncated(deg_cap) * d.truncated(deg_cap);
                }
                MultiPoly inner(deg_cap);
                for (const auto& kap : partitions_contained_in(mu0)) {
                    MultiPoly d = to_y_alphabet(genfun(dual, mu0, kap, 1));
                    if (d.is_zero()) continue;
                    MultiPoly g = genfun(gss, nu, kap, 1);
                    if (g.is_zero()) continue;
                    inner += d.truncated(deg_cap) * g.truncated(deg_cap);
                }
                MultiPoly diff = lhs - kernel * inner;
                if (!diff.is_zero()) {
                    res.status = Residual::Status::fail;
                    res.value += diff;
                }
            }
        }
    }
    if (!any) res.status = Residual::Status::inconclusive;
    return res;
}

} // namespace kschur
