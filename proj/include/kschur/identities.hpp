#pragma once

// Identity verification and coefficient computation: Cauchy residuals,
// Pieri/ribbon coefficients, expansion tables, structure constants with
// two-sided oracles, product formulas, and the operator relations.

#include <map>
#include <utility>

#include "kschur/algebra.hpp"
#include "kschur/genfun.hpp"

namespace kschur {

struct Residual {
    enum class Status { pass, fail, inconclusive };
    MultiPoly value;            // accumulated nonzero residual terms
    int max_checked_degree = 0;
    Status status = Status::pass;
    bool passed() const { return status == Status::pass; }
};

enum class CauchyKind { QP, PQ, skewQ, skewP };

// QP/PQ: straight Cauchy identity, requires mu = nu = {}.  skewP pairs the
// GP//-family with jq, skewQ pairs GQ// with jp.
Residual verify_cauchy(CauchyKind kind, int nx, int ny, int maxdeg,
                       const StrictPartition& mu = {}, const StrictPartition& nu = {});

enum class PieriKind { bhat, chat };

// Ribbon counts: the number of {1',1}-filled semistandard set-valued fillings
// of the shapes nu/mu, mu ranging over corner deletions of lambda, with n
// total entries; bhat excludes primed diagonal entries.
Int pieri_coeff(PieriKind kind, const StrictPartition& lambda, const StrictPartition& nu, int n);

// Coefficient extraction from the one-variable specialization of
// GP_nu/GQ_nu in doubled variables.
Int pieri_coeff_oracle(PieriKind kind, const StrictPartition& lambda, const StrictPartition& nu, int n);
// Full oracle table for one nu: (lambda, n) -> coefficient.
std::map<std::pair<StrictPartition, int>, Int> pieri_oracle_table(PieriKind kind, const StrictPartition& nu);

enum class ExpansionKind { y, z };

// Solves the one-variable ribbon generating function in the one-row basis;
// returns the numeric coefficients by n (the beta power is |Lambda|-|Psi|-n).
std::map<int, Rat> expansion_table(ExpansionKind kind, const StrictPartition& Lambda,
                                   const StrictPartition& Psi);

// The two difference formulas relating Pieri counts and expansion tables.
bool lemma_difference_check(RibbonKind kind, const StrictPartition& Lambda, const StrictPartition& Psi);

enum class StructKind { ahat, bhat_full, chat_full, a, b };

struct StructTable {
    std::map<StrictPartition, Int> values; // nu -> integer coefficient
    bool partial = false;                  // true when the expansion continues past the cap
    int cap = 0;
};

// ahat: gp gp in the gp basis; bhat_full: gq gq in gq; chat_full: gp gq in gp
// (support |nu| <= |lambda|+|mu|).  a: GP GP in GP; b: GQ GQ in GQ, computed
// for |nu| <= cap with a partial marker.
StructTable structure_constants(StructKind kind, const StrictPartition& lambda,
                                const StrictPartition& mu, int cap);

// Coproduct-side coefficients of f_nu(x, y) for the hatted kinds:
// ahat from GQ(x,y) in GQ(x)GQ(y); bhat_full from GP(x,y) in GP(x)GP(y);
// chat_full from GQ(x,y) in GQ(x)GP(y).  The lambda support is contained in
// nu, but the mu support is not; mu_cap bounds the second-stage solve
// (entries with |mu| > mu_cap are not reported).
std::map<std::pair<StrictPartition, StrictPartition>, Int>
coproduct_constants(StructKind kind, const StrictPartition& nu, int mu_cap = -1);

// Residual of j_lambda * jq_n minus the three-term expansion.
Residual one_row_product_check(const StrictPartition& lambda, int n, RibbonKind family, int nvars);

// Residual of j_rho * jq_tau minus (j_{rho |> tau} + j_{rho <| tau} + beta j_{rho o tau}).
Residual shape_product_check(const SkewShape& rho, const SkewShape& tau, RibbonKind family, int nvars);

enum class OperatorKind { inverse, commute };

Residual operator_check(OperatorKind kind, int size_cap, int deg_cap);

// Rename x_i -> y_i throughout.
MultiPoly to_y_alphabet(const MultiPoly& p);

} // namespace kschur
