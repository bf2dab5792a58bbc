#pragma once

// Generating polynomials for all eight families in finitely many variables,
// one-variable specializations, and the ribbon closed forms.

#include "kschur/multipoly.hpp"
#include "kschur/shapes.hpp"
#include "kschur/tableaux.hpp"
#include "kschur/unipoly.hpp"

namespace kschur {

enum class Family { GP, GQ, GPss, GQss, gp, gq, jp, jq };

const char* family_name(Family f);
Family parse_family(const std::string& name);

// Exact polynomial in x_1..x_nvars; 0 when inner is not contained in outer.
// Results are memoized; the cache is safe for concurrent use.
MultiPoly genfun(Family family, const StrictPartition& outer, const StrictPartition& inner, int nvars);

// Same sums over an explicit box set (used for composed shapes).  GPss/GQss
// are not defined for raw box sets.
MultiPoly genfun_boxes(Family family, const SkewShape& shape, int nvars);

// As genfun but with the first nx values mapped to x_1..x_nx and the next ny
// values to y_1..y_ny (the coproduct substitution f(x, y)).
MultiPoly genfun_split(Family family, const StrictPartition& outer, const StrictPartition& inner,
                       int nx, int ny);

UniPoly genfun_one_var(Family family, const StrictPartition& outer, const StrictPartition& inner);

enum class RibbonKind { jp, jq };

// Closed forms for the one-variable ribbon generating functions,
//   jq: 2^scc t^(scc+mcc+fb) (2t-beta)^mcc (t-beta)^(res-2),
//   jp: 2^scc* t^(scc*+mcc*+fb*) (2t-beta)^mcc* (t-beta)^(res*-1).
UniPoly ribbon_closed_form(RibbonKind kind, const StrictPartition& Lambda, const StrictPartition& Psi);

// Invariance under every adjacent transposition of x_1..x_nvars.
bool is_symmetric(const MultiPoly& f, int nvars);

} // namespace kschur
