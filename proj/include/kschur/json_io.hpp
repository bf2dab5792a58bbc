#pragma once

// JSON wire formats: polynomials (coefficients as decimal strings), shapes,
// tableaux, and verification reports.

#include <json.hpp>
#include <string>

#include "kschur/identities.hpp"
#include "kschur/multipoly.hpp"
#include "kschur/shapes.hpp"
#include "kschur/tableaux.hpp"

namespace kschur {

using Json = nlohmann::json;

Json poly_to_json(const MultiPoly& p);
MultiPoly poly_from_json(const Json& j);

Json shape_to_json(const SkewShape& s);
SkewShape shape_from_json(const Json& j);

Json svt_to_json(const SetValuedTableau& t);
Json pp_to_json(const PlanePartition& t);
Json bt_to_json(const BarTableau& t);
BarTableau bt_from_json(const Json& j);

Json residual_report(const std::string& check, const Json& params, const Residual& r);

} // namespace kschur
