#pragma once

#include <string>

#include "json.hpp"

#include "drc/rpoly.hpp"
#include "drc/stable_graph.hpp"
#include "drc/tautclass.hpp"

namespace drc {

using Json = nlohmann::ordered_json;

inline constexpr const char* kTautClassSchema = "drc.tautclass/1";

/// {"vertices":[{"genus":g}..], "edges":[[h,h']..], "legs":[{"half_edge":h,"marking":i}..]}
Json graph_to_json(const StableGraph& g);
/// Throws std::invalid_argument on malformed input.
StableGraph graph_from_json(const Json& j);

/// {"schema":..., "g":..., "n":..., "terms":[{"graph":..., "psi":[...], "kappa":[[...]..],
///  "coefficient":"num/den"}..]}, terms in canonical-key order.
Json class_to_json(const TautClass& t);
/// Validates every term; throws std::invalid_argument on malformed input.
TautClass class_from_json(const Json& j);

/// {"coefficients":["c0","c1",...]}, index = power of r.
Json rpoly_to_json(const RPoly& p);
RPoly rpoly_from_json(const Json& j);

}  // namespace drc
