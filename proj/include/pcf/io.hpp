#pragma once

#include <json.hpp>

#include "pcf/cf.hpp"
#include "pcf/pipeline.hpp"

namespace pcf {

// All rationals encode as strings "p/q" (or "p"), never floats.
nlohmann::json rat_to_json(const Rat& q);
Rat rat_from_json(const nlohmann::json& j);

nlohmann::json poly_to_json(const Poly& p);  // coefficient array, lowest first
Poly poly_from_json(const nlohmann::json& j);

nlohmann::json moebius_to_json(const Moebius& m);  // [[a,b],[c,d]]
Moebius moebius_from_json(const nlohmann::json& j);

nlohmann::json cf_to_json(const PolyCF& cf);
PolyCF cf_from_json(const nlohmann::json& j);

nlohmann::json rep_to_json(const Representation& rep);
Representation rep_from_json(const nlohmann::json& j);

} // namespace pcf
