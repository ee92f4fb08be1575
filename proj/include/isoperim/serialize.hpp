#pragma once

#include <json.hpp>

#include "isoperim/decompose.hpp"
#include "isoperim/grid.hpp"
#include "isoperim/oracle.hpp"
#include "isoperim/torus.hpp"

namespace isoperim {

using json = nlohmann::json;

json to_json(const AreaCertificate& cert);
json to_json(const OracleResult& result);
json to_json(const CurveCertificate& cert);
json to_json(const GrowthReport& report);
json to_json(const ActionPair& pair);

// Curve file: JSON array of [x, y] pairs, implicitly closed.
Polyline parse_polyline(const json& j);
Polyline load_polyline(const std::string& path);

// Map file: {"primitives": [{"type": "vshear"|"hshear"|"translation", ...}]}.
// Shears carry "terms": [[amplitude, frequency, phase], ...]; translations
// carry "v": [dx1, dx2].
TorusMapExpr parse_map(const json& j);
TorusMapExpr load_map(const std::string& path);

}  // namespace isoperim
