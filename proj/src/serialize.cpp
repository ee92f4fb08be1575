#include "isoperim/serialize.hpp"

#include <fstream>

namespace isoperim {

json to_json(const AreaCertificate& cert) {
  json factors = json::array();
  for (const auto& f : cert.decomposition.factors) {
    factors.push_back({{"conjugator", f.conjugator.str()}, {"exponent", f.exponent}});
  }
  json trace = json::array();
  for (const auto& step : cert.steps) {
    trace.push_back({{"piece", step.piece.str()},
                     {"position", step.position},
                     {"entry", step.entry_index},
                     {"intermediate", step.intermediate.str()}});
  }
  return json{{"word", cert.word.str()}, {"d", cert.upper},      {"lower", cert.lower},
              {"ab_len", cert.ab_len},   {"exact", cert.exact},  {"factors", factors},
              {"trace", trace}};
}

json to_json(const OracleResult& result) {
  json j{{"word", result.word.str()},
         {"explored", result.explored},
         {"caps", {{"d_max", result.caps.d_max}, {"len_cap", result.caps.len_cap}}}};
  switch (result.status) {
    case OracleStatus::exact: j["status"] = "exact"; break;
    case OracleStatus::upper_bound_only: j["status"] = "upper_bound_only"; break;
    case OracleStatus::not_found: j["status"] = "not_found"; break;
  }
  if (result.best) j["best"] = *result.best;
  return j;
}

json to_json(const CurveCertificate& cert) {
  json records = json::array();
  for (const auto& rec : cert.trace.records) {
    records.push_back({{"case", rec.case_tag},
                       {"arc_length", rec.arc_length},
                       {"path_length", rec.path_length},
                       {"area_bound", rec.area_bound}});
  }
  json j{{"epsilon", cert.epsilon},
         {"curve_length", cert.curve_length},
         {"cycle_length", cert.cycle_length},
         {"word", cert.word.str()},
         {"contractible", cert.contractible},
         {"d", cert.decomposition_size},
         {"homotopy_bound", cert.trace.total_area_bound()},
         {"snap_records", records}};
  if (cert.area_bound) j["area_bound"] = *cert.area_bound;
  if (cert.ratio) j["ratio"] = *cert.ratio;
  return j;
}

json to_json(const ActionPair& pair) {
  return json{{"x", {pair.x.x1, pair.x.x2}},
              {"y", {pair.y.x1, pair.y.x2}},
              {"delta", pair.delta},
              {"samples", pair.samples_used}};
}

json to_json(const GrowthReport& report) {
  json samples = json::array();
  for (const auto& [n, norm] : report.samples) samples.push_back({n, norm});
  json j{{"samples", samples},
         {"grid_res", report.grid_res},
         {"slope", report.slope},
         {"lattice_scale", report.lattice_scale},
         {"mu", report.mu}};
  if (report.kappa) j["kappa"] = *report.kappa;
  if (report.action) j["action"] = to_json(*report.action);
  return j;
}

Polyline parse_polyline(const json& j) {
  if (!j.is_array()) throw std::runtime_error("curve file must be a JSON array of [x, y] pairs");
  Polyline p;
  for (const auto& entry : j) {
    if (!entry.is_array() || entry.size() != 2) {
      throw std::runtime_error("curve file entries must be [x, y] pairs");
    }
    p.points.push_back(Vec2{entry[0].get<double>(), entry[1].get<double>()});
  }
  return p;
}

Polyline load_polyline(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open curve file " + path);
  json j;
  in >> j;
  return parse_polyline(j);
}

TorusMapExpr parse_map(const json& j) {
  if (!j.contains("primitives") || !j["primitives"].is_array()) {
    throw std::runtime_error("map file must contain a \"primitives\" array");
  }
  std::vector<MapPrimitive> primitives;
  for (const auto& prim : j["primitives"]) {
    const std::string type = prim.at("type").get<std::string>();
    if (type == "translation") {
      const auto& v = prim.at("v");
      primitives.push_back(Translation{v.at(0).get<double>(), v.at(1).get<double>()});
    } else if (type == "vshear" || type == "hshear") {
      std::vector<TrigTerm> terms;
      for (const auto& t : prim.at("terms")) {
        terms.push_back(TrigTerm{t.at(0).get<double>(), t.at(1).get<int>(), t.at(2).get<double>()});
      }
      if (type == "vshear") {
        primitives.push_back(VerticalShear{TrigPoly(std::move(terms))});
      } else {
        primitives.push_back(HorizontalShear{TrigPoly(std::move(terms))});
      }
    } else {
      throw std::runtime_error("unknown map primitive type \"" + type + "\"");
    }
  }
  return TorusMapExpr(std::move(primitives));
}

TorusMapExpr load_map(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open map file " + path);
  json j;
  in >> j;
  return parse_map(j);
}

}  // namespace isoperim
