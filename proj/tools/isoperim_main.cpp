#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "isoperim/decompose.hpp"
#include "isoperim/grid.hpp"
#include "isoperim/oracle.hpp"
#include "isoperim/serialize.hpp"
#include "isoperim/torus.hpp"
#include "isoperim/word.hpp"

namespace {

using namespace isoperim;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;   // input outside the domain of the pipeline
constexpr int kExitUsage = 2;    // bad flags or unparsable input
constexpr int kExitSelfCheck = 3;  // emitted certificate failed re-verification

struct Options {
  std::string format = "text";
  std::uint64_t seed = 0;  // reserved for randomized runs; outputs stay reproducible
  bool json() const { return format == "json"; }
};

void emit(const Options& opt, const json& record) {
  if (opt.json()) std::cout << record.dump(2) << "\n";
}

int run_reduce(const Options& opt, const std::string& word_text) {
  const Word w = free_reduce(Word::parse(word_text));
  if (opt.json()) {
    std::cout << json{{"word", w.str()}}.dump(2) << "\n";
  } else {
    std::cout << w.str() << "\n";
  }
  return kExitOk;
}

int run_member(const Options& opt, const std::string& word_text) {
  const Word w = Word::parse(word_text);
  const Word projection = project_to_F2(w);
  const bool member = projection.empty();
  if (opt.json()) {
    std::cout << json{{"word", free_reduce(w).str()},
                      {"member", member},
                      {"projection", projection.str()}}
                     .dump(2)
              << "\n";
  } else if (member) {
    std::cout << "word " << free_reduce(w).str() << " is in the normal closure of "
              << relator().str() << "\n";
  } else {
    std::cout << "word " << free_reduce(w).str() << " is not in the normal closure of "
              << relator().str() << " (projection " << projection.str() << ")\n";
  }
  return member ? kExitOk : kExitDomain;
}

int run_area(const Options& opt, const std::string& word_text) {
  const Word w = Word::parse(word_text);
  const AreaCertificate cert = certify(w);

  // Re-verify before emission.
  if (!verify_decomposition(w, cert.decomposition) || cert.lower > cert.upper ||
      (!cert.word.empty() && 2 * cert.upper > cert.ab_len)) {
    std::cerr << "self-verification of the area certificate failed\n";
    return kExitSelfCheck;
  }

  if (opt.json()) {
    emit(opt, to_json(cert));
    return kExitOk;
  }
  std::cout << "word: " << cert.word.str() << "\n";
  std::cout << "d (area upper bound): " << cert.upper << "\n";
  std::cout << "phi lower bound: " << cert.lower << "\n";
  std::cout << "ab length: " << cert.ab_len << "\n";
  std::cout << "exact: " << (cert.exact ? "yes" : "no") << "\n";
  std::cout << "factors:\n";
  for (const auto& f : cert.decomposition.factors) {
    std::cout << "  (" << f.conjugator.str() << ", " << (f.exponent > 0 ? "+1" : "-1") << ")\n";
  }
  std::cout << "trace:\n";
  for (std::size_t i = 0; i < cert.steps.size(); ++i) {
    const auto& s = cert.steps[i];
    std::cout << "  step " << i + 1 << ": piece " << s.piece.str() << " at " << s.position
              << " (entry " << s.entry_index << ") -> " << s.intermediate.str() << "\n";
  }
  return kExitOk;
}

int run_oracle(const Options& opt, const std::string& word_text, std::optional<int> d_max,
               std::optional<int> len_cap) {
  const Word w = free_reduce(Word::parse(word_text));
  const OracleCaps defaults = default_caps(w);
  const OracleResult result =
      exact_area_bounded(w, d_max.value_or(defaults.d_max), len_cap.value_or(defaults.len_cap));
  if (opt.json()) {
    emit(opt, to_json(result));
    return kExitOk;
  }
  std::cout << "word: " << result.word.str() << "\n";
  if (result.best) {
    std::cout << "best: " << *result.best << "\n";
  } else {
    std::cout << "best: none within caps\n";
  }
  const char* status = result.status == OracleStatus::exact             ? "exact"
                       : result.status == OracleStatus::upper_bound_only ? "upper_bound_only"
                                                                         : "not_found";
  std::cout << "status: " << status << "\n";
  std::cout << "explored: " << result.explored << " states (d_max " << result.caps.d_max
            << ", len_cap " << result.caps.len_cap << ")\n";
  return kExitOk;
}

int run_certify_curve(const Options& opt, const std::string& path, double epsilon) {
  const Polyline p = load_polyline(path);
  const GridModel model(epsilon);
  const CurveCertificate cert = certify_curve(p, model);

  if (cert.contractible && cert.area_bound) {
    // Re-verify the certified inequality chain before emission.
    const bool ok =
        cert.cycle_length <= 2 * cert.curve_length + 1e-9 &&
        (1 - 2 * epsilon) * ab_length(cert.word) <= cert.cycle_length + 1e-9 &&
        *cert.area_bound <= (std::numbers::sqrt2 + model.face_area() / (1 - 2 * epsilon)) *
                                    cert.curve_length +
                                1e-9;
    if (!ok) {
      std::cerr << "self-verification of the curve certificate failed\n";
      return kExitSelfCheck;
    }
  }

  if (opt.json()) {
    emit(opt, to_json(cert));
  } else {
    std::cout << "curve length: " << cert.curve_length << "\n";
    std::cout << "cycle length: " << cert.cycle_length << "\n";
    std::cout << "word: " << cert.word.str() << "\n";
    std::cout << "contractible: " << (cert.contractible ? "yes" : "no") << "\n";
    if (cert.contractible) {
      std::cout << "d: " << cert.decomposition_size << "\n";
      std::cout << "area bound: " << *cert.area_bound << "\n";
      if (cert.ratio) {
        std::cout << "ratio: " << *cert.ratio << " (reference 1+sqrt2 = "
                  << 1 + std::numbers::sqrt2 << ")\n";
      }
    } else {
      std::cout << "no area bound: the curve is not contractible in the punctured plane\n";
    }
  }
  return cert.contractible ? kExitOk : kExitDomain;
}

TorusMapExpr resolve_map(const std::string& map_file, const std::string& builtin) {
  if (!map_file.empty()) return load_map(map_file);
  if (builtin == "sine-shear") return builtin_sine_shear();
  if (builtin == "translation") return builtin_translation(0.3, 0.0);
  if (builtin == "standard") {
    return TorusMapExpr({HorizontalShear{TrigPoly({TrigTerm{0.5, 1, 0.0}})},
                         VerticalShear{TrigPoly({TrigTerm{1.0, 1, 0.0}})}});
  }
  throw CLI::ValidationError("--builtin must be one of sine-shear, translation, standard");
}

int run_growth(const Options& opt, const TorusMapExpr& map, bool is_sine_shear, int n_max,
               int grid_res, double lattice_scale, const std::vector<double>& fixed) {
  std::optional<std::pair<TorusPoint, TorusPoint>> pair;
  if (!fixed.empty()) {
    pair = std::make_pair(TorusPoint{fixed[0], fixed[1]}, TorusPoint{fixed[2], fixed[3]});
  } else if (is_sine_shear) {
    // Analytic zero set of the shear profile.
    pair = std::make_pair(TorusPoint{0.0, 0.0}, TorusPoint{0.5, 0.0});
  }
  const GrowthReport report = growth_report(map, n_max, grid_res, lattice_scale, pair);
  if (opt.json()) {
    emit(opt, to_json(report));
    return kExitOk;
  }
  std::cout << "hamiltonian: " << (is_hamiltonian(map) ? "yes" : "no") << "\n";
  std::cout << "n  |d psi^n|\n";
  for (const auto& [n, norm] : report.samples) std::cout << n << " " << norm << "\n";
  std::cout << "slope: " << report.slope << "\n";
  std::cout << "mu: " << report.mu << " (lattice scale " << report.lattice_scale << ")\n";
  if (report.kappa) {
    std::cout << "kappa: " << *report.kappa << " (delta " << report.action->delta << ")\n";
  } else {
    std::cout << "kappa: unavailable (no fixed-point pair with positive action difference)\n";
  }
  return kExitOk;
}

int run_action(const Options& opt, const TorusMapExpr& map, const std::vector<double>& from,
               const std::vector<double>& to, int samples) {
  const ActionPair act = action_difference(map, TorusPoint{from[0], from[1]},
                                           TorusPoint{to[0], to[1]}, samples);
  if (opt.json()) {
    emit(opt, to_json(act));
  } else {
    std::cout << "delta: " << act.delta << " (refined with " << act.samples_used
              << " samples)\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"certified isoperimetry toolkit for the punctured plane"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--seed", opt.seed, "seed for randomized runs")->capture_default_str();

  std::string word_text;
  auto* reduce_cmd = app.add_subcommand("reduce", "freely reduce a word");
  reduce_cmd->add_option("word", word_text, "word over a A b B c C")->required();

  auto* member_cmd = app.add_subcommand("member", "test membership in the normal closure");
  member_cmd->add_option("word", word_text)->required();

  auto* area_cmd = app.add_subcommand("area", "decompose a word and certify its area bounds");
  area_cmd->add_option("word", word_text)->required();

  std::optional<int> d_max, len_cap;
  auto* oracle_cmd = app.add_subcommand("oracle", "bounded exact-area search");
  oracle_cmd->add_option("word", word_text)->required();
  oracle_cmd->add_option("--d-max", d_max, "maximum search depth (default 4)");
  oracle_cmd->add_option("--len-cap", len_cap, "intermediate length cap (default 2|w|+10)");

  std::string curve_file;
  double epsilon = 0.01;
  auto* curve_cmd = app.add_subcommand("certify-curve", "snap a polyline and certify its area");
  curve_cmd->add_option("file", curve_file, "JSON array of [x, y] pairs, implicitly closed")
      ->required();
  curve_cmd->add_option("--epsilon", epsilon, "grid parameter in (0, 0.1)")
      ->check(CLI::Range(1e-9, 0.1))
      ->capture_default_str();

  std::string map_file, builtin_name;
  int n_max = 200, grid_res = 256, samples = 64;
  double lattice_scale = 1.0;
  std::vector<double> fixed, from_pt, to_pt;
  auto* growth_cmd = app.add_subcommand("growth", "measure differential growth of a torus map");
  growth_cmd->add_option("--map", map_file, "map description file");
  growth_cmd->add_option("--builtin", builtin_name, "built-in map name");
  growth_cmd->add_option("--n-max", n_max)->capture_default_str();
  growth_cmd->add_option("--grid-res", grid_res)->capture_default_str();
  growth_cmd->add_option("--lattice-scale", lattice_scale, "m_L in the kappa certificate")
      ->capture_default_str();
  growth_cmd->add_option("--fixed", fixed, "fixed points x1 x2 y1 y2")->expected(4);

  auto* action_cmd = app.add_subcommand("action", "action difference of a fixed-point pair");
  action_cmd->add_option("--map", map_file, "map description file");
  action_cmd->add_option("--builtin", builtin_name, "built-in map name");
  action_cmd->add_option("--from", from_pt, "first fixed point")->expected(2)->required();
  action_cmd->add_option("--to", to_pt, "second fixed point")->expected(2)->required();
  action_cmd->add_option("--samples", samples, "initial path sampling")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (reduce_cmd->parsed()) return run_reduce(opt, word_text);
    if (member_cmd->parsed()) return run_member(opt, word_text);
    if (area_cmd->parsed()) return run_area(opt, word_text);
    if (oracle_cmd->parsed()) return run_oracle(opt, word_text, d_max, len_cap);
    if (curve_cmd->parsed()) return run_certify_curve(opt, curve_file, epsilon);
    if (growth_cmd->parsed() || action_cmd->parsed()) {
      if (map_file.empty() && builtin_name.empty()) {
        std::cerr << "one of --map or --builtin is required\n";
        return kExitUsage;
      }
      const TorusMapExpr map = resolve_map(map_file, builtin_name);
      if (growth_cmd->parsed()) {
        return run_growth(opt, map, builtin_name == "sine-shear", n_max, grid_res, lattice_scale,
                          fixed);
      }
      return run_action(opt, map, from_pt, to_pt, samples);
    }
  } catch (const WordParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const NotInNormalClosure& e) {
    std::cerr << e.what() << "\n";
    return kExitDomain;
  } catch (const NotClosed& e) {
    std::cerr << e.what() << "\n";
    return kExitDomain;
  } catch (const MalformedCycle& e) {
    std::cerr << e.what() << "\n";
    return kExitDomain;
  } catch (const NotGeneralPosition& e) {
    std::cerr << e.what() << "\n";
    return kExitDomain;
  } catch (const InsideForbiddenZone& e) {
    std::cerr << e.what() << "\n";
    return kExitDomain;
  } catch (const NotFixedPoint& e) {
    std::cerr << e.what() << "\n";
    return kExitDomain;
  } catch (const NoConvergence& e) {
    std::cerr << e.what() << "\n";
    return kExitDomain;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::logic_error& e) {
    std::cerr << "internal verification failure: " << e.what() << "\n";
    return kExitSelfCheck;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
