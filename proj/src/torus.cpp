#include "isoperim/torus.hpp"

#include <cmath>
#include <numbers>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace isoperim {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

double Mat2::spectral_norm() const {
  // Eigenvalues of J^T J.
  const double p = m00 * m00 + m10 * m10;
  const double q = m00 * m01 + m10 * m11;
  const double r = m01 * m01 + m11 * m11;
  const double half_trace = 0.5 * (p + r);
  const double disc = std::sqrt(0.25 * (p - r) * (p - r) + q * q);
  return std::sqrt(half_trace + disc);
}

double TrigPoly::value(double x) const {
  double sum = 0.0;
  for (const auto& t : terms_) sum += t.amplitude * std::sin(kTwoPi * t.frequency * x + t.phase);
  return sum;
}

double TrigPoly::derivative(double x) const {
  double sum = 0.0;
  for (const auto& t : terms_) {
    sum += t.amplitude * kTwoPi * t.frequency * std::cos(kTwoPi * t.frequency * x + t.phase);
  }
  return sum;
}

double TrigPoly::mean() const {
  double sum = 0.0;
  for (const auto& t : terms_) {
    if (t.frequency == 0) sum += t.amplitude * std::sin(t.phase);
  }
  return sum;
}

TorusPoint TorusMapExpr::apply(TorusPoint p) const {
  for (const auto& prim : primitives_) {
    if (const auto* v = std::get_if<VerticalShear>(&prim)) {
      p.x2 += v->f.value(p.x1);
    } else if (const auto* h = std::get_if<HorizontalShear>(&prim)) {
      p.x1 += h->g.value(p.x2);
    } else {
      const auto& t = std::get<Translation>(prim);
      p.x1 += t.dx1;
      p.x2 += t.dx2;
    }
  }
  return p;
}

Mat2 TorusMapExpr::jacobian(TorusPoint p) const {
  Mat2 j;
  for (const auto& prim : primitives_) {
    if (const auto* v = std::get_if<VerticalShear>(&prim)) {
      j = Mat2{1.0, 0.0, v->f.derivative(p.x1), 1.0} * j;
      p.x2 += v->f.value(p.x1);
    } else if (const auto* h = std::get_if<HorizontalShear>(&prim)) {
      j = Mat2{1.0, h->g.derivative(p.x2), 0.0, 1.0} * j;
      p.x1 += h->g.value(p.x2);
    } else {
      const auto& t = std::get<Translation>(prim);
      p.x1 += t.dx1;
      p.x2 += t.dx2;
    }
  }
  return j;
}

std::array<double, 2> TorusMapExpr::mean_displacement() const {
  // Every primitive preserves area, so the displacement means add up
  // under composition.
  double m1 = 0.0, m2 = 0.0;
  for (const auto& prim : primitives_) {
    if (const auto* v = std::get_if<VerticalShear>(&prim)) {
      m2 += v->f.mean();
    } else if (const auto* h = std::get_if<HorizontalShear>(&prim)) {
      m1 += h->g.mean();
    } else {
      const auto& t = std::get<Translation>(prim);
      m1 += t.dx1;
      m2 += t.dx2;
    }
  }
  return {m1, m2};
}

TorusMapExpr TorusMapExpr::iterated(int n) const {
  std::vector<MapPrimitive> out;
  out.reserve(primitives_.size() * static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out.insert(out.end(), primitives_.begin(), primitives_.end());
  return TorusMapExpr(std::move(out));
}

TorusMapExpr builtin_sine_shear() {
  return TorusMapExpr({VerticalShear{TrigPoly({TrigTerm{1.0, 1, 0.0}})}});
}

TorusMapExpr builtin_translation(double dx1, double dx2) {
  return TorusMapExpr({Translation{dx1, dx2}});
}

bool is_hamiltonian(const TorusMapExpr& m) {
  const auto mean = m.mean_displacement();
  return std::abs(mean[0]) < 1e-12 && std::abs(mean[1]) < 1e-12;
}

namespace {

double orbit_norm(const TorusMapExpr& m, TorusPoint p, int n) {
  Mat2 total;
  for (int k = 0; k < n; ++k) {
    total = m.jacobian(p) * total;
    p = m.apply(p);
  }
  return total.spectral_norm();
}

}  // namespace

double jacobian_norm_serial(const TorusMapExpr& m, int n, int grid_res) {
  if (n < 1) throw std::invalid_argument("jacobian_norm: n must be >= 1");
  if (grid_res < 2) throw std::invalid_argument("jacobian_norm: grid_res must be >= 2");
  double best = 0.0;
  for (int i = 0; i < grid_res; ++i) {
    for (int j = 0; j < grid_res; ++j) {
      const TorusPoint p{static_cast<double>(i) / grid_res, static_cast<double>(j) / grid_res};
      best = std::max(best, orbit_norm(m, p, n));
    }
  }
  return best;
}

double jacobian_norm(const TorusMapExpr& m, int n, int grid_res) {
  if (n < 1) throw std::invalid_argument("jacobian_norm: n must be >= 1");
  if (grid_res < 2) throw std::invalid_argument("jacobian_norm: grid_res must be >= 2");
  double best = 0.0;
#pragma omp parallel for collapse(2) reduction(max : best) schedule(static)
  for (int i = 0; i < grid_res; ++i) {
    for (int j = 0; j < grid_res; ++j) {
      const TorusPoint p{static_cast<double>(i) / grid_res, static_cast<double>(j) / grid_res};
      best = std::max(best, orbit_norm(m, p, n));
    }
  }
  return best;
}

double jacobian_norm_refined(const TorusMapExpr& m, int n, int initial_res) {
  int res = std::max(2, initial_res);
  double norm = jacobian_norm(m, n, res);
  for (int round = 0; round < 8; ++round) {
    res *= 2;
    const double refined = jacobian_norm(m, n, res);
    if (std::abs(refined - norm) <= 1e-3 * std::max(1.0, norm)) return refined;
    norm = refined;
  }
  return norm;
}

namespace {

void orbit_sequence(const TorusMapExpr& m, TorusPoint p, int n_max, std::vector<double>& maxima) {
  Mat2 total;
  for (int k = 0; k < n_max; ++k) {
    total = m.jacobian(p) * total;
    p = m.apply(p);
    const double norm = total.spectral_norm();
    if (norm > maxima[static_cast<std::size_t>(k)]) maxima[static_cast<std::size_t>(k)] = norm;
  }
}

}  // namespace

std::vector<double> norm_sequence_serial(const TorusMapExpr& m, int n_max, int grid_res) {
  if (n_max < 1) throw std::invalid_argument("norm_sequence: n_max must be >= 1");
  if (grid_res < 2) throw std::invalid_argument("norm_sequence: grid_res must be >= 2");
  std::vector<double> maxima(static_cast<std::size_t>(n_max), 0.0);
  for (int i = 0; i < grid_res; ++i) {
    for (int j = 0; j < grid_res; ++j) {
      orbit_sequence(m, TorusPoint{static_cast<double>(i) / grid_res, static_cast<double>(j) / grid_res},
                     n_max, maxima);
    }
  }
  return maxima;
}

std::vector<double> norm_sequence(const TorusMapExpr& m, int n_max, int grid_res) {
  if (n_max < 1) throw std::invalid_argument("norm_sequence: n_max must be >= 1");
  if (grid_res < 2) throw std::invalid_argument("norm_sequence: grid_res must be >= 2");
  std::vector<double> maxima(static_cast<std::size_t>(n_max), 0.0);
#pragma omp parallel
  {
    std::vector<double> local(static_cast<std::size_t>(n_max), 0.0);
#pragma omp for collapse(2) schedule(static)
    for (int i = 0; i < grid_res; ++i) {
      for (int j = 0; j < grid_res; ++j) {
        orbit_sequence(m,
                       TorusPoint{static_cast<double>(i) / grid_res, static_cast<double>(j) / grid_res},
                       n_max, local);
      }
    }
#pragma omp critical
    for (int k = 0; k < n_max; ++k) {
      const auto idx = static_cast<std::size_t>(k);
      if (local[idx] > maxima[idx]) maxima[idx] = local[idx];
    }
  }
  return maxima;
}

namespace {

double shoelace(const std::vector<TorusPoint>& polygon) {
  double twice_area = 0.0;
  const std::size_t n = polygon.size();
  for (std::size_t i = 0; i < n; ++i) {
    const TorusPoint& a = polygon[i];
    const TorusPoint& b = polygon[(i + 1) % n];
    twice_area += a.x1 * b.x2 - b.x1 * a.x2;
  }
  return 0.5 * twice_area;
}

double loop_area(const TorusMapExpr& m, TorusPoint x, TorusPoint y, int samples,
                 std::vector<TorusPoint>* path_out) {
  std::vector<TorusPoint> gamma;
  gamma.reserve(static_cast<std::size_t>(samples) + 1);
  for (int i = 0; i <= samples; ++i) {
    const double t = static_cast<double>(i) / samples;
    gamma.push_back(TorusPoint{x.x1 + t * (y.x1 - x.x1), x.x2 + t * (y.x2 - x.x2)});
  }
  std::vector<TorusPoint> polygon = gamma;
  for (auto it = gamma.rbegin(); it != gamma.rend(); ++it) polygon.push_back(m.apply(*it));
  if (path_out) *path_out = std::move(gamma);
  return shoelace(polygon);
}

}  // namespace

ActionPair action_difference(const TorusMapExpr& m, TorusPoint x, TorusPoint y, int samples) {
  if (samples < 16) throw std::invalid_argument("action_difference: samples must be >= 16");
  for (const TorusPoint p : {x, y}) {
    const TorusPoint q = m.apply(p);
    if (std::abs(q.x1 - p.x1) > 1e-9 || std::abs(q.x2 - p.x2) > 1e-9) {
      throw NotFixedPoint("action_difference: supplied point is not fixed by the map");
    }
  }

  ActionPair result;
  result.x = x;
  result.y = y;
  double prev = loop_area(m, x, y, samples, nullptr);
  for (int round = 0; round < 22; ++round) {
    samples *= 2;
    std::vector<TorusPoint> path;
    const double refined = loop_area(m, x, y, samples, &path);
    if (std::abs(refined - prev) < 1e-8) {
      result.delta = refined;
      result.path = std::move(path);
      result.samples_used = samples;
      return result;
    }
    prev = refined;
  }
  throw NoConvergence("action_difference: loop-area refinement did not converge");
}

double fitted_slope(const std::vector<std::pair<int, double>>& samples) {
  double mean_n = 0.0, mean_y = 0.0;
  for (const auto& [n, y] : samples) {
    mean_n += n;
    mean_y += y;
  }
  mean_n /= static_cast<double>(samples.size());
  mean_y /= static_cast<double>(samples.size());
  double num = 0.0, den = 0.0;
  for (const auto& [n, y] : samples) {
    num += (n - mean_n) * (y - mean_y);
    den += (n - mean_n) * (n - mean_n);
  }
  return den > 0.0 ? num / den : 0.0;
}

GrowthReport growth_report(const TorusMapExpr& m, int n_max, int grid_res, double lattice_scale,
                           std::optional<std::pair<TorusPoint, TorusPoint>> fixed_points) {
  if (n_max < 1) throw std::invalid_argument("growth_report: n_max must be >= 1");
  GrowthReport report;
  report.grid_res = grid_res;
  report.lattice_scale = lattice_scale;
  report.mu = (1.0 + std::numbers::sqrt2) * lattice_scale;

  const std::vector<double> norms = norm_sequence(m, n_max, grid_res);
  report.samples.reserve(norms.size());
  for (int n = 1; n <= n_max; ++n) {
    report.samples.emplace_back(n, norms[static_cast<std::size_t>(n - 1)]);
  }
  report.slope = fitted_slope(report.samples);

  if (fixed_points) {
    ActionPair act = action_difference(m, fixed_points->first, fixed_points->second);
    if (act.delta > 0.0) {
      const double gamma_len = std::hypot(act.y.x1 - act.x.x1, act.y.x2 - act.x.x2);
      const double kappa = act.delta / ((1.0 + gamma_len) * report.mu);
      for (const auto& [n, norm] : report.samples) {
        if (norm + 1e-9 < kappa * n) {
          throw std::logic_error("growth_report: measured norm fell below the kappa certificate");
        }
      }
      report.kappa = kappa;
      report.action = std::move(act);
    }
  }
  return report;
}

}  // namespace isoperim
