#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

namespace isoperim {

struct NotFixedPoint : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NoConvergence : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TorusPoint {
  double x1 = 0.0;
  double x2 = 0.0;
};

struct Mat2 {
  double m00 = 1.0, m01 = 0.0, m10 = 0.0, m11 = 1.0;

  friend Mat2 operator*(const Mat2& a, const Mat2& b) {
    return Mat2{a.m00 * b.m00 + a.m01 * b.m10, a.m00 * b.m01 + a.m01 * b.m11,
                a.m10 * b.m00 + a.m11 * b.m10, a.m10 * b.m01 + a.m11 * b.m11};
  }
  double det() const { return m00 * m11 - m01 * m10; }
  // Largest singular value.
  double spectral_norm() const;
};

// One 1-periodic term: amplitude * sin(2 pi frequency x + phase).
struct TrigTerm {
  double amplitude;
  int frequency;
  double phase;
};

class TrigPoly {
 public:
  TrigPoly() = default;
  explicit TrigPoly(std::vector<TrigTerm> terms) : terms_(std::move(terms)) {}

  double value(double x) const;
  double derivative(double x) const;
  // Mean over one period: only zero-frequency terms survive.
  double mean() const;

  const std::vector<TrigTerm>& terms() const { return terms_; }

 private:
  std::vector<TrigTerm> terms_;
};

struct VerticalShear {
  TrigPoly f;  // (x1, x2) -> (x1, x2 + f(x1))
};
struct HorizontalShear {
  TrigPoly g;  // (x1, x2) -> (x1 + g(x2), x2)
};
struct Translation {
  double dx1 = 0.0;
  double dx2 = 0.0;
};

using MapPrimitive = std::variant<VerticalShear, HorizontalShear, Translation>;

// Area-preserving Z^2-periodic map given as a composition of shear and
// translation primitives, applied in list order. Jacobians are exact.
class TorusMapExpr {
 public:
  TorusMapExpr() = default;
  explicit TorusMapExpr(std::vector<MapPrimitive> primitives) : primitives_(std::move(primitives)) {}

  const std::vector<MapPrimitive>& primitives() const { return primitives_; }

  TorusPoint apply(TorusPoint p) const;
  Mat2 jacobian(TorusPoint p) const;
  // Mean displacement over the fundamental domain, computed analytically.
  std::array<double, 2> mean_displacement() const;

  // Symbolic n-th iterate (the primitive list repeated n times).
  TorusMapExpr iterated(int n) const;

 private:
  std::vector<MapPrimitive> primitives_;
};

TorusMapExpr builtin_sine_shear();                       // (x1, x2 + sin(2 pi x1))
TorusMapExpr builtin_translation(double dx1, double dx2);

// Zero mean displacement in both components.
bool is_hamiltonian(const TorusMapExpr& m);

// max over a grid_res x grid_res grid of start points of the spectral
// norm of the n-step chain-rule Jacobian product. A lower bound for the
// true supremum; deterministic, and identical for the serial and
// OpenMP-parallel paths.
double jacobian_norm(const TorusMapExpr& m, int n, int grid_res);
double jacobian_norm_serial(const TorusMapExpr& m, int n, int grid_res);

// Doubles the grid resolution until the norm changes by < 0.1%.
double jacobian_norm_refined(const TorusMapExpr& m, int n, int initial_res = 256);

// Norms for every n = 1..n_max in one orbit sweep.
std::vector<double> norm_sequence(const TorusMapExpr& m, int n_max, int grid_res);
std::vector<double> norm_sequence_serial(const TorusMapExpr& m, int n_max, int grid_res);

struct ActionPair {
  TorusPoint x;
  TorusPoint y;
  std::vector<TorusPoint> path;  // sampled curve gamma from x to y
  double delta;                  // signed area of the loop gamma . reversed psi(gamma)
  int samples_used;
};

// Signed loop area enclosed between a straight path from x to y and its
// image, refined until two successive refinements agree to 1e-8.
ActionPair action_difference(const TorusMapExpr& m, TorusPoint x, TorusPoint y, int samples = 64);

struct GrowthReport {
  std::vector<std::pair<int, double>> samples;  // (n, measured norm)
  int grid_res;
  double slope;                     // least-squares fit of norm against n
  double lattice_scale;             // m_L
  double mu;                        // (1 + sqrt 2) * m_L
  std::optional<double> kappa;      // linear-growth certificate, when available
  std::optional<ActionPair> action; // the fixed-point pair backing kappa
};

// Measures the norm growth and, when a fixed-point pair with positive
// action difference is supplied, certifies norm(n) >= kappa n.
GrowthReport growth_report(const TorusMapExpr& m, int n_max, int grid_res, double lattice_scale,
                           std::optional<std::pair<TorusPoint, TorusPoint>> fixed_points);

double fitted_slope(const std::vector<std::pair<int, double>>& samples);

}  // namespace isoperim
