#include <doctest.h>

#include <cmath>
#include <numbers>

#include "isoperim/torus.hpp"

using namespace isoperim;

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

TorusMapExpr standard_like_map() {
  return TorusMapExpr({HorizontalShear{TrigPoly({TrigTerm{0.5, 1, 0.0}})},
                       VerticalShear{TrigPoly({TrigTerm{1.0, 1, 0.0}})}});
}
}  // namespace

TEST_CASE("hamiltonian condition") {
  CHECK(is_hamiltonian(builtin_sine_shear()));
  CHECK(is_hamiltonian(TorusMapExpr()));
  CHECK_FALSE(is_hamiltonian(builtin_translation(0.3, 0.0)));
  CHECK(is_hamiltonian(builtin_translation(0.0, 0.0)));
  // A zero-frequency term shifts the mean.
  CHECK_FALSE(is_hamiltonian(TorusMapExpr(
      {VerticalShear{TrigPoly({TrigTerm{0.3, 0, std::numbers::pi / 2}})}})));
  CHECK(is_hamiltonian(standard_like_map()));
}

TEST_CASE("jacobians are area preserving") {
  // Primitive Jacobians are unit-determinant exactly, by construction.
  for (int i = 0; i < 16; ++i) {
    const TorusPoint p{i / 16.0, (i * 3 % 16) / 16.0};
    CHECK(builtin_sine_shear().jacobian(p).det() == 1.0);
    CHECK(builtin_translation(0.3, 0.7).jacobian(p).det() == 1.0);
    CHECK(TorusMapExpr({HorizontalShear{TrigPoly({TrigTerm{0.5, 2, 0.3}})}}).jacobian(p).det() ==
          1.0);
  }

  // Chain products: 1e-12 holds while the product stays moderate; on
  // hyperbolic orbits the determinant subtraction is conditioned by the
  // squared matrix size, so the tolerance scales with it.
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      TorusPoint p{i / 8.0, j / 8.0};
      Mat2 shear_total;
      for (int k = 0; k < 10; ++k) {
        shear_total = builtin_sine_shear().jacobian(p) * shear_total;
        p = builtin_sine_shear().apply(p);
      }
      CHECK(std::abs(shear_total.det() - 1.0) < 1e-12);

      const TorusMapExpr m = standard_like_map();
      TorusPoint q{i / 8.0, j / 8.0};
      Mat2 total;
      for (int k = 0; k < 10; ++k) {
        total = m.jacobian(q) * total;
        q = m.apply(q);
      }
      const double frob2 = total.m00 * total.m00 + total.m01 * total.m01 +
                           total.m10 * total.m10 + total.m11 * total.m11;
      CHECK(std::abs(total.det() - 1.0) <= 1e-12 * std::max(1.0, frob2));
    }
  }
}

TEST_CASE("jacobian norm of the basic maps") {
  CHECK(jacobian_norm(builtin_translation(0.3, 0.7), 1, 16) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(jacobian_norm(builtin_translation(0.3, 0.7), 50, 16) == doctest::Approx(1.0).epsilon(1e-12));

  // Largest singular value of [[1,0],[t,1]] with t = 2 pi.
  const double t = kTwoPi;
  const double expected = (t + std::sqrt(t * t + 4)) / 2;
  CHECK(jacobian_norm(builtin_sine_shear(), 1, 256) == doctest::Approx(expected).epsilon(1e-9));

  // The shear accumulates linearly: norm(n)/n approaches 2 pi.
  const double norm100 = jacobian_norm(builtin_sine_shear(), 100, 64);
  CHECK(norm100 / 100 == doctest::Approx(kTwoPi).epsilon(1e-4));
}

TEST_CASE("parallel and serial sweeps agree exactly") {
  const TorusMapExpr m = standard_like_map();
  CHECK(jacobian_norm(m, 7, 33) == jacobian_norm_serial(m, 7, 33));
  const auto par = norm_sequence(m, 12, 17);
  const auto ser = norm_sequence_serial(m, 12, 17);
  REQUIRE(par.size() == ser.size());
  for (std::size_t i = 0; i < par.size(); ++i) CHECK(par[i] == ser[i]);
}

TEST_CASE("norm sequence is submultiplicative and monotone for the shear") {
  const auto norms = norm_sequence(builtin_sine_shear(), 30, 64);
  for (std::size_t i = 0; i + 1 < norms.size(); ++i) {
    CHECK(norms[i + 1] <= norms[i] * norms[0] * (1 + 1e-6));
    CHECK(norms[i + 1] + 1e-9 >= norms[i]);
  }
  for (const double n : norms) CHECK(n >= 1.0 - 1e-12);
}

TEST_CASE("action difference of the sine shear") {
  const ActionPair act =
      action_difference(builtin_sine_shear(), TorusPoint{0.0, 0.0}, TorusPoint{0.5, 0.0});
  CHECK(act.delta == doctest::Approx(1.0 / std::numbers::pi).epsilon(1e-6));

  const ActionPair degenerate =
      action_difference(builtin_sine_shear(), TorusPoint{0.5, 0.25}, TorusPoint{0.5, 0.25});
  CHECK(std::abs(degenerate.delta) < 1e-12);

  CHECK_THROWS_AS(
      action_difference(builtin_sine_shear(), TorusPoint{0.1, 0.0}, TorusPoint{0.5, 0.0}),
      NotFixedPoint);
  CHECK_THROWS_AS(
      action_difference(builtin_sine_shear(), TorusPoint{0.0, 0.0}, TorusPoint{0.5, 0.0}, 8),
      std::invalid_argument);
}

TEST_CASE("action difference is linear in the iterate") {
  const TorusMapExpr shear = builtin_sine_shear();
  const TorusPoint x{0.0, 0.0}, y{0.5, 0.0};
  const double delta1 = action_difference(shear, x, y).delta;
  for (int n = 2; n <= 20; n += 3) {
    const double delta_n = action_difference(shear.iterated(n), x, y).delta;
    CHECK(std::abs(delta_n - n * delta1) <= 1e-6 * std::abs(n * delta1));
  }
}

TEST_CASE("growth report for the translation") {
  const GrowthReport rep = growth_report(builtin_translation(0.3, 0.0), 20, 16, 1.0, std::nullopt);
  for (const auto& [n, norm] : rep.samples) CHECK(norm == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(rep.slope == doctest::Approx(0.0).epsilon(1e-12));
  CHECK_FALSE(rep.kappa.has_value());
}

TEST_CASE("growth report for the sine shear") {
  const auto fixed = std::make_pair(TorusPoint{0.0, 0.0}, TorusPoint{0.5, 0.0});
  const GrowthReport rep = growth_report(builtin_sine_shear(), 60, 64, 1.0, fixed);
  CHECK(rep.slope == doctest::Approx(kTwoPi).epsilon(0.02));
  REQUIRE(rep.kappa.has_value());
  // kappa = delta / ((1 + |gamma|) mu) with delta = 1/pi, |gamma| = 1/2.
  const double expected_kappa =
      (1.0 / std::numbers::pi) / (1.5 * (1.0 + std::numbers::sqrt2));
  CHECK(*rep.kappa == doctest::Approx(expected_kappa).epsilon(1e-6));
  CHECK(*rep.kappa <= rep.slope);
  for (const auto& [n, norm] : rep.samples) CHECK(norm + 1e-9 >= *rep.kappa * n);
}

TEST_CASE("refined norm stabilises") {
  const double refined = jacobian_norm_refined(builtin_sine_shear(), 1, 32);
  const double t = kTwoPi;
  CHECK(refined == doctest::Approx((t + std::sqrt(t * t + 4)) / 2).epsilon(1e-6));
}
