#include <cmath>

#include <doctest.h>

#include "fraccalc/errors.hpp"
#include "fraccalc/gamma.hpp"
#include "fraccalc/grid.hpp"

using namespace fraccalc;

TEST_CASE("sampling") {
  const GridFunction g = sample(parse_power_sum("x^2"), 2.0, 4);
  REQUIRE(g.node_count() == 4);
  CHECK(g.step() == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(g.values[0] == 0.0);
  CHECK(g.values[2] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(g.values[4] == doctest::Approx(4.0).epsilon(1e-14));
  CHECK(!g.singular_exponent.has_value());

  const GridFunction lin = sample(parse_power_sum("x"), 1.0, 2);
  REQUIRE(lin.node_count() == 2);
  CHECK(lin.values[0] == 0.0);
  CHECK(lin.values[1] == 0.5);
  CHECK(lin.values[2] == 1.0);

  const GridFunction s = sample(parse_power_sum("x^-0.5 + 1"), 1.0, 4);
  REQUIRE(s.singular_exponent.has_value());
  CHECK(*s.singular_exponent == doctest::Approx(-0.5).epsilon(1e-15));
  CHECK(s.values[0] == 1.0);  // coefficient of the singular term

  const GridFunction pure = sample(parse_power_sum("x^-0.5"), 1.0, 2);
  REQUIRE(pure.singular_exponent.has_value());
  CHECK(*pure.singular_exponent == doctest::Approx(-0.5).epsilon(1e-15));
  CHECK(pure.values[1] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
  CHECK(pure.values[2] == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("quadrature weight invariants") {
  for (double alpha : {0.25, 0.5, 1.0}) {
    CAPTURE(alpha);
    const int n = 32;
    const double h = 1.0 / n;
    const QuadratureWeights w(alpha, n, h);
    for (int j = 1; j <= n; ++j) {
      double row = 0.0;
      for (int k = 0; k <= j; ++k) {
        CHECK(w.weight(j, k) >= 0.0);
        row += w.weight(j, k);
      }
      const double expect = std::pow(j * h, alpha) / std::exp(log_gamma(alpha + 1.0));
      CHECK(std::fabs(row - expect) <= 1e-12 * std::max(1.0, expect));
      CHECK(w.row_sum(j) == doctest::Approx(row).epsilon(1e-13));
    }
  }
}

TEST_CASE("alpha = 1 reduces to the trapezoidal rule") {
  // I^1 f is the ordinary antiderivative; for f = 1 the trapezoid rule is
  // exact: (I^1 1)(x_j) = x_j.
  const GridFunction g = sample(PowerSum::constant(1.0), 1.0, 16);
  const GridFunction out = rl_integral_numeric(1.0, g);
  for (int j = 0; j <= 16; ++j)
    CHECK(std::fabs(out.values[j] - g.node(j)) <= 1e-14);
}

TEST_CASE("piecewise-linear data is integrated exactly") {
  for (double alpha : {0.3, 0.7}) {
    CAPTURE(alpha);
    const GridFunction g = sample(parse_power_sum("2*x + 1"), 1.0, 8);
    const GridFunction out = rl_integral_numeric(alpha, g);
    const PowerSum exact = rl_integral(alpha, parse_power_sum("2*x + 1"));
    for (int j = 1; j <= 8; ++j) {
      const double ref = evaluate(exact, g.node(j));
      CHECK(std::fabs(out.values[j] - ref) <= 1e-12 * std::max(1.0, std::fabs(ref)));
    }
  }
}

TEST_CASE("singular grids are rejected by the quadrature") {
  const GridFunction s = sample(parse_power_sum("x^-0.5"), 1.0, 8);
  CHECK_THROWS_AS(rl_integral_numeric(0.5, s), UnsupportedError);
}

TEST_CASE("grunwald-letnikov derivative of x^2") {
  // D^{1/2} x^2 = Gamma(3)/Gamma(2.5) x^{1.5} = 1.5045055561273501 x^{1.5}.
  const int n = 2048;
  const GridFunction g = sample(parse_power_sum("x^2"), 1.0, n);
  const GridFunction d = gl_derivative(0.5, g);
  double worst = 0.0;
  for (int j = 0; j <= n; ++j) {
    const double x = g.node(j);
    if (x < 0.2) continue;
    const double ref = 1.5045055561273501 * std::pow(x, 1.5);
    worst = std::max(worst, std::fabs(d.values[j] - ref));
  }
  CHECK(worst <= 2e-3);  // first-order rule at h = 1/2048

  CHECK_THROWS_AS(gl_derivative(1.0, g), DomainError);
  CHECK_THROWS_AS(gl_derivative(0.0, g), DomainError);
}

TEST_CASE("numeric derivative chain approximates the symbolic one") {
  // Caputo, alpha = 1/2, f = x: the exact derivative is
  // x^{1/2}/Gamma(3/2) = 1.1283791670955126 x^{1/2}.
  const auto caputo = DerivativeSpec::caputo(0.5);
  const int n = 512;
  const GridFunction g = sample(parse_power_sum("x"), 1.0, n);
  const GridFunction d = nth_level_derivative_numeric(caputo, g);
  const PowerSum exact = apply_derivative(caputo, parse_power_sum("x"));
  double worst = 0.0;
  for (int j = 0; j <= n; ++j) {
    const double x = g.node(j);
    if (x < 0.2) continue;
    worst = std::max(worst, std::fabs(d.values[j] - evaluate(exact, x)));
  }
  CHECK(worst <= 1e-3);

  // A truly 2nd-level chain against its symbolic result.
  const auto s2 = DerivativeSpec::second_level(0.5, 0.25, 0.25);
  const GridFunction g2 = sample(parse_power_sum("x^2"), 1.0, n);
  const GridFunction d2 = nth_level_derivative_numeric(s2, g2);
  const PowerSum exact2 = apply_derivative(s2, parse_power_sum("x^2"));
  double worst2 = 0.0;
  for (int j = 0; j <= n; ++j) {
    const double x = g2.node(j);
    if (x < 0.2) continue;
    worst2 = std::max(worst2, std::fabs(d2.values[j] - evaluate(exact2, x)));
  }
  CHECK(worst2 <= 5e-2);
}

TEST_CASE("numeric semigroup residual shrinks with refinement") {
  double prev = 1e9;
  for (int n : {64, 128, 256}) {
    const GridFunction g = sample(parse_power_sum("1 + x"), 1.0, n);
    const double r = semigroup_residual_numeric(0.5, 0.5, g);
    CHECK(r < prev);
    prev = r;
  }
  // Pinned magnitude: I^{1/2}(I^{1/2} 1) vs I^1 1 at N = 512.
  const GridFunction one = sample(PowerSum::constant(1.0), 1.0, 512);
  CHECK(semigroup_residual_numeric(0.5, 0.5, one) < 1e-3);
}

TEST_CASE("convergence study: product trapezoid is second order") {
  GridOperator op;
  op.kind = GridOperator::Kind::integral;
  op.alpha = 0.5;
  const auto rows = convergence_study(op, parse_power_sum("x^2"), {64, 128, 256, 512});
  REQUIRE(rows.size() == 4);
  CHECK(std::isnan(rows[0].observed_order));
  for (std::size_t i = 1; i < rows.size(); ++i) {
    CAPTURE(i);
    CHECK(rows[i].max_error < rows[i - 1].max_error);
    CHECK(rows[i].observed_order >= 1.8);
  }
  CHECK(std::fabs(rows.back().observed_order - 2.0) <= 0.15);
}

TEST_CASE("convergence study: linear data flagged exact") {
  GridOperator op;
  op.kind = GridOperator::Kind::integral;
  op.alpha = 0.5;
  const auto rows = convergence_study(op, parse_power_sum("x"), {32, 64});
  for (const auto& r : rows) {
    CHECK(r.exact);
    CHECK(r.max_error <= 1e-13);
  }
}

TEST_CASE("convergence study: grunwald-letnikov is first order") {
  GridOperator op;
  op.kind = GridOperator::Kind::gl_derivative;
  op.alpha = 0.5;
  const auto rows = convergence_study(op, parse_power_sum("x^2"), {128, 256, 512});
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].observed_order >= 0.8);
  CHECK(std::fabs(rows.back().observed_order - 1.0) <= 0.2);
}
