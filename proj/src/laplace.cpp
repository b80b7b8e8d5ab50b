#include "fraccalc/laplace.hpp"

#include <cmath>
#include <string>

#include "fraccalc/errors.hpp"
#include "fraccalc/gamma.hpp"

namespace fraccalc {

namespace {

void check_s(double s) {
  if (!std::isfinite(s) || s <= 0.0)
    throw DomainError("transform variable must satisfy s > 0, got " + format_double(s));
}

}  // namespace

double laplace_power_sum(const PowerSum& f, double s) {
  check_s(s);
  double v = 0.0;
  for (const auto& t : f.terms())
    v += t.coeff * std::exp(log_gamma(t.exponent + 1.0) - (t.exponent + 1.0) * std::log(s));
  return v;
}

double rl_integral_transform_check(double alpha, const PowerSum& f,
                                   const std::vector<double>& s_grid) {
  if (s_grid.empty()) throw DomainError("empty s grid");
  if (alpha == 0.0) return 0.0;
  const PowerSum If = rl_integral(alpha, f);
  double worst = 0.0;
  for (const double s : s_grid) {
    check_s(s);
    const double lhs = laplace_power_sum(If, s);
    const double rhs = std::pow(s, -alpha) * laplace_power_sum(f, s);
    const double scale = std::max({std::fabs(lhs), std::fabs(rhs), 1e-300});
    worst = std::max(worst, std::fabs(lhs - rhs) / scale);
  }
  return worst;
}

BoundaryTerms boundary_terms(const DerivativeSpec& spec, const PowerSum& f) {
  if (spec.level() != 2)
    throw DomainError("boundary_terms expects a 2-parameter spec, got level " +
                      std::to_string(spec.level()));
  const double alpha = spec.alpha();
  const double g1 = spec.gamma()[0], g2 = spec.gamma()[1];
  const PowerSum inner = rl_integral(std::max(0.0, 2.0 - alpha - g1 - g2), f);
  BoundaryTerms bt;
  const ZeroLimit z2 = value_at_zero(inner);
  if (z2.kind == ZeroLimitKind::infinite)
    throw DomainError("I^{2-alpha-gamma_1-gamma_2} f is unbounded at 0");
  bt.a2 = z2.value;
  const PowerSum mid = rl_integral(g2, weak_derivative(inner));
  const ZeroLimit z1 = value_at_zero(mid);
  if (z1.kind == ZeroLimitKind::infinite)
    throw DomainError("I^{gamma_2} d/dx I^{2-alpha-gamma_1-gamma_2} f is unbounded at 0");
  bt.a1 = z1.value;
  return bt;
}

double operational_formula_check(const DerivativeSpec& spec, const PowerSum& f,
                                 const std::vector<double>& s_grid) {
  if (s_grid.empty()) throw DomainError("empty s grid");
  const int n = spec.level();
  if (n > 2)
    throw DomainError("operational formula implemented for level <= 2, got " +
                      std::to_string(n));
  const double alpha = spec.alpha();
  const PowerSum df = apply_derivative(spec, f);

  // Assemble the right-hand side pieces once.
  double a1 = 0.0, a2 = 0.0, e1 = 0.0, e2 = 0.0;  // coefficients and s-exponents
  if (n == 2) {
    const BoundaryTerms bt = boundary_terms(spec, f);
    a1 = bt.a1;
    a2 = bt.a2;
    e1 = -spec.gamma()[0];
    e2 = 1.0 - spec.gamma()[0] - spec.gamma()[1];
  } else {
    const double g1 = spec.gamma()[0];
    const PowerSum inner = rl_integral(std::max(0.0, 1.0 - alpha - g1), f);
    const ZeroLimit z = value_at_zero(inner);
    if (z.kind == ZeroLimitKind::infinite)
      throw DomainError("I^{1-alpha-gamma_1} f is unbounded at 0");
    a1 = z.value;
    e1 = -g1;
  }

  double worst = 0.0;
  for (const double s : s_grid) {
    check_s(s);
    const double lhs = laplace_power_sum(df, s);
    const double base = std::pow(s, alpha) * laplace_power_sum(f, s);
    const double t1 = a1 * std::pow(s, e1);
    const double t2 = a2 * std::pow(s, e2);
    const double rhs = base - t1 - t2;
    // Relative to the size of the assembled pieces, so exact cancellations
    // at the root of the formula count as agreement.
    const double scale =
        std::max({std::fabs(lhs), std::fabs(base), std::fabs(t1), std::fabs(t2), 1e-300});
    worst = std::max(worst, std::fabs(lhs - rhs) / scale);
  }
  return worst;
}

namespace {

double integrand(const PowerSum& f, double s, double x) {
  return evaluate(f, x) * std::exp(-s * x);
}

double simpson(double a, double b, double fa, double fm, double fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive(const PowerSum& f, double s, double a, double b, double fa, double fm,
                double fb, double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = integrand(f, s, lm), frm = integrand(f, s, rm);
  const double left = simpson(a, m, fa, flm, fm);
  const double right = simpson(m, b, fm, frm, fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::fabs(delta) <= 15.0 * tol)
    return left + right + delta / 15.0;
  return adaptive(f, s, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adaptive(f, s, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

// integral_0^b x^mu e^{-sx} dx via the exponential series; converges fast
// for s*b <= 1.
double first_cell(double coeff, double mu, double s, double b) {
  double sum = 0.0;
  double pow_term = 1.0;  // (-s b)^m / m!
  for (int m = 0; m < 60; ++m) {
    const double inc = pow_term / (mu + m + 1.0);
    sum += inc;
    if (std::fabs(inc) < 1e-17 * std::fabs(sum)) break;
    pow_term *= -s * b / (m + 1);
  }
  return coeff * std::pow(b, mu + 1.0) * sum;
}

}  // namespace

double laplace_numeric(const PowerSum& f, double s, double truncation) {
  check_s(s);
  if (!(truncation > 0.0)) throw DomainError("truncation must be > 0");
  if (f.is_zero()) return 0.0;
  const double cell = std::min(0.5 / s, 0.25 * truncation);
  double head = 0.0;
  for (const auto& t : f.terms()) head += first_cell(t.coeff, t.exponent, s, cell);
  const double a = cell, b = truncation;
  const double fa = integrand(f, s, a), fb = integrand(f, s, b);
  const double fm = integrand(f, s, 0.5 * (a + b));
  const double whole = simpson(a, b, fa, fm, fb);
  const double tol = 1e-12 * std::max(1.0, std::fabs(head) + std::fabs(whole));
  return head + adaptive(f, s, a, b, fa, fm, fb, whole, tol, 40);
}

}  // namespace fraccalc
