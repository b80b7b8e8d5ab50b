#include "fraccalc/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "fraccalc/derivative.hpp"
#include "fraccalc/errors.hpp"
#include "fraccalc/gamma.hpp"
#include "fraccalc/grid.hpp"
#include "fraccalc/laplace.hpp"
#include "fraccalc/power_sum.hpp"

namespace fraccalc {

namespace {

using Rng = std::mt19937_64;

double uniform(Rng& rng, double a, double b) {
  return std::uniform_real_distribution<double>(a, b)(rng);
}

int uniform_int(Rng& rng, int a, int b) {
  return std::uniform_int_distribution<int>(a, b)(rng);
}

// Magnitude in [0.1, 2] with random sign; avoids coefficients that vanish
// against the canonicalization threshold.
double signed_coeff(Rng& rng) {
  const double m = uniform(rng, 0.1, 2.0);
  return uniform_int(rng, 0, 1) ? m : -m;
}

// Valid parameter set via rejection under the admissibility inequalities.
DerivativeSpec random_spec(Rng& rng, int n) {
  for (;;) {
    const double alpha = uniform(rng, 0.05, 1.0);
    std::vector<double> g(n);
    for (auto& v : g) v = uniform(rng, 0.0, 1.2);
    double s = 0.0;
    bool ok = true;
    for (int k = 1; k <= n && ok; ++k) {
      s += g[k - 1];
      ok = alpha + s <= k;
    }
    if (ok) return DerivativeSpec(alpha, g);
  }
}

// gamma_k = 1 exactly at one position k >= 2.
DerivativeSpec degenerate_unit_gamma_spec(Rng& rng, int n) {
  for (;;) {
    const double alpha = uniform(rng, 0.05, 0.95);
    std::vector<double> g(n);
    for (auto& v : g) v = uniform(rng, 0.0, 0.25);
    g[uniform_int(rng, 2, n) - 1] = 1.0;
    double s = 0.0;
    bool ok = true;
    for (int k = 1; k <= n && ok; ++k) {
      s += g[k - 1];
      ok = alpha + s <= k;
    }
    if (ok) return DerivativeSpec(alpha, g);
  }
}

// alpha + s_n = n - 1 exactly (trailing integral of order exactly 1).
DerivativeSpec degenerate_order_sum_spec(Rng& rng, int n) {
  for (;;) {
    const double alpha = uniform(rng, 0.05, 0.95);
    std::vector<double> g(n);
    double s = 0.0;
    for (int k = 1; k < n; ++k) {
      g[k - 1] = uniform(rng, 0.0, 0.3);
      s += g[k - 1];
    }
    const double last = (n - 1.0) - alpha - s;
    if (last < 0.0) continue;
    g[n - 1] = last;
    double t = 0.0;
    bool ok = true;
    for (int k = 1; k <= n && ok; ++k) {
      t += g[k - 1];
      ok = alpha + t <= k;
    }
    if (ok) return DerivativeSpec(alpha, g);
  }
}

// Up to max_terms terms, exponents well separated inside (min_exp, max_exp).
PowerSum random_sum(Rng& rng, double min_exp, double max_exp, int max_terms) {
  const int m = uniform_int(rng, 1, max_terms);
  std::vector<double> exps;
  while (static_cast<int>(exps.size()) < m) {
    const double e = uniform(rng, min_exp, max_exp);
    bool clash = false;
    for (double x : exps) clash = clash || std::fabs(x - e) < 1e-3;
    if (!clash) exps.push_back(e);
  }
  std::vector<PowerTerm> terms;
  for (double e : exps) terms.push_back({signed_coeff(rng), e});
  return PowerSum(std::move(terms));
}

std::string describe_spec(const DerivativeSpec& s) {
  std::ostringstream os;
  os << "alpha=" << format_double(s.alpha()) << " gamma=[";
  for (std::size_t i = 0; i < s.gamma().size(); ++i)
    os << (i ? "," : "") << format_double(s.gamma()[i]);
  os << "]";
  return os.str();
}

// Largest coefficient delta pairing the i-th terms of two equal-length sums
// (used where the exponents themselves differ by design).
double index_paired_delta(const PowerSum& a, const PowerSum& b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    d = std::max(d, std::fabs(a.terms()[i].coeff - b.terms()[i].coeff));
  return d;
}

class SuiteRun {
public:
  explicit SuiteRun(std::string name) : report_{std::move(name), 0, {}, 0.0} {}

  void check(bool ok, double residual, double tol, const std::string& what) {
    ++report_.cases;
    if (!ok) report_.failures.push_back({what, residual, tol});
  }

  void check_residual(double residual, double tol, const std::string& what) {
    check(residual <= tol, residual, tol, what);
  }

  void fail(const std::string& what) {
    ++report_.cases;
    report_.failures.push_back({what, std::nan(""), 0.0});
  }

  VerificationReport finish(std::chrono::steady_clock::time_point start) {
    report_.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report_;
  }

private:
  VerificationReport report_;
};

// --------------------------------------------------------------------------
// specialfn invariants.

VerificationReport suite_gamma(std::uint64_t seed) {
  const auto t0 = std::chrono::steady_clock::now();
  SuiteRun run("gamma");
  Rng rng(seed);
  for (int i = 0; i < 1000; ++i) {
    const double x = uniform(rng, 0.01, 100.0);
    const double r = gamma_ratio(x + 1.0, x);
    run.check_residual(std::fabs(r - x) / x, 1e-12,
                       "recurrence x=" + format_double(x));
  }
  for (int i = 0; i < 500; ++i) {
    const double a = uniform(rng, 0.05, 30.0), b = uniform(rng, 0.05, 30.0);
    const double p = gamma_ratio(a, b) * gamma_ratio(b, a);
    run.check_residual(std::fabs(p - 1.0), 1e-12,
                       "symmetry a=" + format_double(a) + " b=" + format_double(b));
    run.check(gamma_ratio(a, b) > 0.0, gamma_ratio(a, b), 0.0, "positivity");
  }
  return run.finish(t0);
}

// --------------------------------------------------------------------------
// Left inverse on the range of I^alpha.

VerificationReport suite_fundamental_theorem(std::uint64_t seed) {
  const auto t0 = std::chrono::steady_clock::now();
  SuiteRun run("fundamental-theorem");
  Rng rng(seed);
  for (int i = 0; i < 500; ++i) {
    const DerivativeSpec spec = random_spec(rng, 1 + i % 4);
    const PowerSum phi = random_sum(rng, -spec.alpha() + 0.01, 6.0, 6);
    try {
      const PowerSum residual = fundamental_theorem_residual(spec, phi);
      run.check_residual(residual.max_abs_coeff() / phi.max_abs_coeff(), 1e-10,
                         "left inverse " + describe_spec(spec) +
                             " phi=" + format_power_sum(phi));
    } catch (const std::exception& e) {
      run.fail("left inverse threw: " + std::string(e.what()) + " " + describe_spec(spec));
    }
  }
  return run.finish(t0);
}

// --------------------------------------------------------------------------
// Kernels, classification, degeneracy.

VerificationReport suite_kernel(std::uint64_t seed) {
  const auto t0 = std::chrono::steady_clock::now();
  SuiteRun run("kernel");
  Rng rng(seed);
  for (int i = 0; i < 200; ++i) {
    DerivativeSpec spec = [&]() -> DerivativeSpec {
      switch (i % 4) {
        case 1:
          return degenerate_unit_gamma_spec(rng, uniform_int(rng, 2, 4));
        case 3:
          return degenerate_order_sum_spec(rng, uniform_int(rng, 2, 4));
        default:
          return random_spec(rng, 1 + uniform_int(rng, 0, 3));
      }
    }();
    const std::string ds = describe_spec(spec);
    try {
      const SpecClass cls = classify(spec);
      const KernelBasis kb = kernel_basis(spec);
      run.check(kb.dimension() == cls.truly_level,
                static_cast<double>(kb.dimension()), cls.truly_level,
                "kernel dimension " + ds);
      for (double sigma : kb.exponents)
        run.check(sigma > -1.0 && sigma <= kExponentMergeEps, sigma, 0.0,
                  "kernel exponent bounds " + ds);
      for (const PowerSum& b : kb.elements) {
        const PowerSum db = apply_derivative(spec, b);
        run.check_residual(db.max_abs_coeff(), 1e-12, "kernel annihilation " + ds);
      }
      // Degenerate specs act exactly like their reduced core.
      if (cls.truly_level != spec.level()) {
        const PowerSum f = random_sum(rng, 0.01, 5.0, 5);
        const PowerSum d =
            apply_derivative(spec, f) - apply_derivative(cls.reduced, f);
        run.check_residual(d.max_abs_coeff() / std::max(1.0, f.max_abs_coeff()), 1e-10,
                           "degeneracy equivalence " + ds);
      }
      // On functions with exponents above max(0, 1-alpha), every family of
      // the same order collapses to the classical derivative.
      const double lo = std::max(0.0, 1.0 - spec.alpha()) + 0.01;
      const PowerSum f0 = random_sum(rng, lo, 6.0, 5);
      const PowerSum d0 = apply_derivative(spec, f0) -
                          apply_derivative(DerivativeSpec::riemann_liouville(spec.alpha()), f0);
      run.check_residual(d0.max_abs_coeff() / std::max(1.0, f0.max_abs_coeff()), 1e-10,
                         "basic-derivative coincidence " + ds);
    } catch (const std::exception& e) {
      run.fail("kernel suite threw: " + std::string(e.what()) + " " + ds);
    }
  }
  return run.finish(t0);
}

// --------------------------------------------------------------------------
// Projectors (level <= 2).

// f whose boundary evaluations stay finite for the given spec: exponents at
// or above the largest kernel exponent.
PowerSum admissible_for_projector(Rng& rng, const DerivativeSpec& spec) {
  const KernelBasis kb = kernel_basis(spec);
  std::vector<PowerTerm> terms;
  const int extra = uniform_int(rng, 1, 4);
  for (int i = 0; i < extra; ++i)
    terms.push_back({signed_coeff(rng), uniform(rng, kb.exponents[0] + 0.05 + i, 4.0 + i)});
  // Sometimes include the kernel monomials themselves.
  for (double sigma : kb.exponents)
    if (uniform_int(rng, 0, 1)) terms.push_back({signed_coeff(rng), sigma});
  return PowerSum(std::move(terms));
}

VerificationReport suite_projector(std::uint64_t seed) {
  const auto t0 = std::chrono::steady_clock::now();
  SuiteRun run("projector");
  Rng rng(seed);
  for (int i = 0; i < 200; ++i) {
    DerivativeSpec spec = [&]() -> DerivativeSpec {
      switch (i % 5) {
        case 0:
          return DerivativeSpec::riemann_liouville(uniform(rng, 0.05, 1.0));
        case 1:
          return DerivativeSpec::caputo(uniform(rng, 0.05, 1.0));
        case 2:
          return random_spec(rng, 1);
        case 3:
          return random_spec(rng, 2);
        default:
          return uniform_int(rng, 0, 1) ? degenerate_unit_gamma_spec(rng, 2)
                                        : degenerate_order_sum_spec(rng, 2);
      }
    }();
    const std::string ds = describe_spec(spec);
    try {
      const PowerSum f = (i % 5 == 1) ? random_sum(rng, 0.2, 4.0, 3) + PowerSum::constant(signed_coeff(rng))
                                      : admissible_for_projector(rng, spec);
      const double scale = std::max(1.0, f.max_abs_coeff());
      const PowerSum direct = projector_direct(spec, f).projection;
      const PowerSum closed = projector_closed_form(spec, f).projection;
      run.check_residual((direct - closed).max_abs_coeff() / scale, 1e-12,
                         "closed vs direct " + ds + " f=" + format_power_sum(f));
      // The projection lives in the span of the kernel basis: every exponent
      // it carries must be one of the kernel exponents.
      {
        const KernelBasis kb = kernel_basis(spec);
        bool in_span = true;
        for (const auto& t : direct.terms()) {
          bool hit = false;
          for (double sigma : kb.exponents)
            hit = hit || std::fabs(t.exponent - sigma) <= kExponentMergeEps;
          in_span = in_span && hit;
        }
        run.check(in_span, 0.0, 0.0, "projection in kernel span " + ds);
      }
      const PowerSum twice = projector_direct(spec, direct).projection;
      run.check_residual((twice - direct).max_abs_coeff() / scale, 1e-10,
                         "idempotence " + ds);
      const PowerSum lhs = rl_integral(spec.alpha(), apply_derivative(spec, f));
      run.check_residual((lhs - (f - closed)).max_abs_coeff() / scale, 1e-10,
                         "second fundamental theorem " + ds);
      if (i % 5 == 1) {
        // Caputo: the projection is the constant f(0), bitwise.
        const double f0 = value_at_zero(f).value;
        const bool exact =
            closed.size() == 1 && closed.terms()[0].exponent == 0.0 &&
            closed.terms()[0].coeff == f0;
        run.check(exact, (closed - PowerSum::constant(f0)).max_abs_coeff(), 0.0,
                  "caputo projector exactness " + ds + " f=" + format_power_sum(f));
      }
      if (i % 5 == 0) {
        // Riemann-Liouville: coefficient (I^{1-alpha} f)(0) / Gamma(alpha).
        const double v = value_at_zero(rl_integral(1.0 - spec.alpha(), f)).value;
        const double expect = v / std::exp(log_gamma(spec.alpha()));
        const double got = closed.is_zero() ? 0.0 : closed.terms()[0].coeff;
        run.check_residual(std::fabs(got - expect) / std::max(1.0, std::fabs(expect)),
                           1e-12, "rl projector coefficient " + ds);
      }
    } catch (const std::exception& e) {
      run.fail("projector suite threw: " + std::string(e.what()) + " " + ds);
    }
  }
  return run.finish(t0);
}

// --------------------------------------------------------------------------
// Abel equation.

VerificationReport suite_abel(std::uint64_t seed) {
  const auto t0 = std::chrono::steady_clock::now();
  SuiteRun run("abel");
  Rng rng(seed);
  for (int i = 0; i < 200; ++i) {
    const double alpha = uniform(rng, 0.05, 0.95);
    const PowerSum f = random_sum(rng, alpha - 1.0 + 0.01, 5.0, 6);
    try {
      const PowerSum phi = abel_solve(alpha, f);
      const double r = (rl_integral(alpha, phi) - f).max_abs_coeff() /
                       std::max(1.0, f.max_abs_coeff());
      run.check_residual(r, 1e-12,
                         "abel round trip alpha=" + format_double(alpha) +
                             " f=" + format_power_sum(f));
    } catch (const std::exception& e) {
      run.fail("abel solvable case threw: " + std::string(e.what()));
    }
  }
  // Solvability frontier: the error must fire exactly when the brute-force
  // exponent scan says so, including the boundary mu = alpha - 1.
  for (int i = 0; i < 200; ++i) {
    const double alpha = uniform(rng, 0.05, 0.95);
    PowerSum f = random_sum(rng, -0.95, 2.0, 4);
    if (i % 4 == 0) f += PowerSum::monomial(1.0, alpha - 1.0);  // exact boundary
    bool expect_solvable = true;
    for (const auto& t : f.terms()) expect_solvable &= t.exponent > alpha - 1.0;
    bool solved = true;
    try {
      (void)abel_solve(alpha, f);
    } catch (const NotSolvableError&) {
      solved = false;
    }
    run.check(solved == expect_solvable, solved, expect_solvable,
              "abel solvability frontier alpha=" + format_double(alpha) +
                  " f=" + format_power_sum(f));
  }
  return run.finish(t0);
}

// --------------------------------------------------------------------------
// Laplace-domain operational formulas.

VerificationReport suite_laplace(std::uint64_t seed) {
  const auto t0 = std::chrono::steady_clock::now();
  SuiteRun run("laplace");
  Rng rng(seed);
  const std::vector<double> s_grid = {0.5, 1.0, 2.0, 5.0, 10.0};

  for (int i = 0; i < 200; ++i) {
    DerivativeSpec spec = [&]() -> DerivativeSpec {
      switch (i % 4) {
        case 0:
          return random_spec(rng, 1);
        case 1:
        case 2:
          return random_spec(rng, 2);
        default:
          return uniform_int(rng, 0, 1) ? degenerate_unit_gamma_spec(rng, 2)
                                        : degenerate_order_sum_spec(rng, 2);
      }
    }();
    const PowerSum f = admissible_for_projector(rng, spec);
    try {
      run.check_residual(operational_formula_check(spec, f, s_grid), 1e-10,
                         "operational formula " + describe_spec(spec) +
                             " f=" + format_power_sum(f));
    } catch (const std::exception& e) {
      run.fail("operational formula threw: " + std::string(e.what()) + " " +
               describe_spec(spec));
    }
  }

  // Named special cases, each assembled independently of the general path.
  const auto relerr = [](double lhs, double rhs, double scale) {
    return std::fabs(lhs - rhs) / std::max({std::fabs(lhs), std::fabs(rhs), scale, 1e-300});
  };
  for (int i = 0; i < 20; ++i) {
    const double alpha = uniform(rng, 0.05, 0.95);
    // RL: L{D f} = s^a F(s) - (I^{1-a} f)(0).
    {
      const DerivativeSpec spec = DerivativeSpec::riemann_liouville(alpha);
      PowerSum f = random_sum(rng, alpha - 1.0 + 0.05, 4.0, 4);
      if (i % 2) f += PowerSum::monomial(signed_coeff(rng), alpha - 1.0);
      const PowerSum df = apply_derivative(spec, f);
      const double a1 = value_at_zero(rl_integral(1.0 - alpha, f)).value;
      double worst = 0.0;
      for (double s : s_grid) {
        const double base = std::pow(s, alpha) * laplace_power_sum(f, s);
        worst = std::max(worst, relerr(laplace_power_sum(df, s), base - a1,
                                       std::fabs(base) + std::fabs(a1)));
      }
      run.check_residual(worst, 1e-10, "rl operational alpha=" + format_double(alpha));
    }
    // Caputo: L{D f} = s^a F(s) - f(0) s^{a-1}.
    {
      const DerivativeSpec spec = DerivativeSpec::caputo(alpha);
      const PowerSum f =
          random_sum(rng, 0.05, 4.0, 4) + PowerSum::constant(signed_coeff(rng));
      const PowerSum df = apply_derivative(spec, f);
      const double f0 = value_at_zero(f).value;
      double worst = 0.0;
      for (double s : s_grid) {
        const double base = std::pow(s, alpha) * laplace_power_sum(f, s);
        const double bt = f0 * std::pow(s, alpha - 1.0);
        worst = std::max(worst, relerr(laplace_power_sum(df, s), base - bt,
                                       std::fabs(base) + std::fabs(bt)));
      }
      run.check_residual(worst, 1e-10, "caputo operational alpha=" + format_double(alpha));
    }
    // Hilfer: L{D f} = s^a F(s) - (I^{1-a-g1} f)(0) s^{-g1}.
    {
      const double g1 = uniform(rng, 0.0, 1.0 - alpha);
      const DerivativeSpec spec = DerivativeSpec::hilfer(alpha, g1);
      PowerSum f = random_sum(rng, alpha + g1 - 1.0 + 0.05, 4.0, 4);
      if (i % 2) f += PowerSum::monomial(signed_coeff(rng), alpha + g1 - 1.0);
      const PowerSum df = apply_derivative(spec, f);
      const double a1 = value_at_zero(rl_integral(std::max(0.0, 1.0 - alpha - g1), f)).value;
      double worst = 0.0;
      for (double s : s_grid) {
        const double base = std::pow(s, alpha) * laplace_power_sum(f, s);
        const double bt = a1 * std::pow(s, -g1);
        worst = std::max(worst, relerr(laplace_power_sum(df, s), base - bt,
                                       std::fabs(base) + std::fabs(bt)));
      }
      run.check_residual(worst, 1e-10, "hilfer operational alpha=" + format_double(alpha) +
                                           " g1=" + format_double(g1));
    }
  }

  // Degenerate 2nd-level specs must reproduce the reduced Hilfer formula.
  for (int i = 0; i < 40; ++i) {
    const DerivativeSpec spec = (i % 2) ? degenerate_unit_gamma_spec(rng, 2)
                                        : degenerate_order_sum_spec(rng, 2);
    const DerivativeSpec red = classify(spec).reduced;
    const PowerSum f = admissible_for_projector(rng, spec);
    try {
      const BoundaryTerms bt = boundary_terms(spec, f);
      const double gr = red.gamma()[0];
      const double hilfer_a =
          value_at_zero(rl_integral(std::max(0.0, 1.0 - red.alpha() - gr), f)).value;
      const double scale = std::max(1.0, std::fabs(hilfer_a));
      // Exactly one structural slot survives; it carries the Hilfer value.
      const double surviving = (i % 2) ? bt.a2 : bt.a1;
      const double vanishing = (i % 2) ? bt.a1 : bt.a2;
      run.check_residual(std::fabs(surviving - hilfer_a) / scale, 1e-10,
                         "degenerate boundary value " + describe_spec(spec));
      run.check_residual(std::fabs(vanishing) / scale, 1e-10,
                         "degenerate boundary slot " + describe_spec(spec));
      // And the assembled transforms agree.
      double worst = 0.0;
      for (double s : s_grid) {
        const double base = std::pow(s, spec.alpha()) * laplace_power_sum(f, s);
        const double rhs2 = base - bt.a1 * std::pow(s, -spec.gamma()[0]) -
                            bt.a2 * std::pow(s, 1.0 - spec.gamma()[0] - spec.gamma()[1]);
        const double rhs1 = base - hilfer_a * std::pow(s, -gr);
        worst = std::max(worst, relerr(rhs2, rhs1, std::fabs(base)));
      }
      run.check_residual(worst, 1e-10, "degenerate formula collapse " + describe_spec(spec));
    } catch (const std::exception& e) {
      run.fail("degenerate consistency threw: " + std::string(e.what()) + " " +
               describe_spec(spec));
    }
  }

  // Transform of the integral: L{I^a f} = s^{-a} F(s).
  for (int i = 0; i < 50; ++i) {
    const double alpha = uniform(rng, 0.0, 2.0);
    const PowerSum f = random_sum(rng, -0.9, 5.0, 6);
    run.check_residual(rl_integral_transform_check(alpha, f, s_grid), 1e-12,
                       "integral transform alpha=" + format_double(alpha));
  }

  // Independent numeric route: truncated transform integral.
  {
    const std::vector<PowerSum> smooth = {
        parse_power_sum("1 + x"), parse_power_sum("x^2"),
        parse_power_sum("3 - 0.5*x^1.5"), parse_power_sum("1 + x + x^2"),
        parse_power_sum("2*x^0.5 + x^3")};
    for (double s : {5.0, 10.0}) {
      for (const PowerSum& f : smooth) {
        const double exact = laplace_power_sum(f, s);
        const double numeric = laplace_numeric(f, s, 40.0 / s);
        run.check_residual(std::fabs(numeric - exact) / std::fabs(exact), 1e-6,
                           "numeric transform s=" + format_double(s) +
                               " f=" + format_power_sum(f));
      }
    }
  }
  return run.finish(t0);
}

// --------------------------------------------------------------------------
// Interpolation, index law, positivity, continuity, parser round-trip.

VerificationReport suite_axioms(std::uint64_t seed) {
  const auto t0 = std::chrono::steady_clock::now();
  SuiteRun run("axioms");
  Rng rng(seed);

  // Index law, symbolically.
  for (int i = 0; i < 100; ++i) {
    const double a = uniform(rng, 0.0, 2.0), b = uniform(rng, 0.0, 2.0);
    const PowerSum f = random_sum(rng, -0.95, 6.0, 8);
    const PowerSum lhs = rl_integral(a, rl_integral(b, f));
    const PowerSum rhs = rl_integral(a + b, f);
    double worst = 0.0;
    if (lhs.size() != rhs.size()) {
      worst = std::numeric_limits<double>::infinity();
    } else {
      for (std::size_t k = 0; k < lhs.size(); ++k) {
        const double c1 = lhs.terms()[k].coeff, c2 = rhs.terms()[k].coeff;
        worst = std::max(worst, std::fabs(c1 - c2) / std::max(std::fabs(c1), std::fabs(c2)));
      }
    }
    run.check_residual(worst, 1e-12, "index law a=" + format_double(a) +
                                         " b=" + format_double(b));
  }
  // Index law, numerically: residual shrinks under refinement.
  {
    const PowerSum f = parse_power_sum("1 + x");
    double prev = std::numeric_limits<double>::infinity();
    for (int N : {64, 128, 256, 512}) {
      const double r = semigroup_residual_numeric(0.5, 0.5, sample(f, 1.0, N));
      run.check(r < prev, r, prev, "numeric index law residual N=" + std::to_string(N));
      prev = r;
    }
  }
  // Interpolation: order 1 is the plain antiderivative.
  for (int i = 0; i < 100; ++i) {
    const PowerSum f = random_sum(rng, -0.95, 6.0, 6);
    const PowerSum If = rl_integral(1.0, f);
    double worst = 0.0;
    for (std::size_t k = 0; k < f.size(); ++k) {
      const double expect = f.terms()[k].coeff / (f.terms()[k].exponent + 1.0);
      worst = std::max(worst,
                       std::fabs(If.terms()[k].coeff - expect) / std::fabs(expect));
    }
    run.check_residual(worst, 1e-13, "interpolation f=" + format_power_sum(f));
  }
  {
    // Grid cross-check on a linear function, where the rule is exact.
    const PowerSum f = parse_power_sum("2 + 3*x");
    const GridFunction gf = rl_integral_numeric(1.0, sample(f, 1.0, 64));
    const PowerSum If = rl_integral(1.0, f);
    double worst = 0.0;
    for (int j = 1; j <= 64; ++j)
      worst = std::max(worst, std::fabs(gf.values[j] - evaluate(If, gf.node(j))));
    run.check_residual(worst, 1e-12, "interpolation grid cross-check");
  }
  // Linearity.
  for (int i = 0; i < 100; ++i) {
    const double a = signed_coeff(rng), b = signed_coeff(rng);
    const double alpha = uniform(rng, 0.0, 2.0);
    const PowerSum f = random_sum(rng, -0.9, 5.0, 5);
    const PowerSum g = random_sum(rng, -0.9, 5.0, 5);
    const PowerSum lhs = rl_integral(alpha, a * f + b * g);
    const PowerSum rhs = a * rl_integral(alpha, f) + b * rl_integral(alpha, g);
    const double scale = std::max(1.0, rhs.max_abs_coeff());
    run.check_residual((lhs - rhs).max_abs_coeff() / scale, 1e-12, "integral linearity");
    const PowerSum fd = random_sum(rng, 0.05, 5.0, 5);
    const PowerSum gd = random_sum(rng, 0.05, 5.0, 5);
    const PowerSum dl = weak_derivative(a * fd + b * gd);
    const PowerSum dr = a * weak_derivative(fd) + b * weak_derivative(gd);
    run.check_residual((dl - dr).max_abs_coeff() / std::max(1.0, dr.max_abs_coeff()),
                       1e-12, "derivative linearity");
  }
  // Non-negativity.
  for (int i = 0; i < 100; ++i) {
    std::vector<PowerTerm> terms;
    const int m = uniform_int(rng, 1, 6);
    for (int k = 0; k < m; ++k)
      terms.push_back({uniform(rng, 0.0, 3.0), uniform(rng, -0.9, 5.0)});
    const PowerSum f{std::move(terms)};
    const PowerSum If = rl_integral(uniform(rng, 0.0, 2.0), f);
    bool ok = true;
    for (const auto& t : If.terms()) ok = ok && t.coeff >= 0.0;
    run.check(ok, 0.0, 0.0, "positivity preservation");
  }
  // Strong continuity in the order parameter.
  {
    const PowerSum f = parse_power_sum("x^-0.9 + 1 + x^0.5 + x^4");
    for (const double a0 : {0.0, 0.25, 0.5, 1.0, 1.5}) {
      const double delta =
          index_paired_delta(rl_integral(a0 + 1e-6, f), rl_integral(a0, f));
      run.check_residual(delta, 1e-4, "strong continuity at alpha=" + format_double(a0));
    }
  }
  // Parser round-trip on exact canonical forms.
  for (int i = 0; i < 200; ++i) {
    PowerSum f = random_sum(rng, -0.95, 6.0, 6);
    if (i % 3 == 0) f += PowerSum::constant(signed_coeff(rng));
    const PowerSum back = parse_power_sum(format_power_sum(f));
    run.check(back == f, (back - f).max_abs_coeff(), 0.0,
              "parser round-trip f=" + format_power_sum(f));
  }
  return run.finish(t0);
}

// --------------------------------------------------------------------------
// Grid-layer accuracy.

VerificationReport suite_numerics(std::uint64_t seed) {
  const auto t0 = std::chrono::steady_clock::now();
  SuiteRun run("numerics");
  (void)seed;  // fully deterministic ladders
  const std::vector<int> ladder = {64, 128, 256, 512, 1024};

  // Weight table sanity: non-negative entries, rows summing to the exact
  // integral of the kernel.
  for (const double alpha : {0.1, 0.25, 0.5, 0.75, 1.0}) {
    const int N = 64;
    const double h = 1.0 / N;
    QuadratureWeights w(alpha, N, h);
    double min_w = 0.0, row_err = 0.0;
    for (int j = 1; j <= N; ++j) {
      for (int k = 0; k <= j; ++k) min_w = std::min(min_w, w.weight(j, k));
      const double x = j * h;
      const double exact = std::pow(x, alpha) * gamma_ratio(1.0, alpha + 1.0);
      row_err = std::max(row_err, std::fabs(w.row_sum(j) - exact));
    }
    run.check(min_w >= 0.0, min_w, 0.0, "weight non-negativity alpha=" + format_double(alpha));
    run.check_residual(row_err, 1e-12, "weight row sums alpha=" + format_double(alpha));
  }

  // Exactness on linear input.
  for (const double alpha : {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9}) {
    for (const char* expr : {"1", "x"}) {
      const PowerSum f = parse_power_sum(expr);
      const GridFunction out = rl_integral_numeric(alpha, sample(f, 1.0, 64));
      const PowerSum If = rl_integral(alpha, f);
      double worst = 0.0;
      for (int j = 1; j <= 64; ++j)
        worst = std::max(worst, std::fabs(out.values[j] - evaluate(If, out.node(j))));
      run.check_residual(worst, 1e-12, std::string("linear exactness f=") + expr +
                                           " alpha=" + format_double(alpha));
    }
  }

  // Quadrature convergence order on smooth monomials.
  for (const double alpha : {0.25, 0.5, 0.75}) {
    for (const char* expr : {"x^2", "x^3"}) {
      GridOperator op{GridOperator::Kind::integral, alpha, std::nullopt};
      const auto rows = convergence_study(op, parse_power_sum(expr), ladder);
      const double order = rows.back().observed_order;
      run.check(order >= 1.8, order, 1.8, std::string("quadrature order f=") + expr +
                                              " alpha=" + format_double(alpha));
    }
  }

  // Difference-scheme convergence vs the symbolic derivative.
  for (const double alpha : {0.25, 0.5, 0.75}) {
    for (const char* expr : {"x", "x^2"}) {
      GridOperator op{GridOperator::Kind::gl_derivative, alpha, std::nullopt};
      const auto rows = convergence_study(op, parse_power_sum(expr), ladder);
      const double order = rows.back().observed_order;
      run.check(order >= 0.8, order, 0.8, std::string("gl order f=") + expr +
                                              " alpha=" + format_double(alpha));
    }
  }

  // Pinned absolute accuracy case.
  {
    const PowerSum f = parse_power_sum("x");
    const GridFunction out = rl_integral_numeric(0.5, sample(f, 1.0, 1024));
    const PowerSum If = rl_integral(0.5, f);
    double worst = 0.0;
    for (int j = 1; j <= 1024; ++j)
      worst = std::max(worst, std::fabs(out.values[j] - evaluate(If, out.node(j))));
    run.check_residual(worst, 1e-5, "pinned quadrature accuracy alpha=0.5 f=x N=1024");
  }

  // Level-chain numerics track the symbolic result at first order.
  {
    const DerivativeSpec spec = DerivativeSpec::second_level(0.5, 0.25, 0.25);
    GridOperator op{GridOperator::Kind::level_chain, 0.5, spec};
    const auto rows = convergence_study(op, parse_power_sum("x^2"), ladder);
    run.check(rows.back().observed_order >= 0.9 || rows.back().max_error < 1e-8,
              rows.back().observed_order, 0.9, "level chain convergence");
  }
  return run.finish(t0);
}

using SuiteFn = VerificationReport (*)(std::uint64_t);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r = {
      {"gamma", suite_gamma},
      {"fundamental-theorem", suite_fundamental_theorem},
      {"kernel", suite_kernel},
      {"projector", suite_projector},
      {"abel", suite_abel},
      {"laplace", suite_laplace},
      {"axioms", suite_axioms},
      {"numerics", suite_numerics},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [name, fn] : registry()) n.push_back(name);
    return n;
  }();
  return names;
}

VerificationReport run_suite(const std::string& name, std::uint64_t seed) {
  for (const auto& [n, fn] : registry())
    if (n == name) return fn(seed);
  throw DomainError("unknown suite '" + name + "'");
}

std::vector<VerificationReport> run_all_suites(std::uint64_t seed) {
  std::vector<VerificationReport> out;
  std::uint64_t salt = 0;
  for (const auto& [name, fn] : registry()) out.push_back(fn(seed + 1000003 * salt++));
  return out;
}

}  // namespace fraccalc
