// Acceptance gate: one line per criterion, exit 0 only if every criterion
// holds inside its runtime budget.  Criterion 8 drives the installed CLI.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "fraccalc/derivative.hpp"
#include "fraccalc/errors.hpp"
#include "fraccalc/gamma.hpp"
#include "fraccalc/grid.hpp"
#include "fraccalc/laplace.hpp"
#include "fraccalc/power_sum.hpp"

using namespace fraccalc;

namespace {

using Rng = std::mt19937_64;

double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

int uniform_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

double signed_coeff(Rng& rng) {
  const double c = uniform(rng, 0.1, 2.0);
  return uniform_int(rng, 0, 1) ? c : -c;
}

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

// gamma_k = 1 exactly at a random inner slot.
DerivativeSpec degenerate_unit_gamma_spec(Rng& rng, int n) {
  for (;;) {
    const double alpha = uniform(rng, 0.05, 0.95);
    std::vector<double> g(n);
    for (auto& v : g) v = uniform(rng, 0.0, 0.25);
    g[uniform_int(rng, 1, n - 1)] = 1.0;
    double s = 0.0;
    bool ok = true;
    for (int k = 1; k <= n && ok; ++k) {
      s += g[k - 1];
      ok = alpha + s <= k;
    }
    if (ok) return DerivativeSpec(alpha, g);
  }
}

// alpha + s_n = n - 1 exactly: the trailing parameter is an integral in
// disguise and the parameter set reduces by one level.
DerivativeSpec degenerate_order_sum_spec(Rng& rng, int n) {
  for (;;) {
    const double alpha = uniform(rng, 0.05, 0.95);
    std::vector<double> g(n);
    double s = 0.0;
    for (int i = 0; i + 1 < n; ++i) {
      g[i] = uniform(rng, 0.0, 0.2);
      s += g[i];
    }
    const double tail = (n - 1) - alpha - s;
    if (tail < 0.0) continue;
    g[n - 1] = tail;
    double t = 0.0;
    bool ok = true;
    for (int k = 1; k <= n && ok; ++k) {
      t += g[k - 1];
      ok = alpha + t <= k;
    }
    if (ok) return DerivativeSpec(alpha, g);
  }
}

PowerSum random_sum(Rng& rng, double min_exp, double max_exp, int max_terms) {
  const int m = uniform_int(rng, 1, max_terms);
  std::vector<PowerTerm> terms;
  for (int i = 0; i < m; ++i) {
    double e;
    bool fresh = true;
    do {
      e = uniform(rng, min_exp, max_exp);
      fresh = true;
      for (const auto& t : terms)
        if (std::fabs(t.exponent - e) < 1e-3) fresh = false;
    } while (!fresh);
    terms.push_back({signed_coeff(rng), e});
  }
  return PowerSum(std::move(terms));
}

// Random input whose projector boundary values are finite for the given
// spec: exponents at or above the leading kernel exponent.
PowerSum admissible_input(Rng& rng, const DerivativeSpec& spec) {
  const KernelBasis kb = kernel_basis(spec);
  const double floor = kb.exponents.front();
  PowerSum f = random_sum(rng, floor + 0.05, 5.0, 4);
  for (const auto& e : kb.exponents)
    if (uniform_int(rng, 0, 1)) f += PowerSum::monomial(signed_coeff(rng), e);
  return f;
}

double rel(double v, const PowerSum& against) {
  return v / std::max(1.0, against.max_abs_coeff());
}

// ------------------------------------------------------------------
// Criteria.

struct Outcome {
  bool ok = true;
  std::string detail;
};

Outcome criterion_fundamental_theorem() {
  Rng rng(1001);
  double worst = 0.0;
  for (int i = 0; i < 500; ++i) {
    const DerivativeSpec spec = random_spec(rng, 1 + i % 4);
    const PowerSum phi = random_sum(rng, -spec.alpha() + 0.01, 6.0, 6);
    const PowerSum res = fundamental_theorem_residual(spec, phi);
    worst = std::max(worst, rel(res.max_abs_coeff(), phi));
  }
  return {worst < 1e-10, "500 specs, worst residual " + format_double(worst)};
}

Outcome criterion_kernel() {
  Rng rng(1002);
  double worst = 0.0;
  int checked = 0;
  for (int i = 0; i < 200; ++i) {
    const int n = 2 + i % 3;
    DerivativeSpec spec = random_spec(rng, 1 + i % 4);
    if (i % 4 == 2) spec = degenerate_unit_gamma_spec(rng, n);
    if (i % 4 == 3) spec = degenerate_order_sum_spec(rng, n);
    const SpecClass cls = classify(spec);
    const KernelBasis kb = kernel_basis(spec);
    if (kb.dimension() != cls.truly_level)
      return {false, "kernel dimension != truly-level for a sampled spec"};
    for (const double e : kb.exponents)
      if (!(e > -1.0 && e <= 1e-12))
        return {false, "kernel exponent outside (-1, 0]: " + format_double(e)};
    for (const auto& elem : kb.elements) {
      const double r = apply_derivative(spec, elem).max_abs_coeff();
      worst = std::max(worst, r);
      ++checked;
    }
  }
  return {worst < 1e-12, std::to_string(checked) + " kernel elements, worst residual " +
                             format_double(worst)};
}

Outcome criterion_projector() {
  Rng rng(1003);
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    DerivativeSpec spec = random_spec(rng, 1 + i % 2);
    if (i % 5 == 0) spec = DerivativeSpec::riemann_liouville(uniform(rng, 0.05, 1.0));
    if (i % 5 == 1) spec = DerivativeSpec::caputo(uniform(rng, 0.05, 0.95));
    const PowerSum f = admissible_input(rng, spec);

    const PowerSum direct = projector_direct(spec, f).projection;
    const PowerSum closed = projector_closed_form(spec, f).projection;
    worst = std::max(worst, rel((direct - closed).max_abs_coeff(), f));

    // Idempotence.
    const PowerSum twice = projector_direct(spec, direct).projection;
    worst = std::max(worst, rel((twice - direct).max_abs_coeff(), f));

    // 2nd fundamental theorem: I^alpha D f = f - P f.
    const PowerSum lhs = rl_integral(spec.alpha(), apply_derivative(spec, f));
    worst = std::max(worst, rel((lhs - (f - direct)).max_abs_coeff(), f));
  }

  // Caputo projector is the initial value, bitwise.
  for (int i = 0; i < 50; ++i) {
    const DerivativeSpec cap = DerivativeSpec::caputo(uniform(rng, 0.05, 0.95));
    PowerSum f = random_sum(rng, 0.05, 5.0, 4) + PowerSum::constant(signed_coeff(rng));
    const double f0 = value_at_zero(f).value;
    const PowerSum p = projector_closed_form(cap, f).projection;
    const bool exact = p.size() == 1 && p.terms()[0].exponent == 0.0 &&
                       p.terms()[0].coeff == f0;
    if (!exact) return {false, "Caputo projector is not exactly f(0)"};
  }

  // RL projector coefficient: (I^{1-alpha} f)(0) / Gamma(alpha).
  for (int i = 0; i < 50; ++i) {
    const double alpha = uniform(rng, 0.05, 0.95);
    const DerivativeSpec rl = DerivativeSpec::riemann_liouville(alpha);
    const PowerSum f = admissible_input(rng, rl);
    const double expect = value_at_zero(rl_integral(1.0 - alpha, f)).value /
                          std::exp(log_gamma(alpha));
    const PowerSum p = projector_closed_form(rl, f).projection;
    const double got = p.is_zero() ? 0.0 : p.terms()[0].coeff;
    if (std::fabs(got - expect) > 1e-12 * std::max(1.0, std::fabs(expect)))
      return {false, "RL projector coefficient mismatch"};
  }
  return {worst < 1e-10, "200 + 100 cases, worst residual " + format_double(worst)};
}

Outcome criterion_abel() {
  Rng rng(1004);
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const double alpha = uniform(rng, 0.05, 0.95);
    const PowerSum f = random_sum(rng, alpha - 1.0 + 0.01, 5.0, 5);
    const PowerSum back = rl_integral(alpha, abel_solve(alpha, f));
    worst = std::max(worst, rel((back - f).max_abs_coeff(), f));
  }
  if (!(worst < 1e-12)) return {false, "round-trip residual " + format_double(worst)};

  // Solvability frontier against a brute-force exponent scan.
  for (int i = 0; i < 200; ++i) {
    const double alpha = uniform(rng, 0.05, 0.95);
    PowerSum f = random_sum(rng, -0.99, 2.0, 4);
    if (i % 4 == 0) f += PowerSum::monomial(1.0, alpha - 1.0);  // exact boundary
    bool expect = true;
    for (const auto& t : f.terms()) expect = expect && t.exponent > alpha - 1.0;
    bool got = true;
    try {
      abel_solve(alpha, f);
    } catch (const NotSolvableError&) {
      got = false;
    }
    if (got != expect) return {false, "solvability disagrees with the exponent scan"};
  }
  return {true, "200 round trips (worst " + format_double(worst) + ") + 200 frontier"};
}

Outcome criterion_laplace() {
  Rng rng(1005);
  const std::vector<double> grid = {0.5, 1.0, 2.0, 5.0, 10.0};
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const DerivativeSpec spec = random_spec(rng, 1 + i % 2);
    const PowerSum f = admissible_input(rng, spec);
    worst = std::max(worst, operational_formula_check(spec, f, grid));
  }
  for (int i = 0; i < 20; ++i) {
    const double a1 = uniform(rng, 0.05, 1.0);
    worst = std::max(worst, operational_formula_check(
                                DerivativeSpec::riemann_liouville(a1),
                                admissible_input(rng, DerivativeSpec::riemann_liouville(a1)),
                                grid));
    const double a2 = uniform(rng, 0.05, 0.95);
    worst = std::max(worst, operational_formula_check(
                                DerivativeSpec::caputo(a2),
                                admissible_input(rng, DerivativeSpec::caputo(a2)), grid));
    const double a3 = uniform(rng, 0.05, 0.95);
    const double g1 = uniform(rng, 0.0, 1.0 - a3);
    const DerivativeSpec hil = DerivativeSpec::hilfer(a3, g1);
    worst = std::max(worst, operational_formula_check(hil, admissible_input(rng, hil), grid));
  }
  if (!(worst < 1e-10)) return {false, "operational residual " + format_double(worst)};

  double worst_num = 0.0;
  for (int i = 0; i < 5; ++i) {
    const PowerSum f = random_sum(rng, 0.0, 3.0, 4);
    for (const double s : {5.0, 10.0}) {
      const double exact = laplace_power_sum(f, s);
      const double numeric = laplace_numeric(f, s, 40.0 / s);
      worst_num = std::max(worst_num,
                           std::fabs(numeric - exact) / std::max(1.0, std::fabs(exact)));
    }
  }
  return {worst_num < 1e-6, "260 operational (worst " + format_double(worst) +
                                "), numeric cross-check " + format_double(worst_num)};
}

Outcome criterion_axioms() {
  Rng rng(1006);
  // Semigroup, symbolically.
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double a = uniform(rng, 0.05, 1.5), b = uniform(rng, 0.05, 1.5);
    const PowerSum f = random_sum(rng, -0.9, 4.0, 5);
    const PowerSum r = rl_integral(a, rl_integral(b, f)) - rl_integral(a + b, f);
    worst = std::max(worst, rel(r.max_abs_coeff(), f));
  }
  if (!(worst < 1e-12)) return {false, "semigroup residual " + format_double(worst)};

  // Semigroup, numerically: residual decreases under refinement.
  double prev = 1e100;
  for (int n : {64, 128, 256, 512}) {
    const double r =
        semigroup_residual_numeric(0.5, 0.5, sample(parse_power_sum("1 + x"), 1.0, n));
    if (!(r < prev)) return {false, "numeric semigroup residual not decreasing"};
    prev = r;
  }

  // Interpolation: I^1 x^mu = x^{mu+1}/(mu+1).
  for (int i = 0; i < 100; ++i) {
    const double mu = uniform(rng, -0.9, 4.0);
    const PowerSum g = rl_integral(1.0, PowerSum::monomial(1.0, mu));
    const double c = g.terms()[0].coeff;
    if (std::fabs(c - 1.0 / (mu + 1.0)) > 1e-13 * std::max(1.0, 1.0 / (mu + 1.0)))
      return {false, "order-1 integral coefficient mismatch"};
    if (g.terms()[0].exponent != mu + 1.0)
      return {false, "order-1 integral exponent mismatch"};
  }

  // Non-negativity: positive-coefficient inputs stay positive, and the
  // quadrature weights are non-negative.
  for (int i = 0; i < 100; ++i) {
    PowerSum f = random_sum(rng, -0.9, 4.0, 5);
    std::vector<PowerTerm> abs_terms;
    for (const auto& t : f.terms()) abs_terms.push_back({std::fabs(t.coeff), t.exponent});
    const PowerSum g = rl_integral(uniform(rng, 0.05, 1.5), PowerSum(abs_terms));
    for (const auto& t : g.terms())
      if (t.coeff < 0.0) return {false, "integral broke non-negativity"};
  }
  for (double alpha : {0.25, 0.5, 0.75, 1.0}) {
    const QuadratureWeights w(alpha, 64, 1.0 / 64);
    for (int j = 1; j <= 64; ++j)
      for (int k = 0; k <= j; ++k)
        if (w.weight(j, k) < 0.0) return {false, "negative quadrature weight"};
  }

  // Strong continuity in the order: coefficient deltas at |d alpha| = 1e-6.
  const PowerSum f = parse_power_sum("x^-0.9 + 1 + x^0.5 + x^4");
  for (double a0 : {0.0, 0.25, 0.5, 1.0, 1.5}) {
    const PowerSum lo = rl_integral(a0 + 1e-6, f);
    const PowerSum hi = a0 == 0.0 ? f : rl_integral(a0, f);
    if (lo.size() != hi.size()) return {false, "continuity: term count changed"};
    for (std::size_t k = 0; k < lo.size(); ++k) {
      const double d = std::fabs(lo.terms()[k].coeff - hi.terms()[k].coeff);
      if (d > 1e-4) return {false, "continuity delta " + format_double(d)};
    }
  }
  return {true, "semigroup worst " + format_double(worst) +
                    ", interpolation/positivity/continuity hold"};
}

Outcome criterion_numerics() {
  const std::vector<int> ladder = {64, 128, 256, 512, 1024};
  for (const char* expr : {"x^2", "x^3"}) {
    for (double alpha : {0.25, 0.5, 0.75}) {
      GridOperator op;
      op.kind = GridOperator::Kind::integral;
      op.alpha = alpha;
      const auto rows = convergence_study(op, parse_power_sum(expr), ladder);
      const auto& last = rows.back();
      if (last.exact) continue;
      if (!(last.observed_order >= 1.8))
        return {false, std::string("trapezoid order ") + format_double(last.observed_order) +
                           " on " + expr + ", alpha " + format_double(alpha)};
    }
  }
  for (const char* expr : {"x", "x^2"}) {
    for (double alpha : {0.3, 0.5, 0.7}) {
      GridOperator op;
      op.kind = GridOperator::Kind::gl_derivative;
      op.alpha = alpha;
      const auto rows = convergence_study(op, parse_power_sum(expr), ladder);
      const auto& last = rows.back();
      if (last.exact) continue;
      if (!(last.observed_order >= 0.8))
        return {false, std::string("GL order ") + format_double(last.observed_order) +
                           " on " + expr + ", alpha " + format_double(alpha)};
    }
  }
  // Pinned absolute check.
  const GridFunction g = sample(parse_power_sum("x"), 1.0, 1024);
  const GridFunction out = rl_integral_numeric(0.5, g);
  const PowerSum exact = rl_integral(0.5, parse_power_sum("x"));
  double err = 0.0;
  for (int j = 1; j <= 1024; ++j)
    err = std::max(err, std::fabs(out.values[j] - evaluate(exact, out.node(j))));
  if (!(err < 1e-5)) return {false, "pinned integral error " + format_double(err)};
  return {true, "orders >= 1.8 (trapezoid) / >= 0.8 (GL), pinned error " +
                    format_double(err)};
}

struct CliResult {
  int exit_code = -1;
  std::string output;
};

CliResult run_cli(const std::string& cli, const std::string& args) {
  const std::string cmd = "'" + cli + "' " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  CliResult r;
  if (!p) return r;
  char buf[4096];
  while (std::fgets(buf, sizeof buf, p)) r.output += buf;
  const int status = pclose(p);
  if (WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
  return r;
}

Outcome criterion_end_to_end(const std::string& cli) {
  const CliResult v = run_cli(cli, "verify --suite all --seed 42");
  if (v.exit_code != 0)
    return {false, "verify exited with " + std::to_string(v.exit_code) + "\n" + v.output};

  // JSON output re-parses to the same canonical expression.
  const CliResult j = run_cli(cli, "integrate --alpha 0.5 --expr \"3*x^0.5 - 2\" --json");
  if (j.exit_code != 0) return {false, "integrate --json exited with nonzero status"};
  const auto doc = nlohmann::json::parse(j.output);
  const PowerSum expect = rl_integral(0.5, parse_power_sum("3*x^0.5 - 2"));
  if (!(parse_power_sum(doc.at("expr").get<std::string>()) == expect))
    return {false, "JSON expr does not round-trip"};
  return {true, "verify --suite all --seed 42 exits 0; JSON round-trips"};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: acceptance <path-to-cli>\n");
    return 2;
  }
  const std::string cli = argv[1];

  struct Entry {
    int id;
    const char* label;
    double budget_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Entry> entries = {
      {1, "fundamental theorem", 10.0, criterion_fundamental_theorem},
      {2, "kernel and classification", 5.0, criterion_kernel},
      {3, "projector", 5.0, criterion_projector},
      {4, "abel equation", 2.0, criterion_abel},
      {5, "laplace operational formula", 5.0, criterion_laplace},
      {6, "operator axioms", 5.0, criterion_axioms},
      {7, "grid convergence", 60.0, criterion_numerics},
      {8, "end-to-end verify", 120.0, [&cli] { return criterion_end_to_end(cli); }},
  };

  bool all_ok = true;
  for (const auto& e : entries) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = e.run();
    } catch (const std::exception& ex) {
      o = {false, std::string("exception: ") + ex.what()};
    }
    const double sec =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_budget = sec < e.budget_seconds;
    const bool pass = o.ok && in_budget;
    all_ok = all_ok && pass;
    std::printf("[%s] criterion %d: %s (%s; %.2f s%s)\n", pass ? "PASS" : "FAIL", e.id,
                e.label, o.detail.c_str(), sec, in_budget ? "" : ", OVER BUDGET");
  }
  return all_ok ? 0 : 1;
}
