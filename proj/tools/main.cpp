// Command-line front end: symbolic fractional-calculus operations on
// power-sum expressions, plus the randomized verification suites.
//
// Exit codes: 0 success, 1 domain/math errors, 2 usage errors.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fraccalc/derivative.hpp"
#include "fraccalc/errors.hpp"
#include "fraccalc/grid.hpp"
#include "fraccalc/json_io.hpp"
#include "fraccalc/laplace.hpp"
#include "fraccalc/power_sum.hpp"
#include "fraccalc/verify.hpp"

namespace {

using namespace fraccalc;
using nlohmann::json;

// Report numbers are printed to 12 significant digits; expression text uses
// exact shortest-form literals so output re-parses to the same PowerSum.
std::string fmt12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string join_gamma(const std::vector<double>& g) {
  std::string s = "[";
  for (std::size_t i = 0; i < g.size(); ++i) s += (i ? "," : "") + format_double(g[i]);
  return s + "]";
}

struct CommonArgs {
  double alpha = 0.5;
  std::vector<double> gamma;
  std::string expr;
  bool as_json = false;
};

DerivativeSpec make_spec(const CommonArgs& a) { return DerivativeSpec(a.alpha, a.gamma); }

int cmd_apply(const CommonArgs& a) {
  const DerivativeSpec spec = make_spec(a);
  const PowerSum f = parse_power_sum(a.expr);
  const PowerSum out = apply_derivative(spec, f);
  if (a.as_json) {
    std::cout << power_sum_json(out, {{"operation", "apply"},
                                      {"alpha", a.alpha},
                                      {"gamma", a.gamma}})
                     .dump()
              << "\n";
  } else {
    std::cout << format_power_sum(out) << "\n";
  }
  return 0;
}

int cmd_integrate(double alpha, const std::string& expr, bool as_json) {
  const PowerSum out = rl_integral(alpha, parse_power_sum(expr));
  if (as_json) {
    std::cout << power_sum_json(out, {{"operation", "integrate"}, {"alpha", alpha}}).dump()
              << "\n";
  } else {
    std::cout << format_power_sum(out) << "\n";
  }
  return 0;
}

int cmd_kernel(const CommonArgs& a) {
  const DerivativeSpec spec = make_spec(a);
  const SpecClass cls = classify(spec);
  const KernelBasis kb = kernel_basis(spec);
  if (a.as_json) {
    json basis = json::array();
    for (std::size_t i = 0; i < kb.elements.size(); ++i)
      basis.push_back({{"expr", format_power_sum(kb.elements[i])},
                       {"exponent", kb.exponents[i]}});
    std::cout << json{{"level", spec.level()},
                      {"truly_level", cls.truly_level},
                      {"degenerate", cls.truly_level != spec.level()},
                      {"reduced_gamma", cls.reduced.gamma()},
                      {"dimension", kb.dimension()},
                      {"basis", basis}}
                     .dump()
              << "\n";
    return 0;
  }
  std::cout << "level: " << spec.level() << "\n";
  std::cout << "truly level: " << cls.truly_level << "\n";
  if (cls.truly_level != spec.level())
    std::cout << "reduced gamma: " << join_gamma(cls.reduced.gamma()) << "\n";
  std::cout << "dimension: " << kb.dimension() << "\n";
  std::string basis;
  for (std::size_t i = 0; i < kb.elements.size(); ++i)
    basis += (i ? ", " : "") + format_power_sum(kb.elements[i]);
  std::cout << "basis: " << basis << "\n";
  return 0;
}

int cmd_projector(const CommonArgs& a) {
  const DerivativeSpec spec = make_spec(a);
  const PowerSum f = parse_power_sum(a.expr);
  const PowerSum direct = projector_direct(spec, f).projection;
  // The boundary-value closed form exists up to truly level 2; above that
  // only the direct construction is reported.
  const bool has_closed = classify(spec).truly_level <= 2;
  PowerSum closed;
  double diff = 0.0;
  if (has_closed) {
    closed = projector_closed_form(spec, f).projection;
    diff = (direct - closed).max_abs_coeff();
  }
  if (a.as_json) {
    std::cout << json{{"direct", power_sum_json(direct, {})},
                      {"closed_form",
                       has_closed ? json(power_sum_json(closed, {})) : json(nullptr)},
                      {"max_difference", has_closed ? json(diff) : json(nullptr)},
                      {"meta", {{"operation", "projector"},
                                {"alpha", a.alpha},
                                {"gamma", a.gamma}}}}
                     .dump()
              << "\n";
    return 0;
  }
  std::cout << "direct: " << format_power_sum(direct) << "\n";
  if (has_closed) {
    std::cout << "closed form: " << format_power_sum(closed) << "\n";
    std::cout << "max coefficient difference: " << fmt12(diff) << "\n";
  } else {
    std::cout << "closed form: not available above truly level 2\n";
  }
  return 0;
}

int cmd_abel(double alpha, const std::string& expr, bool as_json) {
  const PowerSum phi = abel_solve(alpha, parse_power_sum(expr));
  if (as_json) {
    std::cout << power_sum_json(phi, {{"operation", "abel-solve"}, {"alpha", alpha}}).dump()
              << "\n";
  } else {
    std::cout << format_power_sum(phi) << "\n";
  }
  return 0;
}

int cmd_laplace_check(const CommonArgs& a, const std::vector<double>& s_grid) {
  const DerivativeSpec spec = make_spec(a);
  const PowerSum f = parse_power_sum(a.expr);
  const double err = operational_formula_check(spec, f, s_grid);
  if (a.as_json) {
    std::cout << json{{"max_relative_error", err},
                      {"s_grid", s_grid},
                      {"meta", {{"operation", "laplace-check"},
                                {"alpha", a.alpha},
                                {"gamma", a.gamma}}}}
                     .dump()
              << "\n";
    return 0;
  }
  std::string grid;
  for (std::size_t i = 0; i < s_grid.size(); ++i) grid += (i ? ", " : "") + fmt12(s_grid[i]);
  std::cout << "max relative error: " << fmt12(err) << " (s grid: " << grid << ")\n";
  return 0;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, bool as_json) {
  std::vector<VerificationReport> reports;
  if (suite == "all") {
    reports = run_all_suites(seed);
  } else {
    reports.push_back(run_suite(suite, seed));
  }
  bool all_ok = true;
  for (const auto& r : reports) all_ok = all_ok && r.passed();
  if (as_json) {
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(report_json(r));
    std::cout << json{{"seed", seed}, {"all_passed", all_ok}, {"suites", arr}}.dump()
              << "\n";
  } else {
    for (const auto& r : reports) {
      std::printf("suite %-20s %s  (%d cases, %.3f s)\n", r.suite.c_str(),
                  r.passed() ? "PASS" : "FAIL", r.cases, r.wall_seconds);
      for (const auto& f : r.failures)
        std::printf("  FAIL %s  residual=%s tolerance=%s\n", f.what.c_str(),
                    fmt12(f.residual).c_str(), fmt12(f.tolerance).c_str());
    }
    std::printf("%s (seed %llu)\n", all_ok ? "all suites passed" : "FAILURES present",
                static_cast<unsigned long long>(seed));
  }
  return all_ok ? 0 : 1;
}

int cmd_convergence(const std::string& op_name, const CommonArgs& a,
                    const std::vector<int>& nodes, double endpoint) {
  GridOperator op;
  if (op_name == "rl-integral") {
    op.kind = GridOperator::Kind::integral;
    op.alpha = a.alpha;
  } else if (op_name == "gl-derivative") {
    op.kind = GridOperator::Kind::gl_derivative;
    op.alpha = a.alpha;
  } else if (op_name == "nth-level") {
    op.kind = GridOperator::Kind::level_chain;
    op.spec = make_spec(a);
  } else {
    throw DomainError("unknown operator '" + op_name +
                      "' (expected rl-integral | gl-derivative | nth-level)");
  }
  const auto rows = convergence_study(op, parse_power_sum(a.expr), nodes, endpoint);
  if (a.as_json) {
    json arr = json::array();
    for (const auto& r : rows)
      arr.push_back({{"N", r.node_count},
                     {"max_error", r.max_error},
                     {"observed_order", std::isnan(r.observed_order)
                                            ? json(nullptr)
                                            : json(r.observed_order)},
                     {"exact", r.exact}});
    std::cout << arr.dump() << "\n";
    return 0;
  }
  std::cout << "N,max_error,observed_order\n";
  for (const auto& r : rows) {
    std::string order;
    if (r.exact)
      order = "exact";
    else if (!std::isnan(r.observed_order))
      order = fmt12(r.observed_order);
    std::cout << r.node_count << "," << fmt12(r.max_error) << "," << order << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fractional-calculus operator engine on exact power sums"};
  app.require_subcommand(1);

  CommonArgs args;
  std::vector<double> s_grid = {0.5, 1.0, 2.0, 5.0, 10.0};
  std::vector<int> nodes = {64, 128, 256, 512, 1024};
  double endpoint = 1.0;
  std::string suite = "all";
  std::string op_name = "rl-integral";
  std::uint64_t seed = 42;

  auto add_alpha = [&](CLI::App* c, bool required = true) {
    auto* o = c->add_option("--alpha", args.alpha, "order of the operator");
    if (required) o->required();
  };
  auto add_gamma = [&](CLI::App* c) {
    c->add_option("--gamma", args.gamma, "type parameters gamma_1,...,gamma_n")
        ->required()
        ->delimiter(',');
  };
  auto add_expr = [&](CLI::App* c) {
    c->add_option("--expr", args.expr, "power-sum expression, e.g. \"3*x^0.5 - 2\"")
        ->required();
  };
  auto add_json = [&](CLI::App* c) { c->add_flag("--json", args.as_json, "JSON output"); };

  auto* apply = app.add_subcommand("apply", "apply a fractional derivative");
  add_alpha(apply), add_gamma(apply), add_expr(apply), add_json(apply);

  auto* integrate = app.add_subcommand("integrate", "apply the fractional integral");
  add_alpha(integrate), add_expr(integrate), add_json(integrate);

  auto* kernel = app.add_subcommand("kernel", "kernel basis and classification");
  add_alpha(kernel), add_gamma(kernel), add_json(kernel);

  auto* projector = app.add_subcommand("projector", "direct and closed-form projector");
  add_alpha(projector), add_gamma(projector), add_expr(projector), add_json(projector);

  auto* abel = app.add_subcommand("abel-solve", "solve I^alpha phi = f");
  add_alpha(abel), add_expr(abel), add_json(abel);

  auto* laplace = app.add_subcommand("laplace-check", "operational-formula residual");
  add_alpha(laplace), add_gamma(laplace), add_expr(laplace), add_json(laplace);
  laplace->add_option("--s-grid", s_grid, "transform evaluation points")->delimiter(',');

  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--suite", suite, "suite name or 'all'");
  verify->add_option("--seed", seed, "RNG seed for randomized suites");
  add_json(verify);

  auto* conv = app.add_subcommand("convergence", "grid refinement study (CSV)");
  conv->add_option("--operator", op_name, "rl-integral | gl-derivative | nth-level");
  add_alpha(conv);
  conv->add_option("--gamma", args.gamma, "type parameters (nth-level only)")->delimiter(',');
  add_expr(conv);
  conv->add_option("--nodes", nodes, "interval counts, e.g. 64,128,256")->delimiter(',');
  conv->add_option("--endpoint", endpoint, "right end of the grid (default 1)");
  add_json(conv);
  bool as_csv = false;
  conv->add_flag("--csv", as_csv, "CSV output (the default for this subcommand)")
      ->excludes(conv->get_option("--json"));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (apply->parsed()) return cmd_apply(args);
    if (integrate->parsed()) return cmd_integrate(args.alpha, args.expr, args.as_json);
    if (kernel->parsed()) return cmd_kernel(args);
    if (projector->parsed()) return cmd_projector(args);
    if (abel->parsed()) return cmd_abel(args.alpha, args.expr, args.as_json);
    if (laplace->parsed()) return cmd_laplace_check(args, s_grid);
    if (verify->parsed()) return cmd_verify(suite, seed, args.as_json);
    if (conv->parsed()) {
      args.as_json = args.as_json && !as_csv;  // --csv selects the CSV default
      return cmd_convergence(op_name, args, nodes, endpoint);
    }
  } catch (const ParseError& e) {
    std::cerr << "error: ParseError: " << e.what() << "\n";
    return 1;
  } catch (const SpecError& e) {
    std::cerr << "error: SpecError: " << e.what() << "\n";
    return 1;
  } catch (const NotSolvableError& e) {
    std::cerr << "error: NotSolvableError: " << e.what() << "\n";
    return 1;
  } catch (const UnsupportedError& e) {
    std::cerr << "error: UnsupportedError: " << e.what() << "\n";
    return 1;
  } catch (const DomainError& e) {
    std::cerr << "error: DomainError: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: InternalError: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
