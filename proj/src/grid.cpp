#include "fraccalc/grid.hpp"

#include <cmath>
#include <string>

#include "fraccalc/errors.hpp"
#include "fraccalc/gamma.hpp"

namespace fraccalc {

namespace {

void check_grid(const GridFunction& g) {
  if (!(g.endpoint > 0.0) || g.values.size() < 3)
    throw DomainError("grid needs endpoint > 0 and at least 2 intervals");
}

void reject_singular(const GridFunction& g, const char* op) {
  check_grid(g);
  if (g.singular_exponent)
    throw UnsupportedError(std::string(op) +
                           ": singular grid input is not supported; "
                           "use the symbolic layer for x^sigma with sigma < 0");
}

}  // namespace

GridFunction sample(const PowerSum& f, double endpoint, int node_count) {
  if (!(endpoint > 0.0)) throw DomainError("sample: endpoint must be > 0");
  if (node_count < 2) throw DomainError("sample: need at least 2 intervals");
  GridFunction g;
  g.endpoint = endpoint;
  g.values.resize(node_count + 1);
  if (!f.is_zero() && f.min_exponent() < 0.0) {
    g.singular_exponent = f.min_exponent();
    g.values[0] = f.terms().front().coeff;  // coefficient of the singular term
  } else {
    const ZeroLimit z = value_at_zero(f);
    g.values[0] = z.value;
  }
  for (int j = 1; j <= node_count; ++j) g.values[j] = evaluate(f, g.node(j));
  return g;
}

QuadratureWeights::QuadratureWeights(double alpha, int node_count, double step)
    : alpha_(alpha), n_(node_count) {
  if (!(alpha > 0.0)) throw DomainError("quadrature weights need alpha > 0");
  if (node_count < 2) throw DomainError("quadrature weights need at least 2 intervals");
  if (!(step > 0.0)) throw DomainError("quadrature weights need step > 0");
  const int N = node_count;
  w_.resize(static_cast<std::size_t>(N + 1) * (N + 2) / 2);
  // Exact moments of the kernel against the hat functions:
  //   w_{j,0} = C * ((j-1)^{a+1} - (j-a-1) j^a)
  //   w_{j,k} = C * ((j-k+1)^{a+1} - 2(j-k)^{a+1} + (j-k-1)^{a+1}),  0<k<j
  //   w_{j,j} = C,   C = h^a / Gamma(a+2).
  // Second differences of the convex map m -> m^{a+1}, hence non-negative.
  std::vector<double> p1(N + 2);
  for (int m = 0; m <= N + 1; ++m) p1[m] = std::pow(static_cast<double>(m), alpha + 1.0);
  const double c = std::pow(step, alpha) * gamma_ratio(1.0, alpha + 2.0);
  w_[0] = 0.0;  // row j=0: empty integral
  for (int j = 1; j <= N; ++j) {
    double* row = &w_[static_cast<std::size_t>(j) * (j + 1) / 2];
    row[0] = c * (p1[j - 1] - (j - alpha - 1.0) * std::pow(static_cast<double>(j), alpha));
    for (int k = 1; k < j; ++k)
      row[k] = c * (p1[j - k + 1] - 2.0 * p1[j - k] + p1[j - k - 1]);
    row[j] = c;
  }
}

double QuadratureWeights::row_sum(int j) const {
  double s = 0.0;
  for (int k = 0; k <= j; ++k) s += weight(j, k);
  return s;
}

GridFunction rl_integral_numeric(double alpha, const GridFunction& g) {
  reject_singular(g, "rl_integral_numeric");
  if (!(alpha > 0.0)) throw DomainError("rl_integral_numeric: need alpha > 0");
  const int N = g.node_count();
  QuadratureWeights w(alpha, N, g.step());
  GridFunction out;
  out.endpoint = g.endpoint;
  out.values.assign(N + 1, 0.0);
  for (int j = 1; j <= N; ++j) {
    double s = 0.0;
    for (int k = 0; k <= j; ++k) s += w.weight(j, k) * g.values[k];
    out.values[j] = s;
  }
  return out;
}

GridFunction gl_derivative(double alpha, const GridFunction& g) {
  reject_singular(g, "gl_derivative");
  if (!(alpha > 0.0 && alpha < 1.0))
    throw DomainError("gl_derivative: need alpha in (0,1), got " + format_double(alpha));
  const int N = g.node_count();
  const double h = g.step();
  std::vector<double> w(N + 1);
  w[0] = 1.0;
  for (int k = 1; k <= N; ++k) w[k] = w[k - 1] * ((k - 1.0 - alpha) / k);
  const double hma = std::pow(h, -alpha);
  GridFunction out;
  out.endpoint = g.endpoint;
  out.values.assign(N + 1, 0.0);
  for (int j = 0; j <= N; ++j) {
    double s = 0.0;
    for (int k = 0; k <= j; ++k) s += w[k] * g.values[j - k];
    out.values[j] = hma * s;
  }
  return out;
}

namespace {

GridFunction difference(const GridFunction& g) {
  const int N = g.node_count();
  const double h = g.step();
  GridFunction out;
  out.endpoint = g.endpoint;
  out.values.assign(N + 1, 0.0);
  out.values[0] = (-3.0 * g.values[0] + 4.0 * g.values[1] - g.values[2]) / (2.0 * h);
  for (int j = 1; j < N; ++j)
    out.values[j] = (g.values[j + 1] - g.values[j - 1]) / (2.0 * h);
  out.values[N] = (3.0 * g.values[N] - 4.0 * g.values[N - 1] + g.values[N - 2]) / (2.0 * h);
  return out;
}

}  // namespace

GridFunction nth_level_derivative_numeric(const DerivativeSpec& spec, const GridFunction& g) {
  reject_singular(g, "nth_level_derivative_numeric");
  // Orders of 0 (or parameter dust) mean "no integral at this slot".
  const auto integ = [](double order, const GridFunction& u) {
    return order > kSpecBoundaryEps ? rl_integral_numeric(order, u) : u;
  };
  GridFunction u = integ(spec.trailing_integral_order(), g);
  for (int k = spec.level(); k >= 1; --k) {
    u = difference(u);
    u = integ(spec.gamma()[k - 1], u);
  }
  return u;
}

double semigroup_residual_numeric(double alpha, double beta, const GridFunction& g) {
  reject_singular(g, "semigroup_residual_numeric");
  const GridFunction two = rl_integral_numeric(alpha, rl_integral_numeric(beta, g));
  const GridFunction one = rl_integral_numeric(alpha + beta, g);
  double m = 0.0;
  for (std::size_t j = 0; j < two.values.size(); ++j)
    m = std::max(m, std::fabs(two.values[j] - one.values[j]));
  return m;
}

std::vector<ConvergenceRow> convergence_study(const GridOperator& op, const PowerSum& f,
                                              const std::vector<int>& node_counts,
                                              double endpoint) {
  if (node_counts.empty()) throw DomainError("convergence_study: empty refinement list");

  PowerSum reference;
  switch (op.kind) {
    case GridOperator::Kind::integral:
      reference = rl_integral(op.alpha, f);
      break;
    case GridOperator::Kind::gl_derivative:
      reference = apply_derivative(DerivativeSpec::riemann_liouville(op.alpha), f);
      break;
    case GridOperator::Kind::level_chain:
      if (!op.spec) throw DomainError("convergence_study: level_chain needs a spec");
      reference = apply_derivative(*op.spec, f);
      break;
  }
  const bool interior_only = op.kind != GridOperator::Kind::integral;

  std::vector<ConvergenceRow> rows;
  for (const int N : node_counts) {
    const GridFunction in = sample(f, endpoint, N);
    GridFunction outg;
    switch (op.kind) {
      case GridOperator::Kind::integral:
        outg = rl_integral_numeric(op.alpha, in);
        break;
      case GridOperator::Kind::gl_derivative:
        outg = gl_derivative(op.alpha, in);
        break;
      case GridOperator::Kind::level_chain:
        outg = nth_level_derivative_numeric(*op.spec, in);
        break;
    }
    double err = 0.0;
    for (int j = 1; j <= N; ++j) {
      const double x = outg.node(j);
      if (interior_only && x < 0.2 * endpoint) continue;
      err = std::max(err, std::fabs(outg.values[j] - evaluate(reference, x)));
    }
    rows.push_back({N, err, std::nan(""), err < 1e-13});
  }
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i - 1].exact || rows[i].exact) continue;
    rows[i].observed_order = std::log(rows[i - 1].max_error / rows[i].max_error) /
                             std::log(static_cast<double>(rows[i].node_count) /
                                      rows[i - 1].node_count);
  }
  return rows;
}

}  // namespace fraccalc
