#ifndef FRACCALC_GRID_HPP
#define FRACCALC_GRID_HPP

#include <optional>
#include <vector>

#include "fraccalc/derivative.hpp"
#include "fraccalc/power_sum.hpp"

namespace fraccalc {

// Samples of a function on the uniform grid x_j = j*T/N, j = 0..N.
// A function singular at 0 (leading exponent sigma in (-1,0)) stores sigma
// and keeps the coefficient of x^sigma in slot 0 instead of a sample.
struct GridFunction {
  double endpoint = 1.0;  // T > 0
  std::vector<double> values;
  std::optional<double> singular_exponent;

  int node_count() const { return static_cast<int>(values.size()) - 1; }  // N
  double step() const { return endpoint / node_count(); }
  double node(int j) const { return endpoint * j / node_count(); }
};

GridFunction sample(const PowerSum& f, double endpoint, int node_count);

// Product-trapezoidal quadrature for the order-alpha integral: the kernel
// (x_j - t)^{alpha-1} is integrated exactly against the piecewise-linear
// interpolant of the data.  Weights are non-negative and each row sums to
// x_j^alpha / Gamma(alpha+1).  Error O(h^2) for twice-differentiable input.
class QuadratureWeights {
public:
  QuadratureWeights(double alpha, int node_count, double step);

  double alpha() const { return alpha_; }
  int node_count() const { return n_; }
  // w_{j,k}, valid for 0 <= k <= j <= N; the h^alpha factor is included,
  // so (I^alpha g)(x_j) ~ sum_k w_{j,k} g(x_k).
  double weight(int j, int k) const { return w_[j * (j + 1) / 2 + k]; }
  double row_sum(int j) const;

private:
  double alpha_;
  int n_;
  std::vector<double> w_;  // packed lower triangle
};

// (I^alpha g) at the grid nodes, alpha > 0.  UnsupportedError for singular
// input grids.
GridFunction rl_integral_numeric(double alpha, const GridFunction& g);

// Grunwald-Letnikov approximation of the Riemann-Liouville derivative of
// order alpha in (0,1):  h^{-alpha} * sum_k (-1)^k C(alpha,k) g(x-kh).
// First-order accurate at interior nodes for smooth g with g(0) = 0.
GridFunction gl_derivative(double alpha, const GridFunction& g);

// Numeric analogue of apply_derivative: quadrature for every integral,
// finite differences (central inside, three-point one-sided at the ends)
// for every d/dx.  Trustworthy away from the left endpoint.
GridFunction nth_level_derivative_numeric(const DerivativeSpec& spec, const GridFunction& g);

// max_j |I^alpha(I^beta g) - I^{alpha+beta} g| at the nodes.
double semigroup_residual_numeric(double alpha, double beta, const GridFunction& g);

// Which operator a convergence study drives.
struct GridOperator {
  enum class Kind { integral, gl_derivative, level_chain };
  Kind kind = Kind::integral;
  double alpha = 0.5;                  // for integral / gl_derivative
  std::optional<DerivativeSpec> spec;  // for level_chain
};

struct ConvergenceRow {
  int node_count;
  double max_error;      // against the symbolic oracle
  double observed_order; // NaN when undefined (first row or error at machine zero)
  bool exact;            // error at machine-zero level
};

// Runs the operator on refinements of f and compares against the symbolic
// result.  Derivative errors are measured on x >= 0.2*T only; the open-left
// rules cannot see the boundary layer at 0.
std::vector<ConvergenceRow> convergence_study(const GridOperator& op, const PowerSum& f,
                                              const std::vector<int>& node_counts,
                                              double endpoint = 1.0);

}  // namespace fraccalc

#endif
