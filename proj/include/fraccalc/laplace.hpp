#ifndef FRACCALC_LAPLACE_HPP
#define FRACCALC_LAPLACE_HPP

#include <vector>

#include "fraccalc/derivative.hpp"
#include "fraccalc/power_sum.hpp"

namespace fraccalc {

// L{f}(s) = sum_k c_k Gamma(mu_k + 1) / s^{mu_k + 1}, real s > 0.
double laplace_power_sum(const PowerSum& f, double s);

// max over the s-grid of the relative mismatch between
// L{I^alpha f}(s) and s^{-alpha} L{f}(s).  Exactly 0 for alpha = 0.
double rl_integral_transform_check(double alpha, const PowerSum& f,
                                   const std::vector<double>& s_grid);

// Initial-value coefficients of the 2nd-level operational formula
//   L{D f}(s) = s^alpha F(s) - a1 s^{-gamma_1} - a2 s^{1-gamma_1-gamma_2},
//   a1 = (I^{gamma_2} d/dx I^{2-alpha-gamma_1-gamma_2} f)(0),
//   a2 = (I^{2-alpha-gamma_1-gamma_2} f)(0).
// Degenerate parameter sets zero out one of the two coefficients and the
// formula collapses to the single-term (level-1) form on its own.
struct BoundaryTerms {
  double a1 = 0.0;
  double a2 = 0.0;
};

BoundaryTerms boundary_terms(const DerivativeSpec& spec, const PowerSum& f);

// max over the s-grid of the relative mismatch between L{D f}(s) computed
// symbolically and assembled from the operational formula.  Level <= 2.
double operational_formula_check(const DerivativeSpec& spec, const PowerSum& f,
                                 const std::vector<double>& s_grid);

// Truncated transform integral_0^T f(x) e^{-sx} dx by adaptive quadrature;
// the leading singular term is integrated by series on the first cell.
// With T ~ 40/s the tail is below double precision for decaying f.
double laplace_numeric(const PowerSum& f, double s, double truncation);

}  // namespace fraccalc

#endif
