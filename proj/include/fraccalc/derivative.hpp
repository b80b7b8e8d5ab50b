#ifndef FRACCALC_DERIVATIVE_HPP
#define FRACCALC_DERIVATIVE_HPP

#include <vector>

#include "fraccalc/power_sum.hpp"

namespace fraccalc {

// Admissibility comparisons tolerate this much float dust; exact boundary
// parameter sets (gamma_k = 1, alpha + s_n = n-1) count as degenerate.
inline constexpr double kSpecBoundaryEps = 1e-12;

// Parameter set (alpha, gamma_1..gamma_n) of an n-th level derivative
//
//   D = I^{gamma_1} d/dx I^{gamma_2} d/dx ... I^{gamma_n} d/dx I^{n - alpha - s_n},
//
// where s_k = gamma_1 + ... + gamma_k.  Valid iff alpha in (0,1], every
// gamma_k >= 0 and alpha + s_k <= k for k = 1..n.  Construction throws
// SpecError naming the violated inequality.
class DerivativeSpec {
public:
  DerivativeSpec(double alpha, std::vector<double> gamma);

  double alpha() const { return alpha_; }
  const std::vector<double>& gamma() const { return gamma_; }
  int level() const { return static_cast<int>(gamma_.size()); }

  // s_k, 1-based.
  double partial_sum(int k) const;
  // n - alpha - s_n, the order of the innermost integral (>= 0).
  double trailing_integral_order() const;

  // The classical parameter choices.
  static DerivativeSpec riemann_liouville(double alpha);             // gamma = (0)
  static DerivativeSpec caputo(double alpha);                        // gamma = (1-alpha)
  static DerivativeSpec hilfer(double alpha, double gamma1);         // gamma = (gamma1)
  static DerivativeSpec second_level(double alpha, double g1, double g2);

private:
  double alpha_;
  std::vector<double> gamma_;
};

// Result of reducing a spec to its truly-n-th-level core.  A spec is truly
// level n iff n-1 < alpha + s_n and gamma_k < 1 for k = 2..n.  Otherwise
// the operator collapses to a lower level via the identities
//
//   gamma_k >= 1        :  (gamma_{k-1}, gamma_k) -> gamma_{k-1} + gamma_k - 1
//   alpha + s_n <= n-1  :  drop the trailing pair into the right integral
//
// applied repeatedly until the conditions hold.
struct SpecClass {
  int truly_level;
  DerivativeSpec reduced;
  // Degeneracies of the original parameter set (empty/false if truly level n):
  std::vector<int> gamma_ge_one;  // 1-based positions k >= 2 with gamma_k >= 1
  bool order_sum_degenerate;      // alpha + s_n <= n - 1
};

SpecClass classify(const DerivativeSpec& spec);

// Kernel of the derivative on (0,1]: span of x^{sigma_k},
// sigma_k = alpha + s_k - k for k = 1..truly_level of the reduced spec.
// Every sigma_k lies in (-1, 0].
struct KernelBasis {
  std::vector<PowerSum> elements;  // monomials, in k order (exponents decreasing)
  std::vector<double> exponents;
  int dimension() const { return static_cast<int>(elements.size()); }
};

KernelBasis kernel_basis(const DerivativeSpec& spec);

// Apply the derivative chain right-to-left.  DomainError from an inner
// differentiation step is annotated with the chain position.
PowerSum apply_derivative(const DerivativeSpec& spec, const PowerSum& f);

// D(I^alpha phi) - phi.  Requires every exponent of phi to exceed -alpha
// (equivalently I^alpha phi is absolutely continuous and vanishes at 0);
// under that condition the residual cancels to zero.
PowerSum fundamental_theorem_residual(const DerivativeSpec& spec, const PowerSum& phi);

// Solve I^alpha phi = f, alpha in (0,1), as phi = d/dx I^{1-alpha} f.
// Solvable in L1(0,1) iff every exponent mu of f satisfies mu > alpha - 1;
// otherwise NotSolvableError naming the offending exponent.
PowerSum abel_solve(double alpha, const PowerSum& f);

// P f = f - I^alpha(D f), the part of f the derivative cannot see.
// Always lies in the span of kernel_basis(spec).
struct ProjectorResult {
  PowerSum projection;
};

ProjectorResult projector_direct(const DerivativeSpec& spec, const PowerSum& f);

// Boundary-value formula for the projector; needs truly_level <= 2.
// For a truly 2nd-level spec,
//   P f = p1 x^{alpha+g1-1} + p2 x^{alpha+g1+g2-2},
//   p1 = (I^{g2} d/dx I^{2-alpha-g1-g2} f)(0) / Gamma(alpha+g1),
//   p2 = (I^{2-alpha-g1-g2} f)(0) / Gamma(alpha+g1+g2-1);
// level 1 uses (I^{1-alpha-g1} f)(0) / Gamma(alpha+g1) x^{alpha+g1-1}.
// DomainError if a boundary evaluation is infinite.
ProjectorResult projector_closed_form(const DerivativeSpec& spec, const PowerSum& f);

// Residual of the Caputo/Riemann-Liouville bridge
//   D_C f = D_RL f - f(0) x^{-alpha} / Gamma(1-alpha)
// for absolutely continuous f; cancels to zero.  At alpha = 1 the
// correction term vanishes (1/Gamma(0) = 0) and both sides are d/dx.
PowerSum caputo_rl_relation_check(double alpha, const PowerSum& f);

}  // namespace fraccalc

#endif
