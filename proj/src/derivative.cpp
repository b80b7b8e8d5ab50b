#include "fraccalc/derivative.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fraccalc/errors.hpp"
#include "fraccalc/gamma.hpp"

namespace fraccalc {

DerivativeSpec::DerivativeSpec(double alpha, std::vector<double> gamma)
    : alpha_(alpha), gamma_(std::move(gamma)) {
  if (!std::isfinite(alpha_) || alpha_ <= 0.0 || alpha_ > 1.0)
    throw SpecError("spec requires alpha in (0,1], got alpha=" + format_double(alpha_));
  if (gamma_.empty()) throw SpecError("spec requires at least one gamma parameter");
  double s = 0.0;
  for (std::size_t i = 0; i < gamma_.size(); ++i) {
    const int k = static_cast<int>(i) + 1;
    if (!std::isfinite(gamma_[i]) || gamma_[i] < 0.0)
      throw SpecError("spec violates gamma_k >= 0 at k=" + std::to_string(k) +
                      ": gamma_k=" + format_double(gamma_[i]));
    s += gamma_[i];
    if (alpha_ + s > k + kSpecBoundaryEps)
      throw SpecError("spec violates alpha + s_k <= k at k=" + std::to_string(k) +
                      ": alpha=" + format_double(alpha_) + ", s_k=" + format_double(s));
  }
}

double DerivativeSpec::partial_sum(int k) const {
  double s = 0.0;
  for (int i = 0; i < k; ++i) s += gamma_[i];
  return s;
}

double DerivativeSpec::trailing_integral_order() const {
  const int n = level();
  return std::max(0.0, n - alpha_ - partial_sum(n));
}

DerivativeSpec DerivativeSpec::riemann_liouville(double alpha) {
  return DerivativeSpec(alpha, {0.0});
}

DerivativeSpec DerivativeSpec::caputo(double alpha) {
  return DerivativeSpec(alpha, {1.0 - alpha});
}

DerivativeSpec DerivativeSpec::hilfer(double alpha, double gamma1) {
  return DerivativeSpec(alpha, {gamma1});
}

DerivativeSpec DerivativeSpec::second_level(double alpha, double g1, double g2) {
  return DerivativeSpec(alpha, {g1, g2});
}

SpecClass classify(const DerivativeSpec& spec) {
  const int n = spec.level();
  SpecClass out{n, spec, {}, false};
  for (int k = 2; k <= n; ++k)
    if (spec.gamma()[k - 1] >= 1.0 - kSpecBoundaryEps) out.gamma_ge_one.push_back(k);
  out.order_sum_degenerate =
      spec.alpha() + spec.partial_sum(n) <= n - 1 + kSpecBoundaryEps;

  // Reduce until truly level: no unit integrals left to cancel against the
  // inner differentiations.
  std::vector<double> g = spec.gamma();
  const double alpha = spec.alpha();
  for (;;) {
    const int m = static_cast<int>(g.size());
    int merge_at = 0;  // first k >= 2 with gamma_k >= 1
    for (int k = 2; k <= m && merge_at == 0; ++k)
      if (g[k - 1] >= 1.0 - kSpecBoundaryEps) merge_at = k;
    if (merge_at != 0) {
      g[merge_at - 2] = std::max(0.0, g[merge_at - 2] + g[merge_at - 1] - 1.0);
      g.erase(g.begin() + (merge_at - 1));
      continue;
    }
    double s = 0.0;
    for (double v : g) s += v;
    if (m >= 2 && alpha + s <= m - 1 + kSpecBoundaryEps) {
      g.pop_back();
      continue;
    }
    break;
  }
  out.reduced = DerivativeSpec(alpha, g);
  out.truly_level = out.reduced.level();
  return out;
}

KernelBasis kernel_basis(const DerivativeSpec& spec) {
  const DerivativeSpec red = classify(spec).reduced;
  KernelBasis kb;
  for (int k = 1; k <= red.level(); ++k) {
    const double sigma = red.alpha() + red.partial_sum(k) - k;
    kb.exponents.push_back(sigma);
    kb.elements.push_back(PowerSum::monomial(1.0, sigma));
  }
  return kb;
}

PowerSum apply_derivative(const DerivativeSpec& spec, const PowerSum& f) {
  const int n = spec.level();
  PowerSum g = rl_integral(spec.trailing_integral_order(), f);
  for (int k = n; k >= 1; --k) {
    try {
      g = weak_derivative(g);
    } catch (const DomainError& e) {
      throw DomainError("derivative chain stage " + std::to_string(k) + " of " +
                        std::to_string(n) + ": " + e.what());
    }
    g = rl_integral(spec.gamma()[k - 1], g);
  }
  return g;
}

PowerSum fundamental_theorem_residual(const DerivativeSpec& spec, const PowerSum& phi) {
  for (const auto& t : phi.terms())
    if (t.exponent <= -spec.alpha())
      throw DomainError("exponent " + format_double(t.exponent) +
                        " <= -alpha: I^alpha phi does not vanish at 0");
  return apply_derivative(spec, rl_integral(spec.alpha(), phi)) - phi;
}

PowerSum abel_solve(double alpha, const PowerSum& f) {
  if (!std::isfinite(alpha) || alpha <= 0.0 || alpha >= 1.0)
    throw DomainError("abel_solve: need alpha in (0,1), got " + format_double(alpha));
  for (const auto& t : f.terms())
    if (t.exponent <= alpha - 1.0)
      throw NotSolvableError("no L1 solution: exponent " + format_double(t.exponent) +
                             " <= alpha - 1 = " + format_double(alpha - 1.0));
  const PowerSum phi = weak_derivative(rl_integral(1.0 - alpha, f));
  // Self-check: the solution must reproduce f.
  const PowerSum back = rl_integral(alpha, phi) - f;
  if (back.max_abs_coeff() > 1e-12 * std::max(1.0, f.max_abs_coeff()))
    throw DomainError("abel_solve: round-trip check failed");
  return phi;
}

ProjectorResult projector_direct(const DerivativeSpec& spec, const PowerSum& f) {
  const PowerSum raw = f - rl_integral(spec.alpha(), apply_derivative(spec, f));
  // Mathematically Id - I^alpha D lands exactly in the kernel span; in
  // floating point the subtraction leaves round-off dust at the non-kernel
  // exponents of f.  Keep the span component and require the rest to be
  // negligible -- a large remainder means the input sits too close to a
  // kernel singularity for the chain to resolve.
  const KernelBasis kb = kernel_basis(spec);
  std::vector<PowerTerm> kept;
  double off_span = 0.0;
  for (const auto& t : raw.terms()) {
    bool in_span = false;
    for (double sigma : kb.exponents)
      in_span = in_span || std::fabs(t.exponent - sigma) <= kExponentMergeEps;
    if (in_span)
      kept.push_back(t);
    else
      off_span = std::max(off_span, std::fabs(t.coeff));
  }
  if (off_span > 1e-9 * std::max(1.0, f.max_abs_coeff()))
    throw DomainError("projector_direct: off-kernel residue " + format_double(off_span) +
                      " (input exponent too close to a kernel exponent)");
  return {PowerSum(std::move(kept))};
}

namespace {

double finite_value_at_zero(const PowerSum& g, const char* what) {
  const ZeroLimit z = value_at_zero(g);
  if (z.kind == ZeroLimitKind::infinite)
    throw DomainError(std::string(what) + " is unbounded at 0");
  return z.value;
}

// Gamma(x) as projector divisor.  Arguments that are 1 up to parameter
// round-off must give exactly 1 so that the Caputo projector returns f(0)
// bitwise.
double gamma_div(double x) {
  if (std::fabs(x - 1.0) <= kSpecBoundaryEps) return 1.0;
  return std::exp(log_gamma(x));
}

}  // namespace

ProjectorResult projector_closed_form(const DerivativeSpec& spec, const PowerSum& f) {
  const SpecClass cls = classify(spec);
  const DerivativeSpec& red = cls.reduced;
  const double alpha = red.alpha();
  if (cls.truly_level == 1) {
    const double g1 = red.gamma()[0];
    const PowerSum inner = rl_integral(std::max(0.0, 1.0 - alpha - g1), f);
    const double v = finite_value_at_zero(inner, "I^{1-alpha-gamma_1} f");
    const double p1 = v / gamma_div(alpha + g1);
    return {PowerSum::monomial(p1, alpha + g1 - 1.0)};
  }
  if (cls.truly_level == 2) {
    const double g1 = red.gamma()[0], g2 = red.gamma()[1];
    const PowerSum inner = rl_integral(std::max(0.0, 2.0 - alpha - g1 - g2), f);
    const double v2 = finite_value_at_zero(inner, "I^{2-alpha-gamma_1-gamma_2} f");
    const PowerSum mid = rl_integral(g2, weak_derivative(inner));
    const double v1 = finite_value_at_zero(mid, "I^{gamma_2} d/dx I^{2-alpha-gamma_1-gamma_2} f");
    const double p1 = v1 / gamma_div(alpha + g1);
    const double p2 = v2 / gamma_div(alpha + g1 + g2 - 1.0);
    return {PowerSum::monomial(p1, alpha + g1 - 1.0) +
            PowerSum::monomial(p2, alpha + g1 + g2 - 2.0)};
  }
  throw DomainError("projector_closed_form: no closed form above truly level 2 (got level " +
                    std::to_string(cls.truly_level) + ")");
}

PowerSum caputo_rl_relation_check(double alpha, const PowerSum& f) {
  if (!std::isfinite(alpha) || alpha <= 0.0 || alpha > 1.0)
    throw DomainError("need alpha in (0,1], got " + format_double(alpha));
  if (!is_absolutely_continuous(f))
    throw DomainError("relation requires an absolutely continuous f");
  const PowerSum dc = apply_derivative(DerivativeSpec::caputo(alpha), f);
  const PowerSum drl = apply_derivative(DerivativeSpec::riemann_liouville(alpha), f);
  PowerSum residual = dc - drl;
  if (alpha < 1.0) {
    const double f0 = finite_value_at_zero(f, "f");
    const double c = f0 / std::exp(log_gamma(1.0 - alpha));
    residual += PowerSum::monomial(c, -alpha);
  }
  return residual;
}

}  // namespace fraccalc
