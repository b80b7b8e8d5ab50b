#ifndef FRACCALC_POWER_SUM_HPP
#define FRACCALC_POWER_SUM_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace fraccalc {

// Exponents closer than this are considered equal and their terms merge.
// An exponent within the same distance of 0 is snapped to exactly 0, so
// that near-constant terms produced by float arithmetic classify cleanly.
inline constexpr double kExponentMergeEps = 1e-12;

// After merging, a term is pruned when |coeff| < kCoeffDropEps * m where
// m = max(1, largest |coeff| in the sum).  Operator chains cancel exactly
// up to round-off; without pruning, zero results would carry ghost terms.
inline constexpr double kCoeffDropEps = 1e-14;

struct PowerTerm {
  double coeff = 0.0;
  double exponent = 0.0;  // must stay > -1 so the term is integrable at 0
};

// Finite linear combination  sum_k c_k x^{mu_k}  with every mu_k > -1,
// i.e. an element of L1(0,1).  The class that is closed, exactly and in
// closed form, under every operator in this library.
//
// Canonical form: exponents strictly increasing, duplicates merged,
// negligible coefficients pruned.  An empty term list is the zero function.
class PowerSum {
public:
  PowerSum() = default;
  explicit PowerSum(std::vector<PowerTerm> terms);

  static PowerSum monomial(double coeff, double exponent);
  static PowerSum constant(double value);

  const std::vector<PowerTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  // Largest |coefficient|; 0 for the zero function.
  double max_abs_coeff() const;
  // Smallest exponent; only meaningful for a nonzero sum.
  double min_exponent() const;

  PowerSum operator-() const;
  PowerSum& operator+=(const PowerSum& other);
  PowerSum& operator-=(const PowerSum& other);
  friend PowerSum operator+(PowerSum a, const PowerSum& b) { return a += b; }
  friend PowerSum operator-(PowerSum a, const PowerSum& b) { return a -= b; }
  friend PowerSum operator*(double c, const PowerSum& f);

  // Exact (bitwise) equality of canonical forms.
  friend bool operator==(const PowerSum& a, const PowerSum& b);

private:
  std::vector<PowerTerm> terms_;
  void canonicalize();
};

// Behaviour of f(x) as x -> 0+.
enum class ZeroLimitKind { zero, finite, infinite };

struct ZeroLimit {
  ZeroLimitKind kind = ZeroLimitKind::zero;
  double value = 0.0;  // the limit when kind != infinite
};

ZeroLimit value_at_zero(const PowerSum& f);

// Riemann-Liouville integral of order alpha >= 0, term by term:
//   x^mu  ->  Gamma(mu+1)/Gamma(alpha+mu+1) * x^{mu+alpha}.
// alpha = 0 is the identity.
PowerSum rl_integral(double alpha, const PowerSum& f);

// Pointwise derivative, valid as the weak derivative of an absolutely
// continuous representative: c x^mu -> c mu x^{mu-1} for mu > 0, constants
// vanish.  A term with mu in (-1,0) has no derivative in L1(0,1) and is
// rejected with DomainError.
PowerSum weak_derivative(const PowerSum& f);

// Evaluate at x > 0.  (Values for x >= 1 are used by the transform checks.)
double evaluate(const PowerSum& f, double x);

// True iff f is absolutely continuous on [0,1]: every non-constant term
// must have exponent > 0, so that f = f(0) + I^1(f').
bool is_absolutely_continuous(const PowerSum& f);

// Expression text <-> PowerSum.
//
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := number | number '*'? atom | atom
//   atom   := 'x' ('^' signed_number)?
//
// Numbers are decimal floats.  The formatter emits the same grammar with
// shortest-exact float literals, so parse(format(f)) == f bitwise.
PowerSum parse_power_sum(std::string_view text);
std::string format_power_sum(const PowerSum& f);

// Shortest decimal form that round-trips the double exactly.
std::string format_double(double v);

}  // namespace fraccalc

#endif
