#include "fraccalc/power_sum.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <string>

#include "fraccalc/errors.hpp"
#include "fraccalc/gamma.hpp"

namespace fraccalc {

namespace {

void check_term(const PowerTerm& t) {
  if (!std::isfinite(t.coeff) || !std::isfinite(t.exponent))
    throw DomainError("power sum term must have finite coefficient and exponent");
  if (t.exponent <= -1.0)
    throw DomainError("exponent " + format_double(t.exponent) +
                      " is not integrable at 0 (need exponent > -1)");
}

}  // namespace

PowerSum::PowerSum(std::vector<PowerTerm> terms) : terms_(std::move(terms)) {
  for (const auto& t : terms_) check_term(t);
  canonicalize();
}

void PowerSum::canonicalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const PowerTerm& a, const PowerTerm& b) { return a.exponent < b.exponent; });

  // Merge runs of near-equal exponents; snap near-zero exponents to 0.
  std::vector<PowerTerm> merged;
  for (const auto& t : terms_) {
    if (!merged.empty() && t.exponent - merged.back().exponent <= kExponentMergeEps) {
      merged.back().coeff += t.coeff;
    } else {
      PowerTerm u = t;
      if (std::fabs(u.exponent) <= kExponentMergeEps) u.exponent = 0.0;
      merged.push_back(u);
    }
  }

  double m = 1.0;
  for (const auto& t : merged) m = std::max(m, std::fabs(t.coeff));
  terms_.clear();
  for (const auto& t : merged)
    if (std::fabs(t.coeff) >= kCoeffDropEps * m) terms_.push_back(t);
}

PowerSum PowerSum::monomial(double coeff, double exponent) {
  return PowerSum({{coeff, exponent}});
}

PowerSum PowerSum::constant(double value) { return monomial(value, 0.0); }

double PowerSum::max_abs_coeff() const {
  double m = 0.0;
  for (const auto& t : terms_) m = std::max(m, std::fabs(t.coeff));
  return m;
}

double PowerSum::min_exponent() const {
  if (terms_.empty()) throw DomainError("min_exponent of the zero function");
  return terms_.front().exponent;
}

PowerSum PowerSum::operator-() const {
  PowerSum r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

PowerSum& PowerSum::operator+=(const PowerSum& other) {
  std::vector<PowerTerm> all = terms_;
  all.insert(all.end(), other.terms_.begin(), other.terms_.end());
  terms_ = std::move(all);
  canonicalize();
  return *this;
}

PowerSum& PowerSum::operator-=(const PowerSum& other) { return *this += -other; }

PowerSum operator*(double c, const PowerSum& f) {
  std::vector<PowerTerm> terms = f.terms_;
  for (auto& t : terms) t.coeff *= c;
  return PowerSum(std::move(terms));
}

bool operator==(const PowerSum& a, const PowerSum& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].coeff != b.terms_[i].coeff ||
        a.terms_[i].exponent != b.terms_[i].exponent)
      return false;
  return true;
}

ZeroLimit value_at_zero(const PowerSum& f) {
  if (f.is_zero()) return {ZeroLimitKind::zero, 0.0};
  const double e = f.min_exponent();
  if (e < 0.0) return {ZeroLimitKind::infinite, 0.0};
  if (e == 0.0) return {ZeroLimitKind::finite, f.terms().front().coeff};
  return {ZeroLimitKind::zero, 0.0};
}

PowerSum rl_integral(double alpha, const PowerSum& f) {
  if (!std::isfinite(alpha) || alpha < 0.0)
    throw DomainError("rl_integral: order must be >= 0, got " + format_double(alpha));
  if (alpha == 0.0) return f;
  std::vector<PowerTerm> out;
  out.reserve(f.size());
  for (const auto& t : f.terms())
    out.push_back({t.coeff * gamma_ratio(t.exponent + 1.0, alpha + t.exponent + 1.0),
                   t.exponent + alpha});
  return PowerSum(std::move(out));
}

PowerSum weak_derivative(const PowerSum& f) {
  std::vector<PowerTerm> out;
  for (const auto& t : f.terms()) {
    if (t.exponent == 0.0) continue;  // constants vanish
    if (t.exponent < 0.0)
      throw DomainError("term with exponent " + format_double(t.exponent) +
                        " has no derivative in L1(0,1)");
    out.push_back({t.coeff * t.exponent, t.exponent - 1.0});
  }
  return PowerSum(std::move(out));
}

double evaluate(const PowerSum& f, double x) {
  if (!std::isfinite(x) || x <= 0.0)
    throw DomainError("evaluate: need x > 0, got " + format_double(x));
  const double lx = std::log(x);
  double s = 0.0;
  for (const auto& t : f.terms()) s += t.coeff * std::exp(t.exponent * lx);
  return s;
}

bool is_absolutely_continuous(const PowerSum& f) {
  for (const auto& t : f.terms())
    if (t.exponent < 0.0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Parsing.

namespace {

class Parser {
public:
  explicit Parser(std::string_view s) : s_(s) {}

  PowerSum parse() {
    std::vector<PowerTerm> terms;
    skip_ws();
    double sign = 1.0;
    if (peek() == '+' || peek() == '-') sign = (get() == '-') ? -1.0 : 1.0;
    terms.push_back(parse_term(sign));
    skip_ws();
    while (pos_ < s_.size()) {
      const char op = get();
      if (op != '+' && op != '-')
        throw ParseError(std::string("expected '+' or '-', got '") + op + "'", pos_ - 1);
      terms.push_back(parse_term(op == '-' ? -1.0 : 1.0));
      skip_ws();
    }
    return PowerSum(std::move(terms));
  }

private:
  std::string_view s_;
  std::size_t pos_ = 0;

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char get() { return pos_ < s_.size() ? s_[pos_++] : '\0'; }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool number_starts_here() const {
    const char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || c == '.';
  }

  double parse_number() {
    skip_ws();
    double sign = 1.0;
    if (peek() == '+' || peek() == '-') sign = (get() == '-') ? -1.0 : 1.0;
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.') ++pos_;
    if (peek() == 'e' || peek() == 'E') {
      ++pos_;
      if (peek() == '+' || peek() == '-') ++pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    }
    double v = 0.0;
    const char* first = s_.data() + start;
    const char* last = s_.data() + pos_;
    auto [p, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || p != last)
      throw ParseError("expected a number", start);
    return sign * v;
  }

  // term := number | number '*'? atom | atom
  PowerTerm parse_term(double sign) {
    skip_ws();
    double coeff = 1.0;
    bool have_coeff = false;
    if (number_starts_here()) {
      coeff = parse_number();
      have_coeff = true;
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        skip_ws();
        if (peek() != 'x') throw ParseError("expected 'x' after '*'", pos_);
      }
    }
    double exponent = 0.0;
    if (peek() == 'x') {
      ++pos_;
      exponent = 1.0;
      if (peek() == '^') {
        ++pos_;
        skip_ws();
        exponent = parse_number();
      }
    } else if (!have_coeff) {
      throw ParseError("expected a number or 'x'", pos_);
    }
    return {sign * coeff, exponent};
  }
};

}  // namespace

PowerSum parse_power_sum(std::string_view text) {
  Parser p(text);
  return p.parse();
}

std::string format_double(double v) {
  char buf[32];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
  (void)ec;
  return std::string(buf, p);
}

namespace {

// One term without the leading sign: "2", "x", "3*x^0.5", "x^-0.5".
std::string format_term(double coeff, double exponent) {
  if (exponent == 0.0) return format_double(coeff);
  std::string atom = "x";
  if (exponent != 1.0) atom += "^" + format_double(exponent);
  if (coeff == 1.0) return atom;
  return format_double(coeff) + "*" + atom;
}

}  // namespace

std::string format_power_sum(const PowerSum& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  // Highest power first reads more naturally.
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const double c = it->coeff;
    if (first) {
      if (c < 0.0) out += "-";
      out += format_term(std::fabs(c), it->exponent);
      first = false;
    } else {
      out += (c < 0.0) ? " - " : " + ";
      out += format_term(std::fabs(c), it->exponent);
    }
  }
  return out;
}

}  // namespace fraccalc
