#ifndef FRACCALC_VERIFY_HPP
#define FRACCALC_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace fraccalc {

struct VerificationFailure {
  std::string what;  // short case descriptor
  double residual = 0.0;
  double tolerance = 0.0;
};

struct VerificationReport {
  std::string suite;
  int cases = 0;
  std::vector<VerificationFailure> failures;
  double wall_seconds = 0.0;
  bool passed() const { return failures.empty(); }
};

// Suite registry.  Each suite is a self-contained randomized property check
// with an analytic oracle; the seed makes reports reproducible.
const std::vector<std::string>& suite_names();
VerificationReport run_suite(const std::string& name, std::uint64_t seed);
std::vector<VerificationReport> run_all_suites(std::uint64_t seed);

}  // namespace fraccalc

#endif
