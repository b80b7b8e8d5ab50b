#ifndef FRACCALC_JSON_IO_HPP
#define FRACCALC_JSON_IO_HPP

#include <json.hpp>

#include "fraccalc/power_sum.hpp"
#include "fraccalc/verify.hpp"

namespace fraccalc {

// {"expr": "...", "terms": [{"coeff": c, "exp": e}, ...], "meta": {...}}
inline nlohmann::json power_sum_json(const PowerSum& f, nlohmann::json meta) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : f.terms()) terms.push_back({{"coeff", t.coeff}, {"exp", t.exponent}});
  return {{"expr", format_power_sum(f)}, {"terms", terms}, {"meta", std::move(meta)}};
}

inline nlohmann::json report_json(const VerificationReport& r) {
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& f : r.failures)
    failures.push_back({{"case", f.what}, {"residual", f.residual}, {"tolerance", f.tolerance}});
  return {{"suite", r.suite},
          {"cases", r.cases},
          {"passed", r.passed()},
          {"failures", failures},
          {"wall_seconds", r.wall_seconds}};
}

}  // namespace fraccalc

#endif
