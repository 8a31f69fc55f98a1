#include "wilf/report.hpp"

namespace wilf {

void Report::add(std::int64_t r, std::int64_t s, std::string expected_min, std::string found) {
  violations.push_back({r, s, std::move(expected_min), std::move(found)});
}

nlohmann::ordered_json Report::to_json() const {
  nlohmann::ordered_json v = nlohmann::ordered_json::array();
  for (const auto& x : violations)
    v.push_back({{"r", x.r}, {"s", x.s}, {"expected_min", x.expected_min}, {"found", x.found}});
  return {{"claim_id", claim_id},
          {"parameters", parameters},
          {"window", window},
          {"modulus_exponent", modulus_exponent},
          {"status", passed() ? "pass" : "fail"},
          {"checked", checked},
          {"violations", std::move(v)}};
}

void merge(Report& into, const Report& part) {
  into.checked += part.checked;
  into.violations.insert(into.violations.end(), part.violations.begin(), part.violations.end());
}

}  // namespace wilf
