#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace wilf {

/// One failed entry of a verification. For matrix claims (r,s) is the entry;
/// for sweeps over an index, r is the index and s is 0.
struct Violation {
  std::int64_t r = 0;
  std::int64_t s = 0;
  std::string expected_min;
  std::string found;
};

/// Structured result of a verify_* operation.
///
/// JSON form: {claim_id, parameters, window, modulus_exponent, status,
/// violations: [{r, s, expected_min, found}]}, plus a "checked" count.
struct Report {
  std::string claim_id;
  nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
  nlohmann::ordered_json window = nlohmann::ordered_json::object();
  int modulus_exponent = 0;  // 0 for exact computations
  std::uint64_t checked = 0;
  std::vector<Violation> violations;

  bool passed() const { return violations.empty(); }
  void add(std::int64_t r, std::int64_t s, std::string expected_min, std::string found);
  nlohmann::ordered_json to_json() const;
};

/// Folds the checks and violations of `part` into `into`.
void merge(Report& into, const Report& part);

}  // namespace wilf
