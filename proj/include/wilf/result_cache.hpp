#pragma once

#include <filesystem>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace wilf {

/// One verified result: {claim_id, params, modulus_exponent, residue_or_valuation, timestamp}.
struct CacheRecord {
  std::string claim_id;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  int modulus_exponent = 0;
  nlohmann::ordered_json residue_or_valuation;
  std::string timestamp;

  nlohmann::ordered_json to_json() const;
  static CacheRecord from_json(const nlohmann::ordered_json& j);
};

/// Append-only JSON-lines store. Existing records are loaded on open; lines
/// that fail to parse are skipped. Appends are serialized by a mutex (single
/// writer), lookups may run concurrently with each other.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path path);

  const std::filesystem::path& path() const { return path_; }

  std::optional<CacheRecord> find(const std::string& claim_id, const nlohmann::ordered_json& params,
                                  int modulus_exponent) const;

  /// Stamps the record with the current UTC time and appends it to the file.
  void append(CacheRecord record);

  std::size_t size() const;

 private:
  std::filesystem::path path_;
  mutable std::mutex mutex_;
  std::vector<CacheRecord> records_;
};

/// Current UTC time as ISO-8601, seconds resolution.
std::string utc_timestamp();

}  // namespace wilf
