#include "wilf/result_cache.hpp"

#include <chrono>
#include <ctime>
#include <fstream>

namespace wilf {

nlohmann::ordered_json CacheRecord::to_json() const {
  return {{"claim_id", claim_id},
          {"params", params},
          {"modulus_exponent", modulus_exponent},
          {"residue_or_valuation", residue_or_valuation},
          {"timestamp", timestamp}};
}

CacheRecord CacheRecord::from_json(const nlohmann::ordered_json& j) {
  CacheRecord r;
  r.claim_id = j.at("claim_id").get<std::string>();
  r.params = j.at("params");
  r.modulus_exponent = j.at("modulus_exponent").get<int>();
  r.residue_or_valuation = j.at("residue_or_valuation");
  r.timestamp = j.value("timestamp", "");
  return r;
}

ResultCache::ResultCache(std::filesystem::path path) : path_(std::move(path)) {
  std::ifstream in(path_);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      records_.push_back(CacheRecord::from_json(nlohmann::ordered_json::parse(line)));
    } catch (const nlohmann::json::exception&) {
      // a torn final line from an interrupted run
    }
  }
}

std::optional<CacheRecord> ResultCache::find(const std::string& claim_id, const nlohmann::ordered_json& params,
                                             int modulus_exponent) const {
  std::lock_guard lock(mutex_);
  for (const auto& r : records_)
    if (r.claim_id == claim_id && r.modulus_exponent == modulus_exponent && r.params == params) return r;
  return std::nullopt;
}

void ResultCache::append(CacheRecord record) {
  std::lock_guard lock(mutex_);
  record.timestamp = utc_timestamp();
  std::ofstream out(path_, std::ios::app);
  if (!out) throw std::runtime_error("cannot open result cache " + path_.string());
  out << record.to_json().dump() << '\n';
  out.flush();
  records_.push_back(std::move(record));
}

std::size_t ResultCache::size() const {
  std::lock_guard lock(mutex_);
  return records_.size();
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace wilf
