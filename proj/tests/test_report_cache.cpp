#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "wilf/report.hpp"
#include "wilf/result_cache.hpp"

using namespace wilf;

TEST_CASE("report serialization") {
  Report rep;
  rep.claim_id = "demo";
  rep.parameters = {{"m", 4}};
  rep.window = {{"rows", 8}, {"cols", 8}};
  rep.modulus_exponent = 7;
  rep.checked = 10;
  CHECK(rep.passed());
  auto j = rep.to_json();
  CHECK(j["status"] == "pass");
  CHECK(j["claim_id"] == "demo");
  CHECK(j["violations"].empty());

  rep.add(1, 2, "3", "2");
  CHECK_FALSE(rep.passed());
  j = rep.to_json();
  CHECK(j["status"] == "fail");
  REQUIRE(j["violations"].size() == 1);
  CHECK(j["violations"][0]["r"] == 1);
  CHECK(j["violations"][0]["expected_min"] == "3");

  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"claim_id", "parameters", "window", "modulus_exponent", "status", "checked",
                                         "violations"});
}

TEST_CASE("merging reports") {
  Report a, b;
  a.checked = 3;
  b.checked = 4;
  b.add(0, 0, "1", "0");
  merge(a, b);
  CHECK(a.checked == 7);
  CHECK(a.violations.size() == 1);
}

TEST_CASE("cache round trip") {
  const auto path = std::filesystem::temp_directory_path() / "wilf_cache_roundtrip.jsonl";
  std::filesystem::remove(path);
  {
    ResultCache cache(path);
    CHECK(cache.size() == 0);
    CacheRecord r;
    r.claim_id = "bellpm-mod";
    r.params = {{"n", 38}};
    r.modulus_exponent = 8;
    r.residue_or_valuation = 128;
    cache.append(r);
    CHECK(cache.size() == 1);
  }
  {
    std::ofstream torn(path, std::ios::app);
    torn << "{\"claim_id\": \"bellpm-mod\", \"par";
  }
  ResultCache cache(path);
  CHECK(cache.size() == 1);
  const auto hit = cache.find("bellpm-mod", {{"n", 38}}, 8);
  REQUIRE(hit.has_value());
  CHECK(hit->residue_or_valuation == 128);
  CHECK(hit->timestamp.size() == 20);
  CHECK_FALSE(cache.find("bellpm-mod", {{"n", 38}}, 9).has_value());
  CHECK_FALSE(cache.find("bellpm-mod", {{"n", 39}}, 8).has_value());
  std::filesystem::remove(path);
}

TEST_CASE("record json") {
  CacheRecord r;
  r.claim_id = "x";
  r.modulus_exponent = 3;
  r.residue_or_valuation = ">=3";
  const auto back = CacheRecord::from_json(r.to_json());
  CHECK(back.claim_id == "x");
  CHECK(back.residue_or_valuation == ">=3");
  CHECK(utc_timestamp().back() == 'Z');
}
