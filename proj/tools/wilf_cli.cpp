// Command-line front end: B±(n) exactly or mod 2^K, claim verification,
// table reproduction and the residue-class tree.
//
// Exit codes: 0 all checks pass, 1 a violation was found, 2 usage or cap error.

#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wilf/combinatorics.hpp"
#include "wilf/fixtures.hpp"
#include "wilf/matrix_p.hpp"
#include "wilf/modular.hpp"
#include "wilf/result_cache.hpp"
#include "wilf/wilf_tree.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace wilf;

constexpr int kExitPass = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

enum class Format { Text, Json, Csv };

struct RunConfig {
  int k_max = 32;
  std::uint64_t n_max_exact = kDefaultExactCap;
  std::uint64_t n_max_mod = 4'000'000;
  std::string cache_path;
  Format format = Format::Text;
  int sample_count = 64;

  EngineLimits limits() const { return {k_max, n_max_mod}; }

  void validate() const {
    if (k_max < 1 || k_max > 32) throw CLI::ValidationError("--k-max", "must be in 1..32");
    if (n_max_exact == 0 || n_max_mod == 0 || sample_count < 1)
      throw CLI::ValidationError("caps", "caps must be positive");
  }
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::unique_ptr<ResultCache> open_cache(const RunConfig& cfg) {
  if (cfg.cache_path.empty()) return nullptr;
  return std::make_unique<ResultCache>(cfg.cache_path);
}

// ---------------------------------------------------------------------------
// bell

struct BellArgs {
  std::uint64_t n = 0;
  std::optional<int> mod;
  bool exact = false;
};

int cmd_bell(const BellArgs& a, const RunConfig& cfg) {
  if (a.mod && a.exact) throw UsageError("--mod and --exact are exclusive");
  if (a.mod) {
    auto cache = open_cache(cfg);
    const Residue r = cached_bellpm_mod(a.n, *a.mod, cfg.limits(), cache.get());
    const ValuationBound v = nu2_mod(r, *a.mod);
    switch (cfg.format) {
      case Format::Json:
        std::cout << json{{"n", a.n}, {"modulus_exponent", *a.mod}, {"residue", r}, {"nu2", v.to_string()}}.dump(2)
                  << '\n';
        break;
      case Format::Csv:
        std::cout << "n,modulus_exponent,residue,nu2\n" << a.n << ',' << *a.mod << ',' << r << ',' << v.to_string()
                  << '\n';
        break;
      case Format::Text:
        std::cout << "B±(" << a.n << ") ≡ " << r << " (mod 2^" << *a.mod << ")   ν₂ " << (v.exact ? "= " : "")
                  << v.to_string() << '\n';
        break;
    }
    return kExitPass;
  }

  const BigInt value = bell_pm_exact(a.n, cfg.n_max_exact);
  // cross-check against the modular engine
  bool consistent = true;
  if (a.n <= cfg.n_max_mod)
    consistent = low_bits(to_residue(value), cfg.k_max) == bellpm_mod(a.n, cfg.k_max, cfg.limits());
  const std::string nu = nu2(value).to_string();
  switch (cfg.format) {
    case Format::Json:
      std::cout << json{{"n", a.n}, {"value", value.get_str()}, {"nu2", nu}, {"modular_check", consistent}}.dump(2)
                << '\n';
      break;
    case Format::Csv: std::cout << "n,value,nu2\n" << a.n << ',' << value.get_str() << ',' << nu << '\n'; break;
    case Format::Text: std::cout << value.get_str() << '\n'; break;
  }
  if (!consistent) {
    std::cerr << "exact and modular values of B±(" << a.n << ") disagree mod 2^" << cfg.k_max << '\n';
    return kExitViolation;
  }
  return kExitPass;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyArgs {
  std::string claim;
  std::optional<std::uint64_t> n_max, j_max, n, j, q, window;
  std::optional<int> m;
};

Report sweep(const std::string& id, json parameters, const std::vector<Report>& parts) {
  Report out;
  out.claim_id = id;
  out.parameters = std::move(parameters);
  for (const auto& p : parts) {
    merge(out, p);
    out.modulus_exponent = std::max(out.modulus_exponent, p.modulus_exponent);
  }
  return out;
}

std::vector<Report> run_claim(const VerifyArgs& a, const RunConfig& cfg) {
  const EngineLimits lim = cfg.limits();
  const std::string& c = a.claim;
  auto m_range = [&](int lo, int hi) {
    std::vector<int> ms;
    if (a.m)
      ms.push_back(*a.m);
    else
      for (int m = lo; m <= hi; ++m) ms.push_back(m);
    return ms;
  };

  if (c == "lemma-q") return {verify_lemma_q()};
  if (c == "prop-m4") return {verify_prop_m4(a.window.value_or(120))};
  if (c == "prop-pdm") {
    std::vector<Report> out;
    for (int m : m_range(4, 6)) out.push_back(verify_prop_pdm(m));
    return out;
  }
  if (c == "pdm-induction") {
    std::vector<Report> out;
    for (int m : m_range(4, 5)) out.push_back(verify_pdm_induction(m));
    return out;
  }
  if (c == "t8") {
    std::vector<Report> out;
    for (int m : m_range(4, 8)) out.push_back(verify_t8(m));
    return out;
  }
  if (c == "ndm") {
    std::vector<Report> out;
    const int m = a.m.value_or(4);
    if (a.n) return {verify_ndm(*a.n, m)};
    for (std::uint64_t n = 1; n * d_m(m) <= 4000 && n <= 8; ++n) out.push_back(verify_ndm(n, m));
    return out;
  }
  if (c == "lemma-m7b") return {verify_lemma_m7b(a.window.value_or(64))};
  if (c == "lemma-m7c") {
    std::vector<Report> out;
    for (int m : m_range(3, 8)) out.push_back(verify_lemma_m7c(m));
    return out;
  }
  if (c == "symmetry") return {verify_symmetry(a.j.value_or(48), a.window.value_or(60))};
  if (c == "p3") return {verify_p3(a.window.value_or(20))};
  if (c == "vj") {
    if (a.j) return {verify_vj_definition(*a.j, lim)};
    const std::uint64_t jm = a.j_max.value_or(100);
    std::vector<Report> parts;
    for (std::uint64_t j = 0; j <= jm; ++j) parts.push_back(verify_vj_definition(j, lim));
    return {sweep("vj", {{"j_max", jm}}, parts)};
  }
  if (c == "qdm4") {
    const std::uint64_t q = a.q.value_or(1);
    const int m = a.m.value_or(0);
    if (a.j) return {qdm4_step(q, m, *a.j, lim)};
    std::vector<Report> parts;
    for (std::uint64_t j = 0; j < 48; ++j) parts.push_back(qdm4_step(q, m, j, lim));
    return {sweep("qdm4", {{"q", q}, {"m", m}, {"j_first", 0}, {"j_last", 47}}, parts)};
  }
  if (c == "cor-nu") return {verify_cor_nu(a.j_max.value_or(2000), lim)};
  if (c == "thm-24n2") return {verify_thm_24n2(a.n_max.value_or(2000), lim)};
  if (c == "lemma-38mod16") {
    if (a.j) return {verify_mod16_lemma(*a.j, lim)};
    std::vector<Report> parts;
    for (std::uint64_t k = 0; k <= 20; ++k) parts.push_back(verify_mod16_lemma(38 + 48 * k, lim));
    return {sweep("lemma-38mod16", {{"j_first", 38}, {"j_last", 38 + 48 * 20}}, parts)};
  }
  if (c == "lemma-xm") {
    auto cache = open_cache(cfg);
    const int top = a.m.value_or(8);
    const auto seq = run_sequence(top, lim, cache.get());
    std::vector<Report> parts;
    for (int m : m_range(0, top))
      for (std::uint64_t n = a.n.value_or(0); n <= a.n.value_or(3); ++n)
        parts.push_back(verify_lemma_xm(m, n, seq[static_cast<std::size_t>(m)].x, lim));
    if (parts.size() == 1) return parts;
    return {sweep("lemma-xm", {{"m_last", top}}, parts)};
  }
  if (c == "thm-24n14") {
    auto cache = open_cache(cfg);
    const auto s = sequence_s(18, lim, cache.get());
    return {verify_thm_24n14(a.n_max.value_or(1000), s, lim)};
  }
  throw UsageError("unknown claim_id '" + c + "'");
}

int cmd_verify(const VerifyArgs& a, const RunConfig& cfg) {
  const auto reports = run_claim(a, cfg);
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.passed();
  switch (cfg.format) {
    case Format::Json: {
      if (reports.size() == 1) {
        std::cout << reports.front().to_json().dump(2) << '\n';
      } else {
        json arr = json::array();
        for (const auto& r : reports) arr.push_back(r.to_json());
        std::cout << arr.dump(2) << '\n';
      }
      break;
    }
    case Format::Csv:
      std::cout << "claim_id,r,s,expected_min,found\n";
      for (const auto& r : reports)
        for (const auto& v : r.violations)
          std::cout << r.claim_id << ',' << v.r << ',' << v.s << ',' << v.expected_min << ',' << v.found << '\n';
      break;
    case Format::Text:
      for (const auto& r : reports) {
        std::cout << r.claim_id << ' ' << r.parameters.dump() << "  modulus 2^" << r.modulus_exponent << "  "
                  << (r.checked - std::min<std::uint64_t>(r.checked, r.violations.size())) << '/' << r.checked
                  << " pass  " << (r.passed() ? "PASS" : "FAIL") << '\n';
        for (std::size_t i = 0; i < r.violations.size() && i < 20; ++i) {
          const auto& v = r.violations[i];
          std::cout << "  (" << v.r << ',' << v.s << ") expected " << v.expected_min << " found " << v.found << '\n';
        }
        if (r.claim_id == "lemma-q" && r.parameters.contains("q")) {
          std::cout << "  Q =\n";
          for (const auto& row : r.parameters["q"]) {
            std::cout << "   ";
            for (const auto& x : row) std::cout << std::setw(3) << x.get<int>();
            std::cout << '\n';
          }
        }
      }
      break;
  }
  return ok ? kExitPass : kExitViolation;
}

// ---------------------------------------------------------------------------
// table

struct TableArgs {
  std::string which;
  int max_m = 18;
  int depth = 8;
};

int table_xm(const TableArgs& a, const RunConfig& cfg) {
  auto cache = open_cache(cfg);
  const EngineLimits lim = cfg.limits();
  std::vector<SequenceState> rows;
  std::vector<int> s_bits;  // s_m is bit m of y_{m+1}
  bool truncated = false;
  std::string truncation;
  SequenceState state = SequenceState::initial();
  for (int m = 0; m <= a.max_m; ++m) {
    try {
      evaluate_level(state, lim, cache.get());
    } catch (const CapExceeded& e) {
      truncated = true;
      truncation = "truncated at m=" + std::to_string(m) + ": " + e.what();
      break;
    }
    SequenceState next = advance_sequence(state, lim, cache.get());
    s_bits.push_back(next.s_bits.at(static_cast<std::size_t>(m)));
    rows.push_back(state);
    state = std::move(next);
  }

  json diffs = json::array();
  bool unexpected = false;
  for (const auto& s : rows) {
    const auto i = static_cast<std::size_t>(s.m);
    if (i >= fixtures::kPublishedY.size()) continue;
    const bool misprint_row = s.m == fixtures::kMisprintRow;
    if (s.y != fixtures::kPublishedY[i]) {
      diffs.push_back({{"m", s.m}, {"field", "y_m"}, {"printed", fixtures::kPublishedY[i]}, {"computed", s.y},
                       {"known_misprint", misprint_row}});
      unexpected = unexpected || !misprint_row;
    }
    if (s.x != fixtures::kPublishedX[i]) {
      diffs.push_back({{"m", s.m}, {"field", "x_m"}, {"printed", fixtures::kPublishedX[i]}, {"computed", s.x},
                       {"known_misprint", false}});
      unexpected = true;
    }
  }

  auto s_bit = [&](const SequenceState& s) { return s_bits[static_cast<std::size_t>(s.m)]; };
  switch (cfg.format) {
    case Format::Json: {
      json out = {{"table", "xm"}, {"fixture_version", fixtures::kVersion}, {"rows", json::array()}};
      for (const auto& s : rows)
        out["rows"].push_back({{"m", s.m}, {"y_m", s.y}, {"x_m", s.x}, {"e_m", s.e->to_string()},
                               {"e_m_lower_bound", s.e->value.value()}, {"s_m", s_bit(s)}});
      out["fixture_diffs"] = diffs;
      out["truncated"] = truncated;
      if (truncated) out["truncation"] = truncation;
      std::cout << out.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      std::cout << "m,y_m,x_m,e_m_lower_bound,s_m\n";
      for (const auto& s : rows)
        std::cout << s.m << ',' << s.y << ',' << s.x << ',' << s.e->value.value() << ',' << s_bit(s) << '\n';
      break;
    case Format::Text:
      std::cout << std::setw(3) << "m" << std::setw(9) << "y_m" << std::setw(10) << "x_m" << "  ν₂(B±(x_m))  s_m\n";
      for (const auto& s : rows)
        std::cout << std::setw(3) << s.m << std::setw(9) << s.y << std::setw(10) << s.x << "  " << std::setw(11)
                  << s.e->to_string() << "  " << std::setw(3) << s_bit(s) << '\n';
      break;
  }
  for (const auto& d : diffs)
    std::cerr << "fixture: m=" << d["m"] << ' ' << d["field"].get<std::string>() << " printed " << d["printed"]
              << " computed " << d["computed"] << (d["known_misprint"].get<bool>() ? " (known misprint)" : "") << '\n';
  if (truncated) {
    std::cerr << truncation << '\n';
    return kExitUsage;
  }
  return unexpected ? kExitViolation : kExitPass;
}

int table_s(const TableArgs& a, const RunConfig& cfg) {
  auto cache = open_cache(cfg);
  const auto bits = sequence_s(a.max_m, cfg.limits(), cache.get());
  bool mismatch = false;
  for (std::size_t i = 0; i < bits.size() && i < fixtures::kSequenceS10.size(); ++i)
    mismatch = mismatch || bits[i] != fixtures::kSequenceS10[i];
  switch (cfg.format) {
    case Format::Json: std::cout << json{{"table", "s"}, {"depth", a.max_m}, {"s", bits}}.dump(2) << '\n'; break;
    case Format::Csv:
      std::cout << "i,s_i\n";
      for (std::size_t i = 0; i < bits.size(); ++i) std::cout << i << ',' << bits[i] << '\n';
      break;
    case Format::Text:
      for (std::size_t i = 0; i < bits.size(); ++i) std::cout << (i ? "," : "") << bits[i];
      std::cout << '\n';
      break;
  }
  if (mismatch) std::cerr << "fixture: s disagrees with the printed prefix\n";
  return mismatch ? kExitViolation : kExitPass;
}

int table_log10(const TableArgs& a, const RunConfig& cfg) {
  auto cache = open_cache(cfg);
  const auto seq = run_sequence(a.max_m, cfg.limits(), cache.get());
  struct Row {
    int m;
    std::uint64_t x;
    double log10;
  };
  std::vector<Row> rows;
  std::map<std::uint64_t, double> done;
  bool mismatch = false;
  bool truncated = false;
  for (const auto& s : seq) {
    if (s.x > cfg.n_max_exact) {
      truncated = true;
      std::cerr << "truncated at m=" << s.m << ": x_m=" << s.x << " exceeds n_max_exact=" << cfg.n_max_exact << '\n';
      break;
    }
    if (!done.count(s.x)) done[s.x] = log10_abs(bell_pm_exact(s.x, cfg.n_max_exact));
    rows.push_back({s.m, s.x, done[s.x]});
    const auto i = static_cast<std::size_t>(s.m);
    if (i < fixtures::kGrowthLog10.size() && std::fabs(done[s.x] - fixtures::kGrowthLog10[i]) > 0.1) {
      mismatch = true;
      std::cerr << "fixture: m=" << s.m << " printed " << fixtures::kGrowthLog10[i] << " computed " << done[s.x]
                << '\n';
    }
  }
  switch (cfg.format) {
    case Format::Json: {
      json out = {{"table", "log10"}, {"rows", json::array()}, {"truncated", truncated}};
      for (const auto& r : rows)
        out["rows"].push_back({{"m", r.m}, {"x_m", r.x}, {"log10_abs", std::round(r.log10 * 10) / 10}});
      std::cout << out.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      std::cout << "m,x_m,log10_abs\n";
      for (const auto& r : rows) std::cout << r.m << ',' << r.x << ',' << std::fixed << std::setprecision(1) << r.log10 << '\n';
      break;
    case Format::Text:
      for (const auto& r : rows)
        std::cout << "m=" << r.m << "  log10|B±(" << r.x << ")| = " << std::fixed << std::setprecision(1) << r.log10
                  << '\n';
      break;
  }
  if (truncated) return kExitUsage;
  return mismatch ? kExitViolation : kExitPass;
}

void print_tree_text(const ResidueClassNode& node, int indent) {
  if (node.modulus > 1) {
    std::cout << std::string(static_cast<std::size_t>(indent) * 2, ' ') << node.modulus << "n+" << node.residue << ": "
              << to_string(node.label);
    if (node.label == NodeLabel::Proven || node.label == NodeLabel::Empirical)
      std::cout << " ν₂ = " << node.value.to_string();
    std::cout << '\n';
  }
  for (const auto& c : node.children) print_tree_text(c, node.modulus > 1 ? indent + 1 : indent);
}

int table_figure1(const TableArgs& a, const RunConfig& cfg) {
  auto cache = open_cache(cfg);
  const auto s = sequence_s(18, cfg.limits(), cache.get());
  const auto tree = build_valuation_tree(a.depth, cfg.sample_count, s, cfg.limits());
  switch (cfg.format) {
    case Format::Json: std::cout << tree.to_json().dump(2) << '\n'; break;
    case Format::Csv:
      std::cout << "residue,modulus,label,valuation\n";
      for (const auto* leaf : tree.leaves())
        std::cout << leaf->residue << ',' << leaf->modulus << ',' << to_string(leaf->label) << ','
                  << (leaf->label == NodeLabel::Open ? "" : leaf->value.to_string()) << '\n';
      break;
    case Format::Text: print_tree_text(tree, 0); break;
  }
  return kExitPass;
}

int cmd_table(const TableArgs& a, const RunConfig& cfg) {
  if (a.which == "xm") return table_xm(a, cfg);
  if (a.which == "s") return table_s(a, cfg);
  if (a.which == "log10") return table_log10(a, cfg);
  if (a.which == "figure1") return table_figure1(a, cfg);
  throw UsageError("unknown table '" + a.which + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Complementary Bell numbers B±(n): exact and 2-adic computation, claim verification, tables"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  if (const char* env = std::getenv("WILF_CACHE")) cfg.cache_path = env;
  std::string format = "text";
  app.add_option("--k-max", cfg.k_max, "Largest modulus exponent K")->capture_default_str();
  app.add_option("--n-max-exact", cfg.n_max_exact, "Largest n for exact computation")->capture_default_str();
  app.add_option("--n-max-mod", cfg.n_max_mod, "Largest n for modular computation")->capture_default_str();
  app.add_option("--cache", cfg.cache_path, "JSON-lines result cache (env WILF_CACHE)");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}))->capture_default_str();
  app.add_option("--samples", cfg.sample_count, "Members sampled per class when building the tree")->capture_default_str();

  BellArgs bell;
  auto* bell_cmd = app.add_subcommand("bell", "Print B±(n) exactly or mod 2^K");
  bell_cmd->add_option("n", bell.n, "Index")->required();
  bell_cmd->add_option("--mod", bell.mod, "Reduce mod 2^K");
  bell_cmd->add_flag("--exact", bell.exact, "Exact big-integer value (default)");

  VerifyArgs ver;
  auto* ver_cmd = app.add_subcommand("verify", "Verify a claim and print a structured report");
  ver_cmd->add_option("claim_id", ver.claim,
                      "lemma-q, prop-m4, prop-pdm, pdm-induction, t8, ndm, vj, qdm4, cor-nu, thm-24n2, "
                      "lemma-38mod16, lemma-xm, thm-24n14, lemma-m7b, lemma-m7c, symmetry, p3")
      ->required();
  ver_cmd->add_option("--n-max", ver.n_max);
  ver_cmd->add_option("--j-max", ver.j_max);
  ver_cmd->add_option("--m", ver.m);
  ver_cmd->add_option("--n", ver.n);
  ver_cmd->add_option("--j", ver.j);
  ver_cmd->add_option("--q", ver.q);
  ver_cmd->add_option("--window", ver.window);

  TableArgs tab;
  auto* tab_cmd = app.add_subcommand("table", "Reproduce a table: xm, s, log10, figure1");
  tab_cmd->add_option("which", tab.which)->required()->check(CLI::IsMember({"xm", "s", "log10", "figure1"}));
  tab_cmd->add_option("--max-m", tab.max_m, "Last level m")->capture_default_str();
  tab_cmd->add_option("--depth", tab.depth, "Tree depth (figure1)")->capture_default_str();

  try {
    app.parse(argc, argv);
    if (format == "json") cfg.format = Format::Json;
    if (format == "csv") cfg.format = Format::Csv;
    cfg.validate();
    if (*bell_cmd) return cmd_bell(bell, cfg);
    if (*ver_cmd) return cmd_verify(ver, cfg);
    if (*tab_cmd) return cmd_table(tab, cfg);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
