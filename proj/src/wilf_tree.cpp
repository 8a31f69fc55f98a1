#include "wilf/wilf_tree.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <string>

namespace wilf {

namespace {

std::string residue_str(Residue x) { return std::to_string(x); }

Residue pow2(int k) { return Residue{1} << k; }

}  // namespace

// ---------------------------------------------------------------------------
// v_j and the congruence stepper

Residue v_combination(Residue b1, Residue b2, Residue b3, Residue b4, Residue b5) {
  return low_bits(11 * b1 + 14 * b2 + 9 * b3 + 6 * b4 + b5, 4);
}

Residue v_mod16(std::uint64_t j, const EngineLimits& limits) {
  const auto b = bellpm_mod_sequence(j + 5, 4, limits);
  return v_combination(b[j + 1], b[j + 2], b[j + 3], b[j + 4], b[j + 5]);
}

namespace {

// P^j(0,r) for r <= 5 as integer combinations of B±(j), ..., B±(j+5).
constexpr std::array<std::array<int, 6>, 6> kTopRowFromBell = {{
    {1, 0, 0, 0, 0, 0},
    {1, 1, 0, 0, 0, 0},
    {1, 1, 1, 0, 0, 0},
    {1, 2, 0, 1, 0, 0},
    {1, 0, 5, -2, 1, 0},
    {1, 9, -15, 15, -5, 1},
}};

}  // namespace

Report verify_vj_definition(std::uint64_t j, const EngineLimits& limits) {
  Report rep;
  rep.claim_id = "vj";
  rep.parameters = {{"j", j}};
  rep.window = {{"rows", 8}, {"cols", 1}};
  rep.modulus_exponent = 4;

  const auto column = pn_first_column_mod(j, 4, 7, limits);
  const QMatrix q = reference_q();
  Residue direct = 0;
  for (Index r = 0; r < 8; ++r) direct += q(0, static_cast<Eigen::Index>(r)) * column[r];
  direct = low_bits(direct, 4);
  const Residue combined = v_mod16(j, limits);
  ++rep.checked;
  if (direct != combined) rep.add(static_cast<std::int64_t>(j), 0, residue_str(combined), residue_str(direct));

  if (j <= 60) {
    const auto bell = bell_pm_exact_range(j + 5);
    const auto top = p_power_window(j, 6);
    for (Index r = 0; r <= 5; ++r) {
      BigInt expected(0);
      for (Index i = 0; i <= r; ++i) expected += kTopRowFromBell[r][i] * bell[j + i];
      ++rep.checked;
      const BigInt& found = top(0, static_cast<Eigen::Index>(r));
      if (found != expected) rep.add(0, static_cast<std::int64_t>(r), to_string(expected), to_string(found));
    }
  }
  return rep;
}

Residue qdm4_predicted(std::uint64_t q, int m, std::uint64_t j, const EngineLimits& limits) {
  const int k = m + 7;
  const Residue bj = bellpm_mod(j, k, limits);
  return low_bits(bj + pow2(m + 3) * q * v_mod16(j, limits), k);
}

Report qdm4_step(std::uint64_t q, int m, std::uint64_t j, const EngineLimits& limits) {
  if (q < 1 || m < 0) throw std::invalid_argument("qdm4_step requires q >= 1 and m >= 0");
  Report rep;
  rep.claim_id = "qdm4";
  const int k = m + 7;
  const std::uint64_t n = q * d_m(m + 4) + j;
  rep.parameters = {{"q", q}, {"m", m}, {"j", j}, {"index", n}};
  rep.modulus_exponent = k;
  const Residue lhs = bellpm_mod(n, k, limits);
  const Residue rhs = qdm4_predicted(q, m, j, limits);
  ++rep.checked;
  if (lhs != rhs) rep.add(static_cast<std::int64_t>(n), 0, residue_str(rhs), residue_str(lhs));
  return rep;
}

// ---------------------------------------------------------------------------
// Residue-class valuations

std::optional<Valuation> classify_nu(std::uint64_t j) {
  if (j % 3 != 2) return Valuation(0);
  switch (j % 12) {
    case 5:
    case 8: return Valuation(1);
    case 11: return Valuation(2);
    default: break;
  }
  if (j == 2) return kInfinity;
  return std::nullopt;
}

Valuation theorem_24n2(std::uint64_t n) {
  if (n == 0) return kInfinity;
  return nu2(n) + Valuation(5);
}

Report verify_cor_nu(std::uint64_t j_max, const EngineLimits& limits) {
  Report rep;
  rep.claim_id = "cor-nu";
  rep.parameters = {{"j_max", j_max}};
  rep.window = {{"j_first", 0}, {"j_last", j_max}};
  rep.modulus_exponent = 3;
  const auto b = bellpm_mod_sequence(j_max, 3, limits);
  for (std::uint64_t j = 0; j <= j_max; ++j) {
    if (j % 12 == 2) continue;
    const auto predicted = classify_nu(j);
    const ValuationBound found = nu2_mod(b[j], 3);
    ++rep.checked;
    if (!predicted || !found.equals(predicted->value()))
      rep.add(static_cast<std::int64_t>(j), 0, predicted ? predicted->to_string() : "?", found.to_string());
  }
  return rep;
}

Report verify_thm_24n2(std::uint64_t n_max, const EngineLimits& limits) {
  Report rep;
  rep.claim_id = "thm-24n2";
  rep.parameters = {{"n_max", n_max}};
  rep.window = {{"n_first", 1}, {"n_last", n_max}};
  if (n_max == 0) return rep;
  const int k_max = std::bit_width(n_max) - 1 + 6;
  rep.modulus_exponent = k_max;
  const auto b = bellpm_mod_sequence(24 * n_max + 2, k_max, limits);
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    const std::uint32_t expected = theorem_24n2(n).value();
    const ValuationBound found = nu2_mod(b[24 * n + 2], static_cast<int>(expected) + 1);
    ++rep.checked;
    if (!found.equals(expected))
      rep.add(static_cast<std::int64_t>(n), 0, std::to_string(expected), found.to_string());
  }
  return rep;
}

// ---------------------------------------------------------------------------
// The (y_m, x_m) recursion

Residue cached_bellpm_mod(std::uint64_t n, int k, const EngineLimits& limits, ResultCache* cache) {
  const nlohmann::ordered_json params = {{"n", n}};
  if (cache) {
    if (auto hit = cache->find("bellpm-mod", params, k)) return hit->residue_or_valuation.get<Residue>();
  }
  const Residue r = bellpm_mod(n, k, limits);
  if (cache) cache->append({"bellpm-mod", params, k, r, {}});
  return r;
}

void evaluate_level(SequenceState& state, const EngineLimits& limits, ResultCache* cache) {
  if (state.e) return;
  const int k = state.m + 6;
  state.residue = cached_bellpm_mod(state.x, k, limits, cache);
  state.e = nu2_mod(state.residue, k);
}

SequenceState advance_sequence(SequenceState& state, const EngineLimits& limits, ResultCache* cache) {
  evaluate_level(state, limits, cache);
  // with K = m+6 an exact valuation is at most m+5
  const bool branch = state.e->exact;
  SequenceState next;
  next.m = state.m + 1;
  next.y = state.y + (branch ? (std::uint64_t{1} << state.m) : 0);
  next.x = 24 * next.y + 14;
  next.s_bits = state.s_bits;
  next.s_bits.push_back(static_cast<int>((next.y >> state.m) & 1U));
  return next;
}

std::vector<SequenceState> run_sequence(int depth, const EngineLimits& limits, ResultCache* cache) {
  std::vector<SequenceState> out;
  SequenceState state = SequenceState::initial();
  for (int m = 0; m < depth; ++m) {
    SequenceState next = advance_sequence(state, limits, cache);
    out.push_back(std::move(state));
    state = std::move(next);
  }
  evaluate_level(state, limits, cache);
  out.push_back(std::move(state));
  return out;
}

std::vector<int> sequence_s(int depth, const EngineLimits& limits, ResultCache* cache) {
  SequenceState state = SequenceState::initial();
  for (int m = 0; m < depth; ++m) state = advance_sequence(state, limits, cache);
  return state.s_bits;
}

ValuationBound theorem_24n14(std::uint64_t n, const std::vector<int>& s_bits) {
  for (std::size_t i = 0; i < s_bits.size(); ++i) {
    const int bit = i < 64 ? static_cast<int>((n >> i) & 1U) : 0;
    if (bit != s_bits[i]) return {Valuation(static_cast<std::uint32_t>(i + 5)), true};
  }
  return {Valuation(static_cast<std::uint32_t>(s_bits.size() + 5)), false};
}

Report verify_thm_24n14(std::uint64_t n_max, const std::vector<int>& s_bits, const EngineLimits& limits) {
  Report rep;
  rep.claim_id = "thm-24n14";
  rep.parameters = {{"n_max", n_max}, {"s_depth", s_bits.size()}};
  rep.window = {{"n_first", 1}, {"n_last", n_max}};
  if (n_max == 0) return rep;
  std::uint32_t top = 0;
  for (std::uint64_t n = 1; n <= n_max; ++n) top = std::max(top, theorem_24n14(n, s_bits).value.value());
  const int k_max = static_cast<int>(top) + 1;
  rep.modulus_exponent = k_max;
  const auto b = bellpm_mod_sequence(24 * n_max + 14, k_max, limits);
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    const ValuationBound predicted = theorem_24n14(n, s_bits);
    ++rep.checked;
    const auto n_i = static_cast<std::int64_t>(n);
    if (!predicted.exact) {
      rep.add(n_i, 0, predicted.to_string(), "s prefix exhausted");
      continue;
    }
    const ValuationBound found = nu2_mod(b[24 * n + 14], static_cast<int>(predicted.value.value()) + 1);
    if (!(found == predicted)) rep.add(n_i, 0, predicted.to_string(), found.to_string());
  }
  return rep;
}

Report verify_lemma_xm(int m, std::uint64_t n, std::uint64_t x_m, const EngineLimits& limits) {
  Report rep;
  rep.claim_id = "lemma-xm";
  const int k = m + 6;
  const std::uint64_t index = 24 * (std::uint64_t{1} << m) * n + x_m;
  rep.parameters = {{"m", m}, {"n", n}, {"x_m", x_m}, {"index", index}};
  rep.modulus_exponent = k;
  const Residue lhs = bellpm_mod(index, k, limits);
  const Residue rhs = low_bits(bellpm_mod(x_m, k, limits) + pow2(m + 5) * n, k);
  ++rep.checked;
  if (lhs != rhs) rep.add(static_cast<std::int64_t>(index), 0, residue_str(rhs), residue_str(lhs));
  return rep;
}

Report verify_mod16_lemma(std::uint64_t j, const EngineLimits& limits) {
  if (j % 48 != 38) throw std::invalid_argument("verify_mod16_lemma requires j = 38 (mod 48)");
  static constexpr std::array<Residue, 5> kExpected = {5, 5, 14, 3, 11};
  Report rep;
  rep.claim_id = "lemma-38mod16";
  rep.parameters = {{"j", j}};
  rep.window = {{"index_first", j + 1}, {"index_last", j + 5}};
  rep.modulus_exponent = 4;
  const auto b = bellpm_mod_sequence(j + 5, 4, limits);
  for (std::size_t i = 1; i <= 5; ++i) {
    ++rep.checked;
    if (b[j + i] != kExpected[i - 1])
      rep.add(static_cast<std::int64_t>(j + i), 0, residue_str(kExpected[i - 1]), residue_str(b[j + i]));
  }
  const Residue v = v_combination(b[j + 1], b[j + 2], b[j + 3], b[j + 4], b[j + 5]);
  ++rep.checked;
  if (v != 8) rep.add(static_cast<std::int64_t>(j), 0, "v_j=8", residue_str(v));
  return rep;
}

// ---------------------------------------------------------------------------
// Residue-class tree

std::string to_string(NodeLabel label) {
  switch (label) {
    case NodeLabel::Proven: return "proven";
    case NodeLabel::Empirical: return "empirical";
    case NodeLabel::Split: return "split";
    case NodeLabel::Open: return "open";
  }
  return "?";
}

nlohmann::ordered_json ResidueClassNode::to_json() const {
  nlohmann::ordered_json j = {{"residue", residue}, {"modulus", modulus}, {"label", to_string(label)}};
  if (label == NodeLabel::Proven || label == NodeLabel::Empirical) j["valuation"] = value.to_string();
  if (!children.empty()) {
    j["children"] = nlohmann::ordered_json::array();
    for (const auto& c : children) j["children"].push_back(c.to_json());
  }
  return j;
}

std::vector<const ResidueClassNode*> ResidueClassNode::leaves() const {
  std::vector<const ResidueClassNode*> out;
  if (children.empty()) {
    out.push_back(this);
    return out;
  }
  for (const auto& c : children) {
    auto sub = c.leaves();
    out.insert(out.end(), sub.begin(), sub.end());
  }
  return out;
}

const ResidueClassNode* ResidueClassNode::find(std::uint64_t a, std::uint64_t m) const {
  if (residue == a && modulus == m) return this;
  for (const auto& c : children)
    if (c.modulus <= m && a % c.modulus == c.residue)
      if (const auto* hit = c.find(a, m)) return hit;
  return nullptr;
}

std::optional<Valuation> proven_class_valuation(std::uint64_t a, std::uint64_t modulus,
                                                const std::vector<int>& s_bits) {
  if (modulus % 3 != 0) return std::nullopt;
  if (a % 3 != 2) return Valuation(0);
  if (modulus % 12 == 0) {
    if (a % 12 == 5 || a % 12 == 8) return Valuation(1);
    if (a % 12 == 11) return Valuation(2);
  }
  if (modulus % 24 != 0) return std::nullopt;
  const std::uint64_t span = modulus / 24;  // members are 24(c + span·t) + a % 24
  if (!std::has_single_bit(span)) return std::nullopt;
  const auto bits = static_cast<std::size_t>(std::countr_zero(span));
  if (a % 24 == 2) {
    const std::uint64_t c = (a - 2) / 24;
    if (c == 0) return std::nullopt;  // contains B±(2) = 0
    return nu2(c) + Valuation(5);
  }
  if (a % 24 == 14) {
    const std::uint64_t c = (a - 14) / 24;
    for (std::size_t i = 0; i < bits && i < s_bits.size(); ++i)
      if (static_cast<int>((c >> i) & 1U) != s_bits[i]) return Valuation(static_cast<std::uint32_t>(i + 5));
  }
  return std::nullopt;
}

namespace {

struct TreeBuilder {
  int max_depth;
  int sample_count;
  const std::vector<int>& s_bits;
  EngineLimits limits;
  std::vector<Residue> samples;  // B±(n) mod 2^32 for every sampled index

  static constexpr int kSampleModulus = 32;

  std::optional<Valuation> sampled_valuation(std::uint64_t a, std::uint64_t modulus) const {
    std::optional<Valuation> common;
    for (int t = 0; t < sample_count; ++t) {
      const std::uint64_t n = a + modulus * static_cast<std::uint64_t>(t);
      if (n >= samples.size()) return std::nullopt;
      const ValuationBound v = nu2_mod(samples[n], kSampleModulus);
      if (!v.exact) return std::nullopt;
      if (common && *common != v.value) return std::nullopt;
      common = v.value;
    }
    return common;
  }

  ResidueClassNode build(std::uint64_t a, std::uint64_t modulus, int depth) const {
    ResidueClassNode node;
    node.residue = a;
    node.modulus = modulus;
    if (auto v = proven_class_valuation(a, modulus, s_bits)) {
      node.label = NodeLabel::Proven;
      node.value = *v;
      return node;
    }
    if (auto v = sampled_valuation(a, modulus)) {
      node.label = NodeLabel::Empirical;
      node.value = *v;
      return node;
    }
    if (depth >= max_depth) {
      node.label = NodeLabel::Open;
      return node;
    }
    node.label = NodeLabel::Split;
    node.children.push_back(build(a, 2 * modulus, depth + 1));
    node.children.push_back(build(a + modulus, 2 * modulus, depth + 1));
    return node;
  }
};

}  // namespace

ResidueClassNode build_valuation_tree(int max_depth, int sample_count, const std::vector<int>& s_bits,
                                      const EngineLimits& limits) {
  if (max_depth < 0 || max_depth > 12) throw CapExceeded("build_valuation_tree supports 0 <= max_depth <= 12");
  if (sample_count < 1) throw std::invalid_argument("sample_count must be positive");
  const std::uint64_t top_modulus = std::uint64_t{3} << max_depth;
  const std::uint64_t last = std::min<std::uint64_t>(2 * top_modulus * static_cast<std::uint64_t>(sample_count),
                                                     limits.max_index);
  TreeBuilder builder{max_depth, sample_count, s_bits, limits,
                      bellpm_mod_sequence(last, TreeBuilder::kSampleModulus, limits)};
  ResidueClassNode root;
  root.label = NodeLabel::Split;
  for (std::uint64_t a = 0; a < 3; ++a) root.children.push_back(builder.build(a, 3, 0));
  return root;
}

}  // namespace wilf
