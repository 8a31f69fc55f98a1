#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "wilf/modular.hpp"
#include "wilf/padic.hpp"
#include "wilf/report.hpp"
#include "wilf/result_cache.hpp"

namespace wilf {

// ---------------------------------------------------------------------------
// v_j and the congruence stepper

/// v_j mod 16 from 11B±(j+1) + 14B±(j+2) + 9B±(j+3) + 6B±(j+4) + B±(j+5).
Residue v_mod16(std::uint64_t j, const EngineLimits& limits = {});

/// The same combination from B±(j+1..j+5) mod 16 already at hand.
Residue v_combination(Residue b1, Residue b2, Residue b3, Residue b4, Residue b5);

/// (Q (P^j)_8)(0,0) mod 16 computed from the first column of P^j and the
/// reference Q, compared with v_mod16(j). For j <= 60 also checks the exact
/// expressions of P^j(0,r), r <= 5, in terms of B±(j..j+5).
Report verify_vj_definition(std::uint64_t j, const EngineLimits& limits = {});

/// Right side of B±(q d_{m+4} + j) ≡ B±(j) + 2^{m+3} q v_j (mod 2^{m+7}).
Residue qdm4_predicted(std::uint64_t q, int m, std::uint64_t j, const EngineLimits& limits = {});

/// Both sides of the stepper congruence, evaluated mod 2^{m+7}.
Report qdm4_step(std::uint64_t q, int m, std::uint64_t j, const EngineLimits& limits = {});

// ---------------------------------------------------------------------------
// Residue-class valuations

/// 0 for j ≡ 0,1 (mod 3); 1 for j ≡ 5,8 (mod 12); 2 for j ≡ 11 (mod 12).
/// nullopt for j ≡ 2 (mod 12), which is left to the 24n+2 and 24n+14
/// theorems; except j = 2, where B±(2) = 0 and the result is ∞.
std::optional<Valuation> classify_nu(std::uint64_t j);

/// ν₂(B±(24n+2)) = ν₂(n) + 5 (∞ at n = 0).
Valuation theorem_24n2(std::uint64_t n);

Report verify_cor_nu(std::uint64_t j_max, const EngineLimits& limits = {});
Report verify_thm_24n2(std::uint64_t n_max, const EngineLimits& limits = {});

// ---------------------------------------------------------------------------
// The (y_m, x_m) recursion

/// Level m of the recursion y_0 = 1,
///   y_{m+1} = y_m            if ν₂(B±(24 y_m + 14)) > m + 5,
///   y_{m+1} = y_m + 2^m      otherwise,
/// with x_m = 24 y_m + 14 and s_bits = (s_0, ..., s_{m-1}).
struct SequenceState {
  int m = 0;
  std::uint64_t y = 1;
  std::uint64_t x = 38;
  /// ν₂(B±(x_m)) read mod 2^{m+6}; set once the level is evaluated.
  std::optional<ValuationBound> e;
  Residue residue = 0;  // B±(x_m) mod 2^{m+6}
  std::vector<int> s_bits;

  static SequenceState initial() { return {}; }
};

/// B±(n) mod 2^K, served from `cache` when present and recorded there otherwise.
Residue cached_bellpm_mod(std::uint64_t n, int k, const EngineLimits& limits, ResultCache* cache);

/// Fills state.e (mod 2^{m+6}) if missing.
void evaluate_level(SequenceState& state, const EngineLimits& limits = {}, ResultCache* cache = nullptr);

/// Evaluates level m if needed and returns level m+1 (not yet evaluated).
SequenceState advance_sequence(SequenceState& state, const EngineLimits& limits = {}, ResultCache* cache = nullptr);

/// Levels 0..depth, every one evaluated.
std::vector<SequenceState> run_sequence(int depth, const EngineLimits& limits = {}, ResultCache* cache = nullptr);

/// (s_0, ..., s_{depth-1}): the little-endian bits of y_depth.
std::vector<int> sequence_s(int depth, const EngineLimits& limits = {}, ResultCache* cache = nullptr);

/// ν₂(B±(24n+14)) = m(n) + 5 where m(n) is the first index at which the bits
/// of n differ from s. If n agrees with s on every known bit, the result is
/// the bound ">= s.size() + 5".
ValuationBound theorem_24n14(std::uint64_t n, const std::vector<int>& s_bits);

Report verify_thm_24n14(std::uint64_t n_max, const std::vector<int>& s_bits, const EngineLimits& limits = {});

/// B±(24·2^m n + x_m) ≡ B±(x_m) + 2^{m+5} n (mod 2^{m+6}).
Report verify_lemma_xm(int m, std::uint64_t n, std::uint64_t x_m, const EngineLimits& limits = {});

/// For j ≡ 38 (mod 48): B±(j+1..j+5) ≡ (5, 5, 14, 3, 11) (mod 16) and v_j ≡ 8.
Report verify_mod16_lemma(std::uint64_t j, const EngineLimits& limits = {});

// ---------------------------------------------------------------------------
// Residue-class tree

enum class NodeLabel { Proven, Empirical, Split, Open };

std::string to_string(NodeLabel label);

/// Class {residue + modulus·n : n >= 0}. The root is the whole of N
/// (residue 0, modulus 1) and splits three ways by n mod 3; below that a
/// class a mod M splits into a mod 2M and a+M mod 2M.
struct ResidueClassNode {
  std::uint64_t residue = 0;
  std::uint64_t modulus = 1;
  NodeLabel label = NodeLabel::Split;
  Valuation value;  // meaningful for Proven and Empirical
  std::vector<ResidueClassNode> children;

  nlohmann::ordered_json to_json() const;
  /// Leaves in depth-first order.
  std::vector<const ResidueClassNode*> leaves() const;
  /// The node for class residue mod modulus, if present in the tree.
  const ResidueClassNode* find(std::uint64_t residue, std::uint64_t modulus) const;
};

/// The theorem-backed valuation of every member of the class, if one applies.
std::optional<Valuation> proven_class_valuation(std::uint64_t residue, std::uint64_t modulus,
                                                const std::vector<int>& s_bits);

/// Builds the tree down to modulus 3·2^max_depth. A class is a leaf when a
/// theorem fixes its valuation (Proven) or when sample_count sampled members
/// all have the same certified valuation mod 2^32 (Empirical); otherwise it
/// splits, and at max_depth it is left Open.
ResidueClassNode build_valuation_tree(int max_depth, int sample_count, const std::vector<int>& s_bits,
                                      const EngineLimits& limits = {});

}  // namespace wilf
