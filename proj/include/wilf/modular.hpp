#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include <Eigen/Core>

#include "wilf/bigint.hpp"
#include "wilf/combinatorics.hpp"
#include "wilf/matrix_p.hpp"
#include "wilf/padic.hpp"
#include "wilf/report.hpp"

namespace wilf {

/// Caps for the modular engine.
struct EngineLimits {
  int max_modulus_exponent = 32;
  std::uint64_t max_index = 4'000'000;
};

/// Raised when a computed quantity contradicts a claim it is supposed to
/// witness (e.g. (P^48)_8 - I not divisible by 8).
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Smallest W with W - s₂(W) >= k, i.e. ν₂(W!) >= k.
Index trunc_width(int k);

/// Row e_start^T P^n mod 2^K, truncated to its first `width` columns.
///
/// Entries of P^n above the diagonal satisfy ν₂(P^n(r, r+i)) >= ν₂(i!), so
/// once width - start >= trunc_width(K) the dropped column is ≡ 0 mod 2^K at
/// every step and the kept entries are exact mod 2^K. Each step updates
/// entry s from entries s-1, s, s+1 through the three diagonals of P:
///   v'(s) = -s·v(s-1) + (s-1)·v(s) + v(s+1).
class ModularRow {
 public:
  /// Row 0 at n = 0 with the minimal sound width.
  explicit ModularRow(int k) : ModularRow(k, 0, 0) {}

  /// Row `start` at n = 0; width is raised to the minimal sound value if smaller.
  ModularRow(int k, Index start, Index width);

  int modulus_exponent() const { return k_; }
  Index width() const { return entries_.size(); }
  std::uint64_t exponent() const { return n_; }

  void step();
  void advance(std::uint64_t steps) {
    for (std::uint64_t i = 0; i < steps; ++i) step();
  }

  /// P^n(start, s) mod 2^K.
  Residue operator[](Index s) const { return low_bits(entries_.at(s), k_); }

 private:
  int k_;
  std::uint64_t n_ = 0;
  std::vector<Residue> entries_;
  std::vector<Residue> scratch_;
};

/// B±(n) mod 2^K in O(n·trunc_width(K)) word operations.
Residue bellpm_mod(std::uint64_t n, int k, const EngineLimits& limits = {});

/// B±(0..n_max) mod 2^K from a single pass.
std::vector<Residue> bellpm_mod_sequence(std::uint64_t n_max, int k, const EngineLimits& limits = {});

/// P^n(r,s) mod 2^K for 0 <= r <= r_max and 0 <= s < cols (cols defaults to
/// r_max + 1), one ModularRow per basis row.
DenseMatrix<Residue> pn_top_rows_mod(std::uint64_t n, int k, Index r_max, Index cols = 0,
                                     const EngineLimits& limits = {});

/// P^n(r,0) mod 2^K for r <= r_max via the symmetry
/// P^n(r,0) = (-1)^r P^n(0,r) / r!: row 0 is computed with ν₂(r_max!) guard
/// bits, shifted right by ν₂(r!) and multiplied by the inverse of the odd part.
std::vector<Residue> pn_first_column_mod(std::uint64_t n, int k, Index r_max, const EngineLimits& limits = {});

/// Inverse of an odd residue mod 2^64.
Residue inverse_odd(Residue a);

/// 8×8 matrix over {0..15} with (P^48)_8 ≡ I + 8Q (mod 2^7).
using QMatrix = Eigen::Matrix<Residue, 8, 8>;

/// The matrix as printed alongside the proof of the Q² ≡ 0 (mod 4) property.
QMatrix reference_q();

/// Q from (P_44)^48 mod 2^7. Throws VerificationError if (P^48)_8 - I is not
/// divisible by 8.
QMatrix extract_q();

/// Q² mod 4.
QMatrix q_squared_mod4(const QMatrix& q);

Report verify_lemma_q();

/// ν₂(P^48 - I) against the block pattern, exact arithmetic, window
/// 0..tail_end in both indices.
Report verify_prop_m4(Index tail_end = 120);

/// ν₂(P^{d_m} - I) against the block pattern for 4 <= m <= 6, mod 2^{m+8}.
Report verify_prop_pdm(int m);

/// (P^{d_m})_8 ≡ I + 2^{m-1} Q (mod 2^{m+3}) for 4 <= m <= 8.
Report verify_t8(int m);

/// (P^{n d_m})_8 ≡ I + n 2^{m-1} Q (mod 2^{m+3}) and P^{n d_m}(r,s) ≡ 0
/// (mod 2^{m+3}) for r <= 7, 8 <= s <= n d_m + 7; requires n d_m <= 4000.
Report verify_ndm(std::uint64_t n, int m);

/// ν₂(P^{d_m}(r,s)) >= m+7 for r <= 7 and d_{m-1}+8 <= s <= r + d_m, m >= 3.
Report verify_lemma_m7c(int m);

/// min{M+1, M*M} for M = prop_pdm(m) dominates the displayed square step, and
/// re-blocked it dominates prop_pdm(m+1) outside the top-row blocks covered by
/// the m7(c) bound.
Report verify_pdm_induction(int m);

}  // namespace wilf
