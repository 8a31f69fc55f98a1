#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <type_traits>

#include "wilf/banded_matrix.hpp"
#include "wilf/combinatorics.hpp"
#include "wilf/report.hpp"

namespace wilf {

using ExactMatrix = BandedMatrix<BigInt>;
using ResidueMatrix = BandedMatrix<Residue>;

/// Entry (r,s) of the infinite tridiagonal matrix P with P^n(0,0) = B±(n):
/// P(r+1,r) = 1, P(r,r) = r-1, P(r,r+1) = -(r+1), zero elsewhere.
std::int64_t p_entry(Index r, Index s);

/// P_N, the top-left N×N corner of P (band 1).
template <typename Scalar>
BandedMatrix<Scalar> truncate_p(Index size) {
  BandedMatrix<Scalar> out(static_cast<Eigen::Index>(size), 1);
  for (Index r = 0; r < size; ++r) {
    if (r >= 1) out(r, r - 1) = Scalar(1);
    if constexpr (std::is_same_v<Scalar, Residue>) {
      out(r, r) = to_residue(p_entry(r, r));
      if (r + 1 < size) out(r, r + 1) = to_residue(p_entry(r, r + 1));
    } else {
      out(r, r) = Scalar(static_cast<long>(p_entry(r, r)));
      if (r + 1 < size) out(r, r + 1) = Scalar(static_cast<long>(p_entry(r, r + 1)));
    }
  }
  return out;
}

/// Exact A^i.
ExactMatrix power_exact(const ExactMatrix& a, std::size_t i);

/// A^i with entries reduced mod 2^k.
ResidueMatrix power_mod(const ResidueMatrix& a, std::size_t i, int k);

/// True iff (P_N)^i(r,s) is guaranteed to equal P^i(r,s): r + s + i <= 2N - 1.
bool valid_window(Index size, std::size_t exponent, Index r, Index s);

/// Smallest truncation size N such that every entry (r,s) with r,s < window
/// satisfies valid_window(N, exponent, r, s).
Index truncation_size_for(Index window, std::size_t exponent);

/// The exact top-left window×window corner of the infinite power P^i,
/// computed from a truncation whose size is chosen by valid_window.
ExactMatrix p_power_window(std::size_t exponent, Index window);

/// Same corner reduced mod 2^k.
ResidueMatrix p_power_window_mod(std::size_t exponent, Index window, int k);

/// Closed forms for the seven non-zero diagonals of P^3. For offset = +i the
/// result is P^3(r, r+i); for offset = -i it is P^3(r+i, r), i.e. the row
/// index is r + |offset| and r names the column.
BigInt p3_closed_form(Index r, int offset);

struct SymmetryResult {
  bool holds = true;
  Index checked = 0;
  std::optional<std::pair<Index, Index>> first_violation;
};

/// Checks (-1)^r r! A(r,s) = (-1)^s s! A(s,r) for A = (P_N)^j on every pair
/// (r,s) inside the valid_window of (N, j).
SymmetryResult check_symmetry(const ExactMatrix& a_is_pj, std::size_t j);

/// True iff every block on or above the block diagonal of (A - I if flagged)[n_block]
/// is even.
bool block_strict_lower_mod2(const ExactMatrix& a, Index n_block, bool subtract_identity);

/// True iff, in (A - I)[n_block], every block (R,S) with S >= R - lower_diagonals
/// is even: all upper block diagonals, the main one, and the given number of
/// lower ones.
bool block_even_above(const ExactMatrix& a, Index n_block, Index lower_diagonals, bool subtract_identity);

/// The factorial symmetry of P^j checked on the exact window×window corner of P^j.
Report verify_symmetry(std::size_t j, Index window);

/// The seven P^3 diagonal formulas against the exact cube on rows 0..window-4.
Report verify_p3(Index window = 20);

/// In (P^48)[8] - I the upper block diagonals, the main one and the first
/// three lower ones are even; checked on the exact window×window corner.
Report verify_lemma_m7b(Index window = 64);

}  // namespace wilf
