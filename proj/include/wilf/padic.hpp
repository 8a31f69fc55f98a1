#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "wilf/banded_matrix.hpp"
#include "wilf/bigint.hpp"
#include "wilf/combinatorics.hpp"

namespace wilf {

/// Element of Z+ ∪ {∞}. Infinity is a separate state, never a large number,
/// so sums cannot wrap.
class Valuation {
 public:
  constexpr Valuation() = default;
  constexpr explicit Valuation(std::uint32_t v) : value_(v) {}

  static constexpr Valuation infinity() {
    Valuation v;
    v.infinite_ = true;
    return v;
  }

  constexpr bool is_infinite() const { return infinite_; }
  constexpr bool is_finite() const { return !infinite_; }

  std::uint32_t value() const {
    if (infinite_) throw std::logic_error("value() of infinite valuation");
    return value_;
  }

  friend constexpr Valuation operator+(Valuation a, Valuation b) {
    if (a.infinite_ || b.infinite_) return infinity();
    return Valuation(a.value_ + b.value_);
  }

  friend constexpr bool operator==(Valuation a, Valuation b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }

  friend constexpr std::strong_ordering operator<=>(Valuation a, Valuation b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.value_ <=> b.value_;
  }

  std::string to_string() const { return infinite_ ? "inf" : std::to_string(value_); }

 private:
  std::uint32_t value_ = 0;
  bool infinite_ = false;
};

inline constexpr Valuation kInfinity = Valuation::infinity();

/// Valuation read off a residue mod 2^K: exact when below K, otherwise only
/// the bound "≥ K" is known.
struct ValuationBound {
  Valuation value;
  bool exact = true;

  bool at_least(std::uint32_t n) const { return value >= Valuation(n); }
  bool equals(std::uint32_t n) const { return exact && value == Valuation(n); }
  std::string to_string() const { return exact ? value.to_string() : ">=" + value.to_string(); }
  friend bool operator==(const ValuationBound&, const ValuationBound&) = default;
};

Valuation nu2(const BigInt& x);
Valuation nu2(std::uint64_t x);

/// ν₂ of a residue mod 2^k.
ValuationBound nu2_mod(Residue x, int k);

/// Number of ones in the binary expansion of n.
std::uint32_t binary_digit_sum(std::uint64_t n);

/// ν₂(n!) = n - s₂(n).
Valuation legendre_nu2_factorial(std::uint64_t n);

using ValuationMatrix = Eigen::Matrix<Valuation, Eigen::Dynamic, Eigen::Dynamic>;

/// Entrywise ν₂ of an exact matrix.
template <typename Derived>
ValuationMatrix nu2(const Eigen::MatrixBase<Derived>& a) {
  ValuationMatrix out(a.rows(), a.cols());
  for (Eigen::Index s = 0; s < a.cols(); ++s)
    for (Eigen::Index r = 0; r < a.rows(); ++r) out(r, s) = nu2(BigInt(a(r, s)));
  return out;
}

ValuationMatrix constant_valuations(Eigen::Index rows, Eigen::Index cols, Valuation v);

/// 0 on the diagonal, ∞ elsewhere.
ValuationMatrix minplus_identity(Eigen::Index size);

/// (M*N)(r,s) = min_t M(r,t) + N(t,s). Throws std::invalid_argument on shape mismatch.
ValuationMatrix minplus_product(const ValuationMatrix& m, const ValuationMatrix& n);

ValuationMatrix plus_one(ValuationMatrix m);
ValuationMatrix entrywise_min(const ValuationMatrix& a, const ValuationMatrix& b);

/// min{M + 1, M*M}: a lower bound for ν₂(A² - I) whenever ν₂(A - I) >= M.
ValuationMatrix lemma_sqr_bound(const ValuationMatrix& m);

/// Positions where found(r,s) < bound(r,s). Shapes must agree.
std::vector<std::pair<Eigen::Index, Eigen::Index>> dominance_violations(const ValuationMatrix& found,
                                                                        const ValuationMatrix& bound);

inline bool dominates(const ValuationMatrix& found, const ValuationMatrix& bound) {
  return dominance_violations(found, bound).empty();
}

/// A lower-bound valuation pattern written in block form: a square strip×strip
/// corner, block-wide strips along the top row and left column, and a tail
/// whose block diagonals are constant (the periodic "overline" extension).
/// Anything beyond the listed blocks is ∞.
///
/// Block 0 spans indices [0, strip); block k >= 1 spans
/// [strip + (k-1)·width, strip + k·width).
struct BoundPattern {
  std::string name;
  Eigen::Index strip = 8;
  Eigen::Index width = 1;
  std::vector<Valuation> top;    // top[k]: block (0,k)
  std::vector<Valuation> left;   // left[k-1]: block (k,0), k >= 1
  std::vector<Valuation> upper;  // upper[d]: tail blocks (R, R+d), R >= 1
  std::vector<Valuation> lower;  // lower[d-1]: tail blocks (R+d, R), R >= 1

  Eigen::Index block_of(Eigen::Index i) const { return i < strip ? 0 : 1 + (i - strip) / width; }
  Valuation at(Eigen::Index r, Eigen::Index s) const;

  /// Lower bound for ν₂(P^48 - I).
  static BoundPattern prop_m4();
  /// Lower bound for ν₂(P^{d_m} - I), m >= 4, d_m = 3·2^m.
  static BoundPattern prop_pdm(int m);
  /// The bound min{M+1, M*M} for M = prop_pdm(m), written with block width d_{m-1}.
  static BoundPattern pdm_square_step(int m);
};

/// d_m = 3·2^m.
inline constexpr std::uint64_t d_m(int m) { return std::uint64_t{3} << m; }

ValuationMatrix pattern_window(const BoundPattern& p, Eigen::Index rows, Eigen::Index cols);

}  // namespace wilf
