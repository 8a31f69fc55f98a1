#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>

#include <Eigen/Core>

#include "wilf/bigint.hpp"

namespace wilf {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Square matrix with a declared bandwidth: entry(r,s) == 0 whenever |r-s| > band().
/// Storage is dense; the band only drives invariant checks and lets the
/// product skip structurally zero terms.
template <typename Scalar>
class BandedMatrix {
 public:
  using Index = Eigen::Index;

  BandedMatrix() = default;
  BandedMatrix(Index size, Index band) : entries_(DenseMatrix<Scalar>::Zero(size, size)), band_(clamp_band(size, band)) {}
  BandedMatrix(DenseMatrix<Scalar> entries, Index band)
      : entries_(std::move(entries)), band_(clamp_band(entries_.rows(), band)) {
    if (entries_.rows() != entries_.cols()) throw std::invalid_argument("BandedMatrix must be square");
  }

  static BandedMatrix identity(Index size) {
    return BandedMatrix(DenseMatrix<Scalar>::Identity(size, size), 0);
  }

  Index size() const { return entries_.rows(); }
  Index band() const { return band_; }

  const Scalar& operator()(Index r, Index s) const { return entries_(r, s); }
  Scalar& operator()(Index r, Index s) { return entries_(r, s); }

  const DenseMatrix<Scalar>& entries() const { return entries_; }

  /// True when every entry outside the declared band is zero.
  bool respects_band() const {
    for (Index s = 0; s < size(); ++s)
      for (Index r = 0; r < size(); ++r)
        if (std::abs(static_cast<long long>(r - s)) > band_ && entries_(r, s) != Scalar(0)) return false;
    return true;
  }

  /// Smallest j such that the matrix is j-diagonal.
  Index measured_band() const {
    Index b = 0;
    for (Index s = 0; s < size(); ++s)
      for (Index r = 0; r < size(); ++r)
        if (entries_(r, s) != Scalar(0)) b = std::max<Index>(b, r > s ? r - s : s - r);
    return b;
  }

  /// Top-left k×k corner, keeping the band.
  BandedMatrix corner(Index k) const { return BandedMatrix(entries_.topLeftCorner(k, k), band_); }

  template <typename Other, typename Convert>
  BandedMatrix<Other> cast_with(Convert convert) const {
    DenseMatrix<Other> out(size(), size());
    for (Index s = 0; s < size(); ++s)
      for (Index r = 0; r < size(); ++r) out(r, s) = convert(entries_(r, s));
    return BandedMatrix<Other>(std::move(out), band_);
  }

 private:
  static Index clamp_band(Index size, Index band) { return std::min<Index>(band, size > 0 ? size - 1 : 0); }

  DenseMatrix<Scalar> entries_;
  Index band_ = 0;
};

/// Product of banded matrices. Terms outside either band are skipped; the
/// result is declared (band(a)+band(b))-diagonal.
template <typename Scalar>
BandedMatrix<Scalar> multiply(const BandedMatrix<Scalar>& a, const BandedMatrix<Scalar>& b) {
  using Index = typename BandedMatrix<Scalar>::Index;
  if (a.size() != b.size()) throw std::invalid_argument("multiply: size mismatch");
  const Index n = a.size();
  const Index ba = a.band();
  const Index bb = b.band();
  BandedMatrix<Scalar> out(n, ba + bb);
  const Index bo = out.band();
  for (Index s = 0; s < n; ++s) {
    const Index r_lo = std::max<Index>(0, s - bo);
    const Index r_hi = std::min<Index>(n - 1, s + bo);
    for (Index r = r_lo; r <= r_hi; ++r) {
      const Index t_lo = std::max<Index>({Index{0}, r - ba, s - bb});
      const Index t_hi = std::min<Index>({n - 1, r + ba, s + bb});
      Scalar acc(0);
      for (Index t = t_lo; t <= t_hi; ++t) accumulate_product(acc, a(r, t), b(t, s));
      out(r, s) = std::move(acc);
    }
  }
  return out;
}

template <typename Scalar>
BandedMatrix<Scalar> operator*(const BandedMatrix<Scalar>& a, const BandedMatrix<Scalar>& b) {
  return multiply(a, b);
}

/// a^i by binary exponentiation; a^0 is the identity.
template <typename Scalar>
BandedMatrix<Scalar> power(const BandedMatrix<Scalar>& a, std::size_t i) {
  auto result = BandedMatrix<Scalar>::identity(a.size());
  if (i == 0) return result;
  BandedMatrix<Scalar> base = a;
  bool first = true;
  while (true) {
    if (i & 1U) {
      result = first ? base : multiply(result, base);
      first = false;
    }
    i >>= 1U;
    if (i == 0) break;
    base = multiply(base, base);
  }
  return result;
}

/// a - I.
template <typename Scalar>
BandedMatrix<Scalar> minus_identity(BandedMatrix<Scalar> a) {
  for (Eigen::Index k = 0; k < a.size(); ++k) a(k, k) -= Scalar(1);
  return a;
}

/// The n-block form A[n]: block(r,s) = A(I_r, I_s) with I_k = {kn, ..., (k+1)n-1}.
template <typename Scalar>
class BlockView {
 public:
  using Index = Eigen::Index;

  BlockView(const BandedMatrix<Scalar>& base, Index block_size) : base_(&base), block_size_(block_size) {
    if (block_size <= 0) throw std::invalid_argument("BlockView: block size must be positive");
  }

  Index block_size() const { return block_size_; }
  /// Number of complete blocks along each axis.
  Index blocks() const { return base_->size() / block_size_; }
  bool tiles_exactly() const { return base_->size() % block_size_ == 0; }

  auto block(Index r, Index s) const {
    return base_->entries().block(r * block_size_, s * block_size_, block_size_, block_size_);
  }

 private:
  const BandedMatrix<Scalar>* base_;
  Index block_size_;
};

/// Reduce every entry of a residue matrix mod 2^k.
inline BandedMatrix<Residue> reduce_mod_pow2(BandedMatrix<Residue> a, int k) {
  for (Eigen::Index s = 0; s < a.size(); ++s)
    for (Eigen::Index r = 0; r < a.size(); ++r) a(r, s) = low_bits(a(r, s), k);
  return a;
}

}  // namespace wilf
