#include "wilf/padic.hpp"

#include <algorithm>
#include <bit>

namespace wilf {

Valuation nu2(const BigInt& x) {
  if (x == 0) return kInfinity;
  return Valuation(static_cast<std::uint32_t>(mpz_scan1(x.get_mpz_t(), 0)));
}

Valuation nu2(std::uint64_t x) {
  if (x == 0) return kInfinity;
  return Valuation(static_cast<std::uint32_t>(std::countr_zero(x)));
}

ValuationBound nu2_mod(Residue x, int k) {
  const Residue r = low_bits(x, k);
  if (r == 0) return {Valuation(static_cast<std::uint32_t>(k)), false};
  return {nu2(r), true};
}

std::uint32_t binary_digit_sum(std::uint64_t n) { return static_cast<std::uint32_t>(std::popcount(n)); }

Valuation legendre_nu2_factorial(std::uint64_t n) {
  return Valuation(static_cast<std::uint32_t>(n - binary_digit_sum(n)));
}

ValuationMatrix constant_valuations(Eigen::Index rows, Eigen::Index cols, Valuation v) {
  return ValuationMatrix::Constant(rows, cols, v);
}

ValuationMatrix minplus_identity(Eigen::Index size) {
  ValuationMatrix out = constant_valuations(size, size, kInfinity);
  for (Eigen::Index k = 0; k < size; ++k) out(k, k) = Valuation(0);
  return out;
}

ValuationMatrix minplus_product(const ValuationMatrix& m, const ValuationMatrix& n) {
  if (m.cols() != n.rows()) throw std::invalid_argument("minplus_product: shape mismatch");
  ValuationMatrix out = constant_valuations(m.rows(), n.cols(), kInfinity);
  for (Eigen::Index s = 0; s < n.cols(); ++s) {
    for (Eigen::Index t = 0; t < m.cols(); ++t) {
      const Valuation right = n(t, s);
      if (right.is_infinite()) continue;
      for (Eigen::Index r = 0; r < m.rows(); ++r) out(r, s) = std::min(out(r, s), m(r, t) + right);
    }
  }
  return out;
}

ValuationMatrix plus_one(ValuationMatrix m) {
  for (auto& v : m.reshaped()) v = v + Valuation(1);
  return m;
}

ValuationMatrix entrywise_min(const ValuationMatrix& a, const ValuationMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("entrywise_min: shape mismatch");
  ValuationMatrix out(a.rows(), a.cols());
  for (Eigen::Index s = 0; s < a.cols(); ++s)
    for (Eigen::Index r = 0; r < a.rows(); ++r) out(r, s) = std::min(a(r, s), b(r, s));
  return out;
}

ValuationMatrix lemma_sqr_bound(const ValuationMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("lemma_sqr_bound: matrix must be square");
  return entrywise_min(plus_one(m), minplus_product(m, m));
}

std::vector<std::pair<Eigen::Index, Eigen::Index>> dominance_violations(const ValuationMatrix& found,
                                                                        const ValuationMatrix& bound) {
  if (found.rows() != bound.rows() || found.cols() != bound.cols())
    throw std::invalid_argument("dominance_violations: shape mismatch");
  std::vector<std::pair<Eigen::Index, Eigen::Index>> out;
  for (Eigen::Index r = 0; r < found.rows(); ++r)
    for (Eigen::Index s = 0; s < found.cols(); ++s)
      if (found(r, s) < bound(r, s)) out.emplace_back(r, s);
  return out;
}

namespace {

Valuation pick(const std::vector<Valuation>& v, Eigen::Index k) {
  return k >= 0 && k < static_cast<Eigen::Index>(v.size()) ? v[static_cast<std::size_t>(k)] : kInfinity;
}

Valuation fin(std::uint32_t v) { return Valuation(v); }

// Tail shared by the two patterns: upper block diagonals and the main one are
// even, the first two lower block diagonals carry no information, and the
// third lower one lies outside the band.
void set_tail(BoundPattern& p) {
  p.left = {fin(1), fin(0), fin(0), kInfinity};
  p.upper = {fin(1), fin(1), fin(1), fin(1)};
  p.lower = {fin(0), fin(0), kInfinity};
}

}  // namespace

Valuation BoundPattern::at(Eigen::Index r, Eigen::Index s) const {
  const Eigen::Index br = block_of(r);
  const Eigen::Index bs = block_of(s);
  if (br == 0) return pick(top, bs);
  if (bs == 0) return pick(left, br - 1);
  if (bs >= br) return pick(upper, bs - br);
  return pick(lower, br - bs - 1);
}

BoundPattern BoundPattern::prop_m4() {
  BoundPattern p = prop_pdm(4);
  p.name = "prop-m4";
  return p;
}

BoundPattern BoundPattern::prop_pdm(int m) {
  if (m < 4) throw std::invalid_argument("prop_pdm requires m >= 4");
  const auto mu = static_cast<std::uint32_t>(m);
  BoundPattern p;
  p.name = "prop-pdm(m=" + std::to_string(m) + ")";
  p.strip = 8;
  p.width = static_cast<Eigen::Index>(d_m(m - 1));
  p.top = {fin(mu - 1), fin(mu + 3), fin(mu + 7), fin(mu + 7), kInfinity};
  set_tail(p);
  return p;
}

BoundPattern BoundPattern::pdm_square_step(int m) {
  if (m < 4) throw std::invalid_argument("pdm_square_step requires m >= 4");
  const auto mu = static_cast<std::uint32_t>(m);
  BoundPattern p;
  p.name = "pdm-square-step(m=" + std::to_string(m) + ")";
  p.strip = 8;
  p.width = static_cast<Eigen::Index>(d_m(m - 1));
  p.top = {fin(mu), fin(mu + 4), fin(mu + 4), fin(mu + 4), fin(mu + 4), fin(mu + 5), fin(mu + 5), kInfinity};
  p.left = {fin(1), fin(1), fin(0), fin(0), fin(0), fin(0), kInfinity};
  p.upper = {fin(1), fin(1), fin(1), fin(1), fin(1), fin(1), fin(1)};
  p.lower = {fin(1), fin(0), fin(0), fin(0), fin(0), fin(0)};
  return p;
}

ValuationMatrix pattern_window(const BoundPattern& p, Eigen::Index rows, Eigen::Index cols) {
  ValuationMatrix out(rows, cols);
  for (Eigen::Index s = 0; s < cols; ++s)
    for (Eigen::Index r = 0; r < rows; ++r) out(r, s) = p.at(r, s);
  return out;
}

}  // namespace wilf
