#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "wilf/bigint.hpp"

namespace wilf {

using Index = std::size_t;

/// Thrown when a request exceeds a configured computation cap.
class CapExceeded : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Triangular table of Stirling numbers of the second kind, S(n,k) for
/// 0 <= k <= n <= max_n, filled by S(n+1,k) = S(n,k-1) + k S(n,k).
class StirlingTable {
 public:
  explicit StirlingTable(Index max_n = 0);

  /// Extends the table so that max_n() >= n.
  void extend(Index n);

  Index max_n() const { return rows_.size() - 1; }

  /// S(n,k); zero outside the triangle. Requires n <= max_n().
  const BigInt& operator()(Index n, Index k) const;

 private:
  std::vector<std::vector<BigInt>> rows_;
};

/// S(n,k) from a process-wide memoized table. Concurrent readers are allowed;
/// growth of the table takes an exclusive lock.
BigInt stirling2(Index n, Index k);

/// B±(n) as the alternating row sum of Stirling numbers.
BigInt bell_pm_direct(Index n);

/// Coefficients of λ_n(x) in the descending-factorial basis:
/// λ_n(x) = Σ_r coeffs[r] (x)_r. Equivalently coeffs[r] = P^n(r,0).
struct LambdaCoeffs {
  Index n = 0;
  std::vector<BigInt> coeffs{BigInt(1)};

  /// λ_n(k) evaluated through the descending factorials (k)_r.
  BigInt evaluate(const BigInt& k) const;
};

/// λ_{n+1} from λ_n: c'(r) = c(r-1) + (r-1) c(r) - (r+1) c(r+1).
LambdaCoeffs lambda_step(const LambdaCoeffs& c);

/// λ_n for the given n, from λ_0 = 1.
LambdaCoeffs lambda_coeffs(Index n);

/// Descending factorial (x)_r = x (x-1) ... (x-r+1), (x)_0 = 1.
BigInt descending_factorial(const BigInt& x, Index r);

inline constexpr Index kDefaultExactCap = 2000;

/// B±(n) = λ_n(0), computed by iterating lambda_step. Throws CapExceeded when
/// n > cap.
BigInt bell_pm_exact(Index n, Index cap = kDefaultExactCap);

/// B±(0..n) in one pass of the λ recursion.
std::vector<BigInt> bell_pm_exact_range(Index n, Index cap = kDefaultExactCap);

}  // namespace wilf
