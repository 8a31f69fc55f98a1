#include "wilf/combinatorics.hpp"

#include <cmath>
#include <mutex>
#include <shared_mutex>
#include <string>

namespace wilf {

double log10_abs(const BigInt& x) {
  if (x == 0) throw std::domain_error("log10_abs of zero");
  long exp2 = 0;
  const double mant = mpz_get_d_2exp(&exp2, x.get_mpz_t());
  return std::log10(std::fabs(mant)) + static_cast<double>(exp2) * std::log10(2.0);
}

StirlingTable::StirlingTable(Index max_n) {
  rows_.push_back({BigInt(1)});
  extend(max_n);
}

void StirlingTable::extend(Index n) {
  while (rows_.size() <= n) {
    const auto& prev = rows_.back();
    const Index m = rows_.size();  // index of the new row
    std::vector<BigInt> row(m + 1);
    for (Index k = 1; k <= m; ++k) {
      BigInt v = prev.size() > k - 1 ? prev[k - 1] : BigInt(0);
      if (k < prev.size()) v += BigInt(static_cast<unsigned long>(k)) * prev[k];
      row[k] = std::move(v);
    }
    rows_.push_back(std::move(row));
  }
}

const BigInt& StirlingTable::operator()(Index n, Index k) const {
  static const BigInt zero(0);
  if (n >= rows_.size()) throw std::out_of_range("StirlingTable: row " + std::to_string(n) + " not built");
  return k <= n ? rows_[n][k] : zero;
}

namespace {

struct SharedStirling {
  std::shared_mutex mutex;
  StirlingTable table;
};

SharedStirling& shared_stirling() {
  static SharedStirling s;
  return s;
}

}  // namespace

BigInt stirling2(Index n, Index k) {
  auto& s = shared_stirling();
  {
    std::shared_lock lock(s.mutex);
    if (n <= s.table.max_n()) return s.table(n, k);
  }
  std::unique_lock lock(s.mutex);
  s.table.extend(n);
  return s.table(n, k);
}

BigInt bell_pm_direct(Index n) {
  BigInt sum(0);
  for (Index k = 0; k <= n; ++k) {
    if (k % 2 == 0)
      sum += stirling2(n, k);
    else
      sum -= stirling2(n, k);
  }
  return sum;
}

BigInt descending_factorial(const BigInt& x, Index r) {
  BigInt out(1);
  for (Index i = 0; i < r; ++i) out *= x - static_cast<unsigned long>(i);
  return out;
}

BigInt LambdaCoeffs::evaluate(const BigInt& k) const {
  BigInt sum(0);
  for (Index r = 0; r < coeffs.size(); ++r) sum += coeffs[r] * descending_factorial(k, r);
  return sum;
}

LambdaCoeffs lambda_step(const LambdaCoeffs& c) {
  const auto& in = c.coeffs;
  const Index len = in.size();
  LambdaCoeffs out;
  out.n = c.n + 1;
  out.coeffs.assign(len + 1, BigInt(0));
  for (Index r = 0; r <= len; ++r) {
    mpz_ptr acc = out.coeffs[r].get_mpz_t();
    if (r >= 1) mpz_add(acc, acc, in[r - 1].get_mpz_t());
    if (r < len) {
      // (r-1) c(r), with r-1 = -1 at r = 0
      if (r == 0)
        mpz_sub(acc, acc, in[0].get_mpz_t());
      else
        mpz_addmul_ui(acc, in[r].get_mpz_t(), r - 1);
    }
    if (r + 1 < len) mpz_submul_ui(acc, in[r + 1].get_mpz_t(), r + 1);
  }
  return out;
}

LambdaCoeffs lambda_coeffs(Index n) {
  LambdaCoeffs c;
  for (Index i = 0; i < n; ++i) c = lambda_step(c);
  return c;
}

namespace {

void check_exact_cap(Index n, Index cap) {
  if (n > cap)
    throw CapExceeded("exact computation of B±(" + std::to_string(n) + ") exceeds n_max_exact=" +
                      std::to_string(cap));
}

}  // namespace

BigInt bell_pm_exact(Index n, Index cap) {
  check_exact_cap(n, cap);
  return lambda_coeffs(n).coeffs[0];
}

std::vector<BigInt> bell_pm_exact_range(Index n, Index cap) {
  check_exact_cap(n, cap);
  std::vector<BigInt> out;
  out.reserve(n + 1);
  LambdaCoeffs c;
  out.push_back(c.coeffs[0]);
  for (Index i = 0; i < n; ++i) {
    c = lambda_step(c);
    out.push_back(c.coeffs[0]);
  }
  return out;
}

}  // namespace wilf
