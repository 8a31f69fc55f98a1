#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>
#include <Eigen/Core>

namespace wilf {

/// Arbitrary-precision signed integer used for every exact value in the library.
using BigInt = mpz_class;

/// Residue word. All modular arithmetic wraps mod 2^64 and is reduced to the
/// requested 2^K on extraction, so K ranges over 1..64 internally.
using Residue = std::uint64_t;

inline Residue low_bits(Residue x, int k) {
  return k >= 64 ? x : (x & ((Residue{1} << k) - 1));
}

/// Two's-complement image of an exact integer in Z/2^64.
inline Residue to_residue(const BigInt& x) {
  mpz_class r;
  mpz_fdiv_r_2exp(r.get_mpz_t(), x.get_mpz_t(), 64);
  Residue out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, r.get_mpz_t());
  return out;
}

inline Residue to_residue(std::int64_t x) { return static_cast<Residue>(x); }

/// log10|x|; x must be non-zero.
double log10_abs(const BigInt& x);

inline std::string to_string(const BigInt& x) { return x.get_str(); }

// Fused accumulate used by the scalar-generic matrix kernels.
inline void accumulate_product(BigInt& acc, const BigInt& a, const BigInt& b) {
  mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}
inline void accumulate_product(Residue& acc, Residue a, Residue b) { acc += a * b; }

}  // namespace wilf

namespace Eigen {

template <>
struct NumTraits<wilf::BigInt> : GenericNumTraits<wilf::BigInt> {
  using Real = wilf::BigInt;
  using NonInteger = wilf::BigInt;
  using Nested = wilf::BigInt;
  using Literal = wilf::BigInt;
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

}  // namespace Eigen
