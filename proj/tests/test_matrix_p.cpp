#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "wilf/combinatorics.hpp"
#include "wilf/matrix_p.hpp"
#include "wilf/padic.hpp"

using namespace wilf;

TEST_CASE("entries of P") {
  CHECK(p_entry(0, 0) == -1);
  CHECK(p_entry(0, 1) == -1);
  CHECK(p_entry(1, 2) == -2);
  CHECK(p_entry(5, 4) == 1);
  CHECK(p_entry(0, 2) == 0);
  for (Index r = 0; r < 12; ++r)
    for (Index s = 0; s < 12; ++s)
      CHECK(p_entry(r, s) == oracle::p(static_cast<std::int64_t>(r), static_cast<std::int64_t>(s)));
}

TEST_CASE("truncations of P") {
  const auto p1 = truncate_p<BigInt>(1);
  CHECK(p1.size() == 1);
  CHECK(p1(0, 0) == -1);
  const auto p2 = truncate_p<BigInt>(2);
  CHECK(p2(0, 0) == -1);
  CHECK(p2(0, 1) == -1);
  CHECK(p2(1, 0) == 1);
  CHECK(p2(1, 1) == 0);
  const auto pr = truncate_p<Residue>(4);
  CHECK(pr(1, 2) == to_residue(std::int64_t{-2}));
}

TEST_CASE("power_exact") {
  const auto p2 = truncate_p<BigInt>(2);
  CHECK(power_exact(p2, 3)(0, 0) == 1);
  const auto id = power_exact(truncate_p<BigInt>(5), 0);
  for (Eigen::Index r = 0; r < 5; ++r)
    for (Eigen::Index s = 0; s < 5; ++s) CHECK(id(r, s) == (r == s ? 1 : 0));
}

TEST_CASE("power_exact agrees with schoolbook products") {
  const Index n = 10;
  oracle::Dense p(n, std::vector<BigInt>(n, 0));
  for (Index r = 0; r < n; ++r)
    for (Index s = 0; s < n; ++s) p[r][s] = oracle::p(static_cast<std::int64_t>(r), static_cast<std::int64_t>(s));
  oracle::Dense acc = p;
  for (std::size_t j = 2; j <= 7; ++j) {
    acc = oracle::multiply(acc, p);
    const auto fast = power_exact(truncate_p<BigInt>(n), j);
    for (Index r = 0; r < n; ++r)
      for (Index s = 0; s < n; ++s)
        CHECK(fast(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(s)) == acc[r][s]);
  }
}

TEST_CASE("P^n(0,0) is B±(n) on a valid window") {
  for (std::size_t n = 0; n <= 60; ++n) {
    const Index size = truncation_size_for(1, n);
    REQUIRE(valid_window(size, n, 0, 0));
    CHECK(power_exact(truncate_p<BigInt>(size), n)(0, 0) == bell_pm_exact(n));
  }
}

TEST_CASE("valid_window") {
  CHECK(valid_window(44, 48, 7, 31));
  CHECK_FALSE(valid_window(43, 48, 7, 31));
  CHECK(valid_window(2, 3, 0, 0));
  CHECK_FALSE(valid_window(2, 4, 0, 0));
  CHECK(truncation_size_for(8, 48) >= 32);
  CHECK(valid_window(truncation_size_for(8, 48), 48, 7, 7));
}

TEST_CASE("modular powers agree with exact powers") {
  const auto exact = power_exact(truncate_p<BigInt>(20), 13);
  const auto mod = power_mod(truncate_p<Residue>(20), 13, 16);
  for (Eigen::Index r = 0; r < 20; ++r)
    for (Eigen::Index s = 0; s < 20; ++s) CHECK(low_bits(to_residue(exact(r, s)), 16) == mod(r, s));
}

TEST_CASE("closed forms for P^3") {
  const auto cube = p_power_window(3, 20);
  CHECK(cube(0, 0) == 1);
  CHECK(p3_closed_form(0, 0) == 1);
  for (Index r = 0; r + 3 < 20; ++r) {
    CHECK(p3_closed_form(r, -3) == 1);
    const auto ri = static_cast<Eigen::Index>(r);
    CHECK(cube(ri + 3, ri) == 1);
    CHECK(cube(ri + 2, ri) == p3_closed_form(r, -2));
    CHECK(cube(ri + 1, ri) == p3_closed_form(r, -1));
    CHECK(cube(ri, ri) == p3_closed_form(r, 0));
    CHECK(cube(ri, ri + 1) == p3_closed_form(r, 1));
    CHECK(cube(ri, ri + 2) == p3_closed_form(r, 2));
    CHECK(cube(ri, ri + 3) == p3_closed_form(r, 3));
  }
  CHECK(verify_p3(20).passed());
}

TEST_CASE("symmetry (-1)^r r! P^j(r,s) = (-1)^s s! P^j(s,r)") {
  const auto p = truncate_p<BigInt>(20);
  const auto one = check_symmetry(p, 1);
  CHECK(one.holds);
  CHECK(one.checked > 0);
  CHECK(check_symmetry(power_exact(p, 3), 3).holds);
  CHECK(verify_symmetry(48, 60).passed());

  // a corrupted entry is caught
  auto bad = power_exact(p, 3);
  bad(1, 2) += 1;
  const auto res = check_symmetry(bad, 3);
  CHECK_FALSE(res.holds);
  REQUIRE(res.first_violation.has_value());
  CHECK(res.first_violation->first == 1);
  CHECK(res.first_violation->second == 2);
}

TEST_CASE("powers of P are banded by the exponent") {
  const Index n = 24;
  const auto p = truncate_p<BigInt>(n);
  auto acc = ExactMatrix::identity(static_cast<Eigen::Index>(n));
  for (Index j = 1; j <= n; ++j) {
    acc = acc * p;
    CHECK(acc.measured_band() <= static_cast<Eigen::Index>(j));
    CHECK(acc.respects_band());
  }
}

TEST_CASE("block_strict_lower_mod2") {
  CHECK(block_strict_lower_mod2(p_power_window(3, 20), 2, true));
  CHECK(block_strict_lower_mod2(ExactMatrix::identity(6), 2, true));
  CHECK_FALSE(block_strict_lower_mod2(truncate_p<BigInt>(20), 2, true));
  CHECK_THROWS_AS(block_strict_lower_mod2(truncate_p<BigInt>(5), 2, true), std::invalid_argument);
}

TEST_CASE("squares of strictly lower triangular matrices") {
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<int> entry(-9, 9);
  std::uniform_int_distribution<int> size_dist(2, 12);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = static_cast<Eigen::Index>(size_dist(rng));
    ExactMatrix a(n, n - 1);
    for (Eigen::Index r = 0; r < n; ++r)
      for (Eigen::Index s = 0; s < r; ++s) a(r, s) = entry(rng);
    const auto a2 = a * a;
    const auto a4 = a2 * a2;
    for (Eigen::Index r = 0; r < n; ++r) {
      for (Eigen::Index s = 0; s < n; ++s) {
        if (r - s < 2) CHECK(a2(r, s) == 0);
        if (r - s < 4) CHECK(a4(r, s) == 0);
      }
    }
  }
}

TEST_CASE("entries near the diagonal of P^48 minus I are even") {
  const auto rep = verify_lemma_m7b(64);
  CHECK(rep.passed());
  CHECK(rep.checked > 0);
  CHECK(rep.window["truncation_size"].get<Index>() >= 64);
}

TEST_CASE("BlockView tiles a matrix") {
  const auto a = p_power_window(3, 16);
  BlockView<BigInt> view(a, 8);
  CHECK(view.blocks() == 2);
  CHECK(view.tiles_exactly());
  CHECK(view.block(1, 0)(0, 5) == a(8, 5));
  CHECK_THROWS_AS(BlockView<BigInt>(a, 0), std::invalid_argument);
}
