#include <doctest.h>

#include "oracles.hpp"
#include "wilf/combinatorics.hpp"
#include "wilf/matrix_p.hpp"
#include "wilf/modular.hpp"

using namespace wilf;

TEST_CASE("trunc_width") {
  CHECK(trunc_width(1) == 2);
  CHECK(trunc_width(7) == 8);
  CHECK(trunc_width(24) == 28);
  for (int k = 1; k <= 32; ++k) {
    const Index w = trunc_width(k);
    CHECK(legendre_nu2_factorial(w) >= Valuation(static_cast<std::uint32_t>(k)));
    CHECK(legendre_nu2_factorial(w - 1) < Valuation(static_cast<std::uint32_t>(k)));
  }
}

TEST_CASE("bellpm_mod agrees with exact values") {
  const auto exact = bell_pm_exact_range(300);
  for (int k : {4, 8, 16, 24}) {
    const auto seq = bellpm_mod_sequence(300, k);
    REQUIRE(seq.size() == 301);
    for (std::uint64_t n = 0; n <= 300; ++n) {
      const Residue want = low_bits(to_residue(exact[n]), k);
      CHECK(seq[n] == want);
      if (n % 37 == 0) CHECK(bellpm_mod(n, k) == want);
    }
  }
}

TEST_CASE("bellpm_mod examples") {
  CHECK(bellpm_mod(38, 8) == 128);
  for (int k = 1; k <= 32; ++k) CHECK(bellpm_mod(2, k) == 0);
  CHECK(bellpm_mod(0, 5) == 1);
  CHECK(bellpm_mod(1, 5) == 31);
}

TEST_CASE("caps are enforced") {
  CHECK_THROWS_AS(bellpm_mod(10, 33), CapExceeded);
  CHECK_THROWS_AS(bellpm_mod(10, 0), CapExceeded);
  CHECK_THROWS_AS(bellpm_mod(5'000'000, 8), CapExceeded);
  CHECK_THROWS_AS(bellpm_mod(100, 8, EngineLimits{32, 99}), CapExceeded);
}

TEST_CASE("a wider row does not change the residues") {
  for (int k : {3, 8, 16, 24}) {
    const Index w = trunc_width(k);
    ModularRow narrow(k, 0, w);
    ModularRow wide(k, 0, w + 8);
    for (std::uint64_t n = 0; n < 500; ++n) {
      CHECK(narrow[0] == wide[0]);
      narrow.step();
      wide.step();
    }
    CHECK(narrow.exponent() == 500);
  }
}

TEST_CASE("three routes to the top rows of P^n") {
  for (std::uint64_t n : {1, 3, 10, 48, 61}) {
    const int k = 12;
    const auto exact = p_power_window(n, 8);
    const auto rows = pn_top_rows_mod(n, k, 7, 8);
    const auto col = pn_first_column_mod(n, k, 7);
    for (Eigen::Index r = 0; r < 8; ++r) {
      CHECK(col[static_cast<std::size_t>(r)] == low_bits(to_residue(exact(r, 0)), k));
      for (Eigen::Index s = 0; s < 8; ++s) CHECK(rows(r, s) == low_bits(to_residue(exact(r, s)), k));
    }
  }
}

TEST_CASE("P^3 top rows mod 32 follow the closed forms") {
  const auto rows = pn_top_rows_mod(3, 5, 3, 8);
  for (Index r = 0; r <= 3; ++r)
    for (int off = 0; off <= 3; ++off)
      CHECK(rows(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(r) + off) ==
            low_bits(to_residue(p3_closed_form(r, off)), 5));
}

TEST_CASE("P^1 top corner") {
  const auto rows = pn_top_rows_mod(1, 8, 2, 4);
  CHECK(rows(0, 0) == 255);
  CHECK(rows(0, 1) == 255);
  CHECK(rows(1, 0) == 1);
  CHECK(rows(1, 2) == 254);
  CHECK(rows(2, 2) == 1);
}

TEST_CASE("inverse_odd") {
  for (Residue a : {1ULL, 3ULL, 5ULL, 12345ULL, 0xFFFFFFFFFFFFFFFFULL}) CHECK(a * inverse_odd(a) == 1);
}

TEST_CASE("Q") {
  const QMatrix q = extract_q();
  CHECK((q == reference_q()));
  const Residue row0[8] = {2, 4, 12, 0, 8, 8, 0, 0};
  const Residue row7[8] = {2, 15, 11, 2, 12, 6, 0, 6};
  for (int s = 0; s < 8; ++s) {
    CHECK(q(0, s) == row0[s]);
    CHECK(q(7, s) == row7[s]);
  }
  CHECK(q_squared_mod4(q).isZero());
  CHECK(verify_lemma_q().passed());

  const auto top = pn_top_rows_mod(48, 7, 7, 8);
  for (Eigen::Index r = 0; r < 8; ++r)
    for (Eigen::Index s = 0; s < 8; ++s) CHECK(top(r, s) == low_bits((r == s ? 1 : 0) + 8 * q(r, s), 7));
}

TEST_CASE("block pattern of P^48 - I") {
  const auto rep = verify_prop_m4();
  CHECK(rep.passed());
  CHECK(rep.checked == 121 * 121);
}

TEST_CASE("P^{d_m} patterns and congruences") {
  for (int m = 4; m <= 6; ++m) CHECK(verify_prop_pdm(m).passed());
  for (int m = 4; m <= 8; ++m) {
    const auto rep = verify_t8(m);
    CHECK(rep.passed());
    CHECK(rep.modulus_exponent == m + 3);
  }
  CHECK_THROWS_AS(verify_t8(9), CapExceeded);
  for (int m = 3; m <= 6; ++m) CHECK(verify_lemma_m7c(m).passed());
  for (int m = 4; m <= 5; ++m) CHECK(verify_pdm_induction(m).passed());
}

TEST_CASE("multiples of d_m") {
  CHECK(verify_ndm(1, 4).passed());
  CHECK(verify_ndm(2, 4).passed());
  CHECK(verify_ndm(3, 4).passed());
  CHECK(verify_ndm(2, 5).passed());

  // (P^96)_8 mod 2^7 is I + 16Q, the same as verify_t8(5) reduced mod 2^7
  const auto top = pn_top_rows_mod(96, 7, 7, 8);
  const QMatrix q = reference_q();
  for (Eigen::Index r = 0; r < 8; ++r)
    for (Eigen::Index s = 0; s < 8; ++s) CHECK(top(r, s) == low_bits((r == s ? 1 : 0) + 16 * q(r, s), 7));
}
