// Acceptance run: one [PASS]/[FAIL] line per criterion, each with its
// measured time against the budget. Exit status is non-zero if any fails.

#include <array>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "wilf/combinatorics.hpp"
#include "wilf/fixtures.hpp"
#include "wilf/matrix_p.hpp"
#include "wilf/modular.hpp"
#include "wilf/padic.hpp"
#include "wilf/wilf_tree.hpp"

using namespace wilf;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

Outcome golden_table() {
  Outcome out;
  for (Index n = 0; n <= 10; ++n)
    if (bell_pm_exact(n) != fixtures::kBellPmSmall[n]) out.fail("B±(" + std::to_string(n) + ") differs");
  if (out.ok) out.detail = "B±(0..10) = 1 -1 0 1 1 -2 -9 -9 50 267 413";
  return out;
}

Outcome oracle_triangle() {
  Outcome out;
  for (Index n = 0; n <= 60; ++n) {
    const BigInt direct = bell_pm_direct(n);
    const BigInt exact = bell_pm_exact(n);
    const BigInt matrix = power_exact(truncate_p<BigInt>(truncation_size_for(1, n)), n)(0, 0);
    if (direct != exact || exact != matrix) out.fail("exact routes disagree at n=" + std::to_string(n));
  }
  const auto exact = bell_pm_exact_range(300);
  for (int k : {4, 8, 16, 24}) {
    const auto seq = bellpm_mod_sequence(300, k);
    for (Index n = 0; n <= 300; ++n)
      if (seq[n] != low_bits(to_residue(exact[n]), k))
        out.fail("mod 2^" + std::to_string(k) + " disagrees at n=" + std::to_string(n));
  }
  if (out.ok) out.detail = "3 exact routes n<=60, modular n<=300 at K=4,8,16,24";
  return out;
}

Outcome lemma_q() {
  // as printed
  constexpr std::array<std::array<Residue, 8>, 8> printed = {{{2, 4, 12, 0, 8, 8, 0, 0},
                                                               {12, 2, 0, 12, 8, 0, 0, 0},
                                                               {6, 8, 10, 8, 0, 8, 8, 8},
                                                               {0, 2, 8, 6, 0, 0, 8, 0},
                                                               {13, 5, 0, 12, 10, 12, 12, 8},
                                                               {3, 6, 14, 8, 4, 2, 0, 12},
                                                               {9, 11, 13, 11, 2, 0, 2, 0},
                                                               {2, 15, 11, 2, 12, 6, 0, 6}}};
  Outcome out;
  const QMatrix q = extract_q();
  for (int r = 0; r < 8; ++r)
    for (int s = 0; s < 8; ++s)
      if (q(r, s) != printed[r][s]) out.fail("Q(" + std::to_string(r) + "," + std::to_string(s) + ") differs");
  if (!q_squared_mod4(q).isZero()) out.fail("Q^2 is not 0 mod 4");
  if (out.ok) out.detail = "(P_44)^48 = I + 8Q mod 2^7, Q^2 = 0 mod 4";
  return out;
}

Outcome from_reports(const std::vector<Report>& reports) {
  Outcome out;
  std::uint64_t checked = 0;
  for (const auto& r : reports) {
    checked += r.checked;
    if (!r.passed()) out.fail(r.claim_id + " " + r.parameters.dump() + ": " + std::to_string(r.violations.size()) +
                              " violations");
  }
  if (out.ok) out.detail = std::to_string(checked) + " checks, 0 violations";
  return out;
}

Outcome sequence_table() {
  Outcome out;
  const auto seq = run_sequence(18);
  for (const auto& s : seq) {
    const auto m = static_cast<std::size_t>(s.m);
    const std::uint64_t want_y = s.m == fixtures::kMisprintRow ? 8013 : fixtures::kPublishedY[m];
    if (s.y != want_y) out.fail("y_" + std::to_string(m) + " = " + std::to_string(s.y));
    if (s.x != fixtures::kPublishedX[m]) out.fail("x_" + std::to_string(m) + " = " + std::to_string(s.x));
  }
  if (seq[14].x != 24 * seq[14].y + 14 || seq[14].x != 192326) out.fail("x_14 inconsistent");
  if (out.ok) out.detail = "m=0..18 as printed, y_14 = 8013 (printed 801), x_14 = 192326";
  return out;
}

Outcome growth_table() {
  Outcome out;
  const auto seq = run_sequence(8);
  std::ostringstream got;
  got << std::fixed << std::setprecision(1);
  double last_x = -1, last = 0;
  for (const auto& s : seq) {
    const double v = static_cast<double>(s.x) == last_x ? last : log10_abs(bell_pm_exact(s.x));
    last_x = static_cast<double>(s.x);
    last = v;
    got << v << ' ';
    if (std::fabs(v - fixtures::kGrowthLog10[static_cast<std::size_t>(s.m)]) > 0.1)
      out.fail("m=" + std::to_string(s.m) + " gives " + std::to_string(v));
  }
  if (out.ok) out.detail = got.str();
  return out;
}

Outcome property_suite() {
  Outcome out;

  for (std::size_t j : {3, 12, 48})
    if (!verify_symmetry(j, 60).passed()) out.fail("symmetry fails for j=" + std::to_string(j));

  for (std::size_t j : {3, 6, 12, 48}) {
    const Index window = 40;
    const auto a = p_power_window(j, window);
    for (Index r = 0; r < window; ++r)
      for (Index i = 0; i <= j && r + i < window; ++i)
        if (nu2(BigInt(a(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(r + i)))) < legendre_nu2_factorial(i))
          out.fail("divisibility by i! fails for j=" + std::to_string(j));
  }

  {
    const auto p = truncate_p<BigInt>(32);
    auto acc = ExactMatrix::identity(32);
    for (Eigen::Index j = 1; j <= 32; ++j) {
      acc = acc * p;
      if (acc.measured_band() > j) out.fail("P^" + std::to_string(j) + " is not j-diagonal");
    }
  }

  std::mt19937_64 rng(12345);
  {
    std::uniform_int_distribution<int> entry(-9, 9);
    for (int trial = 0; trial < 100; ++trial) {
      const Eigen::Index n = 2 + trial % 11;
      ExactMatrix a(n, n - 1);
      for (Eigen::Index r = 0; r < n; ++r)
        for (Eigen::Index s = 0; s < r; ++s) a(r, s) = entry(rng);
      const auto a2 = a * a;
      const auto a4 = a2 * a2;
      for (Eigen::Index r = 0; r < n; ++r)
        for (Eigen::Index s = 0; s < n; ++s)
          if ((r - s < 2 && a2(r, s) != 0) || (r - s < 4 && a4(r, s) != 0)) out.fail("strictly-lower closure");
    }
  }

  {
    std::uniform_int_distribution<int> small(-40, 40);
    std::uniform_int_distribution<int> shift(0, 6);
    for (int trial = 0; trial < 100; ++trial) {
      DenseMatrix<BigInt> a(6, 6), b(6, 6);
      for (Eigen::Index i = 0; i < 36; ++i) {
        a(i) = BigInt(small(rng)) << shift(rng);
        b(i) = BigInt(small(rng)) << shift(rng);
      }
      DenseMatrix<BigInt> ab = DenseMatrix<BigInt>::Zero(6, 6);
      for (Eigen::Index r = 0; r < 6; ++r)
        for (Eigen::Index s = 0; s < 6; ++s)
          for (Eigen::Index t = 0; t < 6; ++t) ab(r, s) += a(r, t) * b(t, s);
      if (!dominates(nu2(ab), minplus_product(nu2(a), nu2(b)))) out.fail("min-plus soundness");
    }
  }

  for (int k : {4, 8, 16, 24, 32}) {
    const Index w = trunc_width(k);
    ModularRow narrow(k, 0, w), wide(k, 0, w + 8);
    for (int n = 0; n < 5000; ++n) {
      if (narrow[0] != wide[0]) {
        out.fail("width W vs W+8 differs at K=" + std::to_string(k));
        break;
      }
      narrow.step();
      wide.step();
    }
  }
  if (out.ok) out.detail = "symmetry, i! divisibility, bandedness, lower closure, min-plus, width";
  return out;
}

struct Criterion {
  int id;
  std::string name;
  double budget_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "golden table B±(0..10)", 1, golden_table},
      {2, "oracle triangle", 10, oracle_triangle},
      {3, "Q from (P_44)^48 mod 2^7", 1, lemma_q},
      {4, "nu2(P^48 - I) block pattern", 5, [] { return from_reports({verify_prop_m4(120)}); }},
      {5, "(P^{d_m})_8 = I + 2^{m-1}Q mod 2^{m+3}, m=4..8", 30,
       [] {
         std::vector<Report> r;
         for (int m = 4; m <= 8; ++m) r.push_back(verify_t8(m));
         return from_reports(r);
       }},
      {6, "nu2(B±(j)) by class mod 12, j<=2000", 10, [] { return from_reports({verify_cor_nu(2000)}); }},
      {7, "nu2(B±(24n+2)) = nu2(n)+5, n<=2000", 60, [] { return from_reports({verify_thm_24n2(2000)}); }},
      {8, "(y_m, x_m) table, m=0..18", 1800, sequence_table},
      {9, "nu2(B±(24n+14)) = m(n)+5, n<=1000", 300,
       [] { return from_reports({verify_thm_24n14(1000, sequence_s(18))}); }},
      {10, "log10|B±(x_m)|, m=0..8", 600, growth_table},
      {11, "property suite", 30, property_suite},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_budget = secs < c.budget_seconds;
    const bool pass = out.ok && in_budget;
    if (!pass) ++failures;
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << std::setw(2) << c.id << "  " << c.name << "  (" << std::fixed
              << std::setprecision(2) << secs << " s / " << std::setprecision(0) << c.budget_seconds << " s)  "
              << (in_budget ? out.detail : "over budget: " + out.detail) << '\n';
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << '/' << criteria.size()
            << " criteria passed\n";
  return failures == 0 ? 0 : 1;
}
