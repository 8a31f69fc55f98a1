#include "wilf/matrix_p.hpp"

namespace wilf {

std::int64_t p_entry(Index r, Index s) {
  const auto ri = static_cast<std::int64_t>(r);
  const auto si = static_cast<std::int64_t>(s);
  if (si == ri - 1) return 1;
  if (si == ri) return ri - 1;
  if (si == ri + 1) return -(ri + 1);
  return 0;
}

ExactMatrix power_exact(const ExactMatrix& a, std::size_t i) { return power(a, i); }

ResidueMatrix power_mod(const ResidueMatrix& a, std::size_t i, int k) {
  return reduce_mod_pow2(power(a, i), k);
}

bool valid_window(Index size, std::size_t exponent, Index r, Index s) {
  return r < size && s < size && r + s + exponent <= 2 * size - 1;
}

Index truncation_size_for(Index window, std::size_t exponent) {
  if (window == 0) return 1;
  // need 2(window-1) + exponent <= 2N - 1
  const Index need = 2 * (window - 1) + exponent + 1;
  return std::max<Index>(window, (need + 1) / 2);
}

ExactMatrix p_power_window(std::size_t exponent, Index window) {
  const Index n = truncation_size_for(window, exponent);
  return power_exact(truncate_p<BigInt>(n), exponent).corner(static_cast<Eigen::Index>(window));
}

ResidueMatrix p_power_window_mod(std::size_t exponent, Index window, int k) {
  const Index n = truncation_size_for(window, exponent);
  return power_mod(truncate_p<Residue>(n), exponent, k).corner(static_cast<Eigen::Index>(window));
}

BigInt p3_closed_form(Index r_index, int offset) {
  const BigInt r(static_cast<unsigned long>(r_index));
  switch (offset) {
    case -3: return BigInt(1);
    case -2: return 3 * r;
    case -1: return 3 * r * r - 6 * r - 2;
    case 0: return r * r * r - 9 * r * r + 6 * r + 1;
    case 1: return (r + 1) * (2 + 6 * r - 3 * r * r);
    case 2: return 3 * r * (r + 1) * (r + 2);
    case 3: return -(r + 3) * (r + 2) * (r + 1);
    default: return BigInt(0);
  }
}

namespace {

BigInt signed_factorial(Index r) {
  BigInt f(1);
  for (Index i = 2; i <= r; ++i) f *= static_cast<unsigned long>(i);
  return r % 2 == 0 ? f : BigInt(-f);
}

}  // namespace

SymmetryResult check_symmetry(const ExactMatrix& a, std::size_t j) {
  SymmetryResult out;
  const Index n = static_cast<Index>(a.size());
  std::vector<BigInt> sf(n);
  for (Index r = 0; r < n; ++r) sf[r] = signed_factorial(r);
  for (Index r = 0; r < n; ++r) {
    for (Index s = r + 1; s < n; ++s) {
      if (!valid_window(n, j, r, s)) continue;
      ++out.checked;
      const auto ri = static_cast<Eigen::Index>(r);
      const auto si = static_cast<Eigen::Index>(s);
      if (sf[r] * a(ri, si) != sf[s] * a(si, ri)) {
        out.holds = false;
        if (!out.first_violation) out.first_violation = std::make_pair(r, s);
      }
    }
  }
  return out;
}

bool block_even_above(const ExactMatrix& a, Index n_block, Index lower_diagonals, bool subtract_identity) {
  const auto n = a.size();
  const auto nb = static_cast<Eigen::Index>(n_block);
  if (nb <= 0 || n % nb != 0) throw std::invalid_argument("block size must divide the matrix size");
  for (Eigen::Index s = 0; s < n; ++s) {
    for (Eigen::Index r = 0; r < n; ++r) {
      const Eigen::Index br = r / nb;
      const Eigen::Index bs = s / nb;
      if (bs + static_cast<Eigen::Index>(lower_diagonals) < br) continue;
      BigInt v = a(r, s);
      if (subtract_identity && r == s) v -= 1;
      if (mpz_odd_p(v.get_mpz_t())) return false;
    }
  }
  return true;
}

bool block_strict_lower_mod2(const ExactMatrix& a, Index n_block, bool subtract_identity) {
  return block_even_above(a, n_block, 0, subtract_identity);
}

Report verify_symmetry(std::size_t j, Index window) {
  Report rep;
  rep.claim_id = "symmetry";
  rep.parameters = {{"exponent", j}};
  rep.window = {{"rows", window}, {"cols", window}, {"truncation_size", truncation_size_for(window, j)}};
  const auto a = p_power_window(j, window);
  // the corner is exact, so every pair is in range
  const auto res = check_symmetry(a, 0);
  rep.checked = res.checked;
  if (res.first_violation) {
    const auto [r, s] = *res.first_violation;
    rep.add(static_cast<std::int64_t>(r), static_cast<std::int64_t>(s), "(-1)^r r! A(r,s) = (-1)^s s! A(s,r)",
            "mismatch");
  }
  return rep;
}

Report verify_p3(Index window) {
  Report rep;
  rep.claim_id = "p3";
  rep.window = {{"rows", window}, {"cols", window}};
  const auto cube = p_power_window(3, window);
  for (Index r = 0; r + 3 < window; ++r) {
    for (int offset = -3; offset <= 3; ++offset) {
      const Index i = static_cast<Index>(offset < 0 ? -offset : offset);
      const auto row = static_cast<Eigen::Index>(offset < 0 ? r + i : r);
      const auto col = static_cast<Eigen::Index>(offset < 0 ? r : r + i);
      const BigInt expected = p3_closed_form(r, offset);
      ++rep.checked;
      if (cube(row, col) != expected) rep.add(row, col, to_string(expected), to_string(cube(row, col)));
    }
  }
  return rep;
}

Report verify_lemma_m7b(Index window) {
  Report rep;
  rep.claim_id = "lemma-m7b";
  rep.parameters = {{"exponent", 48}, {"block_size", 8}};
  rep.window = {{"rows", window}, {"cols", window}, {"truncation_size", truncation_size_for(window, 48)}};
  rep.modulus_exponent = 1;
  const auto a = p_power_window(48, window);
  for (Eigen::Index r = 0; r < a.size(); ++r) {
    for (Eigen::Index s = 0; s < a.size(); ++s) {
      if (s / 8 + 3 < r / 8) continue;
      ++rep.checked;
      BigInt v = a(r, s);
      if (r == s) v -= 1;
      if (mpz_odd_p(v.get_mpz_t())) rep.add(r, s, "1", "0");
    }
  }
  return rep;
}

}  // namespace wilf
