#include "wilf/modular.hpp"

#include <algorithm>
#include <string>

namespace wilf {

namespace {

void check_modulus(int k, const EngineLimits& limits) {
  if (k < 1 || k > limits.max_modulus_exponent)
    throw CapExceeded("modulus exponent K=" + std::to_string(k) + " outside 1..K_max=" +
                      std::to_string(limits.max_modulus_exponent));
}

void check_index(std::uint64_t n, const EngineLimits& limits) {
  if (n > limits.max_index)
    throw CapExceeded("index n=" + std::to_string(n) + " exceeds n_max_mod=" + std::to_string(limits.max_index));
}

// Internal callers carry guard bits past K_max; only the word size bounds them.
EngineLimits with_guard_bits(EngineLimits limits, int guard) {
  limits.max_modulus_exponent = std::min(64, limits.max_modulus_exponent + guard);
  return limits;
}

std::string residue_str(Residue x) { return std::to_string(x); }

}  // namespace

Index trunc_width(int k) {
  if (k < 1) throw std::invalid_argument("trunc_width requires K >= 1");
  Index w = 1;
  while (w - binary_digit_sum(w) < static_cast<Index>(k)) ++w;
  return w;
}

ModularRow::ModularRow(int k, Index start, Index width) : k_(k) {
  if (k < 1 || k > 64) throw std::invalid_argument("ModularRow: K must be in 1..64");
  const Index w = std::max(width, start + trunc_width(k));
  entries_.assign(w, 0);
  scratch_.assign(w, 0);
  entries_[start] = 1;
}

void ModularRow::step() {
  const Index w = entries_.size();
  const Residue* v = entries_.data();
  Residue* out = scratch_.data();
  // s = 0: P(0,0) = -1, P(1,0) = 1
  out[0] = (w > 1 ? v[1] : 0) - v[0];
  for (Index s = 1; s < w; ++s) {
    Residue acc = (static_cast<Residue>(s) - 1) * v[s] - static_cast<Residue>(s) * v[s - 1];
    if (s + 1 < w) acc += v[s + 1];
    out[s] = acc;
  }
  entries_.swap(scratch_);
  ++n_;
}

Residue bellpm_mod(std::uint64_t n, int k, const EngineLimits& limits) {
  check_modulus(k, limits);
  check_index(n, limits);
  ModularRow row(k);
  row.advance(n);
  return row[0];
}

std::vector<Residue> bellpm_mod_sequence(std::uint64_t n_max, int k, const EngineLimits& limits) {
  check_modulus(k, limits);
  check_index(n_max, limits);
  std::vector<Residue> out;
  out.reserve(n_max + 1);
  ModularRow row(k);
  out.push_back(row[0]);
  for (std::uint64_t i = 0; i < n_max; ++i) {
    row.step();
    out.push_back(row[0]);
  }
  return out;
}

DenseMatrix<Residue> pn_top_rows_mod(std::uint64_t n, int k, Index r_max, Index cols, const EngineLimits& limits) {
  check_modulus(k, limits);
  check_index(n, limits);
  if (cols == 0) cols = r_max + 1;
  DenseMatrix<Residue> out(static_cast<Eigen::Index>(r_max + 1), static_cast<Eigen::Index>(cols));
  for (Index r = 0; r <= r_max; ++r) {
    ModularRow row(k, r, cols + trunc_width(k));
    row.advance(n);
    for (Index s = 0; s < cols; ++s) out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(s)) = row[s];
  }
  return out;
}

Residue inverse_odd(Residue a) {
  if ((a & 1U) == 0) throw std::invalid_argument("inverse_odd: even argument");
  Residue x = a;  // correct to 3 bits
  for (int i = 0; i < 5; ++i) x *= 2 - a * x;
  return x;
}

std::vector<Residue> pn_first_column_mod(std::uint64_t n, int k, Index r_max, const EngineLimits& limits) {
  check_modulus(k, limits);
  const int guard = static_cast<int>(legendre_nu2_factorial(r_max).value());
  const int wide = k + guard;
  if (wide > 64) throw CapExceeded("pn_first_column_mod: K + guard bits exceed 64");
  const auto row = pn_top_rows_mod(n, wide, 0, r_max + 1, with_guard_bits(limits, guard));
  std::vector<Residue> out(r_max + 1);
  Residue fact = 1;
  for (Index r = 0; r <= r_max; ++r) {
    if (r >= 2) fact *= r;
    const int shift = static_cast<int>(legendre_nu2_factorial(r).value());
    const Residue odd = fact >> shift;
    Residue top = row(0, static_cast<Eigen::Index>(r));
    if (low_bits(top, shift) != 0) throw VerificationError("P^n(0,r) not divisible by 2^nu2(r!)");
    Residue q = (top >> shift) * inverse_odd(odd);
    if (r % 2 == 1) q = 0 - q;
    out[r] = low_bits(q, k);
  }
  return out;
}

QMatrix reference_q() {
  QMatrix q;
  q << 2, 4, 12, 0, 8, 8, 0, 0,   //
      12, 2, 0, 12, 8, 0, 0, 0,   //
      6, 8, 10, 8, 0, 8, 8, 8,    //
      0, 2, 8, 6, 0, 0, 8, 0,     //
      13, 5, 0, 12, 10, 12, 12, 8,  //
      3, 6, 14, 8, 4, 2, 0, 12,   //
      9, 11, 13, 11, 2, 0, 2, 0,  //
      2, 15, 11, 2, 12, 6, 0, 6;
  return q;
}

QMatrix extract_q() {
  const auto p48 = power_mod(truncate_p<Residue>(44), 48, 7);
  QMatrix q;
  for (Eigen::Index r = 0; r < 8; ++r) {
    for (Eigen::Index s = 0; s < 8; ++s) {
      const Residue x = low_bits(p48(r, s) - (r == s ? 1 : 0), 7);
      if (x % 8 != 0)
        throw VerificationError("(P^48)_8 - I not divisible by 8 at (" + std::to_string(r) + "," +
                                std::to_string(s) + ")");
      q(r, s) = (x / 8) % 16;
    }
  }
  return q;
}

QMatrix q_squared_mod4(const QMatrix& q) {
  QMatrix sq = q * q;
  return sq.unaryExpr([](Residue x) { return x % 4; });
}

Report verify_lemma_q() {
  Report rep;
  rep.claim_id = "lemma-q";
  rep.parameters = {{"truncation_size", 44}, {"exponent", 48}};
  rep.window = {{"rows", 8}, {"cols", 8}};
  rep.modulus_exponent = 7;
  QMatrix q;
  try {
    q = extract_q();
  } catch (const VerificationError& e) {
    rep.add(-1, -1, "divisible by 8", e.what());
    return rep;
  }
  const QMatrix ref = reference_q();
  const QMatrix sq = q_squared_mod4(q);
  for (Eigen::Index r = 0; r < 8; ++r) {
    for (Eigen::Index s = 0; s < 8; ++s) {
      rep.checked += 2;
      if (q(r, s) != ref(r, s)) rep.add(r, s, "Q=" + residue_str(ref(r, s)), residue_str(q(r, s)));
      if (sq(r, s) != 0) rep.add(r, s, "Q^2 mod 4 = 0", residue_str(sq(r, s)));
    }
  }
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (Eigen::Index r = 0; r < 8; ++r) {
    std::vector<Residue> row(8);
    for (Eigen::Index s = 0; s < 8; ++s) row[static_cast<std::size_t>(s)] = q(r, s);
    rows.push_back(row);
  }
  rep.parameters["q"] = rows;
  return rep;
}

namespace {

// Compares ν₂(A - I) of residues mod 2^k against a pattern. Finite bounds must
// be below k; ∞ bounds are accepted only where |r-s| exceeds the band.
void compare_against_pattern(Report& rep, const ResidueMatrix& a, int k, std::uint64_t band,
                             const BoundPattern& pattern) {
  const Eigen::Index n = a.size();
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index s = 0; s < n; ++s) {
      const Valuation bound = pattern.at(r, s);
      const Residue x = low_bits(a(r, s) - (r == s ? 1 : 0), k);
      ++rep.checked;
      if (bound.is_infinite()) {
        const auto dist = static_cast<std::uint64_t>(r > s ? r - s : s - r);
        if (dist <= band)
          rep.add(r, s, "inf", "not certifiable inside band");
        else if (x != 0)
          rep.add(r, s, "inf", residue_str(x));
        continue;
      }
      if (bound.value() >= static_cast<std::uint32_t>(k)) {
        rep.add(r, s, bound.to_string(), "bound exceeds modulus");
        continue;
      }
      const ValuationBound v = nu2_mod(x, k);
      if (!v.at_least(bound.value())) rep.add(r, s, bound.to_string(), v.to_string());
    }
  }
}

}  // namespace

Report verify_prop_m4(Index tail_end) {
  Report rep;
  rep.claim_id = "prop-m4";
  const Index window = tail_end + 1;
  const Index n = truncation_size_for(window, 48);
  rep.parameters = {{"exponent", 48}, {"pattern", "prop-m4"}};
  rep.window = {{"rows", window}, {"cols", window}, {"truncation_size", n}};
  rep.modulus_exponent = 0;
  const auto a = p_power_window(48, window);
  const auto found = nu2(minus_identity(a).entries());
  const auto bound = pattern_window(BoundPattern::prop_m4(), found.rows(), found.cols());
  rep.checked = static_cast<std::uint64_t>(found.size());
  for (const auto& [r, s] : dominance_violations(found, bound))
    rep.add(r, s, bound(r, s).to_string(), found(r, s).to_string());
  return rep;
}

Report verify_prop_pdm(int m) {
  if (m < 4 || m > 6) throw CapExceeded("verify_prop_pdm supports 4 <= m <= 6");
  Report rep;
  rep.claim_id = "prop-pdm";
  const BoundPattern pattern = BoundPattern::prop_pdm(m);
  const std::uint64_t dm = d_m(m);
  const int k = m + 8;
  const Index window = static_cast<Index>(pattern.strip + 4 * pattern.width);
  const Index n = truncation_size_for(window, dm);
  rep.parameters = {{"m", m}, {"exponent", dm}, {"pattern", pattern.name}};
  rep.window = {{"rows", window}, {"cols", window}, {"truncation_size", n}};
  rep.modulus_exponent = k;
  compare_against_pattern(rep, p_power_window_mod(dm, window, k), k, dm, pattern);
  return rep;
}

namespace {

void compare_corner(Report& rep, const DenseMatrix<Residue>& corner, const QMatrix& q, Residue scale, int k) {
  for (Eigen::Index r = 0; r < 8; ++r) {
    for (Eigen::Index s = 0; s < 8; ++s) {
      ++rep.checked;
      const Residue expected = low_bits((r == s ? 1 : 0) + scale * q(r, s), k);
      const Residue found = low_bits(corner(r, s), k);
      if (expected != found) rep.add(r, s, residue_str(expected), residue_str(found));
    }
  }
}

}  // namespace

Report verify_t8(int m) {
  if (m < 4 || m > 8) throw CapExceeded("verify_t8 supports 4 <= m <= 8");
  Report rep;
  rep.claim_id = "t8";
  const std::uint64_t dm = d_m(m);
  const int k = m + 3;
  rep.parameters = {{"m", m}, {"exponent", dm}};
  rep.window = {{"rows", 8}, {"cols", 8}, {"truncation_size", truncation_size_for(8, dm)}};
  rep.modulus_exponent = k;
  const auto corner = p_power_window_mod(dm, 8, k);
  compare_corner(rep, corner.entries(), reference_q(), Residue{1} << (m - 1), k);
  return rep;
}

Report verify_ndm(std::uint64_t n, int m) {
  if (m < 4 || n < 1 || n * d_m(m) > 4000) throw CapExceeded("verify_ndm requires n >= 1, m >= 4, n*d_m <= 4000");
  Report rep;
  rep.claim_id = "ndm";
  const std::uint64_t e = n * d_m(m);
  const int k = m + 3;
  const Index cols = e + 8;
  rep.parameters = {{"n", n}, {"m", m}, {"exponent", e}};
  rep.window = {{"rows", 8}, {"cols", cols}};
  rep.modulus_exponent = k;
  const auto rows = pn_top_rows_mod(e, k, 7, cols);
  compare_corner(rep, rows.leftCols(8), reference_q(), static_cast<Residue>(n) << (m - 1), k);
  for (Eigen::Index r = 0; r < 8; ++r) {
    for (Eigen::Index s = 8; s < static_cast<Eigen::Index>(cols); ++s) {
      ++rep.checked;
      if (rows(r, s) != 0) rep.add(r, s, std::to_string(k), nu2_mod(rows(r, s), k).to_string());
    }
  }
  return rep;
}

Report verify_lemma_m7c(int m) {
  if (m < 3 || m > 10) throw CapExceeded("verify_lemma_m7c supports 3 <= m <= 10");
  Report rep;
  rep.claim_id = "lemma-m7c";
  const std::uint64_t dm = d_m(m);
  const int k = m + 7;
  const Index first = d_m(m - 1) + 8;
  const Index cols = dm + 8;
  rep.parameters = {{"m", m}, {"exponent", dm}};
  rep.window = {{"rows", 8}, {"col_first", first}, {"col_last", cols - 1}};
  rep.modulus_exponent = k;
  const auto rows = pn_top_rows_mod(dm, k, 7, cols);
  for (Eigen::Index r = 0; r < 8; ++r) {
    for (auto s = static_cast<Eigen::Index>(first); s < static_cast<Eigen::Index>(cols); ++s) {
      ++rep.checked;
      if (rows(r, s) != 0) rep.add(r, s, std::to_string(k), nu2_mod(rows(r, s), k).to_string());
    }
  }
  return rep;
}

Report verify_pdm_induction(int m) {
  if (m < 4) throw std::invalid_argument("verify_pdm_induction requires m >= 4");
  Report rep;
  rep.claim_id = "pdm-induction";
  const BoundPattern current = BoundPattern::prop_pdm(m);
  const BoundPattern step = BoundPattern::pdm_square_step(m);
  const BoundPattern next = BoundPattern::prop_pdm(m + 1);
  const Eigen::Index w = current.width;
  const Eigen::Index check = current.strip + 8 * w;
  const Eigen::Index full = check + 4 * w;  // every t with M(r,t) finite lies inside
  rep.parameters = {{"m", m}};
  rep.window = {{"rows", check}, {"cols", check}, {"product_window", full}};
  const ValuationMatrix sq = lemma_sqr_bound(pattern_window(current, full, full)).topLeftCorner(check, check);
  const auto step_bound = pattern_window(step, check, check);
  const auto next_bound = pattern_window(next, check, check);
  const auto m7c_start = static_cast<Eigen::Index>(d_m(m) + 8);
  for (Eigen::Index r = 0; r < check; ++r) {
    for (Eigen::Index s = 0; s < check; ++s) {
      rep.checked += 2;
      if (sq(r, s) < step_bound(r, s)) rep.add(r, s, step_bound(r, s).to_string(), sq(r, s).to_string());
      const bool covered_by_m7c = r < 8 && s >= m7c_start;
      if (!covered_by_m7c && sq(r, s) < next_bound(r, s))
        rep.add(r, s, next_bound(r, s).to_string(), sq(r, s).to_string());
    }
  }
  return rep;
}

}  // namespace wilf
