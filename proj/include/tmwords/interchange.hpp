#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tmwords/series.hpp"
#include "tmwords/word.hpp"

namespace tmwords {

/// w = 0 x x with x = mu^{2k}(0) and n = |w| = 2^{2k+1} + 1. w is carried
/// over the ternary alphabet so it can be compared with elements of R.
struct WitnessInstance {
  unsigned k = 0;
  std::size_t n = 0;
  FiniteWord x;
  FiniteWord w;
};

inline constexpr unsigned kMaxWitnessK = 6;

/// Builds and verifies the witness (lengths, minimality of the overlap).
WitnessInstance build_witness(unsigned k);

/// Every ternary y with psi(y) = x, ordered lexicographically.
std::vector<FiniteWord> psi_preimages(const FiniteWord& x);

inline constexpr unsigned kMaxRK = 2;

/// R = { 0 y y : psi(y) = mu^{2k}(0) }, sorted. 1 <= k <= 2 (|R| = 2^{(n-1)/4}, 256 words at k = 2).
std::vector<FiniteWord> build_R(unsigned k);

/// A factorization z = prefix . middle . suffix of a length-n word.
struct Split {
  std::size_t prefix_len = 0;
  std::size_t mid_len = 0;
  std::size_t suffix_len = 0;

  friend bool operator==(const Split&, const Split&) = default;
};

/// sum == n and m/2 <= mid_len <= m with m = (n-1)/2.
bool is_valid_split(const Split& s, std::size_t n);
/// All valid splits for length n, ordered by (mid_len, prefix_len).
std::vector<Split> all_splits(std::size_t n);
/// The fixed sample of 20 splits used at k = 2 (n = 33), mid_len 8..16.
const std::vector<Split>& sampled_splits_k2();

struct SwapViolation {
  std::size_t i = 0;  // prefix and suffix donor
  std::size_t j = 0;  // middle donor
  FiniteWord recombined;
};

/// For every ordered pair (z_i, z_j) of R whose middles differ under the
/// split, the word prefix(z_i) middle(z_j) suffix(z_i) must be overlap-free.
/// Returns the pairs where it is not, in (i, j) order.
std::vector<SwapViolation> swap_check(const std::vector<FiniteWord>& R, const Split& split);
/// Number of ordered pairs with differing middles (the pairs swap_check tests).
std::size_t swap_pairs(const std::vector<FiniteWord>& R, const Split& split);

/// Largest number of R elements sharing one middle factor.
std::size_t fixed_middle_bound(const std::vector<FiniteWord>& R, const Split& split);

struct InterchangeReport {
  unsigned k = 0;
  BigInt n;
  Rational c;
  BigInt r_size;      // 2^{(n-1)/4}
  Rational lower_bound;  // |R| / (c (n+1)^2)
  BigInt upper_bound;    // 2^{(n-1)/8}
  bool contradiction = false;
  /// Least k' in [1, 8] at which lower > upper for this c.
  std::optional<unsigned> threshold_k;
};

inline constexpr unsigned kMaxReportK = 10;

/// Exact comparison of the interchange lower bound against the fixed-middle
/// upper bound, computed from the closed forms (R is not materialized).
InterchangeReport contradiction_report(unsigned k, const Rational& c);

/// Parses "p/q", "p" or a decimal like "2.5" into a positive rational.
Rational parse_positive_rational(const std::string& text);

}  // namespace tmwords
