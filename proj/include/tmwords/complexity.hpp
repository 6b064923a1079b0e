#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "tmwords/word.hpp"

namespace tmwords {

/// Something that can produce arbitrarily long prefixes of an infinite word.
/// Letters are raw values below alphabet_size (which may exceed the
/// FiniteWord cap, e.g. t_5).
struct WordSource {
  std::string id;
  int alphabet_size = 2;
  std::function<std::vector<Letter>(std::size_t)> prefix;
};

WordSource thue_morse_source();
/// n -> s2(n) mod k, 2 <= k <= 255.
WordSource tk_source(int k);

/// Number of distinct length-n windows in w (exact; hashing only buckets).
std::uint64_t count_distinct_factors(std::span<const Letter> w, std::size_t n);
/// Distinct length-n windows over a family of words (windows never cross words).
std::uint64_t count_distinct_factors(std::span<const std::vector<Letter>> words, std::size_t n);

/// Hard cap on the prefix length used by factor_count.
inline constexpr std::size_t kFactorPrefixCap = std::size_t{1} << 22;

/// p(n) for the source: distinct length-n factors of a prefix of length L,
/// starting from L = max(64, 8 * bit_ceil(n)) and doubling until the count is
/// unchanged across two consecutive doublings. Throws InconclusiveError past
/// kFactorPrefixCap.
std::uint64_t factor_count(const WordSource& source, std::size_t n);

/// n = 2^a + b (lower branch, 0 <= b < 2^{a-1}) or
/// n = 2^a + 2^{a-1} + b (upper branch, 0 <= b < 2^{a-1}), for n >= 2.
struct DyadicDecomposition {
  enum class Branch { kLower, kUpper };
  std::uint64_t n = 0;
  unsigned a = 0;
  std::uint64_t b = 0;
  Branch branch = Branch::kLower;

  std::uint64_t reconstruct() const noexcept;
};

DyadicDecomposition decompose(std::uint64_t n);

// The closed forms below are stated for p(n+1) in the literature; these
// functions take the factor length n itself and shift internally.

/// Subword complexity of the Thue-Morse word, n >= 1.
std::uint64_t pt_formula(std::uint64_t n);
/// Subword complexity of t_k, n >= 1, k >= 2.
std::uint64_t ptk_formula(std::uint64_t n, int k);
/// Number of length-n factors over all paperfolding words, n >= 1.
std::uint64_t pf_formula(std::uint64_t n);

/// Largest instruction length tried by the paperfolding stabilization.
inline constexpr std::size_t kPaperfoldingMaxInstructions = 16;

/// Distinct length-n factors over all 2^K paperfolding prefixes of
/// instruction length K, raising K until the count is unchanged for two
/// consecutive increments. Throws InconclusiveError past K = 16.
std::uint64_t paperfolding_factor_count(std::size_t n);
/// f(1..max_n) in one pass; result[n] for n >= 1, result[0] = 1.
std::vector<std::uint64_t> paperfolding_factor_counts(std::size_t max_n);

enum class TableSource { kBrute, kFormula };

/// p(1..N) for one word family; values[0] holds p(0) = 1.
struct ComplexityTable {
  std::string family;
  int alphabet_size = 2;
  std::vector<std::uint64_t> values;
  TableSource source = TableSource::kBrute;

  std::size_t max_n() const noexcept { return values.empty() ? 0 : values.size() - 1; }
};

ComplexityTable brute_table(const WordSource& source, std::size_t max_n);
ComplexityTable tm_formula_table(std::size_t max_n);
ComplexityTable tk_formula_table(int k, std::size_t max_n);
ComplexityTable paperfolding_brute_table(std::size_t max_n);
ComplexityTable paperfolding_formula_table(std::size_t max_n);

/// p(n) <= p(n+1) <= sigma * p(n) for every n in the table.
bool satisfies_growth_bounds(const ComplexityTable& t);

}  // namespace tmwords
