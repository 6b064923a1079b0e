#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <vector>

#include "tmwords/word.hpp"

namespace tmwords {

enum class CountMethod { kExhaustiveFilter, kPrunedDfs };

const char* to_string(CountMethod m) noexcept;

/// a_0 .. a_N: number of binary overlap-free words of each length.
struct CountTable {
  std::vector<std::uint64_t> values;
  CountMethod method = CountMethod::kPrunedDfs;

  std::size_t max_n() const noexcept { return values.empty() ? 0 : values.size() - 1; }
};

/// Depth-first extension of overlap-free prefixes starting with 0, pruned by
/// the incremental suffix-overlap test; counts are doubled by complement
/// symmetry. Subtrees below a fixed split depth run on parallel_for.
CountTable count_overlap_free(std::size_t max_n);

/// Filters all 2^n words with the batch detector. max_n <= 24.
CountTable count_overlap_free_exhaustive(std::size_t max_n);

/// Calls visit(word) for every overlap-free binary word of length n, in
/// lexicographic order.
void for_each_overlap_free(std::size_t n, const std::function<void(std::span<const Letter>)>& visit);

/// Least-squares slope of log a_n against log n over the dyadic sample
/// points n_lo, 2 n_lo, 4 n_lo, ... <= n_hi. values[n] is a_n.
double growth_envelope(std::span<const std::uint64_t> values, std::size_t n_lo, std::size_t n_hi);
inline double growth_envelope(const CountTable& t, std::size_t n_lo, std::size_t n_hi) {
  return growth_envelope(t.values, n_lo, n_hi);
}

/// Lengths of binary words all of whose conjugates are overlap-free.
struct CircularReport {
  std::size_t max_n = 0;
  std::vector<std::uint64_t> counts;       // counts[n] = c_n, counts[0] unused (0)
  std::vector<std::size_t> support;        // n in [1, max_n] with c_n > 0
  std::map<std::size_t, FiniteWord> examples;  // least witness per support length
};

CircularReport circular_overlap_free_lengths(std::size_t max_n);

}  // namespace tmwords
