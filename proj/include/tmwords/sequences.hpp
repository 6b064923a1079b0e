#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "tmwords/cache.hpp"
#include "tmwords/series.hpp"

namespace tmwords {

enum class Provenance { kBrute, kFormula };

const char* to_string(Provenance p) noexcept;

/// A finite window of a named integer sequence, tagged with how it was made.
struct IntegerSequence {
  std::string id;
  Provenance provenance = Provenance::kFormula;
  SequenceWindow window;
};

/// Builtin coefficient sequences (first `terms` terms):
///   overlap-free  a_n, n >= 0 (enumerated)
///   circular      c_n, n >= 1 (enumerated)
///   pt            p_t(n), n >= 1
///   dpt           p_t(n+1) - p_t(n), n >= 1
///   d2pt          second differences of p_t, n >= 1
///   pf            paperfolding factor counts f(n), n >= 1
///   tm            t(n), n >= 0
///   fib           Fibonacci F(n), F(0) = 0, n >= 0
///   pow2          indicator of powers of two, n >= 1
/// Enumerated sequences go through `cache` when it is enabled.
IntegerSequence builtin_sequence(std::string_view name, std::size_t terms,
                                 const SequenceCache& cache = SequenceCache::disabled());

const std::vector<std::string>& builtin_sequence_names();

/// Random-access builtins for kernel analysis: tm, dpt (with p_t(0) = 1),
/// pt, const.
IndexedSequence builtin_indexed(std::string_view name);
const std::vector<std::string>& builtin_indexed_names();

/// a_0..a_max_n, read from or written to the cache.
std::vector<std::uint64_t> cached_overlap_free_counts(std::size_t max_n, const SequenceCache& cache);

/// "n,value" lines (no header).
std::string format_sequence_csv(const SequenceWindow& s);
/// Accepts one integer per line, or "n,value" lines (the first n sets the
/// offset). Blank lines and lines starting with '#' are skipped, as is a
/// non-numeric header line.
SequenceWindow parse_sequence_text(std::string_view text, std::int64_t default_offset = 0);

}  // namespace tmwords
