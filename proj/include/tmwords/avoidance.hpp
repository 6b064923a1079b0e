#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "tmwords/word.hpp"

namespace tmwords {

/// An occurrence of a x a x a: the factor of length 2*period+1 at position
/// agrees with itself shifted by period.
struct OverlapOccurrence {
  std::size_t position = 0;
  std::size_t period = 0;

  friend auto operator<=>(const OverlapOccurrence&, const OverlapOccurrence&) = default;
};

/// An occurrence of u u with |u| = half_length.
struct SquareOccurrence {
  std::size_t position = 0;
  std::size_t half_length = 0;

  friend auto operator<=>(const SquareOccurrence&, const SquareOccurrence&) = default;
};

/// Lexicographically least (position, period) overlap occurrence, if any.
std::optional<OverlapOccurrence> find_overlap(const FiniteWord& w);
std::optional<OverlapOccurrence> find_overlap(std::span<const Letter> w);

bool is_overlap_free(std::span<const Letter> w);
inline bool is_overlap_free(const FiniteWord& w) { return is_overlap_free(w.letters()); }

/// True iff some overlap ends at the last letter of w.
bool has_overlap_ending_at_end(const FiniteWord& w);
bool has_overlap_ending_at_end(std::span<const Letter> w);

/// Every square occurrence, sorted by (position, half_length).
std::vector<SquareOccurrence> find_squares(const FiniteWord& w);

/// The words u u of length <= max_length that occur in w. Brute-force scan.
std::set<FiniteWord> collect_squares(const FiniteWord& w, std::size_t max_length);

/// Finite slice of the Thue-Morse square set: union over k of mu^k applied
/// to {00, 11, 010010, 101101}, restricted to length <= max_length.
struct SquareCatalog {
  std::size_t max_length = 0;
  std::set<FiniteWord> entries;
};

SquareCatalog square_catalog(std::size_t max_length);

/// At every position i with i + 2*max_half <= |w|, at most one half-length
/// h <= max_half gives a square starting at i.
bool unique_square_start(const FiniteWord& w, std::size_t max_half);
/// Same test on the Thue-Morse prefix of length prefix_len.
bool unique_square_start(std::size_t prefix_len, std::size_t max_half);

/// Every conjugate of w is overlap-free.
bool is_circular_overlap_free(const FiniteWord& w);
bool is_circular_overlap_free(std::span<const Letter> w);

/// w is an overlap and neither maximal proper factor contains one.
bool minimal_overlap_check(const FiniteWord& w);

/// Membership of a binary word in the factor set of the Thue-Morse word.
bool is_tm_factor(const FiniteWord& w);

/// Incremental form of has_overlap_ending_at_end for depth-first extension.
///
/// Tracks, for every period p, the length of the run of positions i at the
/// end of the word with w[i] == w[i-p]. An overlap of period p ends at the
/// last letter exactly when that run reaches p + 1.
class SuffixOverlapTracker {
 public:
  explicit SuffixOverlapTracker(std::size_t capacity);

  std::size_t size() const noexcept { return length_; }
  /// Appends a letter; returns true iff the extended word has an overlap
  /// ending at its last letter.
  bool push(Letter a);
  void pop();

 private:
  std::size_t capacity_;
  std::size_t length_ = 0;
  // Letters stored back to front so that w[L-p] for p = 1, 2, ... is a
  // forward scan starting at reversed_[capacity_ - 1 - L].
  std::vector<std::int16_t> reversed_;
  std::vector<std::int16_t> neg_period_;
  // slack_[L][p] = (run length for period p) - p, for the prefix of length L.
  std::vector<std::vector<std::int16_t>> slack_;
};

}  // namespace tmwords
