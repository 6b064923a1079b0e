#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace tmwords {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// values[i] is the sequence term at index offset + i.
struct SequenceWindow {
  std::int64_t offset = 0;
  std::vector<std::int64_t> values;

  std::size_t size() const noexcept { return values.size(); }
  std::int64_t at_index(std::int64_t n) const { return values.at(static_cast<std::size_t>(n - offset)); }
};

/// Iterated forward differences; the result keeps the input offset and is
/// `order` terms shorter.
SequenceWindow differences(const SequenceWindow& s, int order = 1);

/// s(i + period) == s(i) for every window position i >= preperiod (positions
/// are relative to the window start).
struct PeriodGuess {
  std::size_t preperiod = 0;
  std::size_t period = 1;

  friend bool operator==(const PeriodGuess&, const PeriodGuess&) = default;
};

/// Least (preperiod, period) in lexicographic order with preperiod <= max_pre
/// and 1 <= period <= max_per that holds on the whole window.
std::optional<PeriodGuess> detect_eventual_period(const SequenceWindow& s, std::size_t max_pre,
                                                  std::size_t max_per);

std::size_t max_run(const SequenceWindow& s, std::int64_t value);

/// s(n) = sum_{i=1..order} coefficients[i-1] * s(n-i).
struct RecurrenceGuess {
  std::size_t order = 1;
  std::vector<Rational> coefficients;
};

/// Minimal-order recurrence (order <= max_order) fitted on the first 2*order
/// terms and checked on the entire window. Absent when no order qualifies.
/// An all-zero window yields order 1 with coefficient 0.
std::optional<RecurrenceGuess> guess_linear_recurrence(const SequenceWindow& s, std::size_t max_order);

/// Exact check of a recurrence against every window term past the first `order`.
bool recurrence_holds(const SequenceWindow& s, const RecurrenceGuess& g);

struct GapSupport {
  std::vector<std::int64_t> support;  // sequence indices with nonzero terms
  Rational min_ratio;                 // min over consecutive support indices of next / previous
};

/// Support of the window from sequence index from_index (>= 1) on.
GapSupport support_and_gap_ratio(const SequenceWindow& s, std::int64_t from_index);

/// An integer sequence given by random access.
using IndexedSequence = std::function<std::int64_t(std::uint64_t)>;

/// Breadth-first closure of the k-kernel {n -> s(k^e n + r)}, comparing
/// subsequences on [0, window).
struct KernelAutomaton {
  struct Descriptor {
    unsigned exponent = 0;   // e
    std::uint64_t residue = 0;  // r < k^e
  };
  unsigned k = 2;
  std::size_t window = 0;
  unsigned depth_limit = 0;
  std::vector<Descriptor> classes;
  // transitions[c][d] is the class of the digit-d child of class c, or
  // kUnresolved when the child was not placed before depth_limit.
  std::vector<std::vector<std::size_t>> transitions;
  bool complete = false;

  static constexpr std::size_t kUnresolved = static_cast<std::size_t>(-1);
};

KernelAutomaton kernel_closure(const IndexedSequence& s, unsigned k, unsigned depth_limit, std::size_t window);

}  // namespace tmwords
