#include "tmwords/enumerate.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "tmwords/avoidance.hpp"
#include "tmwords/errors.hpp"
#include "tmwords/parallel.hpp"

namespace tmwords {

namespace {

// Subtrees are handed to workers once the prefix reaches this depth.
constexpr std::size_t kSplitDepth = 12;

// Depth-first walk over overlap-free extensions of the tracker's current
// word, up to length max_n. visit(length) is called once per node,
// including the starting node.
template <typename Visit>
void walk(SuffixOverlapTracker& tracker, std::size_t max_n, Visit&& visit) {
  const std::size_t base = tracker.size();
  std::vector<Letter> next_letter(max_n + 2, 0);
  std::size_t depth = base;
  visit(depth);
  next_letter[depth] = 0;
  while (true) {
    if (depth < max_n && next_letter[depth] < 2) {
      const Letter a = next_letter[depth]++;
      if (tracker.push(a)) {
        tracker.pop();
      } else {
        ++depth;
        next_letter[depth] = 0;
        visit(depth);
      }
    } else {
      if (depth == base) break;
      tracker.pop();
      --depth;
    }
  }
}

// All overlap-free words of length `len` that start with 0, in lexicographic order.
std::vector<std::vector<Letter>> frontier_words(std::size_t len) {
  std::vector<std::vector<Letter>> out;
  std::vector<Letter> word;
  SuffixOverlapTracker tracker(len);
  std::vector<Letter> next_letter(len + 2, 0);
  tracker.push(0);
  word.push_back(0);
  std::size_t depth = 1;
  next_letter[depth] = 0;
  if (len == 1) return {word};
  while (true) {
    if (depth < len && next_letter[depth] < 2) {
      const Letter a = next_letter[depth]++;
      if (tracker.push(a)) {
        tracker.pop();
        continue;
      }
      word.push_back(a);
      ++depth;
      next_letter[depth] = 0;
      if (depth == len) out.push_back(word);
    } else {
      if (depth == 1) break;
      tracker.pop();
      word.pop_back();
      --depth;
    }
  }
  return out;
}

}  // namespace

const char* to_string(CountMethod m) noexcept {
  switch (m) {
    case CountMethod::kExhaustiveFilter:
      return "exhaustive-filter";
    case CountMethod::kPrunedDfs:
      return "pruned-dfs";
  }
  return "unknown";
}

CountTable count_overlap_free(std::size_t max_n) {
  if (max_n > 65535) throw ResourceError("count_overlap_free: max_n above 65535");
  CountTable table{std::vector<std::uint64_t>(max_n + 1, 0), CountMethod::kPrunedDfs};
  table.values[0] = 1;
  if (max_n == 0) return table;

  // Words starting with 0; the complement map doubles every count.
  std::vector<std::uint64_t> half(max_n + 1, 0);
  const std::size_t split = std::min(kSplitDepth, max_n);
  {
    SuffixOverlapTracker tracker(split);
    tracker.push(0);
    walk(tracker, split, [&](std::size_t len) { ++half[len]; });
  }
  if (max_n > split) {
    const auto roots = frontier_words(split);
    std::vector<std::vector<std::uint64_t>> partial(roots.size());
    parallel_for(roots.size(), [&](std::size_t i) {
      std::vector<std::uint64_t> local(max_n + 1, 0);
      SuffixOverlapTracker tracker(max_n);
      for (Letter a : roots[i]) tracker.push(a);
      walk(tracker, max_n, [&](std::size_t len) { ++local[len]; });
      partial[i] = std::move(local);
    });
    for (const auto& local : partial) {
      for (std::size_t n = split + 1; n <= max_n; ++n) half[n] += local[n];
    }
  }
  for (std::size_t n = 1; n <= max_n; ++n) table.values[n] = 2 * half[n];
  return table;
}

CountTable count_overlap_free_exhaustive(std::size_t max_n) {
  if (max_n > 24) throw ResourceError("count_overlap_free_exhaustive: max_n above 24");
  CountTable table{std::vector<std::uint64_t>(max_n + 1, 0), CountMethod::kExhaustiveFilter};
  std::vector<Letter> word;
  for (std::size_t n = 0; n <= max_n; ++n) {
    word.assign(n, 0);
    std::uint64_t count = 0;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << n); ++code) {
      for (std::size_t j = 0; j < n; ++j) word[j] = static_cast<Letter>((code >> j) & 1U);
      if (!find_overlap(std::span<const Letter>(word))) ++count;
    }
    table.values[n] = count;
  }
  return table;
}

void for_each_overlap_free(std::size_t n, const std::function<void(std::span<const Letter>)>& visit) {
  if (n == 0) {
    visit({});
    return;
  }
  // Words starting with 1 are complements of those starting with 0; walking
  // the complemented list backwards keeps the output lexicographic.
  auto words = frontier_words(n);
  for (const auto& w : words) visit(w);
  for (auto it = words.rbegin(); it != words.rend(); ++it) {
    for (Letter& a : *it) a ^= 1;
    visit(*it);
  }
}

double growth_envelope(std::span<const std::uint64_t> values, std::size_t n_lo, std::size_t n_hi) {
  if (n_lo < 1 || n_hi < 2 * n_lo) {
    throw ParameterError("growth_envelope needs n_hi >= 2 n_lo >= 2");
  }
  if (n_hi >= values.size()) {
    throw ParameterError("growth_envelope: table ends at " + std::to_string(values.size() - 1) +
                         ", range needs " + std::to_string(n_hi));
  }
  std::vector<double> xs, ys;
  for (std::size_t n = n_lo; n <= n_hi; n *= 2) {
    if (values[n] == 0) throw ParameterError("growth_envelope: zero value at sample point");
    xs.push_back(std::log(static_cast<double>(n)));
    ys.push_back(std::log(static_cast<double>(values[n])));
  }
  const double m = static_cast<double>(xs.size());
  double sx = 0, sy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
  }
  const double mx = sx / m, my = sy / m;
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  return sxy / sxx;
}

CircularReport circular_overlap_free_lengths(std::size_t max_n) {
  if (max_n < 1) throw ParameterError("circular_overlap_free_lengths needs max_n >= 1");
  CircularReport report;
  report.max_n = max_n;
  report.counts.assign(max_n + 1, 0);
  std::vector<std::optional<FiniteWord>> first(max_n + 1);
  parallel_for(max_n, [&](std::size_t i) {
    const std::size_t n = i + 1;
    std::uint64_t count = 0;
    for_each_overlap_free(n, [&](std::span<const Letter> w) {
      if (!is_circular_overlap_free(w)) return;
      if (count++ == 0) first[n] = FiniteWord(std::vector<Letter>(w.begin(), w.end()), 2);
    });
    report.counts[n] = count;
  });
  for (std::size_t n = 1; n <= max_n; ++n) {
    if (report.counts[n] > 0) {
      report.support.push_back(n);
      report.examples.emplace(n, *first[n]);
    }
  }
  return report;
}

}  // namespace tmwords
