#include "tmwords/avoidance.hpp"

#include <algorithm>
#include <bit>

#include "tmwords/errors.hpp"

namespace tmwords {

namespace {

bool square_at(std::span<const Letter> w, std::size_t pos, std::size_t half) {
  return std::equal(w.begin() + static_cast<std::ptrdiff_t>(pos),
                    w.begin() + static_cast<std::ptrdiff_t>(pos + half),
                    w.begin() + static_cast<std::ptrdiff_t>(pos + half));
}

}  // namespace

std::optional<OverlapOccurrence> find_overlap(std::span<const Letter> w) {
  const std::size_t n = w.size();
  std::optional<OverlapOccurrence> best;
  for (std::size_t p = 1; 2 * p + 1 <= n; ++p) {
    std::size_t run = 0;
    for (std::size_t i = p; i < n; ++i) {
      run = (w[i] == w[i - p]) ? run + 1 : 0;
      if (run >= p + 1) {
        const OverlapOccurrence occ{i - 2 * p, p};
        if (!best || occ < *best) best = occ;
        break;
      }
    }
  }
  return best;
}

std::optional<OverlapOccurrence> find_overlap(const FiniteWord& w) { return find_overlap(w.letters()); }

bool is_overlap_free(std::span<const Letter> w) {
  const std::size_t n = w.size();
  for (std::size_t p = 1; 2 * p + 1 <= n; ++p) {
    std::size_t run = 0;
    for (std::size_t i = p; i < n; ++i) {
      run = (w[i] == w[i - p]) ? run + 1 : 0;
      if (run > p) return false;
    }
  }
  return true;
}

bool has_overlap_ending_at_end(std::span<const Letter> w) {
  const std::size_t n = w.size();
  for (std::size_t p = 1; 2 * p + 1 <= n; ++p) {
    bool all = true;
    for (std::size_t j = 0; j <= p; ++j) {
      if (w[n - 1 - j] != w[n - 1 - j - p]) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

bool has_overlap_ending_at_end(const FiniteWord& w) { return has_overlap_ending_at_end(w.letters()); }

std::vector<SquareOccurrence> find_squares(const FiniteWord& w) {
  const auto letters = w.letters();
  const std::size_t n = letters.size();
  std::vector<SquareOccurrence> out;
  for (std::size_t h = 1; 2 * h <= n; ++h) {
    std::size_t run = 0;
    for (std::size_t i = h; i < n; ++i) {
      run = (letters[i] == letters[i - h]) ? run + 1 : 0;
      if (run >= h) out.push_back({i + 1 - 2 * h, h});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::set<FiniteWord> collect_squares(const FiniteWord& w, std::size_t max_length) {
  std::set<FiniteWord> out;
  for (const auto& sq : find_squares(w)) {
    if (2 * sq.half_length <= max_length) out.insert(w.factor(sq.position, 2 * sq.half_length));
  }
  return out;
}

SquareCatalog square_catalog(std::size_t max_length) {
  if (max_length < 2) throw ParameterError("square catalog needs max_length >= 2");
  static const Morphism mu = Morphism::thue_morse();
  SquareCatalog cat{max_length, {}};
  std::vector<FiniteWord> frontier;
  for (const char* base : {"00", "11", "010010", "101101"}) {
    FiniteWord w = FiniteWord::parse(base, 2);
    if (w.size() <= max_length) frontier.push_back(std::move(w));
  }
  while (!frontier.empty()) {
    std::vector<FiniteWord> next;
    for (auto& w : frontier) {
      FiniteWord img = mu.apply(w);
      if (img.size() <= max_length) next.push_back(std::move(img));
      cat.entries.insert(std::move(w));
    }
    frontier = std::move(next);
  }
  return cat;
}

bool unique_square_start(const FiniteWord& w, std::size_t max_half) {
  if (max_half < 1 || w.size() < 2 * max_half) {
    throw ParameterError("unique_square_start: window of length " + std::to_string(w.size()) +
                         " cannot hold squares of half-length " + std::to_string(max_half));
  }
  const auto letters = w.letters();
  for (std::size_t i = 0; i + 2 * max_half <= letters.size(); ++i) {
    int found = 0;
    for (std::size_t h = 1; h <= max_half; ++h) {
      if (square_at(letters, i, h) && ++found > 1) return false;
    }
  }
  return true;
}

bool unique_square_start(std::size_t prefix_len, std::size_t max_half) {
  if (max_half < 1 || prefix_len < 2 * max_half) {
    throw ParameterError("unique_square_start: prefix of length " + std::to_string(prefix_len) +
                         " cannot hold squares of half-length " + std::to_string(max_half));
  }
  return unique_square_start(thue_morse_prefix(prefix_len), max_half);
}

bool is_circular_overlap_free(std::span<const Letter> w) {
  // Every conjugate is a length-n window of ww, so it suffices to look for
  // overlaps of length <= n starting at positions < n in ww.
  const std::size_t n = w.size();
  if (n < 3) return true;
  std::vector<Letter> ww(w.begin(), w.end());
  ww.insert(ww.end(), w.begin(), w.end());
  for (std::size_t p = 1; 2 * p + 1 <= n; ++p) {
    std::size_t run = 0;
    for (std::size_t i = p; i < n + 2 * p; ++i) {
      run = (ww[i] == ww[i - p]) ? run + 1 : 0;
      if (run > p) return false;
    }
  }
  return true;
}

bool is_circular_overlap_free(const FiniteWord& w) { return is_circular_overlap_free(w.letters()); }

bool minimal_overlap_check(const FiniteWord& w) {
  const std::size_t n = w.size();
  if (n < 3 || n % 2 == 0) return false;
  const std::size_t p = (n - 1) / 2;
  for (std::size_t j = 0; j <= p; ++j) {
    if (w[j] != w[j + p]) return false;
  }
  const auto letters = w.letters();
  return is_overlap_free(letters.first(n - 1)) && is_overlap_free(letters.last(n - 1));
}

bool is_tm_factor(const FiniteWord& w) {
  for (Letter a : w.letters()) {
    if (a > 1) throw DomainError("is_tm_factor: word " + w.str() + " is not binary");
  }
  if (w.empty()) return true;
  const auto needle = w.letters();
  auto occurs_in_prefix = [&](std::size_t len) {
    const FiniteWord t = thue_morse_prefix(len);
    const auto hay = t.letters();
    return std::search(hay.begin(), hay.end(), needle.begin(), needle.end()) != hay.end();
  };
  constexpr std::size_t kCap = std::size_t{1} << 26;
  std::size_t len = std::max<std::size_t>(64, 8 * std::bit_ceil(w.size()));
  bool previous = occurs_in_prefix(len);
  for (len *= 2; len <= kCap; len *= 2) {
    const bool current = occurs_in_prefix(len);
    if (current == previous) return current;
    previous = current;
  }
  throw InconclusiveError("is_tm_factor: membership did not stabilize below prefix length 2^26");
}

SuffixOverlapTracker::SuffixOverlapTracker(std::size_t capacity)
    : capacity_(capacity), reversed_(capacity), neg_period_(capacity + 1), slack_(capacity + 1) {
  if (capacity > 32767) throw ResourceError("SuffixOverlapTracker capacity exceeds 32767");
  for (std::size_t p = 0; p <= capacity; ++p) neg_period_[p] = static_cast<std::int16_t>(-static_cast<int>(p));
  for (std::size_t len = 0; len <= capacity; ++len) slack_[len].assign(len + 1, 0);
}

bool SuffixOverlapTracker::push(Letter a) {
  if (length_ == capacity_) throw ResourceError("SuffixOverlapTracker is full");
  const std::size_t len = length_;
  const std::int16_t letter = a;
  // rev[p] == w[len - p] for p in [1, len].
  const std::int16_t* rev = reversed_.data() + (capacity_ - 1 - len);
  const std::int16_t* neg = neg_period_.data();
  const std::int16_t* prev = slack_[len].data();
  std::int16_t* next = slack_[len + 1].data();
  // slack = run - period; an overlap of period p ends here iff slack > 0.
  std::int16_t hit = 0;
  for (std::size_t p = 1; p < len; ++p) {
    const std::int16_t keep = static_cast<std::int16_t>(-static_cast<std::int16_t>(rev[p] == letter));
    const std::int16_t v = static_cast<std::int16_t>(((prev[p] + 1) & keep) | (neg[p] & ~keep));
    next[p] = v;
    hit |= static_cast<std::int16_t>(v > 0);
  }
  if (len > 0) next[len] = static_cast<std::int16_t>((rev[len] == letter ? 1 : 0) - static_cast<int>(len));
  reversed_[capacity_ - 1 - len] = letter;
  ++length_;
  return hit != 0;
}

void SuffixOverlapTracker::pop() {
  if (length_ > 0) --length_;
}

}  // namespace tmwords
