#include "tmwords/complexity.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <unordered_set>

#include "tmwords/errors.hpp"
#include "tmwords/parallel.hpp"

namespace tmwords {

namespace {

constexpr std::uint64_t kMersenne61 = (std::uint64_t{1} << 61) - 1;
constexpr std::uint64_t kHashBase = 1000003;

std::uint64_t mulmod61(std::uint64_t a, std::uint64_t b) {
  const unsigned __int128 prod = static_cast<unsigned __int128>(a) * b;
  std::uint64_t lo = static_cast<std::uint64_t>(prod & kMersenne61);
  std::uint64_t hi = static_cast<std::uint64_t>(prod >> 61);
  std::uint64_t s = lo + hi;
  if (s >= kMersenne61) s -= kMersenne61;
  return s;
}

struct Window {
  std::uint64_t hash;
  const Letter* start;
};

void append_windows(std::span<const Letter> w, std::size_t n, std::vector<Window>& out) {
  if (n == 0 || w.size() < n) return;
  std::uint64_t top = 1;  // base^(n-1)
  for (std::size_t i = 1; i < n; ++i) top = mulmod61(top, kHashBase);
  std::uint64_t h = 0;
  for (std::size_t i = 0; i < n; ++i) h = (mulmod61(h, kHashBase) + w[i] + 1) % kMersenne61;
  out.push_back({h, w.data()});
  for (std::size_t i = n; i < w.size(); ++i) {
    const std::uint64_t drop = mulmod61(static_cast<std::uint64_t>(w[i - n]) + 1, top);
    h = (h + kMersenne61 - drop) % kMersenne61;
    h = (mulmod61(h, kHashBase) + w[i] + 1) % kMersenne61;
    out.push_back({h, w.data() + (i - n + 1)});
  }
}

std::uint64_t count_unique(std::vector<Window>& windows, std::size_t n) {
  if (windows.empty()) return 0;
  std::sort(windows.begin(), windows.end(), [n](const Window& x, const Window& y) {
    if (x.hash != y.hash) return x.hash < y.hash;
    return std::memcmp(x.start, y.start, n) < 0;
  });
  std::uint64_t distinct = 1;
  for (std::size_t i = 1; i < windows.size(); ++i) {
    if (windows[i].hash != windows[i - 1].hash ||
        std::memcmp(windows[i].start, windows[i - 1].start, n) != 0) {
      ++distinct;
    }
  }
  return distinct;
}

std::uint64_t ipow(std::uint64_t base, unsigned e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= base;
  return r;
}

// p(n) with a caller-owned prefix buffer that only ever grows.
std::uint64_t factor_count_cached(const WordSource& source, std::size_t n, std::vector<Letter>& buffer) {
  if (n < 1) throw ParameterError("factor_count needs n >= 1");
  auto count_at = [&](std::size_t len) {
    if (buffer.size() < len) buffer = source.prefix(len);
    return count_distinct_factors(std::span<const Letter>(buffer.data(), len), n);
  };
  std::size_t len = std::max<std::size_t>(64, 8 * std::bit_ceil(n));
  if (len > kFactorPrefixCap) {
    throw InconclusiveError("factor_count: starting prefix for n=" + std::to_string(n) + " exceeds the cap");
  }
  std::uint64_t before = count_at(len);
  int agreeing = 0;
  while (len * 2 <= kFactorPrefixCap) {
    len *= 2;
    const std::uint64_t now = count_at(len);
    agreeing = (now == before) ? agreeing + 1 : 0;
    before = now;
    if (agreeing == 2) return now;
  }
  throw InconclusiveError("factor_count: p(" + std::to_string(n) + ") for " + source.id +
                          " did not stabilize below prefix length 2^22");
}

// Generates every paperfolding prefix with K instructions, in code order.
std::vector<std::vector<Letter>> paperfolding_family(std::size_t k) {
  std::vector<std::vector<Letter>> words{{}};
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<std::vector<Letter>> next;
    next.reserve(words.size() * 2);
    for (const auto& s : words) {
      for (Letter e : {Letter{0}, Letter{1}}) {
        std::vector<Letter> t = s;
        t.push_back(e);
        for (std::size_t i = s.size(); i-- > 0;) t.push_back(s[i] ^ 1);
        next.push_back(std::move(t));
      }
    }
    words = std::move(next);
  }
  return words;
}

// Distinct length-n factors for every n in `lengths` (each <= 64), using the
// exact packed representation of binary windows.
std::vector<std::uint64_t> packed_counts(const std::vector<std::vector<Letter>>& words,
                                         const std::vector<std::size_t>& lengths) {
  std::vector<std::unordered_set<std::uint64_t>> sets(lengths.size());
  std::vector<std::uint64_t> out(lengths.size(), 0);
  parallel_for(lengths.size(), [&](std::size_t li) {
    const std::size_t n = lengths[li];
    auto& seen = sets[li];
    const std::uint64_t mask = n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    for (const auto& w : words) {
      if (w.size() < n) continue;
      std::uint64_t v = 0;
      for (std::size_t i = 0; i < w.size(); ++i) {
        v = ((v << 1) | w[i]) & mask;
        // Distinguish windows by length implicitly: all have exactly n letters.
        if (i + 1 >= n) seen.insert(v);
      }
    }
    out[li] = seen.size();
  });
  return out;
}

std::vector<std::uint64_t> generic_counts(const std::vector<std::vector<Letter>>& words,
                                          const std::vector<std::size_t>& lengths) {
  std::vector<std::uint64_t> out(lengths.size(), 0);
  for (std::size_t li = 0; li < lengths.size(); ++li) {
    out[li] = count_distinct_factors(std::span<const std::vector<Letter>>(words), lengths[li]);
  }
  return out;
}

}  // namespace

WordSource thue_morse_source() {
  return {"tm", 2, [](std::size_t len) {
            const FiniteWord t = thue_morse_prefix(len);
            return std::vector<Letter>(t.letters().begin(), t.letters().end());
          }};
}

WordSource tk_source(int k) {
  if (k < 2 || k > 255) throw ParameterError("t_k needs 2 <= k <= 255, got " + std::to_string(k));
  return {"tmk:" + std::to_string(k), k, [k](std::size_t len) {
            std::vector<Letter> out(len);
            for (std::size_t n = 0; n < len; ++n) out[n] = tk_letter(n, k);
            return out;
          }};
}

std::uint64_t count_distinct_factors(std::span<const Letter> w, std::size_t n) {
  std::vector<Window> windows;
  if (n == 0) return 1;
  windows.reserve(w.size() >= n ? w.size() - n + 1 : 0);
  append_windows(w, n, windows);
  return count_unique(windows, n);
}

std::uint64_t count_distinct_factors(std::span<const std::vector<Letter>> words, std::size_t n) {
  if (n == 0) return 1;
  std::vector<Window> windows;
  for (const auto& w : words) append_windows(w, n, windows);
  return count_unique(windows, n);
}

std::uint64_t factor_count(const WordSource& source, std::size_t n) {
  std::vector<Letter> buffer;
  return factor_count_cached(source, n, buffer);
}

std::uint64_t DyadicDecomposition::reconstruct() const noexcept {
  const std::uint64_t base = std::uint64_t{1} << a;
  return branch == Branch::kLower ? base + b : base + base / 2 + b;
}

DyadicDecomposition decompose(std::uint64_t n) {
  if (n < 2) throw ParameterError("dyadic decomposition needs n >= 2");
  DyadicDecomposition d;
  d.n = n;
  d.a = static_cast<unsigned>(std::bit_width(n) - 1);
  const std::uint64_t base = std::uint64_t{1} << d.a;
  const std::uint64_t half = base / 2;
  if (n < base + half) {
    d.branch = DyadicDecomposition::Branch::kLower;
    d.b = n - base;
  } else {
    d.branch = DyadicDecomposition::Branch::kUpper;
    d.b = n - base - half;
  }
  return d;
}

std::uint64_t pt_formula(std::uint64_t n) { return ptk_formula(n, 2); }

std::uint64_t ptk_formula(std::uint64_t n, int k) {
  if (k < 2) throw ParameterError("ptk_formula needs k >= 2, got " + std::to_string(k));
  if (n < 1) throw ParameterError("ptk_formula needs n >= 1");
  const std::uint64_t kk = static_cast<std::uint64_t>(k);
  const std::uint64_t m = n - 1;
  if (m == 0) return kk;
  if (m == 1) return kk * kk;
  const DyadicDecomposition d = decompose(m);
  const std::uint64_t half = std::uint64_t{1} << (d.a - 1);
  if (d.branch == DyadicDecomposition::Branch::kLower) return kk * (kk * m - half);
  return kk * (kk * m - half - d.b);
}

std::uint64_t pf_formula(std::uint64_t n) {
  if (n < 1) throw ParameterError("pf_formula needs n >= 1");
  if (n <= 3) return std::uint64_t{1} << n;
  const unsigned a = static_cast<unsigned>(std::bit_width(n) - 1);
  const std::uint64_t p = std::uint64_t{1} << a;
  const std::uint64_t q = ipow(4, a - 1);
  if (n < p + p / 2) return 2 * p * n - 5 * q;
  if (n < p + p / 2 + p / 4) return 3 * p * n - 11 * q;
  return 2 * p * n - 4 * q;
}

std::vector<std::uint64_t> paperfolding_factor_counts(std::size_t max_n) {
  if (max_n < 1) throw ParameterError("paperfolding_factor_counts needs max_n >= 1");
  std::vector<std::uint64_t> result(max_n + 1, 0);
  result[0] = 1;
  // history[n] holds the counts at the last three K values (once words are long enough).
  std::vector<std::vector<std::uint64_t>> history(max_n + 1);
  std::vector<bool> done(max_n + 1, false);
  done[0] = true;
  for (std::size_t k = 1; k <= kPaperfoldingMaxInstructions; ++k) {
    const std::size_t word_len = (std::size_t{1} << k) - 1;
    std::vector<std::size_t> lengths;
    for (std::size_t n = 1; n <= max_n; ++n) {
      if (!done[n] && n <= word_len) lengths.push_back(n);
    }
    bool pending = false;
    for (std::size_t n = 1; n <= max_n; ++n) pending = pending || !done[n];
    if (!pending) return result;
    if (lengths.empty()) continue;
    const auto words = paperfolding_family(k);
    const bool packable = std::all_of(lengths.begin(), lengths.end(), [](std::size_t n) { return n <= 64; });
    const auto counts = packable ? packed_counts(words, lengths) : generic_counts(words, lengths);
    for (std::size_t li = 0; li < lengths.size(); ++li) {
      const std::size_t n = lengths[li];
      auto& h = history[n];
      h.push_back(counts[li]);
      const std::size_t m = h.size();
      if (m >= 3 && h[m - 1] == h[m - 2] && h[m - 2] == h[m - 3]) {
        result[n] = h[m - 1];
        done[n] = true;
      }
    }
  }
  for (std::size_t n = 1; n <= max_n; ++n) {
    if (!done[n]) {
      throw InconclusiveError("paperfolding_factor_count: f(" + std::to_string(n) +
                              ") did not stabilize by K = 16");
    }
  }
  return result;
}

std::uint64_t paperfolding_factor_count(std::size_t n) {
  if (n < 1) throw ParameterError("paperfolding_factor_count needs n >= 1");
  return paperfolding_factor_counts(n)[n];
}

ComplexityTable brute_table(const WordSource& source, std::size_t max_n) {
  ComplexityTable t{source.id, source.alphabet_size, std::vector<std::uint64_t>(max_n + 1, 0),
                    TableSource::kBrute};
  t.values[0] = 1;
  std::vector<Letter> buffer;
  for (std::size_t n = 1; n <= max_n; ++n) t.values[n] = factor_count_cached(source, n, buffer);
  return t;
}

ComplexityTable tm_formula_table(std::size_t max_n) {
  ComplexityTable t{"tm", 2, std::vector<std::uint64_t>(max_n + 1, 0), TableSource::kFormula};
  t.values[0] = 1;
  for (std::size_t n = 1; n <= max_n; ++n) t.values[n] = pt_formula(n);
  return t;
}

ComplexityTable tk_formula_table(int k, std::size_t max_n) {
  ComplexityTable t{"tmk:" + std::to_string(k), k, std::vector<std::uint64_t>(max_n + 1, 0),
                    TableSource::kFormula};
  t.values[0] = 1;
  for (std::size_t n = 1; n <= max_n; ++n) t.values[n] = ptk_formula(n, k);
  return t;
}

ComplexityTable paperfolding_brute_table(std::size_t max_n) {
  return {"paperfolding", 2, paperfolding_factor_counts(max_n), TableSource::kBrute};
}

ComplexityTable paperfolding_formula_table(std::size_t max_n) {
  ComplexityTable t{"paperfolding", 2, std::vector<std::uint64_t>(max_n + 1, 0), TableSource::kFormula};
  t.values[0] = 1;
  for (std::size_t n = 1; n <= max_n; ++n) t.values[n] = pf_formula(n);
  return t;
}

bool satisfies_growth_bounds(const ComplexityTable& t) {
  const std::uint64_t sigma = static_cast<std::uint64_t>(t.alphabet_size);
  for (std::size_t n = 1; n + 1 < t.values.size(); ++n) {
    if (t.values[n] > t.values[n + 1] || t.values[n + 1] > sigma * t.values[n]) return false;
  }
  return true;
}

}  // namespace tmwords
