#include "tmwords/sequences.hpp"

#include <bit>
#include <charconv>
#include <sstream>

#include "tmwords/complexity.hpp"
#include "tmwords/enumerate.hpp"
#include "tmwords/errors.hpp"
#include "tmwords/word.hpp"

namespace tmwords {

namespace {

std::int64_t to_i64(std::uint64_t v) { return static_cast<std::int64_t>(v); }

std::vector<std::int64_t> values_from_csv(const std::string& payload) {
  return parse_sequence_text(payload).values;
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::optional<std::int64_t> parse_int(std::string_view s) {
  std::int64_t v = 0;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end || s.empty()) return std::nullopt;
  return v;
}

// p_t(n) with the empty-word convention p_t(0) = 1.
std::int64_t pt_or_one(std::uint64_t n) { return n == 0 ? 1 : to_i64(pt_formula(n)); }

}  // namespace

const char* to_string(Provenance p) noexcept { return p == Provenance::kBrute ? "brute" : "formula"; }

std::vector<std::uint64_t> cached_overlap_free_counts(std::size_t max_n, const SequenceCache& cache) {
  const CacheKey key{"overlap-free", "dfs", max_n + 1};
  if (auto hit = cache.load(key)) {
    const auto vals = values_from_csv(*hit);
    if (vals.size() == max_n + 1) return {vals.begin(), vals.end()};
  }
  const CountTable t = count_overlap_free(max_n);
  SequenceWindow w{0, {}};
  for (auto v : t.values) w.values.push_back(to_i64(v));
  cache.store(key, format_sequence_csv(w));
  return t.values;
}

IntegerSequence builtin_sequence(std::string_view name, std::size_t terms, const SequenceCache& cache) {
  if (terms == 0) throw ParameterError("builtin sequence needs at least one term");
  IntegerSequence seq;
  seq.id = std::string(name);
  auto& w = seq.window;
  if (name == "overlap-free") {
    seq.provenance = Provenance::kBrute;
    w.offset = 0;
    for (auto v : cached_overlap_free_counts(terms - 1, cache)) w.values.push_back(to_i64(v));
  } else if (name == "circular") {
    seq.provenance = Provenance::kBrute;
    w.offset = 1;
    const CacheKey key{"circular", "conjugates", terms};
    if (auto hit = cache.load(key)) {
      w.values = values_from_csv(*hit);
    }
    if (w.values.size() != terms) {
      const CircularReport r = circular_overlap_free_lengths(terms);
      w.values.clear();
      for (std::size_t n = 1; n <= terms; ++n) w.values.push_back(to_i64(r.counts[n]));
      cache.store(key, format_sequence_csv(w));
    }
  } else if (name == "pt") {
    w.offset = 1;
    for (std::size_t n = 1; n <= terms; ++n) w.values.push_back(to_i64(pt_formula(n)));
  } else if (name == "dpt") {
    w.offset = 1;
    for (std::size_t n = 1; n <= terms; ++n) w.values.push_back(pt_or_one(n + 1) - pt_or_one(n));
  } else if (name == "d2pt") {
    w.offset = 1;
    for (std::size_t n = 1; n <= terms; ++n) {
      w.values.push_back(pt_or_one(n + 2) - 2 * pt_or_one(n + 1) + pt_or_one(n));
    }
  } else if (name == "pf") {
    w.offset = 1;
    for (std::size_t n = 1; n <= terms; ++n) w.values.push_back(to_i64(pf_formula(n)));
  } else if (name == "tm") {
    w.offset = 0;
    for (std::size_t n = 0; n < terms; ++n) w.values.push_back(tk_letter(n, 2));
  } else if (name == "fib") {
    w.offset = 0;
    std::int64_t a = 0, b = 1;
    for (std::size_t n = 0; n < terms; ++n) {
      if (n > 90) throw ParameterError("fib: more than 91 terms overflow 64 bits");
      w.values.push_back(a);
      const std::int64_t c = a + b;
      a = b;
      b = c;
    }
  } else if (name == "pow2") {
    w.offset = 1;
    for (std::size_t n = 1; n <= terms; ++n) w.values.push_back(std::has_single_bit(n) ? 1 : 0);
  } else {
    throw ParameterError("unknown builtin sequence '" + std::string(name) + "'");
  }
  return seq;
}

const std::vector<std::string>& builtin_sequence_names() {
  static const std::vector<std::string> names{"overlap-free", "circular", "pt",  "dpt", "d2pt",
                                              "pf",           "tm",       "fib", "pow2"};
  return names;
}

IndexedSequence builtin_indexed(std::string_view name) {
  if (name == "tm") return [](std::uint64_t n) -> std::int64_t { return tk_letter(n, 2); };
  if (name == "dpt") return [](std::uint64_t n) { return pt_or_one(n + 1) - pt_or_one(n); };
  if (name == "pt") return [](std::uint64_t n) { return pt_or_one(n); };
  if (name == "const") return [](std::uint64_t) -> std::int64_t { return 1; };
  throw ParameterError("unknown indexed builtin '" + std::string(name) + "'");
}

const std::vector<std::string>& builtin_indexed_names() {
  static const std::vector<std::string> names{"tm", "dpt", "pt", "const"};
  return names;
}

std::string format_sequence_csv(const SequenceWindow& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    out += std::to_string(s.offset + static_cast<std::int64_t>(i));
    out += ',';
    out += std::to_string(s.values[i]);
    out += '\n';
  }
  return out;
}

SequenceWindow parse_sequence_text(std::string_view text, std::int64_t default_offset) {
  SequenceWindow w{default_offset, {}};
  std::istringstream in{std::string(text)};
  std::string line;
  bool first_data = true;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto comma = t.find(',');
    if (comma == std::string::npos) {
      const auto v = parse_int(t);
      if (!v) throw ParameterError("line " + std::to_string(lineno) + ": not an integer: '" + t + "'");
      w.values.push_back(*v);
      first_data = false;
      continue;
    }
    const auto idx = parse_int(trim(std::string_view(t).substr(0, comma)));
    const auto val = parse_int(trim(std::string_view(t).substr(comma + 1)));
    if (!idx || !val) {
      if (first_data && w.values.empty()) continue;  // header such as "n,a_n"
      throw ParameterError("line " + std::to_string(lineno) + ": expected 'n,value', got '" + t + "'");
    }
    if (first_data) w.offset = *idx;
    if (*idx != w.offset + static_cast<std::int64_t>(w.values.size())) {
      throw ParameterError("line " + std::to_string(lineno) + ": indices must be consecutive");
    }
    w.values.push_back(*val);
    first_data = false;
  }
  if (w.values.empty()) throw ParameterError("sequence input has no terms");
  return w;
}

}  // namespace tmwords
