#include "doctest.h"
#include "oracles.hpp"
#include "tmwords/avoidance.hpp"
#include "tmwords/errors.hpp"
#include "tmwords/word.hpp"

using namespace tmwords;

namespace {

FiniteWord w(const std::string& s) { return FiniteWord::parse(s); }

std::set<std::string> strs(const std::set<FiniteWord>& ws) {
  std::set<std::string> out;
  for (const auto& x : ws) out.insert(x.str());
  return out;
}

}  // namespace

TEST_CASE("find_overlap returns the least occurrence") {
  auto occ = find_overlap(w("000"));
  REQUIRE(occ);
  CHECK(occ->position == 0);
  CHECK(occ->period == 1);
  CHECK_FALSE(find_overlap(w("0110100110010110")));
  occ = find_overlap(w("001100110"));
  REQUIRE(occ);
  CHECK(*occ == OverlapOccurrence{0, 4});
  const auto expected = oracle::least_overlap("001100110");
  CHECK(expected->first == 0);
  CHECK(expected->second == 4);
  CHECK_FALSE(find_overlap(w("")));
  CHECK(*find_overlap(w("1101011")) == OverlapOccurrence{1, 2});
}

TEST_CASE("has_overlap_ending_at_end") {
  CHECK(has_overlap_ending_at_end(w("01010")));
  CHECK_FALSE(has_overlap_ending_at_end(w("0110")));
  CHECK(has_overlap_ending_at_end(w("0011000")));
  CHECK_FALSE(has_overlap_ending_at_end(w("0001")));
}

TEST_CASE("find_squares") {
  using Occ = SquareOccurrence;
  CHECK(find_squares(w("00")) == std::vector<Occ>{{0, 1}});
  CHECK(find_squares(w("0110")) == std::vector<Occ>{{1, 1}});
  CHECK(find_squares(w("010010")) == std::vector<Occ>{{0, 3}, {2, 1}});
  CHECK(find_squares(w("0")).empty());
  CHECK(find_squares(w("0000")) == std::vector<Occ>{{0, 1}, {0, 2}, {1, 1}, {2, 1}});
}

TEST_CASE("square_catalog") {
  CHECK(strs(square_catalog(2).entries) == std::set<std::string>{"00", "11"});
  CHECK(strs(square_catalog(4).entries) == std::set<std::string>{"00", "11", "0101", "1010"});
  CHECK(strs(square_catalog(12).entries) ==
        std::set<std::string>{"00", "11", "0101", "1010", "010010", "101101", "01100110", "10011001",
                              "011001011001", "100110100110"});
  CHECK_THROWS_AS(square_catalog(1), ParameterError);
}

TEST_CASE("unique_square_start") {
  CHECK(unique_square_start(4096, 512));
  CHECK(unique_square_start(16, 2));
  CHECK_FALSE(unique_square_start(w("0000"), 2));
  CHECK_THROWS_AS(unique_square_start(w("000"), 2), ParameterError);
  CHECK_THROWS_AS(unique_square_start(8, 8), ParameterError);
}

TEST_CASE("is_circular_overlap_free") {
  CHECK(is_circular_overlap_free(w("0")));
  CHECK(is_circular_overlap_free(w("0011")));
  CHECK_FALSE(is_circular_overlap_free(w("00110")));
  CHECK(is_circular_overlap_free(w("")));
  CHECK(is_circular_overlap_free(w("00")));
  CHECK(is_circular_overlap_free(w("010")));
  CHECK_FALSE(is_circular_overlap_free(w("00100")));
}

TEST_CASE("minimal_overlap_check") {
  CHECK(minimal_overlap_check(w("000")));
  CHECK(minimal_overlap_check(w("001100110")));
  CHECK_FALSE(minimal_overlap_check(w("0000")));
  CHECK_FALSE(minimal_overlap_check(w("0110")));
  CHECK_FALSE(minimal_overlap_check(w("00000")));
  for (unsigned k = 0; k <= 3; ++k) {
    const FiniteWord x = Morphism::thue_morse().power(FiniteWord({0}, 2), 2 * k);
    CHECK(minimal_overlap_check(FiniteWord({0}, 2) + x + x));
  }
}

TEST_CASE("is_tm_factor") {
  CHECK(is_tm_factor(w("0110")));
  CHECK_FALSE(is_tm_factor(w("000")));
  CHECK(is_tm_factor(w("010010")));
  CHECK(is_tm_factor(w("")));
  CHECK_THROWS_AS(is_tm_factor(w("012")), DomainError);
  // Agreement with a long literal prefix on every word of length 8.
  const auto facts = oracle::factors(oracle::thue_morse(1 << 12), 8);
  for (std::uint64_t code = 0; code < 256; ++code) {
    const std::string s = oracle::binary(code, 8);
    CHECK(is_tm_factor(FiniteWord::parse(s, 2)) == (facts.count(s) == 1));
  }
}

TEST_CASE("SuffixOverlapTracker matches the suffix test") {
  SuffixOverlapTracker t(16);
  const std::string s = "0110100110";
  for (char ch : s) CHECK_FALSE(t.push(static_cast<Letter>(ch - '0')));
  CHECK(t.size() == s.size());
  CHECK(t.push(0) == has_overlap_ending_at_end(w(s + "0")));
  t.pop();
  CHECK(t.size() == s.size());
  CHECK(t.push(1) == has_overlap_ending_at_end(w(s + "1")));
  CHECK(t.push(1) == has_overlap_ending_at_end(w(s + "11")));
  CHECK_THROWS(SuffixOverlapTracker(40000));
}

TEST_CASE("property: batch and incremental detectors agree exhaustively") {
  for (int alphabet : {2, 3}) {
    const std::size_t max_len = alphabet == 2 ? 14 : 9;
    for (std::size_t len = 0; len <= max_len; ++len) {
      std::uint64_t total = 1;
      for (std::size_t i = 0; i < len; ++i) total *= static_cast<std::uint64_t>(alphabet);
      for (std::uint64_t code = 0; code < total; ++code) {
        std::vector<Letter> letters(len);
        std::uint64_t c = code;
        for (std::size_t i = len; i-- > 0;) {
          letters[i] = static_cast<Letter>(c % static_cast<std::uint64_t>(alphabet));
          c /= static_cast<std::uint64_t>(alphabet);
        }
        const FiniteWord word(letters, alphabet);
        bool any_suffix = false;
        for (std::size_t p = 1; p <= len; ++p) any_suffix = any_suffix || has_overlap_ending_at_end(word.prefix(p));
        if (find_overlap(word).has_value() != any_suffix) {
          FAIL("detectors disagree on " << word.str());
        }
      }
    }
  }
}

TEST_CASE("property: random words agree with the literal oracle") {
  oracle::WordGen gen(21);
  for (int trial = 0; trial < 10000; ++trial) {
    const int alphabet = 2 + trial % 2;
    const std::string s = gen.word(gen.length(15, 40), alphabet);
    const FiniteWord word = FiniteWord::parse(s, alphabet);
    const auto got = find_overlap(word);
    const auto want = oracle::least_overlap(s);
    REQUIRE(got.has_value() == want.has_value());
    if (got) {
      CHECK(got->position == want->first);
      CHECK(got->period == want->second);
    }
    bool any_suffix = false;
    for (std::size_t p = 1; p <= s.size(); ++p) any_suffix = any_suffix || has_overlap_ending_at_end(word.prefix(p));
    CHECK(any_suffix == got.has_value());
  }
}

TEST_CASE("property: tracker agrees with the suffix test on random walks") {
  oracle::WordGen gen(22);
  SuffixOverlapTracker t(64);
  std::vector<Letter> stack;
  for (int step = 0; step < 20000; ++step) {
    const bool grow = stack.empty() || (stack.size() < 64 && gen.length(0, 2) != 0);
    if (grow) {
      const Letter a = static_cast<Letter>(gen.length(0, 1));
      stack.push_back(a);
      const bool expected = has_overlap_ending_at_end(std::span<const Letter>(stack));
      REQUIRE(t.push(a) == expected);
    } else {
      stack.pop_back();
      t.pop();
    }
  }
}

TEST_CASE("property: squares and circular tests match the oracles") {
  oracle::WordGen gen(23);
  for (int trial = 0; trial < 500; ++trial) {
    const std::string s = gen.word(gen.length(0, 24), 2);
    const FiniteWord word = FiniteWord::parse(s, 2);
    std::vector<std::pair<std::size_t, std::size_t>> got;
    for (const auto& occ : find_squares(word)) got.emplace_back(occ.position, occ.half_length);
    CHECK(got == oracle::squares(s));
    CHECK(is_circular_overlap_free(word) == oracle::circular_overlap_free(s));
    if (is_circular_overlap_free(word)) CHECK(is_overlap_free(word));
  }
}

TEST_CASE("property: psi maps overlaps to overlaps") {
  const Morphism psi = Morphism::psi();
  for (std::size_t len = 1; len <= 9; ++len) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < len; ++i) total *= 3;
    for (std::uint64_t code = 0; code < total; ++code) {
      std::vector<Letter> letters(len);
      std::uint64_t c = code;
      for (std::size_t i = len; i-- > 0; c /= 3) letters[i] = static_cast<Letter>(c % 3);
      const FiniteWord word(letters, 3);
      if (find_overlap(word) && !find_overlap(psi.apply(word))) FAIL("projection lost the overlap in " << word.str());
    }
  }
}

TEST_CASE("property: catalog equals scanned squares of a long prefix") {
  const std::string t = oracle::thue_morse(1 << 14);
  std::set<std::string> scanned;
  for (const auto& [pos, h] : oracle::squares(t.substr(0, 4096))) {
    if (2 * h <= 24) scanned.insert(t.substr(pos, 2 * h));
  }
  CHECK(strs(square_catalog(24).entries) == scanned);
}
