#include "doctest.h"
#include "oracles.hpp"
#include "tmwords/complexity.hpp"
#include "tmwords/errors.hpp"
#include "tmwords/word.hpp"

using namespace tmwords;

TEST_CASE("factor_count") {
  CHECK(factor_count(thue_morse_source(), 1) == 2);
  CHECK(factor_count(thue_morse_source(), 4) == 10);
  CHECK(factor_count(tk_source(3), 2) == 9);
  CHECK_THROWS_AS(factor_count(thue_morse_source(), 0), ParameterError);
  CHECK_THROWS_AS(tk_source(1), ParameterError);
  CHECK(thue_morse_source().id == "tm");
  CHECK(tk_source(5).id == "tmk:5");
}

TEST_CASE("factor_count reports non-stabilization") {
  // Pseudo-random bits keep producing new length-40 factors, so the count
  // doubles with the prefix until the cap.
  WordSource growing{"random", 2, [](std::size_t len) {
                       std::mt19937_64 rng(5);
                       std::vector<Letter> v(len);
                       for (auto& x : v) x = static_cast<Letter>(rng() & 1U);
                       return v;
                     }};
  CHECK_THROWS_AS(factor_count(growing, 40), InconclusiveError);
}

TEST_CASE("count_distinct_factors is exact") {
  const std::string t = oracle::thue_morse(2048);
  const FiniteWord w = FiniteWord::parse(t, 2);
  for (std::size_t n = 1; n <= 40; ++n) {
    CHECK(count_distinct_factors(w.letters(), n) == oracle::factors(t, n).size());
  }
  CHECK(count_distinct_factors(w.letters(), 5000) == 0);
  const std::vector<std::vector<Letter>> several{{0, 0, 0}, {1, 1, 1}, {0, 1}};
  CHECK(count_distinct_factors(std::span<const std::vector<Letter>>(several), 2) == 3);
}

TEST_CASE("dyadic decomposition") {
  const auto d = decompose(7);
  CHECK(d.a == 2);
  CHECK(d.branch == DyadicDecomposition::Branch::kUpper);
  CHECK(d.b == 1);
  CHECK(decompose(4).branch == DyadicDecomposition::Branch::kLower);
  CHECK(decompose(2).a == 1);
  CHECK_THROWS_AS(decompose(1), ParameterError);
  for (std::uint64_t n = 2; n <= (1u << 20); ++n) {
    const auto x = decompose(n);
    const std::uint64_t half = std::uint64_t{1} << (x.a - 1);
    const bool lower_ok = x.branch == DyadicDecomposition::Branch::kLower && n == (std::uint64_t{1} << x.a) + x.b;
    const bool upper_ok =
        x.branch == DyadicDecomposition::Branch::kUpper && n == (std::uint64_t{1} << x.a) + half + x.b;
    if (!(x.reconstruct() == n && x.b < half && (lower_ok || upper_ok))) FAIL("decompose(" << n << ")");
  }
}

TEST_CASE("closed forms at the quoted values") {
  CHECK(pt_formula(1) == 2);
  CHECK(pt_formula(2) == 4);
  CHECK(pt_formula(3) == 6);
  CHECK(pt_formula(8) == 22);
  CHECK(ptk_formula(1, 3) == 3);
  CHECK(ptk_formula(3, 3) == 15);
  CHECK(ptk_formula(2, 3) == 9);
  CHECK_THROWS_AS(ptk_formula(3, 1), ParameterError);
  CHECK_THROWS_AS(pt_formula(0), ParameterError);
  const std::vector<std::uint64_t> f{2, 4, 8, 12, 20, 28, 40};
  for (std::size_t n = 1; n <= 7; ++n) CHECK(pf_formula(n) == f[n - 1]);
  CHECK_THROWS_AS(pf_formula(0), ParameterError);
}

TEST_CASE("closed forms match literal factor sets") {
  const std::string t = oracle::thue_morse(1 << 13);
  for (std::size_t n = 1; n <= 64; ++n) CHECK(pt_formula(n) == oracle::factors(t, n).size());
  for (int k : {3, 4, 5}) {
    const std::string tk = oracle::generalized_thue_morse(1 << 14, k);
    for (std::size_t n = 1; n <= 24; ++n) CHECK(ptk_formula(n, k) == oracle::factors(tk, n).size());
  }
}

TEST_CASE("paperfolding counts match a literal union over instruction words") {
  // Every instruction word of length 10 covers all factors up to length 10
  // (the counts agree with K = 11 below).
  std::vector<std::set<std::string>> seen(11);
  for (std::uint64_t code = 0; code < (1u << 11); ++code) {
    const std::string w = oracle::paperfold(oracle::binary(code, 11));
    for (std::size_t n = 1; n <= 10; ++n) {
      const auto f = oracle::factors(w, n);
      seen[n].insert(f.begin(), f.end());
    }
  }
  const auto counts = paperfolding_factor_counts(10);
  CHECK(counts[0] == 1);
  for (std::size_t n = 1; n <= 10; ++n) {
    CHECK(counts[n] == seen[n].size());
    CHECK(paperfolding_factor_count(n) == seen[n].size());
  }
  CHECK_THROWS_AS(paperfolding_factor_count(0), ParameterError);
}

TEST_CASE("tables") {
  const auto brute = brute_table(thue_morse_source(), 64);
  const auto formula = tm_formula_table(64);
  CHECK(brute.values == formula.values);
  CHECK(brute.values[0] == 1);
  CHECK(brute.source == TableSource::kBrute);
  CHECK(formula.source == TableSource::kFormula);
  CHECK(brute.alphabet_size == 2);
  CHECK(tk_formula_table(3, 10).alphabet_size == 3);
  CHECK(paperfolding_brute_table(16).values == paperfolding_formula_table(16).values);
  CHECK(satisfies_growth_bounds(brute));
  ComplexityTable bad{"bad", 2, {1, 2, 5}, TableSource::kFormula};
  CHECK_FALSE(satisfies_growth_bounds(bad));
}

TEST_CASE("property: monotone and branching-bounded tables") {
  CHECK(satisfies_growth_bounds(tm_formula_table(4096)));
  CHECK(satisfies_growth_bounds(paperfolding_formula_table(4096)));
  for (int k = 2; k <= 6; ++k) CHECK(satisfies_growth_bounds(tk_formula_table(k, 2048)));
  CHECK(satisfies_growth_bounds(brute_table(tk_source(4), 64)));
}

TEST_CASE("property: polynomial bounds of the closed forms") {
  // Thue-Morse complexity is linear; the union over all paperfolding words
  // grows quadratically (f(11) = 96 already exceeds 8n), with f(n) <= 2n^2.
  CHECK(pf_formula(11) == 96);
  for (std::uint64_t n = 2; n <= 100000; ++n) {
    if (pt_formula(n) > 4 * n || pf_formula(n) > 2 * n * n) FAIL("bound fails at n = " << n);
  }
  for (std::uint64_t n = 1; n <= 1024; ++n) {
    if (ptk_formula(n, 2) != pt_formula(n)) FAIL("k = 2 specialization fails at n = " << n);
  }
}
