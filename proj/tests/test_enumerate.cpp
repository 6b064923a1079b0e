#include "doctest.h"
#include "oracles.hpp"
#include "tmwords/avoidance.hpp"
#include "tmwords/enumerate.hpp"
#include "tmwords/errors.hpp"
#include "tmwords/parallel.hpp"

using namespace tmwords;

TEST_CASE("small overlap-free counts") {
  const CountTable t = count_overlap_free(4);
  CHECK(t.values == std::vector<std::uint64_t>{1, 2, 4, 6, 10});
  CHECK(t.method == CountMethod::kPrunedDfs);
  CHECK(t.max_n() == 4);
  CHECK(count_overlap_free(0).values == std::vector<std::uint64_t>{1});
  CHECK(count_overlap_free_exhaustive(4).method == CountMethod::kExhaustiveFilter);
  CHECK_THROWS_AS(count_overlap_free_exhaustive(25), ResourceError);
}

TEST_CASE("pruned DFS equals the literal filter") {
  const CountTable dfs = count_overlap_free(16);
  CHECK(dfs.values == count_overlap_free_exhaustive(16).values);
  for (std::size_t n = 0; n <= 12; ++n) {
    std::uint64_t count = 0;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << n); ++code) {
      count += oracle::overlap_free(oracle::binary(code, n)) ? 1 : 0;
    }
    CHECK(dfs.values[n] == count);
  }
}

TEST_CASE("for_each_overlap_free visits words in order") {
  std::vector<std::string> seen;
  for_each_overlap_free(4, [&](std::span<const Letter> w) {
    std::string s;
    for (Letter a : w) s += static_cast<char>('0' + a);
    seen.push_back(s);
  });
  CHECK(seen.size() == 10);
  CHECK(std::is_sorted(seen.begin(), seen.end()));
  CHECK(seen.front() == "0010");
  for (const auto& s : seen) CHECK(oracle::overlap_free(s));
}

TEST_CASE("growth_envelope") {
  std::vector<std::uint64_t> constant(300, 7);
  CHECK(growth_envelope(constant, 8, 256) == doctest::Approx(0.0));
  std::vector<std::uint64_t> linear(300);
  for (std::size_t n = 0; n < linear.size(); ++n) linear[n] = n;
  CHECK(growth_envelope(linear, 8, 256) == doctest::Approx(1.0));
  std::vector<std::uint64_t> cube(300);
  for (std::size_t n = 0; n < cube.size(); ++n) cube[n] = n * n * n;
  CHECK(growth_envelope(cube, 2, 256) == doctest::Approx(3.0));
  CHECK_THROWS_AS(growth_envelope(linear, 8, 15), ParameterError);
  CHECK_THROWS_AS(growth_envelope(linear, 0, 16), ParameterError);
  CHECK_THROWS_AS(growth_envelope(linear, 128, 512), ParameterError);
}

TEST_CASE("circular overlap-free lengths") {
  const CircularReport r = circular_overlap_free_lengths(8);
  CHECK(r.support == std::vector<std::size_t>{1, 2, 3, 4, 6, 8});
  CHECK(r.counts[5] == 0);
  CHECK(r.counts[1] == 2);
  CHECK(r.counts[2] == 4);
  for (const auto& [n, example] : r.examples) {
    CHECK(example.size() == n);
    CHECK(is_circular_overlap_free(example));
  }
  CHECK(r.examples.size() == r.support.size());
  CHECK_THROWS_AS(circular_overlap_free_lengths(0), ParameterError);
}

TEST_CASE("circular counts agree with literal rotations") {
  const CircularReport r = circular_overlap_free_lengths(16);
  for (std::size_t n = 1; n <= 16; ++n) {
    std::uint64_t count = 0;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << n); ++code) {
      count += oracle::circular_overlap_free(oracle::binary(code, n)) ? 1 : 0;
    }
    CHECK_MESSAGE(r.counts[n] == count, "n = " << n);
  }
}

TEST_CASE("property: count table invariants up to 600") {
  const CountTable t = count_overlap_free(600);
  CHECK(t.values[0] == 1);
  for (std::size_t n = 1; n <= 600; ++n) {
    CHECK(t.values[n] % 2 == 0);
    CHECK(t.values[n] <= 2 * t.values[n - 1]);
  }
  // Monotone only at the start: the first drop is 164 -> 152 at n = 25.
  for (std::size_t n = 1; n <= 24; ++n) CHECK(t.values[n] >= t.values[n - 1]);
  CHECK(t.values[24] == 164);
  CHECK(t.values[25] == 152);
}

TEST_CASE("property: counts do not depend on the worker count") {
  const unsigned saved = thread_count();
  set_thread_count(1);
  const auto one = count_overlap_free(200).values;
  const auto circ_one = circular_overlap_free_lengths(24).counts;
  set_thread_count(7);
  const auto seven = count_overlap_free(200).values;
  const auto circ_seven = circular_overlap_free_lengths(24).counts;
  set_thread_count(saved);
  CHECK(one == seven);
  CHECK(circ_one == circ_seven);
}

TEST_CASE("circular support is 2^j and 3*2^j up to 48") {
  const CircularReport r = circular_overlap_free_lengths(48);
  CHECK(r.support == std::vector<std::size_t>{1, 2, 3, 4, 6, 8, 12, 16, 24, 32, 48});
  for (std::size_t n = 1; n <= 48; ++n) CHECK(r.counts[n] <= count_overlap_free(48).values[n]);
}
