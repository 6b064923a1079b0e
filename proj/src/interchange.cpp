#include "tmwords/interchange.hpp"

#include <algorithm>
#include <map>

#include "tmwords/avoidance.hpp"
#include "tmwords/errors.hpp"
#include "tmwords/parallel.hpp"

namespace tmwords {

namespace {

BigInt pow2(std::size_t e) {
  BigInt r = 1;
  r <<= e;
  return r;
}

std::vector<Letter> middle_of(const FiniteWord& z, const Split& s) {
  const auto letters = z.letters().subspan(s.prefix_len, s.mid_len);
  return {letters.begin(), letters.end()};
}

void check_split(const std::vector<FiniteWord>& R, const Split& split) {
  if (R.empty()) return;
  if (!is_valid_split(split, R.front().size())) {
    throw ParameterError("split (" + std::to_string(split.prefix_len) + "," + std::to_string(split.mid_len) + "," +
                         std::to_string(split.suffix_len) + ") is not valid for n = " +
                         std::to_string(R.front().size()));
  }
  for (const auto& z : R) {
    if (z.size() != R.front().size()) throw ParameterError("R mixes word lengths");
  }
}

}  // namespace

WitnessInstance build_witness(unsigned k) {
  if (k > kMaxWitnessK) {
    throw ResourceError("build_witness: k = " + std::to_string(k) + " exceeds the size guard k <= 6");
  }
  static const Morphism mu = Morphism::thue_morse();
  WitnessInstance inst;
  inst.k = k;
  inst.n = (std::size_t{1} << (2 * k + 1)) + 1;
  inst.x = mu.power(FiniteWord({0}, 2), 2 * k).widened(3);
  inst.w = FiniteWord({0}, 3) + inst.x + inst.x;
  if (inst.x.size() != (std::size_t{1} << (2 * k)) || inst.w.size() != inst.n) {
    throw ConstructionError("build_witness: lengths disagree with n = 2^{2k+1} + 1");
  }
  if (!minimal_overlap_check(inst.w)) {
    throw ConstructionError("build_witness: 0xx is not a minimal overlap for k = " + std::to_string(k));
  }
  return inst;
}

std::vector<FiniteWord> psi_preimages(const FiniteWord& x) {
  std::vector<std::size_t> ones;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] > 1) throw DomainError("psi_preimages: " + x.str() + " is not binary");
    if (x[i] == 1) ones.push_back(i);
  }
  if (ones.size() > 24) throw ResourceError("psi_preimages: more than 2^24 preimages");
  std::vector<FiniteWord> out;
  out.reserve(std::size_t{1} << ones.size());
  std::vector<Letter> y(x.letters().begin(), x.letters().end());
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << ones.size()); ++code) {
    // Leftmost 1 is the most significant choice, so codes run in lexicographic order.
    for (std::size_t j = 0; j < ones.size(); ++j) {
      y[ones[j]] = static_cast<Letter>(1 + ((code >> (ones.size() - 1 - j)) & 1U));
    }
    out.emplace_back(y, 3);
  }
  return out;
}

std::vector<FiniteWord> build_R(unsigned k) {
  if (k == 0) {
    throw ParameterError("build_R: k = 0 gives n = 3 and (n-1)/4 = 1/2, so |R| = 2^{(n-1)/4} is not an integer");
  }
  if (k > kMaxRK) throw ResourceError("build_R: k = " + std::to_string(k) + " exceeds the size guard k <= 2");
  const WitnessInstance inst = build_witness(k);
  std::vector<FiniteWord> R;
  const FiniteWord zero({0}, 3);
  for (const auto& y : psi_preimages(inst.x)) R.push_back(zero + y + y);
  std::sort(R.begin(), R.end());
  return R;
}

bool is_valid_split(const Split& s, std::size_t n) {
  if (n < 3 || s.prefix_len + s.mid_len + s.suffix_len != n) return false;
  const std::size_t m = (n - 1) / 2;
  return 2 * s.mid_len >= m && s.mid_len <= m;
}

std::vector<Split> all_splits(std::size_t n) {
  std::vector<Split> out;
  if (n < 3) return out;
  const std::size_t m = (n - 1) / 2;
  for (std::size_t mid = (m + 1) / 2; mid <= m; ++mid) {
    for (std::size_t pre = 0; pre + mid <= n; ++pre) out.push_back({pre, mid, n - pre - mid});
  }
  return out;
}

const std::vector<Split>& sampled_splits_k2() {
  static const std::vector<Split> splits = [] {
    const std::pair<std::size_t, std::size_t> picks[] = {
        {0, 8},  {1, 8},   {5, 8},  {12, 8}, {25, 8}, {3, 9},   {17, 9}, {0, 10}, {9, 10},  {23, 10},
        {4, 11}, {20, 11}, {2, 12}, {16, 12}, {21, 12}, {7, 13}, {19, 14}, {11, 15}, {0, 16}, {17, 16}};
    std::vector<Split> out;
    for (auto [pre, mid] : picks) out.push_back({pre, mid, 33 - pre - mid});
    return out;
  }();
  return splits;
}

std::vector<SwapViolation> swap_check(const std::vector<FiniteWord>& R, const Split& split) {
  check_split(R, split);
  std::vector<std::vector<SwapViolation>> per_row(R.size());
  parallel_for(R.size(), [&](std::size_t i) {
    const auto zi = R[i].letters();
    std::vector<Letter> buf(zi.begin(), zi.end());
    for (std::size_t j = 0; j < R.size(); ++j) {
      const auto zj = R[j].letters();
      if (std::equal(zi.begin() + static_cast<std::ptrdiff_t>(split.prefix_len),
                     zi.begin() + static_cast<std::ptrdiff_t>(split.prefix_len + split.mid_len),
                     zj.begin() + static_cast<std::ptrdiff_t>(split.prefix_len))) {
        continue;
      }
      std::copy_n(zj.begin() + static_cast<std::ptrdiff_t>(split.prefix_len), split.mid_len,
                  buf.begin() + static_cast<std::ptrdiff_t>(split.prefix_len));
      if (!is_overlap_free(buf)) per_row[i].push_back({i, j, FiniteWord(buf, 3)});
      std::copy_n(zi.begin() + static_cast<std::ptrdiff_t>(split.prefix_len), split.mid_len,
                  buf.begin() + static_cast<std::ptrdiff_t>(split.prefix_len));
    }
  });
  std::vector<SwapViolation> out;
  for (auto& row : per_row) {
    for (auto& v : row) out.push_back(std::move(v));
  }
  return out;
}

std::size_t swap_pairs(const std::vector<FiniteWord>& R, const Split& split) {
  check_split(R, split);
  std::map<std::vector<Letter>, std::size_t> classes;
  for (const auto& z : R) ++classes[middle_of(z, split)];
  std::size_t same = 0;
  for (const auto& [mid, count] : classes) same += count * count;
  return R.size() * R.size() - same;
}

std::size_t fixed_middle_bound(const std::vector<FiniteWord>& R, const Split& split) {
  check_split(R, split);
  std::map<std::vector<Letter>, std::size_t> classes;
  std::size_t best = 0;
  for (const auto& z : R) best = std::max(best, ++classes[middle_of(z, split)]);
  return best;
}

InterchangeReport contradiction_report(unsigned k, const Rational& c) {
  if (k < 1) throw ParameterError("contradiction_report needs k >= 1");
  if (k > kMaxReportK) throw ResourceError("contradiction_report: k above 10");
  if (c <= 0) throw ParameterError("contradiction_report needs c > 0");
  auto evaluate = [&c](unsigned kk, InterchangeReport& r) {
    const std::size_t n_minus_1 = std::size_t{1} << (2 * kk + 1);
    r.k = kk;
    r.n = BigInt(n_minus_1) + 1;
    r.c = c;
    r.r_size = pow2(n_minus_1 / 4);
    const BigInt n_plus_1 = r.n + 1;
    r.lower_bound = Rational(r.r_size) / (c * Rational(n_plus_1 * n_plus_1));
    r.upper_bound = pow2(n_minus_1 / 8);
    r.contradiction = r.lower_bound > Rational(r.upper_bound);
  };
  InterchangeReport report;
  evaluate(k, report);
  for (unsigned kk = 1; kk <= 8; ++kk) {
    InterchangeReport probe;
    evaluate(kk, probe);
    if (probe.contradiction) {
      report.threshold_k = kk;
      break;
    }
  }
  return report;
}

Rational parse_positive_rational(const std::string& text) {
  auto fail = [&text]() -> Rational { throw ParameterError("not a positive rational: '" + text + "'"); };
  auto parse_int = [&](const std::string& digits) {
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
      fail();
    }
    return BigInt(digits);
  };
  Rational value;
  if (const auto slash = text.find('/'); slash != std::string::npos) {
    const BigInt den = parse_int(text.substr(slash + 1));
    if (den == 0) fail();
    value = Rational(parse_int(text.substr(0, slash)), den);
  } else if (const auto dot = text.find('.'); dot != std::string::npos) {
    const std::string whole = text.substr(0, dot);
    const std::string frac = text.substr(dot + 1);
    const BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(frac.size()));
    value = Rational(parse_int(whole.empty() ? "0" : whole) * scale + (frac.empty() ? BigInt(0) : parse_int(frac)), scale);
  } else {
    value = Rational(parse_int(text));
  }
  if (value <= 0) fail();
  return value;
}

}  // namespace tmwords
