#include "tmwords/series.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "tmwords/errors.hpp"

namespace tmwords {

namespace {

using Row = std::vector<BigInt>;

void normalize(Row& row) {
  BigInt g = 0;
  for (const auto& v : row) {
    if (v != 0) g = boost::multiprecision::gcd(g, abs(v));
  }
  if (g > 1) {
    for (auto& v : row) v /= g;
  }
}

// Solves rows * x = rhs where each row is [coefficients..., rhs], by
// fraction-free elimination. Free unknowns are set to 0. `unique` reports
// whether the coefficient matrix has full column rank.
std::optional<std::vector<Rational>> solve(std::vector<Row> rows, std::size_t unknowns, bool* unique) {
  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < unknowns && rank < rows.size(); ++col) {
    std::size_t pick = rank;
    while (pick < rows.size() && rows[pick][col] == 0) ++pick;
    if (pick == rows.size()) continue;
    std::swap(rows[rank], rows[pick]);
    const BigInt pivot = rows[rank][col];
    for (std::size_t j = rank + 1; j < rows.size(); ++j) {
      if (rows[j][col] == 0) continue;
      const BigInt factor = rows[j][col];
      for (std::size_t c = col; c <= unknowns; ++c) {
        rows[j][c] = rows[j][c] * pivot - rows[rank][c] * factor;
      }
      normalize(rows[j]);
    }
    pivot_cols.push_back(col);
    ++rank;
  }
  for (std::size_t j = rank; j < rows.size(); ++j) {
    if (rows[j][unknowns] != 0) return std::nullopt;
  }
  if (unique != nullptr) *unique = (rank == unknowns);
  std::vector<Rational> x(unknowns, Rational(0));
  for (std::size_t i = rank; i-- > 0;) {
    const std::size_t pc = pivot_cols[i];
    Rational acc(rows[i][unknowns]);
    for (std::size_t c = pc + 1; c < unknowns; ++c) acc -= Rational(rows[i][c]) * x[c];
    x[pc] = acc / Rational(rows[i][pc]);
  }
  return x;
}

// Rows n = first .. last-1 of the order-d recurrence system.
std::vector<Row> recurrence_rows(const SequenceWindow& s, std::size_t d, std::size_t first, std::size_t last) {
  std::vector<Row> rows;
  for (std::size_t n = first; n < last; ++n) {
    Row row(d + 1);
    for (std::size_t i = 1; i <= d; ++i) row[i - 1] = s.values[n - i];
    row[d] = s.values[n];
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

SequenceWindow differences(const SequenceWindow& s, int order) {
  if (order < 1) throw ParameterError("differences needs order >= 1");
  if (s.size() <= static_cast<std::size_t>(order)) {
    throw ParameterError("differences: window of " + std::to_string(s.size()) + " terms is too short for order " +
                         std::to_string(order));
  }
  SequenceWindow out = s;
  for (int k = 0; k < order; ++k) {
    for (std::size_t i = 0; i + 1 < out.values.size(); ++i) out.values[i] = out.values[i + 1] - out.values[i];
    out.values.pop_back();
  }
  return out;
}

std::optional<PeriodGuess> detect_eventual_period(const SequenceWindow& s, std::size_t max_pre,
                                                  std::size_t max_per) {
  if (max_per < 1) throw ParameterError("detect_eventual_period needs max_per >= 1");
  if (s.size() < max_pre + 2 * max_per) {
    throw ParameterError("detect_eventual_period: window of " + std::to_string(s.size()) +
                         " terms is shorter than max_pre + 2 max_per");
  }
  const auto& v = s.values;
  for (std::size_t pre = 0; pre <= max_pre; ++pre) {
    for (std::size_t per = 1; per <= max_per; ++per) {
      bool ok = true;
      for (std::size_t i = pre; i + per < v.size(); ++i) {
        if (v[i + per] != v[i]) {
          ok = false;
          break;
        }
      }
      if (ok) return PeriodGuess{pre, per};
    }
  }
  return std::nullopt;
}

std::size_t max_run(const SequenceWindow& s, std::int64_t value) {
  std::size_t best = 0, cur = 0;
  for (std::int64_t v : s.values) {
    cur = (v == value) ? cur + 1 : 0;
    best = std::max(best, cur);
  }
  return best;
}

bool recurrence_holds(const SequenceWindow& s, const RecurrenceGuess& g) {
  if (g.coefficients.size() != g.order) return false;
  for (std::size_t n = g.order; n < s.size(); ++n) {
    Rational acc(0);
    for (std::size_t i = 1; i <= g.order; ++i) acc += g.coefficients[i - 1] * Rational(s.values[n - i]);
    if (acc != Rational(s.values[n])) return false;
  }
  return true;
}

std::optional<RecurrenceGuess> guess_linear_recurrence(const SequenceWindow& s, std::size_t max_order) {
  if (max_order < 1) throw ParameterError("guess_linear_recurrence needs max_order >= 1");
  if (s.size() < 3 * max_order) {
    throw ParameterError("guess_linear_recurrence: window of " + std::to_string(s.size()) +
                         " terms is shorter than 3 max_order");
  }
  if (std::all_of(s.values.begin(), s.values.end(), [](std::int64_t v) { return v == 0; })) {
    return RecurrenceGuess{1, {Rational(0)}};
  }
  for (std::size_t d = 1; d <= max_order; ++d) {
    bool unique = false;
    auto fitted = solve(recurrence_rows(s, d, d, 2 * d), d, &unique);
    if (!fitted || !unique) {
      // Underdetermined leading block: take any solution of the full system.
      fitted = solve(recurrence_rows(s, d, d, s.size()), d, nullptr);
    }
    if (!fitted) continue;
    RecurrenceGuess g{d, std::move(*fitted)};
    if (recurrence_holds(s, g)) return g;
  }
  return std::nullopt;
}

GapSupport support_and_gap_ratio(const SequenceWindow& s, std::int64_t from_index) {
  if (from_index < 1) throw ParameterError("support_and_gap_ratio needs from_index >= 1");
  GapSupport out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const std::int64_t n = s.offset + static_cast<std::int64_t>(i);
    if (n >= from_index && s.values[i] != 0) out.support.push_back(n);
  }
  if (out.support.size() < 2) {
    throw ParameterError("support_and_gap_ratio: fewer than two nonzero terms from index " +
                         std::to_string(from_index));
  }
  bool first = true;
  for (std::size_t j = 1; j < out.support.size(); ++j) {
    const Rational r(out.support[j], out.support[j - 1]);
    if (first || r < out.min_ratio) out.min_ratio = r;
    first = false;
  }
  return out;
}

KernelAutomaton kernel_closure(const IndexedSequence& s, unsigned k, unsigned depth_limit, std::size_t window) {
  if (k < 2) throw ParameterError("kernel_closure needs k >= 2");
  if (window < 64) throw ParameterError("kernel_closure needs window >= 64");
  {
    // Largest index touched: k^(depth_limit+1) * window.
    unsigned __int128 reach = window;
    for (unsigned e = 0; e <= depth_limit; ++e) {
      reach *= k;
      if (reach > (static_cast<unsigned __int128>(1) << 62)) {
        throw ParameterError("kernel_closure: k^depth_limit * window overflows the index range");
      }
    }
  }
  KernelAutomaton aut;
  aut.k = k;
  aut.window = window;
  aut.depth_limit = depth_limit;
  aut.complete = true;

  std::map<std::vector<std::int64_t>, std::size_t> seen;
  std::vector<std::uint64_t> power{1};  // power[e] = k^e
  auto pow_k = [&](unsigned e) {
    while (power.size() <= e) power.push_back(power.back() * k);
    return power[e];
  };
  auto sample = [&](unsigned e, std::uint64_t r) {
    const std::uint64_t step = pow_k(e);
    std::vector<std::int64_t> vals(window);
    for (std::size_t n = 0; n < window; ++n) vals[n] = s(step * n + r);
    return vals;
  };

  seen.emplace(sample(0, 0), 0);
  aut.classes.push_back({0, 0});
  aut.transitions.emplace_back(k, KernelAutomaton::kUnresolved);
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t c = queue.front();
    queue.pop_front();
    const auto [e, r] = aut.classes[c];
    for (unsigned d = 0; d < k; ++d) {
      const unsigned child_e = e + 1;
      const std::uint64_t child_r = r + d * pow_k(e);
      auto vals = sample(child_e, child_r);
      auto it = seen.find(vals);
      if (it != seen.end()) {
        aut.transitions[c][d] = it->second;
        continue;
      }
      if (child_e > depth_limit) {
        aut.complete = false;
        continue;
      }
      const std::size_t id = aut.classes.size();
      seen.emplace(std::move(vals), id);
      aut.classes.push_back({child_e, child_r});
      aut.transitions.emplace_back(k, KernelAutomaton::kUnresolved);
      aut.transitions[c][d] = id;
      queue.push_back(id);
    }
  }
  return aut;
}

}  // namespace tmwords
