#include "spreadrank/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "spreadrank/numeric.hpp"

namespace spreadrank {

RankingList::RankingList(const ScoreVector& scores) {
  entries_.reserve(scores.size());
  for (node_t v = 0; v < scores.size(); ++v) {
    entries_.push_back({v, round_significant(scores[v])});
  }
  std::stable_sort(entries_.begin(), entries_.end(),
                   [](const Entry& a, const Entry& b) { return a.score > b.score; });
  for (std::size_t begin = 0; begin < entries_.size();) {
    std::size_t end = begin + 1;
    while (end < entries_.size() && entries_[end].score == entries_[begin].score) ++end;
    tie_classes_.emplace_back(begin, end);
    begin = end;
  }
}

namespace {

std::int64_t pairs(std::int64_t t) { return t * (t - 1) / 2; }

/// Sum of pairs() over runs of equal values in a sorted range.
template <typename It, typename Eq>
std::int64_t tied_pairs(It first, It last, Eq eq) {
  std::int64_t total = 0;
  while (first != last) {
    It run_end = std::next(first);
    while (run_end != last && eq(*first, *run_end)) ++run_end;
    total += pairs(std::distance(first, run_end));
    first = run_end;
  }
  return total;
}

/// Sorts v ascending, returning the number of strict inversions.
std::int64_t count_inversions(std::vector<double>& v, std::vector<double>& buffer) {
  const std::size_t n = v.size();
  buffer.resize(n);
  std::int64_t swaps = 0;
  for (std::size_t width = 1; width < n; width *= 2) {
    for (std::size_t lo = 0; lo < n; lo += 2 * width) {
      const std::size_t mid = std::min(lo + width, n), hi = std::min(lo + 2 * width, n);
      std::size_t i = lo, j = mid, k = lo;
      while (i < mid && j < hi) {
        if (v[j] < v[i]) {
          swaps += static_cast<std::int64_t>(mid - i);
          buffer[k++] = v[j++];
        } else {
          buffer[k++] = v[i++];
        }
      }
      while (i < mid) buffer[k++] = v[i++];
      while (j < hi) buffer[k++] = v[j++];
    }
    v.swap(buffer);
  }
  return swaps;
}

}  // namespace

double kendall_tau(std::span<const double> m, std::span<const double> n) {
  if (m.size() != n.size()) throw std::invalid_argument("kendall_tau: length mismatch");
  if (m.size() < 2) throw std::invalid_argument("kendall_tau: need at least 2 items");

  // Knight's algorithm: sort by (m, n), count ties, then count discordant
  // pairs as inversions of the n sequence.
  const std::size_t size = m.size();
  std::vector<std::pair<double, double>> keyed(size);
  for (std::size_t i = 0; i < size; ++i) {
    keyed[i] = {round_significant(m[i]), round_significant(n[i])};
  }
  std::sort(keyed.begin(), keyed.end());

  const std::int64_t all = pairs(static_cast<std::int64_t>(size));
  const std::int64_t tied_m = tied_pairs(keyed.begin(), keyed.end(),
                                         [](const auto& a, const auto& b) { return a.first == b.first; });
  const std::int64_t tied_both = tied_pairs(keyed.begin(), keyed.end(),
                                            [](const auto& a, const auto& b) { return a == b; });

  std::vector<double> ys(size), buffer;
  for (std::size_t i = 0; i < size; ++i) ys[i] = keyed[i].second;
  const std::int64_t discordant = count_inversions(ys, buffer);
  const std::int64_t tied_n = tied_pairs(ys.begin(), ys.end(), std::equal_to<>());

  const std::int64_t concordant = all - tied_m - tied_n + tied_both - discordant;
  const auto r = static_cast<double>(size);
  return 2.0 * static_cast<double>(concordant - discordant) / (r * (r - 1.0));
}

double kendall_tau(const ScoreVector& m, const ScoreVector& n) {
  return kendall_tau(std::span<const double>(m.scores), std::span<const double>(n.scores));
}

double monotonicity(const RankingList& ranking) {
  const auto total = static_cast<double>(ranking.size());
  if (ranking.size() < 2) throw std::invalid_argument("monotonicity: need at least 2 nodes");
  double tied = 0.0;
  for (auto [begin, end] : ranking.tie_classes()) {
    const auto size = static_cast<double>(end - begin);
    tied += size * (size - 1.0);
  }
  const double base = 1.0 - tied / (total * (total - 1.0));
  return base * base;
}

double improvement_pct(double tau_emh, double tau_other, EtaDenominator denominator) {
  if (tau_other == 0.0) return 0.0;
  const double scale = denominator == EtaDenominator::kAbsolute ? std::abs(tau_other) : tau_other;
  return (tau_emh - tau_other) / scale * 100.0;
}

std::vector<double> averaging_grid(double beta_th, double delta, count_t steps) {
  if (!(delta > 0.0)) throw std::invalid_argument("averaging grid: delta must be positive");
  if (steps < 1) throw std::invalid_argument("averaging grid: steps must be >= 1");
  std::vector<double> grid;
  grid.reserve(steps);
  for (count_t k = 1; k <= steps; ++k) {
    const double beta = beta_th + static_cast<double>(k) * delta;
    if (beta > 1.0) {
      throw std::invalid_argument("averaging grid: beta " + std::to_string(beta) + " exceeds 1");
    }
    grid.push_back(beta);
  }
  return grid;
}

double averaged_tau(const Graph& g, const ScoreVector& measure, double beta_th, double delta,
                    count_t steps, const SirConfig& sir_template) {
  const auto grid = averaging_grid(beta_th, delta, steps);
  double sum = 0.0;
  for (double beta : grid) {
    SirConfig config = sir_template;
    config.beta = beta;
    const SirOutcome outcome = spreading_capability(g, config);
    sum += kendall_tau(std::span<const double>(measure.scores), std::span<const double>(outcome.spread));
  }
  return sum / static_cast<double>(grid.size());
}

}  // namespace spreadrank
