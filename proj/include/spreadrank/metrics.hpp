#pragma once

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "spreadrank/centrality.hpp"
#include "spreadrank/graph.hpp"
#include "spreadrank/sir.hpp"

namespace spreadrank {

/// Nodes ordered by descending score, grouped into maximal tie classes.
/// Scores tie when equal after round_significant().
class RankingList {
 public:
  struct Entry {
    node_t node;
    double score;
  };

  explicit RankingList(const ScoreVector& scores);

  const std::vector<Entry>& entries() const noexcept { return entries_; }
  /// Half-open [begin, end) ranges into entries(), in descending score order.
  const std::vector<std::pair<std::size_t, std::size_t>>& tie_classes() const noexcept {
    return tie_classes_;
  }
  std::size_t size() const noexcept { return entries_.size(); }

 private:
  std::vector<Entry> entries_;
  std::vector<std::pair<std::size_t, std::size_t>> tie_classes_;
};

/// Tau as 2 (R_a - R_b) / (R (R - 1)) with R the number of nodes. Pairs
/// tied in either vector count as neither concordant nor discordant.
/// O(n log n). Throws std::invalid_argument on length mismatch or n < 2.
double kendall_tau(std::span<const double> m, std::span<const double> n);
double kendall_tau(const ScoreVector& m, const ScoreVector& n);

/// M(I) = (1 - sum N_i (N_i - 1) / (N (N - 1)))^2. Throws for N < 2.
double monotonicity(const RankingList& ranking);

enum class EtaDenominator {
  kAbsolute,  ///< divide by |tau_other|
  kSigned,    ///< divide by tau_other as printed
};

/// Improvement of tau_emh over tau_other in percent; 0 when tau_other = 0.
double improvement_pct(double tau_emh, double tau_other,
                       EtaDenominator denominator = EtaDenominator::kAbsolute);

/// beta_th + k delta for k = 1..steps. Throws std::invalid_argument when
/// delta <= 0, steps < 1, or a grid value exceeds 1.
std::vector<double> averaging_grid(double beta_th, double delta, count_t steps);

/// Mean over the averaging grid of tau(measure, SIR spread). Every grid
/// value is checked before any simulation runs.
double averaged_tau(const Graph& g, const ScoreVector& measure, double beta_th, double delta,
                    count_t steps, const SirConfig& sir_template);

struct EvalReport {
  std::string measure_name;
  std::vector<std::pair<double, double>> tau_curve;  ///< (beta, tau)
  double avg_tau = 0.0;
  double monotonicity = 0.0;
  std::map<std::string, double> eta_vs;  ///< baseline name -> eta(%) of averaged tau
};

}  // namespace spreadrank
