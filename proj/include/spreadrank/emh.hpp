#pragma once

#include <vector>

#include "spreadrank/centrality.hpp"
#include "spreadrank/graph.hpp"

namespace spreadrank {

/// How the per-node sequence fed into the cumulative centrality is built
/// from the neighbors' IH values.
enum class CumulativeMode {
  kSortedNeighbors,  ///< all neighbor IH values, descending (length = degree)
  kDistinctValues,   ///< distinct neighbor IH values, descending
  kPrefixSums,       ///< running sums of the descending neighbor IH values
};

struct EmhParams {
  double alpha1 = 0.5;
  double alpha2 = 0.3;
  double s = 0.5;
  double r = 10.0;
  CumulativeMode mode = CumulativeMode::kSortedNeighbors;

  /// Weight given to neighbors with smaller diversity.
  double alpha3() const noexcept { return 1.0 - alpha1 - alpha2; }

  /// Throws std::invalid_argument when alpha1, alpha2 or s fall outside
  /// (0,1), alpha1 + alpha2 >= 1, or r <= 0.
  void validate() const;
};

/// Every intermediate of the EMH computation, indexed by node.
struct EmhTrace {
  std::vector<count_t> h;
  std::vector<count_t> diversity;
  std::vector<double> ih;
  std::vector<std::vector<double>> s_vectors;
  std::vector<double> mc;
  std::vector<double> imh;
  std::vector<double> emh;
};

/// Number of distinct H-index values among each node's neighbors.
std::vector<count_t> neighbor_diversity(const Graph& g, const ScoreVector& h);

/// IH(v) = (a1 A1 + a2 A2 + (1 - a1 - a2)(D - A1 - A2)) / D where A1 and A2
/// count neighbors with larger and equal diversity. 0 for isolated nodes.
std::vector<double> improved_h_index(const Graph& g, const std::vector<count_t>& diversity,
                                     const EmhParams& params);

/// Neighbor IH values of v sorted descending (ties ordered by node index).
std::vector<double> cumulative_vector(const Graph& g, const std::vector<double>& ih, node_t v,
                                      CumulativeMode mode = CumulativeMode::kSortedNeighbors);

/// MC(v) = sum_j s^(1 + j^2/r) S_j(v), j counted from 1.
std::vector<double> cumulative_centrality(const Graph& g, const std::vector<double>& ih,
                                          const EmhParams& params);

/// Weighted sum of one node's sequence, as used by cumulative_centrality.
double damped_sum(const std::vector<double>& sequence, double s, double r);

/// IMH(v): sum of MC over v's neighbors.
std::vector<double> imh(const Graph& g, const std::vector<double>& mc);

/// EMH(v) = IMH(v) + sum of IMH over v's neighbors.
std::vector<double> emh(const Graph& g, const std::vector<double>& imh_values);

EmhTrace emh_pipeline(const Graph& g, const EmhParams& params = {});

}  // namespace spreadrank
