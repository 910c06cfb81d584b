#pragma once

#include <string>
#include <vector>

#include "spreadrank/graph.hpp"

namespace spreadrank {

/// Per-node scores indexed by dense node index, tagged with the measure
/// that produced them.
struct ScoreVector {
  std::string measure;
  std::vector<double> scores;

  std::size_t size() const noexcept { return scores.size(); }
  double operator[](node_t v) const { return scores[v]; }
};

struct KsdParams {
  double alpha = 0.9;
  double mu = 0.2;

  /// Throws std::invalid_argument unless both lie strictly inside (0,1).
  void validate() const;
};

/// Where the benchmark value enters the neighbor sum of weight_neighborhood.
enum class NeighborTerm {
  kNeighbor,  ///< phi_i + sum_j (A_ij / <A>) * phi_j
  kSelf,      ///< phi_i + sum_j (A_ij / <A>) * phi_i, the literal printed form
};

inline constexpr std::uint32_t kDefaultGravityRadius = 3;
inline constexpr double kDefaultWeightAlpha = 0.5;

ScoreVector degree_centrality(const Graph& g);

/// k-shell index by iterative peeling; isolated nodes get 0.
ScoreVector k_shell(const Graph& g);

/// Largest h such that at least h neighbors have degree >= h.
ScoreVector h_index(const Graph& g);

/// cn(i): sum of neighbor k-shell values.
ScoreVector neighborhood_coreness(const Graph& g, const ScoreVector& ks);

/// Weight neighborhood centrality over a benchmark measure (DC gives cdc,
/// KS gives cks). A_ij = (k_i k_j)^alpha, <A> is its mean over the
/// undirected edges. Throws std::invalid_argument on an edgeless graph.
ScoreVector weight_neighborhood(const Graph& g, const ScoreVector& benchmark, double alpha,
                                NeighborTerm term = NeighborTerm::kNeighbor);

/// G(i) = sum over 0 < d_ij <= radius of ks(i) ks(j) / d_ij^2.
ScoreVector gravity(const Graph& g, const ScoreVector& ks,
                    std::uint32_t radius = kDefaultGravityRadius);

/// IGC(i) = sum over 0 < d_ij <= radius of ks(i) k(j) / d_ij^2.
ScoreVector improved_gravity(const Graph& g, const ScoreVector& ks,
                             std::uint32_t radius = kDefaultGravityRadius);

/// Weighted k-shell degree: sum over neighbors of
/// (alpha d_i + mu core_i)(alpha d_j + mu core_j).
ScoreVector ksd_centrality(const Graph& g, const ScoreVector& ks, const KsdParams& params);

}  // namespace spreadrank
