#pragma once

// Test-only reference implementations and graph builders. Everything here
// is written the slow, obvious way and must not call the code under test
// beyond Graph construction.

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "spreadrank/graph.hpp"

namespace spreadrank::testing {

using Edges = std::vector<std::pair<node_t, node_t>>;

inline Graph make_graph(node_t n, const Edges& edges) { return Graph::from_edges(n, edges); }

/// Star with `leaves` leaves; node 0 is the center.
inline Graph star(node_t leaves) {
  Edges e;
  for (node_t v = 1; v <= leaves; ++v) e.emplace_back(0, v);
  return make_graph(leaves + 1, e);
}

inline Graph path(node_t n) {
  Edges e;
  for (node_t v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return make_graph(n, e);
}

inline Graph cycle(node_t n) {
  Edges e;
  for (node_t v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
  return make_graph(n, e);
}

inline Graph complete(node_t n) {
  Edges e;
  for (node_t u = 0; u < n; ++u)
    for (node_t v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return make_graph(n, e);
}

/// Triangle 0-1-2 with pendant 3 attached to 0.
inline Graph triangle_with_pendant() { return make_graph(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}}); }

/// Erdős–Rényi G(n, p).
inline Graph random_graph(node_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  Edges e;
  for (node_t u = 0; u < n; ++u)
    for (node_t v = u + 1; v < n; ++v)
      if (coin(rng)) e.emplace_back(u, v);
  return make_graph(n, e);
}

/// Adjacency matrix view for the brute-force oracles.
inline std::vector<std::vector<bool>> adjacency_matrix(const Graph& g) {
  std::vector<std::vector<bool>> a(g.node_count(), std::vector<bool>(g.node_count(), false));
  for (auto [u, v] : g.edges()) a[u][v] = a[v][u] = true;
  return a;
}

/// Literal peeling: for k = 1, 2, ... repeatedly strip every node whose
/// residual degree is <= k, assigning shell k.
inline std::vector<double> k_shell_oracle(const Graph& g) {
  const node_t n = g.node_count();
  auto a = adjacency_matrix(g);
  std::vector<bool> removed(n, false);
  std::vector<double> shell(n, 0.0);
  auto residual = [&](node_t v) {
    int d = 0;
    for (node_t u = 0; u < n; ++u) d += (!removed[u] && a[v][u]) ? 1 : 0;
    return d;
  };
  node_t left = n;
  for (node_t v = 0; v < n; ++v) {
    if (residual(v) == 0) {
      removed[v] = true;
      --left;
    }
  }
  for (int k = 1; left > 0; ++k) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (node_t v = 0; v < n; ++v) {
        if (!removed[v] && residual(v) <= k) {
          removed[v] = true;
          shell[v] = k;
          --left;
          changed = true;
        }
      }
    }
  }
  return shell;
}

/// Exhaustive pair enumeration of 2 (R_a - R_b) / (R (R - 1)).
inline double kendall_oracle(const std::vector<double>& m, const std::vector<double>& n) {
  const std::size_t r = m.size();
  long long concordant = 0, discordant = 0;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i + 1; j < r; ++j) {
      if (m[i] == m[j] || n[i] == n[j]) continue;
      if ((m[i] > m[j]) == (n[i] > n[j])) ++concordant;
      else ++discordant;
    }
  }
  return 2.0 * static_cast<double>(concordant - discordant) / (static_cast<double>(r) * (r - 1.0));
}

/// All-pairs hop distances by Floyd–Warshall.
inline std::vector<std::vector<int>> all_pairs_distances(const Graph& g) {
  const node_t n = g.node_count();
  const int inf = 1 << 20;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (node_t v = 0; v < n; ++v) d[v][v] = 0;
  for (auto [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
  for (node_t k = 0; k < n; ++k)
    for (node_t i = 0; i < n; ++i)
      for (node_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  for (auto& row : d)
    for (auto& x : row)
      if (x >= inf) x = -1;
  return d;
}

}  // namespace spreadrank::testing
