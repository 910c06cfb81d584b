#include "spreadrank/centrality.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "spreadrank/parallel.hpp"

namespace spreadrank {

void KsdParams::validate() const {
  if (!(alpha > 0.0 && alpha < 1.0) || !(mu > 0.0 && mu < 1.0)) {
    throw std::invalid_argument("ksd alpha and mu must lie in (0,1)");
  }
}

ScoreVector degree_centrality(const Graph& g) {
  ScoreVector out{"DC", std::vector<double>(g.node_count())};
  for (node_t v = 0; v < g.node_count(); ++v) out.scores[v] = static_cast<double>(g.degree(v));
  return out;
}

ScoreVector k_shell(const Graph& g) {
  // Bucket-sort peeling (Batagelj & Zaversnik), O(|V| + |E|).
  const node_t n = g.node_count();
  std::vector<count_t> deg(n);
  count_t max_deg = 0;
  for (node_t v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    max_deg = std::max(max_deg, deg[v]);
  }

  std::vector<std::size_t> bin(max_deg + 1, 0);
  for (node_t v = 0; v < n; ++v) ++bin[deg[v]];
  std::size_t start = 0;
  for (auto& b : bin) {
    std::size_t count = b;
    b = start;
    start += count;
  }
  std::vector<node_t> order(n);
  std::vector<std::size_t> pos(n);
  for (node_t v = 0; v < n; ++v) {
    pos[v] = bin[deg[v]]++;
    order[pos[v]] = v;
  }
  for (std::size_t d = max_deg; d > 0; --d) bin[d] = bin[d - 1];
  if (!bin.empty()) bin[0] = 0;

  for (std::size_t i = 0; i < n; ++i) {
    node_t v = order[i];
    for (node_t u : g.neighbors(v)) {
      if (deg[u] > deg[v]) {
        const count_t du = deg[u];
        const std::size_t pu = pos[u];
        const std::size_t pw = bin[du];
        const node_t w = order[pw];
        if (u != w) {
          order[pu] = w;
          order[pw] = u;
          pos[u] = pw;
          pos[w] = pu;
        }
        ++bin[du];
        --deg[u];
      }
    }
  }

  ScoreVector out{"KS", std::vector<double>(n)};
  for (node_t v = 0; v < n; ++v) out.scores[v] = static_cast<double>(deg[v]);
  return out;
}

ScoreVector h_index(const Graph& g) {
  ScoreVector out{"HI", std::vector<double>(g.node_count())};
  std::vector<count_t> degrees;
  for (node_t v = 0; v < g.node_count(); ++v) {
    degrees.clear();
    for (node_t u : g.neighbors(v)) degrees.push_back(g.degree(u));
    std::sort(degrees.begin(), degrees.end(), std::greater<>());
    count_t h = 0;
    while (h < degrees.size() && degrees[h] >= h + 1) ++h;
    out.scores[v] = static_cast<double>(h);
  }
  return out;
}

ScoreVector neighborhood_coreness(const Graph& g, const ScoreVector& ks) {
  ScoreVector out{"cn", std::vector<double>(g.node_count(), 0.0)};
  for (node_t v = 0; v < g.node_count(); ++v) {
    for (node_t u : g.neighbors(v)) out.scores[v] += ks[u];
  }
  return out;
}

ScoreVector weight_neighborhood(const Graph& g, const ScoreVector& benchmark, double alpha,
                                NeighborTerm term) {
  if (g.edge_count() == 0) {
    throw std::invalid_argument("weight neighborhood centrality needs at least one edge");
  }
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::invalid_argument("weight neighborhood alpha must lie in (0,1)");
  }
  auto weight = [&](node_t i, node_t j) {
    return std::pow(static_cast<double>(g.degree(i)) * static_cast<double>(g.degree(j)), alpha);
  };

  double total = 0.0;
  for (auto [u, v] : g.edges()) total += weight(u, v);
  const double mean = total / static_cast<double>(g.edge_count());

  std::string name = "c(" + benchmark.measure + ")";
  if (benchmark.measure == "DC") name = "cdc";
  if (benchmark.measure == "KS") name = "cks";

  ScoreVector out{std::move(name), std::vector<double>(g.node_count())};
  for (node_t i = 0; i < g.node_count(); ++i) {
    double sum = 0.0;
    for (node_t j : g.neighbors(i)) {
      sum += weight(i, j) / mean * (term == NeighborTerm::kNeighbor ? benchmark[j] : benchmark[i]);
    }
    out.scores[i] = benchmark[i] + sum;
  }
  return out;
}

namespace {

template <typename MassOf>
ScoreVector gravity_like(const Graph& g, const ScoreVector& ks, std::uint32_t radius,
                         std::string name, MassOf mass_of) {
  if (radius < 1) throw std::invalid_argument("gravity radius must be at least 1");
  ScoreVector out{std::move(name), std::vector<double>(g.node_count(), 0.0)};
  parallel_for(g.node_count(), [&](std::size_t i) {
    const auto source = static_cast<node_t>(i);
    // Depth-limited BFS, accumulating as each shell is discovered.
    std::vector<std::uint32_t> dist(g.node_count(), kUnreachable);
    std::vector<node_t> frontier{source}, next;
    dist[source] = 0;
    double sum = 0.0;
    for (std::uint32_t d = 1; d <= radius && !frontier.empty(); ++d) {
      next.clear();
      for (node_t u : frontier) {
        for (node_t w : g.neighbors(u)) {
          if (dist[w] != kUnreachable) continue;
          dist[w] = d;
          next.push_back(w);
          sum += mass_of(w) / (static_cast<double>(d) * d);
        }
      }
      frontier.swap(next);
    }
    out.scores[source] = ks[source] * sum;
  });
  return out;
}

}  // namespace

ScoreVector gravity(const Graph& g, const ScoreVector& ks, std::uint32_t radius) {
  return gravity_like(g, ks, radius, "G", [&](node_t j) { return ks[j]; });
}

ScoreVector improved_gravity(const Graph& g, const ScoreVector& ks, std::uint32_t radius) {
  return gravity_like(g, ks, radius, "IGC",
                      [&](node_t j) { return static_cast<double>(g.degree(j)); });
}

ScoreVector ksd_centrality(const Graph& g, const ScoreVector& ks, const KsdParams& params) {
  params.validate();
  auto node_weight = [&](node_t v) {
    return params.alpha * static_cast<double>(g.degree(v)) + params.mu * ks[v];
  };
  ScoreVector out{"ksd", std::vector<double>(g.node_count(), 0.0)};
  for (node_t i = 0; i < g.node_count(); ++i) {
    const double wi = node_weight(i);
    for (node_t j : g.neighbors(i)) out.scores[i] += wi * node_weight(j);
  }
  return out;
}

}  // namespace spreadrank
