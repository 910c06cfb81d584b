#include "spreadrank/emh.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "spreadrank/numeric.hpp"

namespace spreadrank {

namespace {
bool open_unit(double x) { return x > 0.0 && x < 1.0; }
}  // namespace

void EmhParams::validate() const {
  if (!open_unit(alpha1) || !open_unit(alpha2)) {
    throw std::invalid_argument("alpha1 and alpha2 must lie in (0,1)");
  }
  if (!(alpha1 + alpha2 < 1.0)) throw std::invalid_argument("alpha1 + alpha2 must be < 1");
  if (!open_unit(s)) throw std::invalid_argument("s must lie in (0,1)");
  if (!(r > 0.0) || !std::isfinite(r)) throw std::invalid_argument("r must be positive");
}

std::vector<count_t> neighbor_diversity(const Graph& g, const ScoreVector& h) {
  std::vector<count_t> out(g.node_count(), 0);
  std::vector<double> values;
  for (node_t v = 0; v < g.node_count(); ++v) {
    values.clear();
    for (node_t u : g.neighbors(v)) values.push_back(h[u]);
    std::sort(values.begin(), values.end());
    out[v] = static_cast<count_t>(std::unique(values.begin(), values.end()) - values.begin());
  }
  return out;
}

std::vector<double> improved_h_index(const Graph& g, const std::vector<count_t>& diversity,
                                     const EmhParams& params) {
  params.validate();
  std::vector<double> out(g.node_count(), 0.0);
  for (node_t v = 0; v < g.node_count(); ++v) {
    const count_t degree = g.degree(v);
    if (degree == 0) continue;
    count_t greater = 0, equal = 0;
    for (node_t u : g.neighbors(v)) {
      if (diversity[u] > diversity[v]) ++greater;
      else if (diversity[u] == diversity[v]) ++equal;
    }
    const count_t smaller = degree - greater - equal;
    out[v] = (params.alpha1 * static_cast<double>(greater) + params.alpha2 * static_cast<double>(equal) +
              params.alpha3() * static_cast<double>(smaller)) /
             static_cast<double>(degree);
  }
  return out;
}

std::vector<double> cumulative_vector(const Graph& g, const std::vector<double>& ih, node_t v,
                                      CumulativeMode mode) {
  auto nbrs = g.neighbors(v);
  std::vector<node_t> order(nbrs.begin(), nbrs.end());
  std::stable_sort(order.begin(), order.end(), [&](node_t a, node_t b) { return ih[a] > ih[b]; });

  std::vector<double> seq;
  seq.reserve(order.size());
  for (node_t u : order) seq.push_back(ih[u]);

  switch (mode) {
    case CumulativeMode::kSortedNeighbors:
      break;
    case CumulativeMode::kDistinctValues:
      seq.erase(std::unique(seq.begin(), seq.end(),
                            [](double a, double b) { return round_significant(a) == round_significant(b); }),
                seq.end());
      break;
    case CumulativeMode::kPrefixSums:
      std::partial_sum(seq.begin(), seq.end(), seq.begin());
      break;
  }
  return seq;
}

double damped_sum(const std::vector<double>& sequence, double s, double r) {
  double sum = 0.0;
  for (std::size_t k = 0; k < sequence.size(); ++k) {
    const auto j = static_cast<double>(k + 1);
    sum += std::pow(s, 1.0 + j * j / r) * sequence[k];
  }
  return sum;
}

std::vector<double> cumulative_centrality(const Graph& g, const std::vector<double>& ih,
                                          const EmhParams& params) {
  params.validate();
  std::vector<double> out(g.node_count());
  for (node_t v = 0; v < g.node_count(); ++v) {
    out[v] = damped_sum(cumulative_vector(g, ih, v, params.mode), params.s, params.r);
  }
  return out;
}

std::vector<double> imh(const Graph& g, const std::vector<double>& mc) {
  std::vector<double> out(g.node_count(), 0.0);
  for (node_t v = 0; v < g.node_count(); ++v) {
    for (node_t u : g.neighbors(v)) out[v] += mc[u];
  }
  return out;
}

std::vector<double> emh(const Graph& g, const std::vector<double>& imh_values) {
  std::vector<double> out(imh_values.begin(), imh_values.end());
  for (node_t v = 0; v < g.node_count(); ++v) {
    for (node_t u : g.neighbors(v)) out[v] += imh_values[u];
  }
  return out;
}

EmhTrace emh_pipeline(const Graph& g, const EmhParams& params) {
  params.validate();
  EmhTrace trace;
  const ScoreVector h = h_index(g);
  trace.h.reserve(g.node_count());
  for (double x : h.scores) trace.h.push_back(static_cast<count_t>(x));
  trace.diversity = neighbor_diversity(g, h);
  trace.ih = improved_h_index(g, trace.diversity, params);
  trace.s_vectors.reserve(g.node_count());
  trace.mc.reserve(g.node_count());
  for (node_t v = 0; v < g.node_count(); ++v) {
    trace.s_vectors.push_back(cumulative_vector(g, trace.ih, v, params.mode));
    trace.mc.push_back(damped_sum(trace.s_vectors.back(), params.s, params.r));
  }
  trace.imh = imh(g, trace.mc);
  trace.emh = emh(g, trace.imh);
  return trace;
}

}  // namespace spreadrank
