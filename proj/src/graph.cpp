#include "spreadrank/graph.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

namespace spreadrank {

Graph Graph::from_edges(node_t node_count, std::span<const std::pair<node_t, node_t>> edges,
                        std::vector<std::string> labels) {
  if (labels.empty()) {
    labels.reserve(node_count);
    for (node_t v = 0; v < node_count; ++v) labels.push_back(std::to_string(v));
  }
  if (labels.size() != node_count) {
    throw std::invalid_argument("label count does not match node count");
  }

  Graph g;
  g.labels_ = std::move(labels);
  g.index_.reserve(node_count);
  for (node_t v = 0; v < node_count; ++v) {
    if (!g.index_.emplace(g.labels_[v], v).second) {
      throw std::invalid_argument("duplicate node label '" + g.labels_[v] + "'");
    }
  }

  std::vector<std::vector<node_t>> adjacency(node_count);
  for (auto [u, v] : edges) {
    if (u >= node_count || v >= node_count) {
      throw std::out_of_range("edge endpoint out of range");
    }
    if (u == v) continue;
    adjacency[u].push_back(v);
    adjacency[v].push_back(u);
  }

  g.offsets_.assign(node_count + 1, 0);
  for (node_t v = 0; v < node_count; ++v) {
    auto& list = adjacency[v];
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    g.offsets_[v + 1] = g.offsets_[v] + list.size();
  }
  g.neighbors_.reserve(g.offsets_.back());
  for (const auto& list : adjacency) {
    g.neighbors_.insert(g.neighbors_.end(), list.begin(), list.end());
  }
  return g;
}

std::span<const node_t> Graph::neighbors(node_t v) const {
  if (v >= node_count()) throw std::out_of_range("node index out of range");
  return {neighbors_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
}

count_t Graph::degree(node_t v) const {
  if (v >= node_count()) throw std::out_of_range("node index out of range");
  return offsets_[v + 1] - offsets_[v];
}

const std::string& Graph::label(node_t v) const {
  if (v >= node_count()) throw std::out_of_range("node index out of range");
  return labels_[v];
}

std::optional<node_t> Graph::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool Graph::has_edge(node_t u, node_t v) const {
  auto list = neighbors(u);
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<std::pair<node_t, node_t>> Graph::edges() const {
  std::vector<std::pair<node_t, node_t>> out;
  out.reserve(edge_count());
  for (node_t u = 0; u < node_count(); ++u) {
    for (node_t v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  auto is_sep = [](char c) { return c == ' ' || c == '\t' || c == ',' || c == '\r' || c == '\v' || c == '\f'; };
  while (i < line.size()) {
    while (i < line.size() && is_sep(line[i])) ++i;
    std::size_t start = i;
    while (i < line.size() && !is_sep(line[i])) ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

}  // namespace

Graph parse_edge_list(std::istream& in, const ParseOptions& options) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, node_t> index;
  std::vector<std::pair<node_t, node_t>> edges;
  std::size_t self_loops = 0;

  auto intern = [&](std::string_view token) {
    auto [it, inserted] = index.emplace(std::string(token), static_cast<node_t>(labels.size()));
    if (inserted) labels.emplace_back(token);
    return it->second;
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view(line);
    if (line_no == 1 && view.starts_with("\xEF\xBB\xBF")) view.remove_prefix(3);
    auto tokens = split_tokens(view);
    if (tokens.empty()) continue;
    if (tokens.front().starts_with('#') || tokens.front().starts_with('%')) continue;
    if (tokens.size() < 2 || (tokens.size() > 2 && !options.ignore_extra_columns)) {
      throw ParseError("line " + std::to_string(line_no) + ": expected 2 tokens, found " +
                           std::to_string(tokens.size()),
                       line_no);
    }
    node_t u = intern(tokens[0]);
    node_t v = intern(tokens[1]);
    if (u == v) {
      ++self_loops;
      continue;
    }
    edges.emplace_back(u, v);
  }

  const auto n = static_cast<node_t>(labels.size());
  Graph g = Graph::from_edges(n, edges, std::move(labels));
  if (g.edge_count() == 0) throw ParseError("no edges", 0);

  std::size_t duplicates = edges.size() - g.edge_count();
  if ((duplicates > 0 || self_loops > 0) && options.on_warning) {
    options.on_warning("dropped " + std::to_string(duplicates) + " duplicate edge(s) and " +
                       std::to_string(self_loops) + " self-loop(s)");
  }
  return g;
}

Graph parse_edge_list_string(std::string_view text, const ParseOptions& options) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in, options);
}

Graph load_edge_list(const std::string& path, const ParseOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'", 0);
  try {
    return parse_edge_list(in, options);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what(), e.line());
  }
}

std::vector<std::uint32_t> bfs_distances(const Graph& g, node_t source,
                                         std::optional<std::uint32_t> max_depth) {
  if (source >= g.node_count()) throw std::out_of_range("source index out of range");
  std::vector<std::uint32_t> dist(g.node_count(), kUnreachable);
  std::vector<node_t> frontier{source};
  std::vector<node_t> next;
  dist[source] = 0;
  for (std::uint32_t depth = 1; !frontier.empty(); ++depth) {
    if (max_depth && depth > *max_depth) break;
    next.clear();
    for (node_t u : frontier) {
      for (node_t w : g.neighbors(u)) {
        if (dist[w] == kUnreachable) {
          dist[w] = depth;
          next.push_back(w);
        }
      }
    }
    frontier.swap(next);
  }
  return dist;
}

std::vector<count_t> component_sizes(const Graph& g) {
  const node_t n = g.node_count();
  std::vector<node_t> component(n, kUnreachable);
  std::vector<count_t> sizes;
  std::vector<node_t> stack;
  for (node_t root = 0; root < n; ++root) {
    if (component[root] != kUnreachable) continue;
    const auto id = static_cast<node_t>(sizes.size());
    count_t size = 0;
    component[root] = id;
    stack.push_back(root);
    while (!stack.empty()) {
      node_t u = stack.back();
      stack.pop_back();
      ++size;
      for (node_t w : g.neighbors(u)) {
        if (component[w] == kUnreachable) {
          component[w] = id;
          stack.push_back(w);
        }
      }
    }
    sizes.push_back(size);
  }
  std::vector<count_t> out(n);
  for (node_t v = 0; v < n; ++v) out[v] = sizes[component[v]];
  return out;
}

GraphStats graph_stats(const Graph& g) {
  if (g.node_count() < 2 || g.edge_count() < 1) {
    throw std::invalid_argument("graph_stats needs at least 2 nodes and 1 edge");
  }
  GraphStats stats;
  stats.num_nodes = g.node_count();
  stats.num_edges = g.edge_count();
  stats.avg_degree = 2.0 * static_cast<double>(stats.num_edges) / static_cast<double>(stats.num_nodes);
  for (node_t v = 0; v < g.node_count(); ++v) stats.max_degree = std::max(stats.max_degree, g.degree(v));

  // Degree Pearson correlation over both orientations of every edge. Both
  // marginals are identical, so one mean and one variance suffice.
  double sum = 0.0, sum_sq = 0.0, sum_prod = 0.0;
  for (auto [u, v] : g.edges()) {
    const auto du = static_cast<double>(g.degree(u));
    const auto dv = static_cast<double>(g.degree(v));
    sum += du + dv;
    sum_sq += du * du + dv * dv;
    sum_prod += 2.0 * du * dv;
  }
  const double m = 2.0 * static_cast<double>(stats.num_edges);
  const double mean = sum / m;
  const double variance = sum_sq / m - mean * mean;
  const double covariance = sum_prod / m - mean * mean;
  if (variance > 1e-12 * std::max(1.0, mean * mean)) {
    stats.assortativity = covariance / variance;
  }
  return stats;
}

}  // namespace spreadrank
