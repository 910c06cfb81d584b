#pragma once

#include <cstdint>
#include <functional>
#include <istream>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace spreadrank {

using node_t = std::uint32_t;
using count_t = std::uint64_t;

inline constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

/// Raised for malformed edge-list input. line() is 1-based, 0 when the
/// error is not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error(what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Immutable undirected simple graph in compressed adjacency form.
///
/// Nodes are dense indices [0, node_count()). Each node keeps the string
/// label it was read with; neighbor lists are sorted ascending.
class Graph {
 public:
  Graph() = default;

  /// Builds from an edge list over nodes [0, node_count). Self-loops and
  /// repeated edges are dropped. Labels default to the decimal index.
  static Graph from_edges(node_t node_count,
                          std::span<const std::pair<node_t, node_t>> edges,
                          std::vector<std::string> labels = {});

  node_t node_count() const noexcept { return static_cast<node_t>(labels_.size()); }
  count_t edge_count() const noexcept { return neighbors_.size() / 2; }

  std::span<const node_t> neighbors(node_t v) const;
  count_t degree(node_t v) const;

  const std::string& label(node_t v) const;
  std::optional<node_t> find(std::string_view label) const;
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  bool has_edge(node_t u, node_t v) const;

  /// Unordered edges (u < v) in ascending order.
  std::vector<std::pair<node_t, node_t>> edges() const;

 private:
  std::vector<std::size_t> offsets_{0};
  std::vector<node_t> neighbors_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, node_t> index_;
};

struct ParseOptions {
  /// Accept lines with more than two tokens and use the first two
  /// (e.g. weighted edge lists). Off by default: such lines are errors.
  bool ignore_extra_columns = false;
  /// Receives non-fatal notices such as the number of dropped edges.
  std::function<void(std::string_view)> on_warning;
};

/// Reads a whitespace- or comma-separated edge list. Lines starting with
/// '#' or '%' are comments. Labels map to dense indices in order of first
/// appearance. Throws ParseError.
Graph parse_edge_list(std::istream& in, const ParseOptions& options = {});
Graph parse_edge_list_string(std::string_view text, const ParseOptions& options = {});
Graph load_edge_list(const std::string& path, const ParseOptions& options = {});

/// Hop distances from source; nodes farther than max_depth (or in another
/// component) hold kUnreachable.
std::vector<std::uint32_t> bfs_distances(const Graph& g, node_t source,
                                         std::optional<std::uint32_t> max_depth = std::nullopt);

/// Size of the connected component of every node.
std::vector<count_t> component_sizes(const Graph& g);

struct GraphStats {
  count_t num_nodes = 0;
  count_t num_edges = 0;
  double avg_degree = 0.0;
  count_t max_degree = 0;
  /// Empty when the endpoint degrees have zero variance.
  std::optional<double> assortativity;
};

/// Requires at least two nodes and one edge (std::invalid_argument).
GraphStats graph_stats(const Graph& g);

}  // namespace spreadrank
