#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "spreadrank/graph.hpp"

using namespace spreadrank;
using namespace spreadrank::testing;

TEST_CASE("parse_edge_list: minimal path graph") {
  Graph g = parse_edge_list_string("a b\nb c\n");
  CHECK(g.node_count() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.label(0) == "a");
  CHECK(g.label(2) == "c");
  CHECK(g.find("b") == node_t{1});
  CHECK_FALSE(g.find("z"));
}

TEST_CASE("parse_edge_list: duplicates and self-loops are dropped with a warning") {
  std::vector<std::string> warnings;
  ParseOptions options;
  options.on_warning = [&](std::string_view w) { warnings.emplace_back(w); };
  Graph g = parse_edge_list_string("1 2\n2 1\n1 1\n", options);
  CHECK(g.node_count() == 2);
  CHECK(g.edge_count() == 1);
  REQUIRE(warnings.size() == 1);
  CHECK(warnings[0].find("1 duplicate") != std::string::npos);
  CHECK(warnings[0].find("1 self-loop") != std::string::npos);
}

TEST_CASE("parse_edge_list: separators, comments, CRLF and BOM") {
  Graph g = parse_edge_list_string("\xEF\xBB\xBF# header\r\n% konect style\r\nx,y\r\n\r\n  y\tz  \r\n");
  CHECK(g.node_count() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.label(0) == "x");
}

TEST_CASE("parse_edge_list: numeric labels keep first-appearance order") {
  Graph g = parse_edge_list_string("10 2\n2 1\n");
  CHECK(g.label(0) == "10");
  CHECK(g.label(1) == "2");
  CHECK(g.label(2) == "1");
}

TEST_CASE("parse_edge_list: errors") {
  SUBCASE("malformed line reports its number") {
    try {
      parse_edge_list_string("a b\nb c d\n");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
      CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
  }
  SUBCASE("single token") { CHECK_THROWS_AS(parse_edge_list_string("a\n"), ParseError); }
  SUBCASE("empty input") {
    CHECK_THROWS_WITH_AS(parse_edge_list_string(""), "no edges", ParseError);
    CHECK_THROWS_WITH_AS(parse_edge_list_string("# only a comment\n"), "no edges", ParseError);
  }
  SUBCASE("extra columns allowed on request") {
    ParseOptions options;
    options.ignore_extra_columns = true;
    CHECK(parse_edge_list_string("a b 0.5\n", options).edge_count() == 1);
  }
  SUBCASE("missing file") { CHECK_THROWS_AS(load_edge_list("/nonexistent/file.txt"), ParseError); }
}

TEST_CASE("self-loop line still registers its node") {
  Graph g = parse_edge_list_string("a a\nb c\n");
  CHECK(g.node_count() == 3);
  CHECK(g.degree(*g.find("a")) == 0);
}

TEST_CASE("degree") {
  Graph s = star(4);
  CHECK(s.degree(0) == 4);
  CHECK(s.degree(3) == 1);
  Graph iso = make_graph(3, {{0, 1}});
  CHECK(iso.degree(2) == 0);
  CHECK_THROWS_AS(s.degree(5), std::out_of_range);
}

TEST_CASE("bfs_distances") {
  Graph p = path(3);
  CHECK(bfs_distances(p, 0) == std::vector<std::uint32_t>{0, 1, 2});
  CHECK(bfs_distances(p, 0, 1) == std::vector<std::uint32_t>{0, 1, kUnreachable});
  Graph two = make_graph(4, {{0, 1}, {2, 3}});
  auto d = bfs_distances(two, 0);
  CHECK(d[1] == 1);
  CHECK(d[2] == kUnreachable);
  CHECK(d[3] == kUnreachable);
  CHECK_THROWS_AS(bfs_distances(p, 3), std::out_of_range);
}

TEST_CASE("component_sizes") {
  Graph g = make_graph(6, {{0, 1}, {1, 2}, {3, 4}});
  CHECK(component_sizes(g) == std::vector<count_t>{3, 3, 3, 2, 2, 1});
}

TEST_CASE("graph_stats") {
  SUBCASE("star S4 is perfectly disassortative") {
    GraphStats s = graph_stats(star(4));
    CHECK(s.num_nodes == 5);
    CHECK(s.num_edges == 4);
    CHECK(s.avg_degree == doctest::Approx(1.6));
    CHECK(s.max_degree == 4);
    REQUIRE(s.assortativity);
    CHECK(*s.assortativity == doctest::Approx(-1.0));
  }
  SUBCASE("regular graph has undefined assortativity") {
    CHECK_FALSE(graph_stats(cycle(5)).assortativity);
  }
  SUBCASE("path P4 by hand") {
    // Oriented degree pairs: (1,2),(2,1),(2,2),(2,2),(2,1),(1,2); mean 5/3.
    // cov = E[xy] - mean^2 = 16/6 - 25/9 = -1/9
    // var = E[x^2] - mean^2 = 18/6 - 25/9 = 2/9, so r = -0.5.
    auto s = graph_stats(path(4));
    REQUIRE(s.assortativity);
    CHECK(*s.assortativity == doctest::Approx(-0.5));
  }
  SUBCASE("preconditions") {
    CHECK_THROWS_AS(graph_stats(make_graph(1, {})), std::invalid_argument);
    CHECK_THROWS_AS(graph_stats(make_graph(3, {})), std::invalid_argument);
  }
}

TEST_CASE("graph invariants on random graphs") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    const auto n = static_cast<node_t>(2 + rng() % 40);
    Graph g = random_graph(n, 0.15, rng);
    count_t degree_sum = 0;
    for (node_t u = 0; u < n; ++u) {
      degree_sum += g.degree(u);
      auto nb = g.neighbors(u);
      CHECK(std::is_sorted(nb.begin(), nb.end()));
      CHECK(std::adjacent_find(nb.begin(), nb.end()) == nb.end());
      for (node_t v : nb) {
        CHECK(v != u);
        CHECK(g.has_edge(v, u));
      }
    }
    CHECK(degree_sum == 2 * g.edge_count());

    auto dist = bfs_distances(g, 0);
    auto oracle = all_pairs_distances(g);
    for (node_t v = 0; v < n; ++v) {
      CHECK((dist[v] == kUnreachable ? -1 : static_cast<int>(dist[v])) == oracle[0][v]);
    }
    for (auto [u, v] : g.edges()) {
      if (dist[u] == kUnreachable) continue;
      CHECK(std::max(dist[u], dist[v]) - std::min(dist[u], dist[v]) <= 1);
    }
  }
}

TEST_CASE("stats do not depend on edge-list line order") {
  std::mt19937_64 rng(11);
  Graph g = random_graph(30, 0.2, rng);
  std::vector<std::string> lines;
  for (auto [u, v] : g.edges()) lines.push_back(g.label(u) + " " + g.label(v));
  auto stats_of = [](const std::vector<std::string>& ls) {
    std::string text;
    for (const auto& l : ls) text += l + "\n";
    return graph_stats(parse_edge_list_string(text));
  };
  GraphStats base = stats_of(lines);
  for (int trial = 0; trial < 5; ++trial) {
    std::shuffle(lines.begin(), lines.end(), rng);
    GraphStats s = stats_of(lines);
    CHECK(s.num_nodes == base.num_nodes);
    CHECK(s.num_edges == base.num_edges);
    CHECK(s.max_degree == base.max_degree);
    CHECK(s.avg_degree == doctest::Approx(base.avg_degree));
    REQUIRE(s.assortativity.has_value() == base.assortativity.has_value());
    if (s.assortativity) CHECK(*s.assortativity == doctest::Approx(*base.assortativity).epsilon(1e-12));
  }
}
