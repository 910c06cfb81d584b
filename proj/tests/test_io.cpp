#include <doctest.h>

#include <sstream>

#include "oracles.hpp"
#include "spreadrank/io.hpp"

using namespace spreadrank;
using namespace spreadrank::testing;

TEST_CASE("score CSV quotes labels containing quotes") {
  Graph g = parse_edge_list_string("a\"b c\n");
  std::ostringstream out;
  write_scores_csv(out, g, ScoreVector{"DC", {1.0, 1.0}});
  CHECK(out.str() == "node,score\n\"a\"\"b\",1.000000\nc,1.000000\n");
}

TEST_CASE("score CSV exact layout") {
  Graph g = parse_edge_list_string("alpha beta\nbeta gamma\n");
  std::ostringstream out;
  write_scores_csv(out, g, ScoreVector{"DC", {1.0, 2.0, 1.0 / 3.0}});
  CHECK(out.str() == "node,score\nalpha,1.000000\nbeta,2.000000\ngamma,0.333333\n");
}

TEST_CASE("SIR outcome CSV and sidecar") {
  Graph g = path(2);
  SirOutcome o{0.25, 1.0, 10, 7, {1.5, 1.25}};
  std::ostringstream out;
  write_spread_csv(out, g, o);
  CHECK(out.str() == "node,spread\n0,1.500000\n1,1.250000\n");
  auto side = sir_sidecar_json(o);
  CHECK(side["beta"] == 0.25);
  CHECK(side["gamma"] == 1.0);
  CHECK(side["runs"] == 10);
  CHECK(side["master_seed"] == 7);
}

TEST_CASE("EMH trace JSON carries every intermediate") {
  Graph g = star(4);
  auto trace = emh_pipeline(g);
  auto all = emh_trace_json(g, trace);
  REQUIRE(all.size() == 5);
  const auto& center = all[0];
  CHECK(center["node"] == "0");
  CHECK(center["degree"] == 4);
  CHECK(center["h"] == 1);
  CHECK(center["diversity"] == 1);
  CHECK(center["s_vector"].size() == 4);
  CHECK(center["emh"].get<double>() == doctest::Approx(2.093812785174));
  CHECK(center["neighbors"].size() == 4);

  std::vector<node_t> pick{3, 0};
  auto some = emh_trace_json(g, trace, pick);
  REQUIRE(some.size() == 2);
  CHECK(some[0]["node"] == "3");
}

TEST_CASE("tau and eta curve CSVs") {
  EvalReport r;
  r.measure_name = "EMH";
  r.tau_curve = {{0.01, 0.5}, {0.02, 0.75}};
  std::ostringstream tau;
  write_tau_curve_csv(tau, std::span<const EvalReport>(&r, 1));
  CHECK(tau.str() == "measure,beta,tau\nEMH,0.0100,0.500000\nEMH,0.0200,0.750000\n");

  std::vector<EtaPoint> pts{{"DC", 0.01, 12.5}};
  std::ostringstream eta;
  write_eta_curve_csv(eta, pts);
  CHECK(eta.str() == "baseline,beta,eta_pct\nDC,0.0100,12.500000\n");

  auto j = eval_report_json(r);
  CHECK(j["measure"] == "EMH");
  CHECK(j["tau_curve"].size() == 2);
}
