#include "spreadrank/io.hpp"

#include <fmt/format.h>
#include <fmt/ostream.h>

namespace spreadrank {

namespace {

// Labels are written verbatim unless they would break the CSV row.
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

}  // namespace

void write_scores_csv(std::ostream& out, const Graph& g, const ScoreVector& scores) {
  fmt::print(out, "node,score\n");
  for (node_t v = 0; v < g.node_count(); ++v) {
    fmt::print(out, "{},{:.6f}\n", csv_field(g.label(v)), scores[v]);
  }
}

void write_spread_csv(std::ostream& out, const Graph& g, const SirOutcome& outcome) {
  fmt::print(out, "node,spread\n");
  for (node_t v = 0; v < g.node_count(); ++v) {
    fmt::print(out, "{},{:.6f}\n", csv_field(g.label(v)), outcome.spread[v]);
  }
}

nlohmann::json sir_sidecar_json(const SirOutcome& outcome) {
  return {{"beta", outcome.beta},
          {"gamma", outcome.gamma},
          {"runs", outcome.runs},
          {"master_seed", outcome.master_seed}};
}

nlohmann::json emh_trace_json(const Graph& g, const EmhTrace& trace, std::span<const node_t> nodes) {
  auto record = [&](node_t v) {
    nlohmann::json neighbors = nlohmann::json::array();
    for (node_t u : g.neighbors(v)) neighbors.push_back(g.label(u));
    return nlohmann::json{{"node", g.label(v)},
                          {"index", v},
                          {"degree", g.degree(v)},
                          {"neighbors", std::move(neighbors)},
                          {"h", trace.h[v]},
                          {"diversity", trace.diversity[v]},
                          {"ih", trace.ih[v]},
                          {"s_vector", trace.s_vectors[v]},
                          {"mc", trace.mc[v]},
                          {"imh", trace.imh[v]},
                          {"emh", trace.emh[v]}};
  };
  nlohmann::json records = nlohmann::json::array();
  if (nodes.empty()) {
    for (node_t v = 0; v < g.node_count(); ++v) records.push_back(record(v));
  } else {
    for (node_t v : nodes) records.push_back(record(v));
  }
  return records;
}

nlohmann::json eval_report_json(const EvalReport& report) {
  nlohmann::json curve = nlohmann::json::array();
  for (auto [beta, tau] : report.tau_curve) curve.push_back({{"beta", beta}, {"tau", tau}});
  return {{"measure", report.measure_name},
          {"tau_curve", std::move(curve)},
          {"avg_tau", report.avg_tau},
          {"monotonicity", report.monotonicity},
          {"eta_vs", report.eta_vs}};
}

void write_tau_curve_csv(std::ostream& out, std::span<const EvalReport> reports) {
  fmt::print(out, "measure,beta,tau\n");
  for (const auto& report : reports) {
    for (auto [beta, tau] : report.tau_curve) {
      fmt::print(out, "{},{:.4f},{:.6f}\n", report.measure_name, beta, tau);
    }
  }
}

void write_eta_curve_csv(std::ostream& out, std::span<const EtaPoint> points) {
  fmt::print(out, "baseline,beta,eta_pct\n");
  for (const auto& p : points) fmt::print(out, "{},{:.4f},{:.6f}\n", p.baseline, p.beta, p.eta_pct);
}

}  // namespace spreadrank
