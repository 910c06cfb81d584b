#pragma once

#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "spreadrank/centrality.hpp"
#include "spreadrank/emh.hpp"
#include "spreadrank/graph.hpp"
#include "spreadrank/metrics.hpp"
#include "spreadrank/sir.hpp"

namespace spreadrank {

/// `node,score` with original labels and six decimals.
void write_scores_csv(std::ostream& out, const Graph& g, const ScoreVector& scores);

/// `node,spread` with six decimals.
void write_spread_csv(std::ostream& out, const Graph& g, const SirOutcome& outcome);
/// beta, gamma, runs, master_seed of an outcome.
nlohmann::json sir_sidecar_json(const SirOutcome& outcome);

/// One record per node with every EMH intermediate. `nodes` selects and
/// orders the records; empty means all nodes.
nlohmann::json emh_trace_json(const Graph& g, const EmhTrace& trace,
                              std::span<const node_t> nodes = {});

nlohmann::json eval_report_json(const EvalReport& report);

/// `measure,beta,tau` rows for every report's curve.
void write_tau_curve_csv(std::ostream& out, std::span<const EvalReport> reports);

struct EtaPoint {
  std::string baseline;
  double beta;
  double eta_pct;
};
/// `baseline,beta,eta_pct`.
void write_eta_curve_csv(std::ostream& out, std::span<const EtaPoint> points);

}  // namespace spreadrank
