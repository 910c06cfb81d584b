#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "spreadrank/centrality.hpp"
#include "spreadrank/emh.hpp"
#include "spreadrank/graph.hpp"
#include "spreadrank/io.hpp"
#include "spreadrank/metrics.hpp"
#include "spreadrank/sir.hpp"

namespace spreadrank {

/// Bad arguments or configuration (exit code 1).
class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Input data that cannot be used (exit code 2).
class DataError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitData = 2, kExitRuntime = 3 };

/// Measure names accepted by compute_measures, in canonical order.
const std::vector<std::string>& known_measures();
/// The eight measures compared in the evaluation tables.
const std::vector<std::string>& table_measures();

struct ManifestEntry {
  std::string name;
  std::filesystem::path file;  ///< resolved against the manifest's directory
  count_t nodes = 0;
  count_t edges = 0;
  double avg_degree = 0.0;
  count_t max_degree = 0;
  double ksd_alpha = 0.9;
  double ksd_mu = 0.2;
  std::optional<double> assortativity;
  std::string source;
};

/// Reads a JSON array of dataset objects. Throws DataError.
std::vector<ManifestEntry> load_manifest(const std::filesystem::path& path);

/// Entry whose name equals `dataset` or whose file has the same file name.
const ManifestEntry* find_manifest_entry(const std::vector<ManifestEntry>& manifest,
                                         const std::string& dataset);

struct BetaGrid {
  std::vector<double> values;
  /// "start:stop:step" or a comma-separated list, all within [0,1].
  static BetaGrid parse(const std::string& spec);
  /// 0.01 .. min(1, beta_th + 0.15) in steps of 0.01.
  static BetaGrid around_threshold(double beta_th);
};

struct ExperimentConfig {
  std::vector<std::string> datasets;
  std::vector<std::string> measures = table_measures();
  EmhParams emh;
  std::optional<KsdParams> ksd;  ///< empty: manifest value, else defaults
  double weight_alpha = kDefaultWeightAlpha;
  NeighborTerm weight_term = NeighborTerm::kNeighbor;
  std::uint32_t gravity_radius = kDefaultGravityRadius;
  SirConfig sir;
  std::string beta_grid;  ///< empty: BetaGrid::around_threshold
  double delta = 0.01;
  count_t steps = 10;
  EtaDenominator eta = EtaDenominator::kAbsolute;
  std::filesystem::path out_dir = "out";
  std::filesystem::path manifest_path = "data/manifest.json";

  /// Throws UsageError for any parameter outside its documented range.
  void validate() const;
};

struct LoadedDataset {
  std::string name;
  Graph graph;
  const ManifestEntry* entry = nullptr;
};

/// Resolves a dataset argument (path or manifest name) and parses it.
LoadedDataset load_dataset(const std::string& dataset, const std::vector<ManifestEntry>& manifest,
                           std::ostream& log);

/// Computes the named measures in the given order. Throws UsageError for
/// unknown names, listing the valid ones.
std::vector<ScoreVector> compute_measures(const Graph& g, const std::vector<std::string>& names,
                                          const ExperimentConfig& config, const KsdParams& ksd);

/// "|V| |E| avg max assortativity" as printed by `stats`.
std::string format_stats_row(const GraphStats& stats);

/// Per-measure evaluation against SIR ground truth. SIR runs once per
/// distinct beta and is shared by all measures.
struct Evaluation {
  double beta_th = 0.0;
  std::vector<double> averaging_betas;
  std::vector<double> curve_betas;
  std::vector<EvalReport> reports;
  std::vector<EtaPoint> eta_curve;
  std::vector<SirOutcome> outcomes;  ///< ascending beta
  count_t sir_batches = 0;
};

Evaluation evaluate_measures(const Graph& g, const std::vector<ScoreVector>& measures,
                             const ExperimentConfig& config);

int cmd_stats(const std::vector<std::string>& datasets, const ExperimentConfig& config,
              std::ostream& out, std::ostream& log);
int cmd_rank(const ExperimentConfig& config, std::ostream& out, std::ostream& log);
int cmd_evaluate(const ExperimentConfig& config, std::ostream& out, std::ostream& log);
/// Writes the EMH trace of `label` and every node within two hops; an empty
/// label dumps all nodes.
int cmd_trace(const std::string& dataset, const std::string& label, const ExperimentConfig& config,
              std::ostream& out, std::ostream& log);

}  // namespace spreadrank
