// spreadrank: node spreading-influence centralities and their SIR evaluation.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "spreadrank/experiment.hpp"

using namespace spreadrank;

int main(int argc, char** argv) {
  CLI::App app{"Rank nodes by spreading influence and evaluate rankings against SIR simulations"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "INI/TOML file with option values; command-line flags take precedence");

  ExperimentConfig config;
  std::optional<double> ksd_alpha, ksd_mu;
  std::string cumulative_mode = "sorted";
  bool eta_signed = false;
  bool weight_self_term = false;
  std::string manifest = config.manifest_path.string();
  std::string out_dir = config.out_dir.string();

  app.add_option("--dataset", config.datasets, "Edge-list file or manifest dataset name (repeatable)");
  app.add_option("--measures", config.measures, "Measures to compute")->delimiter(',');
  app.add_option("--beta-grid", config.beta_grid, "Curve grid: start:stop:step or comma list");
  app.add_option("--runs", config.sir.runs, "SIR runs per seed node")->capture_default_str();
  app.add_option("--seed", config.sir.master_seed, "SIR master seed")->capture_default_str();
  app.add_option("--gamma", config.sir.gamma, "SIR recovery probability")->capture_default_str();
  app.add_option("--threads", config.sir.threads, "Worker threads (0 = all cores)")->capture_default_str();
  app.add_option("--out-dir", out_dir, "Output directory")->capture_default_str();
  app.add_option("--manifest", manifest, "Dataset manifest")->capture_default_str();
  app.add_option("--alpha1", config.emh.alpha1, "IH weight of higher-diversity neighbors")->capture_default_str();
  app.add_option("--alpha2", config.emh.alpha2, "IH weight of equal-diversity neighbors")->capture_default_str();
  app.add_option("--s", config.emh.s, "MC damping base")->capture_default_str();
  app.add_option("--r", config.emh.r, "MC damping scale")->capture_default_str();
  app.add_option("--s-mode", cumulative_mode, "MC input sequence: sorted, distinct or prefix")
      ->check(CLI::IsMember({"sorted", "distinct", "prefix"}))
      ->capture_default_str();
  app.add_option("--ksd-alpha", ksd_alpha, "ksd degree weight (default: manifest, else 0.9)");
  app.add_option("--ksd-mu", ksd_mu, "ksd coreness weight (default: manifest, else 0.2)");
  app.add_option("--weight-alpha", config.weight_alpha, "Exponent of cdc/cks edge weights")->capture_default_str();
  app.add_flag("--weight-self-term", weight_self_term, "cdc/cks: multiply by the node's own benchmark value");
  app.add_option("--radius", config.gravity_radius, "G/IGC neighborhood radius")->capture_default_str();
  app.add_option("--delta", config.delta, "Averaging grid step above the threshold")->capture_default_str();
  app.add_option("--steps", config.steps, "Averaging grid points")->capture_default_str();
  app.add_flag("--eta-signed", eta_signed, "Divide improvement by the signed baseline tau");

  std::vector<std::string> stats_files;
  auto* stats = app.add_subcommand("stats", "Print |V| |E| <k> k_max assortativity per dataset");
  stats->add_option("files", stats_files, "Edge-list files or manifest names");

  app.add_subcommand("rank", "Write per-measure score CSVs and a monotonicity table");
  app.add_subcommand("evaluate", "Kendall tau of each measure against SIR spreading over a beta grid");

  std::string trace_label;
  auto* trace = app.add_subcommand("trace", "EMH intermediates of a node and its 2-hop neighborhood as JSON");
  trace->add_option("node", trace_label, "Node label (omit to dump every node)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  if (ksd_alpha || ksd_mu) config.ksd = KsdParams{ksd_alpha.value_or(0.9), ksd_mu.value_or(0.2)};
  if (cumulative_mode == "distinct") config.emh.mode = CumulativeMode::kDistinctValues;
  if (cumulative_mode == "prefix") config.emh.mode = CumulativeMode::kPrefixSums;
  if (eta_signed) config.eta = EtaDenominator::kSigned;
  if (weight_self_term) config.weight_term = NeighborTerm::kSelf;
  config.manifest_path = manifest;
  config.out_dir = out_dir;

  try {
    if (stats->parsed()) {
      stats_files.insert(stats_files.end(), config.datasets.begin(), config.datasets.end());
      return cmd_stats(stats_files, config, std::cout, std::cerr);
    }
    if (app.got_subcommand("rank")) return cmd_rank(config, std::cout, std::cerr);
    if (app.got_subcommand("evaluate")) return cmd_evaluate(config, std::cout, std::cerr);
    if (trace->parsed()) {
      if (config.datasets.size() != 1) throw UsageError("trace: exactly one --dataset is required");
      return cmd_trace(config.datasets.front(), trace_label, config, std::cout, std::cerr);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DataError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return kExitUsage;
}
