#include "spreadrank/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <fmt/format.h>
#include <fmt/ostream.h>
#include <json.hpp>

#include "spreadrank/io.hpp"

namespace spreadrank {

namespace fs = std::filesystem;
using nlohmann::json;

const std::vector<std::string>& known_measures() {
  static const std::vector<std::string> names{"DC", "KS",  "HI", "cn", "cdc", "cks", "G",
                                              "IGC", "ksd", "IH", "MC", "IMH", "EMH"};
  return names;
}

const std::vector<std::string>& table_measures() {
  static const std::vector<std::string> names{"cdc", "cks", "cn", "DC", "EMH", "G", "IGC", "ksd"};
  return names;
}

// ---------------------------------------------------------------------------
// Manifest

std::vector<ManifestEntry> load_manifest(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open manifest '" + path.string() + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw DataError("manifest '" + path.string() + "': " + e.what());
  }
  if (doc.is_object() && doc.contains("datasets")) doc = doc.at("datasets");
  if (!doc.is_array()) throw DataError("manifest '" + path.string() + "' must hold an array");

  std::vector<ManifestEntry> entries;
  try {
    for (const auto& item : doc) {
      ManifestEntry e;
      e.name = item.at("name").get<std::string>();
      e.file = path.parent_path() / item.at("file").get<std::string>();
      e.nodes = item.at("nodes").get<count_t>();
      e.edges = item.at("edges").get<count_t>();
      e.avg_degree = item.at("avg_degree").get<double>();
      e.max_degree = item.at("max_degree").get<count_t>();
      e.ksd_alpha = item.value("ksd_alpha", 0.9);
      e.ksd_mu = item.value("ksd_mu", 0.2);
      if (item.contains("assortativity")) e.assortativity = item.at("assortativity").get<double>();
      e.source = item.value("source", "");
      entries.push_back(std::move(e));
    }
  } catch (const json::exception& e) {
    throw DataError("manifest '" + path.string() + "': " + e.what());
  }
  return entries;
}

const ManifestEntry* find_manifest_entry(const std::vector<ManifestEntry>& manifest,
                                         const std::string& dataset) {
  const auto file_name = fs::path(dataset).filename();
  for (const auto& e : manifest) {
    if (e.name == dataset || e.file.filename() == file_name) return &e;
  }
  return nullptr;
}

// ---------------------------------------------------------------------------
// Beta grids

namespace {

// Grid arithmetic drifts in the last bits; snap to 10 decimals.
double snap(double beta) { return std::round(beta * 1e10) / 1e10; }

double parse_number(const std::string& token, const std::string& spec) {
  try {
    std::size_t used = 0;
    double x = std::stod(token, &used);
    if (used != token.size()) throw std::invalid_argument(token);
    return x;
  } catch (const std::exception&) {
    throw UsageError("invalid beta grid '" + spec + "'");
  }
}

}  // namespace

BetaGrid BetaGrid::parse(const std::string& spec) {
  BetaGrid grid;
  if (spec.find(':') != std::string::npos) {
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
    if (parts.size() != 3) throw UsageError("beta grid range must be start:stop:step");
    const double start = parse_number(parts[0], spec);
    const double stop = parse_number(parts[1], spec);
    const double step = parse_number(parts[2], spec);
    if (!(step > 0.0) || stop < start) throw UsageError("invalid beta grid '" + spec + "'");
    for (count_t k = 0;; ++k) {
      const double beta = snap(start + static_cast<double>(k) * step);
      if (beta > stop + 1e-12) break;
      grid.values.push_back(beta);
    }
  } else {
    std::stringstream ss(spec);
    for (std::string token; std::getline(ss, token, ',');) {
      if (!token.empty()) grid.values.push_back(parse_number(token, spec));
    }
  }
  if (grid.values.empty()) throw UsageError("beta grid '" + spec + "' is empty");
  for (double beta : grid.values) {
    if (!(beta >= 0.0 && beta <= 1.0)) throw UsageError("beta grid values must lie in [0,1]");
  }
  return grid;
}

BetaGrid BetaGrid::around_threshold(double beta_th) {
  BetaGrid grid;
  const double stop = std::min(1.0, beta_th + 0.15);
  for (count_t k = 1;; ++k) {
    const double beta = snap(0.01 * static_cast<double>(k));
    if (beta > stop + 1e-12) break;
    grid.values.push_back(beta);
  }
  return grid;
}

// ---------------------------------------------------------------------------
// Config and datasets

void ExperimentConfig::validate() const {
  try {
    emh.validate();
    if (ksd) ksd->validate();
    sir.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (!(weight_alpha > 0.0 && weight_alpha < 1.0)) throw UsageError("weight alpha must lie in (0,1)");
  if (gravity_radius < 1) throw UsageError("gravity radius must be >= 1");
  if (!(delta > 0.0)) throw UsageError("delta must be positive");
  if (steps < 1) throw UsageError("steps must be >= 1");
  for (const auto& m : measures) {
    if (std::find(known_measures().begin(), known_measures().end(), m) == known_measures().end()) {
      std::string valid;
      for (const auto& k : known_measures()) valid += (valid.empty() ? "" : ", ") + k;
      throw UsageError("unknown measure '" + m + "' (valid: " + valid + ")");
    }
  }
  if (!beta_grid.empty()) BetaGrid::parse(beta_grid);
}

LoadedDataset load_dataset(const std::string& dataset, const std::vector<ManifestEntry>& manifest,
                           std::ostream& log) {
  LoadedDataset out;
  out.entry = find_manifest_entry(manifest, dataset);
  fs::path path = dataset;
  if (!fs::exists(path)) {
    if (out.entry == nullptr) throw DataError("dataset '" + dataset + "' not found");
    path = out.entry->file;
    if (!fs::exists(path)) {
      throw DataError("dataset file '" + path.string() + "' for '" + out.entry->name + "' is not present");
    }
  }
  out.name = out.entry ? out.entry->name : path.stem().string();
  ParseOptions options;
  options.on_warning = [&](std::string_view msg) { log << path.string() << ": " << msg << '\n'; };
  out.graph = load_edge_list(path.string(), options);
  return out;
}

std::vector<ScoreVector> compute_measures(const Graph& g, const std::vector<std::string>& names,
                                          const ExperimentConfig& config, const KsdParams& ksd) {
  std::optional<ScoreVector> ks, dc;
  std::optional<EmhTrace> trace;
  auto get_ks = [&]() -> const ScoreVector& {
    if (!ks) ks = k_shell(g);
    return *ks;
  };
  auto get_dc = [&]() -> const ScoreVector& {
    if (!dc) dc = degree_centrality(g);
    return *dc;
  };
  auto get_trace = [&]() -> const EmhTrace& {
    if (!trace) trace = emh_pipeline(g, config.emh);
    return *trace;
  };

  std::vector<ScoreVector> out;
  for (const auto& name : names) {
    if (name == "DC") out.push_back(get_dc());
    else if (name == "KS") out.push_back(get_ks());
    else if (name == "HI") out.push_back(h_index(g));
    else if (name == "cn") out.push_back(neighborhood_coreness(g, get_ks()));
    else if (name == "cdc") out.push_back(weight_neighborhood(g, get_dc(), config.weight_alpha, config.weight_term));
    else if (name == "cks") out.push_back(weight_neighborhood(g, get_ks(), config.weight_alpha, config.weight_term));
    else if (name == "G") out.push_back(gravity(g, get_ks(), config.gravity_radius));
    else if (name == "IGC") out.push_back(improved_gravity(g, get_ks(), config.gravity_radius));
    else if (name == "ksd") out.push_back(ksd_centrality(g, get_ks(), ksd));
    else if (name == "IH") out.push_back({"IH", get_trace().ih});
    else if (name == "MC") out.push_back({"MC", get_trace().mc});
    else if (name == "IMH") out.push_back({"IMH", get_trace().imh});
    else if (name == "EMH") out.push_back({"EMH", get_trace().emh});
    else throw UsageError("unknown measure '" + name + "'");
  }
  return out;
}

std::string format_stats_row(const GraphStats& stats) {
  const std::string assortativity =
      stats.assortativity ? fmt::format("{:.4f}", *stats.assortativity) : "<undefined>";
  return fmt::format("{} {} {:.3f} {} {}", stats.num_nodes, stats.num_edges, stats.avg_degree,
                     stats.max_degree, assortativity);
}

namespace {

KsdParams resolve_ksd(const ExperimentConfig& config, const ManifestEntry* entry) {
  if (config.ksd) return *config.ksd;
  if (entry) return {entry->ksd_alpha, entry->ksd_mu};
  return {};
}

std::vector<ManifestEntry> manifest_for(const ExperimentConfig& config) {
  if (config.manifest_path.empty() || !fs::exists(config.manifest_path)) return {};
  return load_manifest(config.manifest_path);
}

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create '" + dir.string() + "': " + ec.message());
}

std::ofstream open_output(const fs::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  return out;
}

/// Number of decimals in the shortest representation of x.
int printed_decimals(double x) {
  const std::string s = json(x).dump();
  const auto dot = s.find('.');
  return dot == std::string::npos ? 0 : static_cast<int>(s.size() - dot - 1);
}

bool matches_printed(double value, double printed) {
  return std::abs(value - printed) <= 0.5 * std::pow(10.0, -printed_decimals(printed)) + 1e-9;
}

std::size_t edit_distance(const std::string& a, const std::string& b) {
  std::vector<std::size_t> row(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t up = row[j];
      row[j] = std::min({row[j] + 1, row[j - 1] + 1, diag + (a[i - 1] == b[j - 1] ? 0 : 1)});
      diag = up;
    }
  }
  return row[b.size()];
}

std::string beta_tag(double beta) { return fmt::format("beta_{:.4f}", beta); }

}  // namespace

// ---------------------------------------------------------------------------
// Evaluation

Evaluation evaluate_measures(const Graph& g, const std::vector<ScoreVector>& measures,
                             const ExperimentConfig& config) {
  Evaluation ev;
  try {
    ev.beta_th = epidemic_threshold(g);
    ev.averaging_betas = averaging_grid(ev.beta_th, config.delta, config.steps);
  } catch (const std::invalid_argument& e) {
    throw DataError(e.what());
  }
  ev.curve_betas = config.beta_grid.empty() ? BetaGrid::around_threshold(ev.beta_th).values
                                            : BetaGrid::parse(config.beta_grid).values;

  std::set<double> betas(ev.curve_betas.begin(), ev.curve_betas.end());
  betas.insert(ev.averaging_betas.begin(), ev.averaging_betas.end());
  std::map<double, std::size_t> outcome_at;
  for (double beta : betas) {
    SirConfig sir = config.sir;
    sir.beta = beta;
    outcome_at[beta] = ev.outcomes.size();
    ev.outcomes.push_back(spreading_capability(g, sir));
    ++ev.sir_batches;
  }

  auto tau_at = [&](const ScoreVector& m, double beta) {
    return kendall_tau(std::span<const double>(m.scores),
                       std::span<const double>(ev.outcomes[outcome_at.at(beta)].spread));
  };

  for (const auto& m : measures) {
    EvalReport report;
    report.measure_name = m.measure;
    for (double beta : ev.curve_betas) report.tau_curve.emplace_back(beta, tau_at(m, beta));
    double sum = 0.0;
    for (double beta : ev.averaging_betas) sum += tau_at(m, beta);
    report.avg_tau = sum / static_cast<double>(ev.averaging_betas.size());
    report.monotonicity = g.node_count() >= 2 ? monotonicity(RankingList(m)) : 0.0;
    ev.reports.push_back(std::move(report));
  }

  auto emh_it = std::find_if(ev.reports.begin(), ev.reports.end(),
                             [](const EvalReport& r) { return r.measure_name == "EMH"; });
  if (emh_it != ev.reports.end()) {
    const auto emh_index = static_cast<std::size_t>(emh_it - ev.reports.begin());
    for (std::size_t i = 0; i < ev.reports.size(); ++i) {
      if (i == emh_index) continue;
      const auto& other = ev.reports[i];
      ev.reports[emh_index].eta_vs[other.measure_name] =
          improvement_pct(ev.reports[emh_index].avg_tau, other.avg_tau, config.eta);
      for (std::size_t k = 0; k < ev.curve_betas.size(); ++k) {
        ev.eta_curve.push_back({other.measure_name, ev.curve_betas[k],
                                improvement_pct(ev.reports[emh_index].tau_curve[k].second,
                                                other.tau_curve[k].second, config.eta)});
      }
    }
  }
  return ev;
}

// ---------------------------------------------------------------------------
// Commands

int cmd_stats(const std::vector<std::string>& datasets, const ExperimentConfig& config,
              std::ostream& out, std::ostream& log) {
  if (datasets.empty()) throw UsageError("stats: no dataset given");
  const auto manifest = manifest_for(config);
  int status = kExitOk;
  for (const auto& dataset : datasets) {
    const LoadedDataset data = load_dataset(dataset, manifest, log);
    GraphStats stats;
    try {
      stats = graph_stats(data.graph);
    } catch (const std::invalid_argument& e) {
      throw DataError(dataset + ": " + e.what());
    }
    out << format_stats_row(stats) << '\n';

    if (const ManifestEntry* e = data.entry) {
      std::vector<std::string> diffs;
      if (stats.num_nodes != e->nodes) diffs.push_back(fmt::format("nodes {} != {}", stats.num_nodes, e->nodes));
      if (stats.num_edges != e->edges) diffs.push_back(fmt::format("edges {} != {}", stats.num_edges, e->edges));
      if (!matches_printed(stats.avg_degree, e->avg_degree)) {
        diffs.push_back(fmt::format("avg degree {:.4f} != {}", stats.avg_degree, e->avg_degree));
      }
      if (stats.max_degree != e->max_degree) {
        diffs.push_back(fmt::format("max degree {} != {}", stats.max_degree, e->max_degree));
      }
      if (e->assortativity &&
          (!stats.assortativity || !matches_printed(*stats.assortativity, *e->assortativity))) {
        diffs.push_back(fmt::format(
            "assortativity {} != {}",
            stats.assortativity ? fmt::format("{:.4f}", *stats.assortativity) : "<undefined>",
            *e->assortativity));
      }
      if (diffs.empty()) {
        log << e->name << ": matches manifest\n";
      } else {
        for (const auto& d : diffs) log << e->name << ": manifest mismatch: " << d << '\n';
        status = kExitData;
      }
    }
  }
  return status;
}

int cmd_rank(const ExperimentConfig& config, std::ostream& out, std::ostream& log) {
  config.validate();
  if (config.datasets.empty()) throw UsageError("rank: no dataset given");
  const auto manifest = manifest_for(config);
  ensure_dir(config.out_dir);

  auto summary = open_output(config.out_dir / "monotonicity.csv");
  fmt::print(summary, "network,measure,M\n");
  fmt::print(out, "{:<12}", "Network");
  for (const auto& m : config.measures) fmt::print(out, " {:>8}", "M(" + m + ")");
  out << '\n';

  for (const auto& dataset : config.datasets) {
    const LoadedDataset data = load_dataset(dataset, manifest, log);
    if (data.graph.node_count() < 2) throw DataError(dataset + ": need at least 2 nodes");
    const auto scores = compute_measures(data.graph, config.measures, config, resolve_ksd(config, data.entry));
    const fs::path dir = config.out_dir / data.name;
    ensure_dir(dir);
    fmt::print(out, "{:<12}", data.name);
    for (const auto& sv : scores) {
      auto csv = open_output(dir / (sv.measure + ".csv"));
      write_scores_csv(csv, data.graph, sv);
      const double m = monotonicity(RankingList(sv));
      fmt::print(summary, "{},{},{:.4f}\n", data.name, sv.measure, m);
      fmt::print(out, " {:>8.4f}", m);
    }
    out << '\n';
  }
  return kExitOk;
}

int cmd_evaluate(const ExperimentConfig& config, std::ostream& out, std::ostream& log) {
  config.validate();
  if (config.datasets.empty()) throw UsageError("evaluate: no dataset given");
  const auto manifest = manifest_for(config);
  ensure_dir(config.out_dir);

  auto table = open_output(config.out_dir / "averaged_tau.csv");
  fmt::print(table, "network,measure,avg_tau\n");
  fmt::print(out, "{:<12}", "Network");
  for (const auto& m : config.measures) fmt::print(out, " {:>10}", m);
  out << '\n';

  for (const auto& dataset : config.datasets) {
    const LoadedDataset data = load_dataset(dataset, manifest, log);
    if (data.graph.node_count() < 2) throw DataError(dataset + ": need at least 2 nodes");
    const auto scores = compute_measures(data.graph, config.measures, config, resolve_ksd(config, data.entry));
    const Evaluation ev = evaluate_measures(data.graph, scores, config);
    log << fmt::format("{}: beta_th = {:.6f}, {} SIR batches of {} runs per node\n", data.name,
                       ev.beta_th, ev.sir_batches, config.sir.runs);

    const fs::path dir = config.out_dir / data.name;
    ensure_dir(dir / "sir");
    {
      auto tau = open_output(dir / "tau_curve.csv");
      write_tau_curve_csv(tau, ev.reports);
      auto eta = open_output(dir / "eta_curve.csv");
      write_eta_curve_csv(eta, ev.eta_curve);
    }
    for (const auto& outcome : ev.outcomes) {
      auto csv = open_output(dir / "sir" / (beta_tag(outcome.beta) + ".csv"));
      write_spread_csv(csv, data.graph, outcome);
      auto side = open_output(dir / "sir" / (beta_tag(outcome.beta) + ".json"));
      side << sir_sidecar_json(outcome).dump(2) << '\n';
    }
    json report{{"network", data.name},
                {"beta_th", ev.beta_th},
                {"averaging_betas", ev.averaging_betas},
                {"curve_betas", ev.curve_betas},
                {"sir", {{"gamma", config.sir.gamma}, {"runs", config.sir.runs}, {"master_seed", config.sir.master_seed}}},
                {"measures", json::array()}};
    for (const auto& r : ev.reports) report["measures"].push_back(eval_report_json(r));
    auto report_file = open_output(dir / "report.json");
    report_file << report.dump(2) << '\n';

    fmt::print(out, "{:<12}", data.name);
    for (const auto& r : ev.reports) {
      fmt::print(out, " {:>10.6f}", r.avg_tau);
      fmt::print(table, "{},{},{:.6f}\n", data.name, r.measure_name, r.avg_tau);
    }
    out << '\n';
  }
  return kExitOk;
}

int cmd_trace(const std::string& dataset, const std::string& label, const ExperimentConfig& config,
              std::ostream& out, std::ostream& log) {
  try {
    config.emh.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const auto manifest = manifest_for(config);
  const LoadedDataset data = load_dataset(dataset, manifest, log);
  const Graph& g = data.graph;
  const EmhTrace trace = emh_pipeline(g, config.emh);

  json doc{{"network", data.name},
           {"params", {{"alpha1", config.emh.alpha1}, {"alpha2", config.emh.alpha2}, {"s", config.emh.s}, {"r", config.emh.r}}}};
  if (label.empty()) {
    doc["records"] = emh_trace_json(g, trace);
  } else {
    const auto center = g.find(label);
    if (!center) {
      const std::string* best = nullptr;
      std::size_t best_distance = 0;
      for (const auto& candidate : g.labels()) {
        const std::size_t d = edit_distance(label, candidate);
        if (best == nullptr || d < best_distance) {
          best = &candidate;
          best_distance = d;
        }
      }
      throw UsageError("unknown node '" + label + "'" + (best ? "; did you mean '" + *best + "'?" : ""));
    }
    const auto dist = bfs_distances(g, *center, 2);
    std::vector<node_t> nodes;
    for (node_t v = 0; v < g.node_count(); ++v) {
      if (dist[v] != kUnreachable) nodes.push_back(v);
    }
    std::stable_sort(nodes.begin(), nodes.end(), [&](node_t a, node_t b) { return dist[a] < dist[b]; });
    json records = emh_trace_json(g, trace, nodes);
    for (std::size_t i = 0; i < nodes.size(); ++i) records[i]["distance"] = dist[nodes[i]];
    doc["center"] = label;
    doc["records"] = std::move(records);
  }
  out << doc.dump(2) << '\n';
  return kExitOk;
}

}  // namespace spreadrank
