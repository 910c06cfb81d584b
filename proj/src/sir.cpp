#include "spreadrank/sir.hpp"

#include <stdexcept>

#include "spreadrank/parallel.hpp"

namespace spreadrank {

void SirConfig::validate() const {
  if (runs < 1) throw std::invalid_argument("SIR runs must be >= 1");
  if (!(beta >= 0.0 && beta <= 1.0)) throw std::invalid_argument("SIR beta must lie in [0,1]");
  if (!(gamma > 0.0 && gamma <= 1.0)) throw std::invalid_argument("SIR gamma must lie in (0,1]");
}

std::uint64_t run_stream_seed(std::uint64_t master_seed, node_t seed_node, count_t run_index) {
  SplitMix64 mix(master_seed);
  std::uint64_t h = mix();
  h = SplitMix64(h ^ seed_node)();
  return SplitMix64(h ^ (run_index * 0xD1B54A32D192ED03ull))();
}

double epidemic_threshold(const Graph& g) {
  if (g.edge_count() == 0) throw std::invalid_argument("epidemic threshold needs at least one edge");
  double k1 = 0.0, k2 = 0.0;
  for (node_t v = 0; v < g.node_count(); ++v) {
    const auto k = static_cast<double>(g.degree(v));
    k1 += k;
    k2 += k * k;
  }
  k1 /= g.node_count();
  k2 /= g.node_count();
  if (!(k2 > k1)) throw std::invalid_argument("epidemic threshold undefined: <k^2> <= <k>");
  return k1 / (k2 - k1);
}

namespace {

enum class State : std::uint8_t { kSusceptible, kInfected, kRecovered };

/// Per-thread buffers reused across runs.
struct Scratch {
  std::vector<State> state;
  std::vector<node_t> infected, next;
};

count_t run_cascade(const Graph& g, node_t seed_node, const SirConfig& config, count_t run_index,
                    Scratch& scratch) {
  auto& state = scratch.state;
  state.assign(g.node_count(), State::kSusceptible);
  auto& infected = scratch.infected;
  auto& next = scratch.next;
  infected.assign(1, seed_node);
  state[seed_node] = State::kInfected;

  SplitMix64 rng(run_stream_seed(config.master_seed, seed_node, run_index));
  count_t recovered = 0;
  while (!infected.empty()) {
    // Transmission sweep. Newly infected nodes are marked immediately so a
    // node is infected at most once, but they only start transmitting and
    // recovering from the next step on.
    next.clear();
    for (node_t u : infected) {
      for (node_t w : g.neighbors(u)) {
        if (state[w] == State::kSusceptible && rng.uniform() < config.beta) {
          state[w] = State::kInfected;
          next.push_back(w);
        }
      }
    }
    for (node_t u : infected) {
      if (rng.uniform() < config.gamma) {
        state[u] = State::kRecovered;
        ++recovered;
      } else {
        next.push_back(u);
      }
    }
    infected.swap(next);
  }
  return recovered;
}

}  // namespace

count_t sir_single_run(const Graph& g, node_t seed_node, const SirConfig& config,
                       count_t run_index) {
  config.validate();
  if (seed_node >= g.node_count()) throw std::out_of_range("seed node out of range");
  Scratch scratch;
  return run_cascade(g, seed_node, config, run_index, scratch);
}

SirOutcome spreading_capability(const Graph& g, const SirConfig& config) {
  config.validate();
  SirOutcome out{config.beta, config.gamma, config.runs, config.master_seed,
                 std::vector<double>(g.node_count(), 0.0)};
  parallel_for(
      g.node_count(),
      [&](std::size_t i) {
        thread_local Scratch scratch;
        const auto seed = static_cast<node_t>(i);
        count_t total = 0;
        for (count_t run = 1; run <= config.runs; ++run) {
          total += run_cascade(g, seed, config, run, scratch);
        }
        out.spread[seed] = static_cast<double>(total) / static_cast<double>(config.runs);
      },
      config.threads);
  return out;
}

}  // namespace spreadrank
