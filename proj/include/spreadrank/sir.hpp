#pragma once

#include <cstdint>
#include <vector>

#include "spreadrank/graph.hpp"

namespace spreadrank {

struct SirConfig {
  double beta = 0.0;   ///< infection probability per infected-susceptible contact per step
  double gamma = 1.0;  ///< recovery probability per infected node per step
  count_t runs = 1000;
  std::uint64_t master_seed = 42;
  unsigned threads = 0;  ///< 0: hardware concurrency; results do not depend on it

  /// Throws std::invalid_argument unless runs >= 1, beta in [0,1], gamma in (0,1].
  void validate() const;
};

struct SirOutcome {
  double beta = 0.0;
  double gamma = 1.0;
  count_t runs = 0;
  std::uint64_t master_seed = 0;
  /// Mean final recovered count with each node as the single seed.
  std::vector<double> spread;
};

/// SplitMix64 stream. Counter-based, so a stream is fully determined by
/// its starting state.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;
  explicit SplitMix64(std::uint64_t state) noexcept : state_(state) {}
  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return ~result_type{0}; }
  result_type operator()() noexcept {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
  /// Uniform in [0, 1) with 53 random bits.
  double uniform() noexcept { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

/// Starting state of the stream for one (seed node, run) pair.
std::uint64_t run_stream_seed(std::uint64_t master_seed, node_t seed_node, count_t run_index);

/// ⟨k⟩ / (⟨k²⟩ − ⟨k⟩). Throws std::invalid_argument when the graph has no
/// edges or ⟨k²⟩ <= ⟨k⟩.
double epidemic_threshold(const Graph& g);

/// One synchronous discrete-time SIR cascade from seed_node; returns the
/// number of recovered nodes once no infected node remains.
count_t sir_single_run(const Graph& g, node_t seed_node, const SirConfig& config,
                       count_t run_index);

/// Mean of sir_single_run over run_index = 1..runs for every seed node.
/// Bit-identical for any thread count.
SirOutcome spreading_capability(const Graph& g, const SirConfig& config);

}  // namespace spreadrank
