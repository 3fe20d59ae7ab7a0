#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "flagcodes/channel.hpp"
#include "flagcodes/decoder.hpp"

namespace flagcodes {

struct ExperimentConfig {
  std::size_t trials = 1;
  LossModel loss = PerVectorLoss{0.0};
  std::uint64_t seed = 0;
  /// Worker threads; results do not depend on this.
  std::size_t workers = 1;
};

/// Counters merged across trials. Every field is a plain sum, so partial
/// results from different workers combine in any order.
struct SimulationStats {
  std::size_t trials = 0;
  std::size_t correctable = 0;
  std::size_t decoded = 0;            // decoder returned a flag
  std::size_t decoded_correctly = 0;  // ... and it is the sent one
  std::size_t oracle_agreement = 0;   // decoded flag is the unique exhaustive minimiser
  std::size_t correctable_decoded_correctly = 0;
  std::size_t correctable_oracle_agreement = 0;
  std::size_t correctable_oracle_unique = 0;  // exhaustive minimiser is exactly the sent flag
  std::size_t correctable_some_shot_correctable = 0;
  std::size_t dimension_criterion_violations = 0;  // per shot: e_i correctable != dim X_i > m_i
  std::size_t sequential_violations = 0;  // shot used != first shot with dim X_i > m_i
  std::vector<std::size_t> shots_used;    // index i counts successes at shot i+1
  std::vector<std::size_t> erasure_totals;  // index e counts trials with e erasures

  void merge(const SimulationStats& other);
  bool operator==(const SimulationStats&) const = default;
};

/// Runs `config.trials` independent transmissions of uniformly chosen
/// codewords. Trial k draws from its own generator seeded with
/// mix_seed(config.seed, k), so output is identical for any worker count.
SimulationStats run_simulation(const CoherentDecoder& decoder, const ExperimentConfig& config);

}  // namespace flagcodes
