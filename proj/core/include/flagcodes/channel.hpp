#pragma once

#include <cstddef>
#include <span>
#include <variant>
#include <vector>

#include "flagcodes/flag_code.hpp"
#include "flagcodes/random.hpp"

namespace flagcodes {

/// t_r x n matrix whose first t_i rows span F_i for every level. Built level
/// by level: each RREF basis row of F_i is reduced against the rows already
/// chosen and kept when a nonzero residue remains.
Matrix nested_generator_matrix(const Flag& flag);

/// Each injected generator is lost independently with this probability.
struct PerVectorLoss {
  double probability = 0.0;
};

/// Requested per-shot erasure counts (e_1, ..., e_r); the generators to drop
/// are picked uniformly inside each shot.
struct PatternLoss {
  std::vector<std::size_t> erasures;
};

using LossModel = std::variant<PerVectorLoss, PatternLoss>;

struct ChannelTrace {
  Flag sent;
  Matrix generators;            // v_1..v_{t_r}, one per row
  std::vector<bool> survived;   // per generator
  std::vector<std::size_t> erasures;  // e_i = t_i - dim X_i
  std::size_t total_erasures = 0;
};

struct Transmission {
  StutteringFlag received;
  ChannelTrace trace;
};

/// Throws InfeasiblePattern unless the pattern has one entry per level,
/// 0 <= e_1 <= e_2 <= ..., and e_i - e_{i-1} <= t_i - t_{i-1}.
void check_pattern(const TypeVector& type, std::span<const std::size_t> erasures);

/// Simulates the r shots of the erasure channel. Lost generators never come
/// back, so e_i is non-decreasing. Throws InvalidArgument for p outside [0,1].
Transmission transmit(const Flag& flag, const LossModel& loss, Rng& rng);

struct ErasureCounts {
  std::vector<std::size_t> per_shot;
  std::size_t total = 0;
};

/// e_i = t_i - dim X_i. Throws NotASubflag if some X_i is not inside F_i, and
/// TypeMismatch on a level count mismatch.
ErasureCounts erasure_counts(const Flag& flag, const StutteringFlag& received);

/// e <= ⌊(distance - 1)/2⌋; nothing is correctable at distance 0.
bool correctable_at(std::size_t distance, std::size_t erasures) noexcept;
bool correctable(const FlagCode& code, std::size_t erasures);

}  // namespace flagcodes
