#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "flagcodes/cdc.hpp"
#include "flagcodes/flag.hpp"
#include "flagcodes/random.hpp"

namespace flagcodes {

/// A non-empty set of flags sharing one type vector. Identical flags are
/// dropped silently; first-occurrence order is kept.
class FlagCode {
 public:
  /// Throws InvalidArgument when empty and TypeMismatch on mixed types.
  explicit FlagCode(std::vector<Flag> flags);

  const TypeVector& type() const noexcept { return flags_.front().type(); }
  const FieldPtr& field() const noexcept { return flags_.front().field(); }
  std::size_t ambient() const noexcept { return type().ambient(); }
  std::size_t levels() const noexcept { return type().levels(); }
  std::size_t size() const noexcept { return flags_.size(); }
  const std::vector<Flag>& flags() const noexcept { return flags_; }
  const Flag& operator[](std::size_t i) const { return flags_.at(i); }

  bool operator==(const FlagCode& other) const noexcept { return flags_ == other.flags_; }

 private:
  std::vector<Flag> flags_;
};

/// Minimum flag distance over distinct pairs; 0 for a single flag.
std::size_t flag_min_distance(const FlagCode& code);

/// The i-th projected code, 0-based. Throws IndexOutOfRange.
ConstantDimensionCode projected_code(const FlagCode& code, std::size_t level);

bool is_disjoint(const FlagCode& code);
bool is_distance_coherent(const FlagCode& code);

/// Two flags sharing their subspace at `level` (0-based flag indices).
struct SharedLevelWitness {
  std::size_t level;
  std::size_t first;
  std::size_t second;
};

/// A pair for which "attains d_f(C)" and "attains every d_S(C_i)" disagree.
struct CoherenceWitness {
  std::size_t first;
  std::size_t second;
  std::size_t distance;
  std::vector<std::size_t> level_distances;
};

struct CoherenceReport {
  std::size_t cardinality = 0;
  std::vector<std::size_t> projected_sizes;
  std::vector<std::size_t> projected_distances;
  std::size_t distance = 0;
  bool is_disjoint = false;
  bool is_distance_coherent = false;
  bool is_coherent = false;
  /// Cross-check: disjoint and d_f(C) = Σ d_S(C_i).
  bool is_coherent_by_distance_sum = false;
  /// t_i - d_S(C_i)/2, present when distance-coherent with at least two flags.
  std::optional<std::vector<std::size_t>> m_vector;
  std::optional<SharedLevelWitness> disjoint_witness;
  std::optional<CoherenceWitness> coherence_witness;
};

CoherenceReport coherence_report(const FlagCode& code);

/// Distinct level-wise intersections F∩F' over all pairs attaining d_f(C).
/// Throws TooFewFlags for a single flag.
std::vector<StutteringFlag> min_distance_intersection_code(const FlagCode& code);

struct EquidistanceProfile {
  bool flag_equidistant = false;
  bool projected_equidistant = false;
  std::size_t distance = 0;
  /// Per-level intersection dimensions; present for disjoint projected-equidistant codes.
  std::optional<std::vector<std::size_t>> c_vector;
  /// Flag-level witness pairs (flag indices) when not equidistant.
  std::optional<PairWitness> min_pair;
  std::optional<PairWitness> off_pair;
  /// First non-equidistant projected code (0-based level) and its witness pairs
  /// (word indices inside that projected code).
  std::optional<std::size_t> failing_level;
  std::optional<PairWitness> level_min_pair;
  std::optional<PairWitness> level_off_pair;
};

EquidistanceProfile equidistance_profile(const FlagCode& code);

/// Pairs of flags whose intersection at `level` differs from `reference` pair's.
struct SunflowerWitness {
  std::size_t level;
  std::size_t reference_first;
  std::size_t reference_second;
  std::size_t first;
  std::size_t second;
};

struct SunflowerProfile {
  std::optional<StutteringFlag> flag_center;
  std::optional<std::vector<Subspace>> projected_centers;
  std::optional<SunflowerWitness> flag_witness;
  /// First level (0-based) whose projected code is not a sunflower.
  std::optional<std::size_t> failing_level;
};

SunflowerProfile sunflower_profile(const FlagCode& code);

/// 2(Σ_{t_i <= ⌊n/2⌋} t_i + Σ_{t_i > ⌊n/2⌋} (n - t_i)).
std::size_t optimum_distance_bound(const TypeVector& type);

struct OptimumDistanceCheck {
  std::size_t bound = 0;
  std::size_t distance = 0;
  bool attained = false;
};

OptimumDistanceCheck optimum_distance_check(const FlagCode& code);

/// `size` distinct flags, each the image of the standard flag of `type` under a
/// uniformly random invertible matrix. Deterministic for a given generator
/// state. Throws Unsatisfiable after `max_attempts` draws without completing.
FlagCode random_flag_code(const TypeVector& type, const FieldPtr& field, std::size_t size,
                          Rng& rng, std::size_t max_attempts = 0);

/// Random flag of the given type.
Flag random_flag(const TypeVector& type, const FieldPtr& field, Rng& rng);

}  // namespace flagcodes
