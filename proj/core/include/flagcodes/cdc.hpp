#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "flagcodes/subspace.hpp"

namespace flagcodes {

/// A constant dimension code: a non-empty set of k-dimensional subspaces of
/// F_q^n. Duplicates are dropped on construction; first-occurrence order is kept.
class ConstantDimensionCode {
 public:
  /// Throws InvalidArgument when empty, DimensionMismatch when the words
  /// disagree on dimension, AmbientMismatch/FieldMismatch on mixed spaces.
  explicit ConstantDimensionCode(std::vector<Subspace> words);

  const FieldPtr& field() const noexcept { return words_.front().field(); }
  std::size_t ambient() const noexcept { return words_.front().ambient(); }
  std::size_t dim() const noexcept { return words_.front().dim(); }
  std::size_t size() const noexcept { return words_.size(); }
  const std::vector<Subspace>& words() const noexcept { return words_; }
  const Subspace& operator[](std::size_t i) const { return words_.at(i); }

  /// Index of `w` in the code, if present.
  std::optional<std::size_t> find(const Subspace& w) const;

 private:
  std::vector<Subspace> words_;
};

/// Minimum pairwise subspace distance; 0 for a single word.
std::size_t cdc_min_distance(const ConstantDimensionCode& code);

/// min{2k, 2(n-k)}. Throws InvalidDimension unless 0 < k < n.
std::size_t max_distance_bound(std::size_t k, std::size_t n);

struct PairWitness {
  std::size_t first;
  std::size_t second;
  std::size_t distance;
};

struct EquidistantProfile {
  bool is_equidistant = false;
  /// Common intersection dimension; k for a single word.
  std::optional<std::size_t> c;
  std::size_t min_distance = 0;
  /// When not equidistant: a pair attaining the minimum and a pair that does not.
  std::optional<PairWitness> min_pair;
  std::optional<PairWitness> off_pair;
};

EquidistantProfile equidistant_profile(const ConstantDimensionCode& code);

/// Common pairwise intersection of all distinct words, the word itself for a
/// singleton, absent when two pairs meet differently.
std::optional<Subspace> sunflower_center(const ConstantDimensionCode& code);

enum class ContainmentStatus { Unique, Ambiguous, NotFound };

struct ContainmentResult {
  ContainmentStatus status;
  std::optional<std::size_t> index;  // set only for Unique
  std::size_t matches = 0;
};

/// Finds the single word containing x. Ambiguous when several do.
ContainmentResult containment_decode(const ConstantDimensionCode& code, const Subspace& x);

}  // namespace flagcodes
