#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "flagcodes/subspace.hpp"

namespace flagcodes {

/// Dimensions (t_1 < ... < t_r) of a flag on F_q^n, with 1 <= t_1 and t_r < n.
class TypeVector {
 public:
  /// Throws InvalidDimension when the sequence is empty, not strictly
  /// increasing, or leaves [1, n).
  TypeVector(std::vector<std::size_t> dims, std::size_t ambient);
  /// (1, 2, ..., n-1).
  static TypeVector full(std::size_t ambient);

  const std::vector<std::size_t>& dims() const noexcept { return dims_; }
  std::size_t ambient() const noexcept { return ambient_; }
  std::size_t levels() const noexcept { return dims_.size(); }
  std::size_t operator[](std::size_t i) const { return dims_.at(i); }
  std::size_t top() const noexcept { return dims_.back(); }

  bool operator==(const TypeVector&) const = default;

 private:
  std::vector<std::size_t> dims_;
  std::size_t ambient_;
};

/// Nested sequence of subspaces where equal neighbours are allowed. This is
/// what a receiver assembles, and also what level-wise intersections of flags
/// produce.
class StutteringFlag {
 public:
  /// Throws InvalidArgument when empty, AmbientMismatch on mixed spaces and
  /// NotNested when some X_i is not contained in X_{i+1}.
  explicit StutteringFlag(std::vector<Subspace> levels);

  const std::vector<Subspace>& levels() const noexcept { return levels_; }
  std::size_t size() const noexcept { return levels_.size(); }
  const Subspace& operator[](std::size_t i) const { return levels_.at(i); }
  std::size_t ambient() const noexcept { return levels_.front().ambient(); }
  const FieldPtr& field() const noexcept { return levels_.front().field(); }
  /// (dim X_1, ..., dim X_r).
  std::vector<std::size_t> dims() const;

  bool operator==(const StutteringFlag& other) const noexcept { return levels_ == other.levels_; }

 private:
  std::vector<Subspace> levels_;
};

/// A flag of a fixed type: dim F_i = t_i and F_i ⊊ F_{i+1}.
class Flag {
 public:
  /// Throws DimensionMismatch when the level count or some dim F_i disagrees
  /// with the type, AmbientMismatch on the wrong ambient space and NotNested
  /// when F_i is not contained in F_{i+1}.
  static Flag make(const TypeVector& type, std::vector<Subspace> levels);
  /// Flag whose i-th subspace is spanned by the first t_i rows of `generators`.
  static Flag from_generators(const TypeVector& type, const Matrix& generators);

  const TypeVector& type() const noexcept { return type_; }
  const std::vector<Subspace>& levels() const noexcept { return levels_; }
  std::size_t size() const noexcept { return levels_.size(); }
  const Subspace& operator[](std::size_t i) const { return levels_.at(i); }
  const FieldPtr& field() const noexcept { return levels_.front().field(); }
  std::size_t ambient() const noexcept { return type_.ambient(); }

  StutteringFlag as_stuttering() const { return StutteringFlag(levels_); }

  bool operator==(const Flag& other) const noexcept {
    return type_ == other.type_ && levels_ == other.levels_;
  }
  std::size_t hash() const noexcept;

 private:
  Flag(TypeVector type, std::vector<Subspace> levels)
      : type_(std::move(type)), levels_(std::move(levels)) {}

  TypeVector type_;
  std::vector<Subspace> levels_;
};

/// Σ_i d_S(U_i, V_i) over equal-length sequences; throws TypeMismatch otherwise.
std::size_t extended_distance(std::span<const Subspace> u, std::span<const Subspace> v);

/// Flag distance d_f(F, G). Throws TypeMismatch for different types.
std::size_t flag_distance(const Flag& f, const Flag& g);
std::size_t flag_distance(const Flag& f, const StutteringFlag& x);

/// (F_1 ∩ G_1, ..., F_r ∩ G_r).
StutteringFlag level_intersection(const Flag& f, const Flag& g);

}  // namespace flagcodes

template <>
struct std::hash<flagcodes::Flag> {
  std::size_t operator()(const flagcodes::Flag& f) const noexcept { return f.hash(); }
};
