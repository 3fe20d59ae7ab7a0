#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "flagcodes/matrix.hpp"

namespace flagcodes {

/// A subspace of F_q^n held as its canonical RREF basis (zero rows removed).
/// Equality is entry-wise comparison of the bases. The zero subspace has an
/// empty basis.
class Subspace {
 public:
  /// Row space of `rows`; cols() is the ambient dimension.
  static Subspace span(const Matrix& rows);
  static Subspace zero(FieldPtr field, std::size_t ambient);
  static Subspace from_rows(FieldPtr field, std::size_t ambient,
                            const std::vector<std::vector<Element>>& rows);
  /// Span of the standard basis vectors with the given 0-based indices.
  static Subspace coordinate(FieldPtr field, std::size_t ambient,
                             std::initializer_list<std::size_t> axes);

  const FieldPtr& field() const noexcept { return basis_.field(); }
  std::size_t ambient() const noexcept { return basis_.cols(); }
  std::size_t dim() const noexcept { return basis_.rows(); }
  bool is_zero() const noexcept { return basis_.rows() == 0; }
  const Matrix& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  /// True iff v lies in this subspace.
  bool contains_vector(std::span<const Element> v) const;

  bool operator==(const Subspace& other) const noexcept { return basis_ == other.basis_; }

  std::size_t hash() const noexcept;

 private:
  Subspace(Matrix basis, std::vector<std::size_t> pivots)
      : basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Throws FieldMismatch or AmbientMismatch unless u and v live in the same space.
void require_compatible(const Subspace& u, const Subspace& v);

Subspace sum(const Subspace& u, const Subspace& v);

/// Zassenhaus: row-reduce [U U; V 0]; rows with a vanishing left half span U∩V
/// in their right half.
Subspace intersect(const Subspace& u, const Subspace& v);

/// True iff x ⊆ u.
bool contains(const Subspace& u, const Subspace& x);

/// dim(U+V) - dim(U∩V).
std::size_t subspace_distance(const Subspace& u, const Subspace& v);

}  // namespace flagcodes

template <>
struct std::hash<flagcodes::Subspace> {
  std::size_t operator()(const flagcodes::Subspace& s) const noexcept { return s.hash(); }
};
