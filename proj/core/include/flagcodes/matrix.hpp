#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "flagcodes/field.hpp"

namespace flagcodes {

/// Dense row-major matrix over F_q.
class Matrix {
 public:
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols);
  /// Takes ownership of `entries` (row-major). Throws DimensionMismatch on a
  /// size mismatch and OutOfRange for entries >= q.
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Element> entries);
  /// Builds from explicit rows, each of length `cols`.
  static Matrix from_rows(FieldPtr field, std::size_t cols,
                          const std::vector<std::vector<Element>>& rows);
  static Matrix identity(FieldPtr field, std::size_t n);

  const FieldPtr& field() const noexcept { return field_; }
  const FieldContext& ctx() const noexcept { return *field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0; }

  Element operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
  Element& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }

  std::span<const Element> row(std::size_t r) const noexcept {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<Element> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }

  const std::vector<Element>& entries() const noexcept { return data_; }

  void append_row(std::span<const Element> values);
  /// Stacks `other` below this matrix. Both must share field and column count.
  void append_rows(const Matrix& other);
  /// First `count` rows.
  Matrix top_rows(std::size_t count) const;

  bool operator==(const Matrix& other) const noexcept {
    return field_->order() == other.field_->order() && rows_ == other.rows_ &&
           cols_ == other.cols_ && data_ == other.data_;
  }

 private:
  FieldPtr field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Element> data_;
};

struct RrefResult {
  Matrix basis;  // reduced row echelon form, zero rows removed
  std::size_t rank;
  std::vector<std::size_t> pivots;  // pivot column of each basis row
};

/// Gauss-Jordan elimination. The result is the unique RREF of the row space.
RrefResult rref(const Matrix& m);

/// Reduces `v` in place against a matrix already in RREF with the given
/// pivot columns. Returns true when the residue is nonzero.
bool reduce_against(const Matrix& rref_basis, std::span<const std::size_t> pivots,
                    std::span<Element> v);

}  // namespace flagcodes
