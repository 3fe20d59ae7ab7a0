#include "flagcodes/matrix.hpp"

#include <algorithm>
#include <string>

#include "flagcodes/errors.hpp"

namespace flagcodes {

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Element> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_) {
    throw Error(ErrorKind::DimensionMismatch, "matrix entry count does not match its shape");
  }
  for (Element e : data_) {
    if (!field_->contains(e)) {
      throw Error(ErrorKind::OutOfRange, "matrix entry " + std::to_string(e) +
                                             " out of range for F_" +
                                             std::to_string(field_->order()));
    }
  }
}

Matrix Matrix::from_rows(FieldPtr field, std::size_t cols,
                         const std::vector<std::vector<Element>>& rows) {
  std::vector<Element> data;
  data.reserve(rows.size() * cols);
  for (const auto& r : rows) {
    if (r.size() != cols) {
      throw Error(ErrorKind::DimensionMismatch,
                  "row of length " + std::to_string(r.size()) + " in a " +
                      std::to_string(cols) + "-column matrix");
    }
    data.insert(data.end(), r.begin(), r.end());
  }
  return Matrix(std::move(field), rows.size(), cols, std::move(data));
}

Matrix Matrix::identity(FieldPtr field, std::size_t n) {
  Matrix m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

void Matrix::append_row(std::span<const Element> values) {
  if (values.size() != cols_) {
    throw Error(ErrorKind::DimensionMismatch, "appended row has wrong length");
  }
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

void Matrix::append_rows(const Matrix& other) {
  if (other.cols_ != cols_) throw Error(ErrorKind::AmbientMismatch, "column count mismatch");
  if (!(*other.field_ == *field_)) throw Error(ErrorKind::FieldMismatch, "field mismatch");
  data_.insert(data_.end(), other.data_.begin(), other.data_.end());
  rows_ += other.rows_;
}

Matrix Matrix::top_rows(std::size_t count) const {
  count = std::min(count, rows_);
  return Matrix(field_, count, cols_,
                std::vector<Element>(data_.begin(), data_.begin() + count * cols_));
}

RrefResult rref(const Matrix& m) {
  const FieldContext& f = m.ctx();
  Matrix a = m;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t sel = rank;
    while (sel < rows && a(sel, c) == 0) ++sel;
    if (sel == rows) continue;
    if (sel != rank) std::swap_ranges(a.row(sel).begin(), a.row(sel).end(), a.row(rank).begin());
    auto prow = a.row(rank);
    const Element scale = f.inv(prow[c]);
    if (scale != 1) {
      for (std::size_t j = c; j < cols; ++j) prow[j] = f.mul(prow[j], scale);
    }
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || a(r, c) == 0) continue;
      const Element factor = f.neg(a(r, c));
      auto target = a.row(r);
      for (std::size_t j = c; j < cols; ++j) {
        if (prow[j] != 0) target[j] = f.add(target[j], f.mul(factor, prow[j]));
      }
    }
    pivots.push_back(c);
    ++rank;
  }
  return RrefResult{a.top_rows(rank), rank, std::move(pivots)};
}

bool reduce_against(const Matrix& basis, std::span<const std::size_t> pivots,
                    std::span<Element> v) {
  const FieldContext& f = basis.ctx();
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    const Element coeff = v[pivots[i]];
    if (coeff == 0) continue;
    const Element factor = f.neg(coeff);
    auto b = basis.row(i);
    for (std::size_t j = pivots[i]; j < v.size(); ++j) {
      if (b[j] != 0) v[j] = f.add(v[j], f.mul(factor, b[j]));
    }
  }
  return std::any_of(v.begin(), v.end(), [](Element e) { return e != 0; });
}

}  // namespace flagcodes
