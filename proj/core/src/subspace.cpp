#include "flagcodes/subspace.hpp"

#include <algorithm>
#include <string>

#include "flagcodes/errors.hpp"

namespace flagcodes {

Subspace Subspace::span(const Matrix& rows) {
  RrefResult r = rref(rows);
  return Subspace(std::move(r.basis), std::move(r.pivots));
}

Subspace Subspace::zero(FieldPtr field, std::size_t ambient) {
  return Subspace(Matrix(std::move(field), 0, ambient), {});
}

Subspace Subspace::from_rows(FieldPtr field, std::size_t ambient,
                             const std::vector<std::vector<Element>>& rows) {
  return span(Matrix::from_rows(std::move(field), ambient, rows));
}

Subspace Subspace::coordinate(FieldPtr field, std::size_t ambient,
                              std::initializer_list<std::size_t> axes) {
  Matrix m(std::move(field), 0, ambient);
  std::vector<Element> row(ambient);
  for (std::size_t axis : axes) {
    if (axis >= ambient) throw Error(ErrorKind::IndexOutOfRange, "coordinate axis out of range");
    std::fill(row.begin(), row.end(), 0);
    row[axis] = 1;
    m.append_row(row);
  }
  return span(m);
}

bool Subspace::contains_vector(std::span<const Element> v) const {
  if (v.size() != ambient()) throw Error(ErrorKind::AmbientMismatch, "vector length mismatch");
  std::vector<Element> work(v.begin(), v.end());
  return !reduce_against(basis_, pivots_, work);
}

std::size_t Subspace::hash() const noexcept {
  std::size_t h = 0xcbf29ce484222325ull ^ ambient();
  for (Element e : basis_.entries()) {
    h ^= e + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

void require_compatible(const Subspace& u, const Subspace& v) {
  if (!(*u.field() == *v.field())) {
    throw Error(ErrorKind::FieldMismatch, "subspaces live over different fields");
  }
  if (u.ambient() != v.ambient()) {
    throw Error(ErrorKind::AmbientMismatch,
                "ambient dimensions " + std::to_string(u.ambient()) + " and " +
                    std::to_string(v.ambient()) + " differ");
  }
}

Subspace sum(const Subspace& u, const Subspace& v) {
  require_compatible(u, v);
  Matrix stacked = u.basis();
  stacked.append_rows(v.basis());
  return Subspace::span(stacked);
}

Subspace intersect(const Subspace& u, const Subspace& v) {
  require_compatible(u, v);
  const std::size_t n = u.ambient();
  if (u.is_zero() || v.is_zero()) return Subspace::zero(u.field(), n);
  if (u == v) return u;

  Matrix z(u.field(), 0, 2 * n);
  std::vector<Element> row(2 * n);
  for (std::size_t r = 0; r < u.dim(); ++r) {
    auto src = u.basis().row(r);
    std::copy(src.begin(), src.end(), row.begin());
    std::copy(src.begin(), src.end(), row.begin() + static_cast<std::ptrdiff_t>(n));
    z.append_row(row);
  }
  for (std::size_t r = 0; r < v.dim(); ++r) {
    auto src = v.basis().row(r);
    std::copy(src.begin(), src.end(), row.begin());
    std::fill(row.begin() + static_cast<std::ptrdiff_t>(n), row.end(), 0);
    z.append_row(row);
  }
  const RrefResult reduced = rref(z);
  Matrix common(u.field(), 0, n);
  for (std::size_t r = 0; r < reduced.rank; ++r) {
    if (reduced.pivots[r] < n) continue;
    auto full = reduced.basis.row(r);
    common.append_row(full.subspan(n));
  }
  return Subspace::span(common);
}

bool contains(const Subspace& u, const Subspace& x) {
  require_compatible(u, x);
  if (x.dim() > u.dim()) return false;
  for (std::size_t r = 0; r < x.dim(); ++r) {
    if (!u.contains_vector(x.basis().row(r))) return false;
  }
  return true;
}

std::size_t subspace_distance(const Subspace& u, const Subspace& v) {
  require_compatible(u, v);
  if (u == v) return 0;
  // dim(U+V) - dim(U∩V) = 2 dim(U+V) - dim U - dim V
  const std::size_t joint = sum(u, v).dim();
  return 2 * joint - u.dim() - v.dim();
}

}  // namespace flagcodes
