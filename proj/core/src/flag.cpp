#include "flagcodes/flag.hpp"

#include <string>

#include "flagcodes/errors.hpp"

namespace flagcodes {

namespace {

std::string join(const std::vector<std::size_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

}  // namespace

TypeVector::TypeVector(std::vector<std::size_t> dims, std::size_t ambient)
    : dims_(std::move(dims)), ambient_(ambient) {
  if (dims_.empty()) throw Error(ErrorKind::InvalidDimension, "type vector must be non-empty");
  if (dims_.front() < 1 || dims_.back() >= ambient_) {
    throw Error(ErrorKind::InvalidDimension, "type vector " + join(dims_) +
                                                 " must lie in [1, " + std::to_string(ambient_) + ")");
  }
  for (std::size_t i = 1; i < dims_.size(); ++i) {
    if (dims_[i] <= dims_[i - 1]) {
      throw Error(ErrorKind::InvalidDimension,
                  "type vector " + join(dims_) + " is not strictly increasing");
    }
  }
}

TypeVector TypeVector::full(std::size_t ambient) {
  std::vector<std::size_t> dims;
  for (std::size_t t = 1; t < ambient; ++t) dims.push_back(t);
  return TypeVector(std::move(dims), ambient);
}

StutteringFlag::StutteringFlag(std::vector<Subspace> levels) : levels_(std::move(levels)) {
  if (levels_.empty()) throw Error(ErrorKind::InvalidArgument, "stuttering flag needs a level");
  for (std::size_t i = 1; i < levels_.size(); ++i) {
    require_compatible(levels_[i - 1], levels_[i]);
    if (!contains(levels_[i], levels_[i - 1])) {
      throw Error(ErrorKind::NotNested, "level " + std::to_string(i) +
                                            " is not contained in level " + std::to_string(i + 1));
    }
  }
}

std::vector<std::size_t> StutteringFlag::dims() const {
  std::vector<std::size_t> out;
  out.reserve(levels_.size());
  for (const auto& x : levels_) out.push_back(x.dim());
  return out;
}

Flag Flag::make(const TypeVector& type, std::vector<Subspace> levels) {
  if (levels.size() != type.levels()) {
    throw Error(ErrorKind::DimensionMismatch,
                std::to_string(levels.size()) + " subspaces given for a type with " +
                    std::to_string(type.levels()) + " levels");
  }
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (levels[i].ambient() != type.ambient()) {
      throw Error(ErrorKind::AmbientMismatch, "subspace " + std::to_string(i + 1) +
                                                  " lives in the wrong ambient space");
    }
    if (i > 0) require_compatible(levels[0], levels[i]);
    if (levels[i].dim() != type[i]) {
      throw Error(ErrorKind::DimensionMismatch,
                  "subspace " + std::to_string(i + 1) + " has dimension " +
                      std::to_string(levels[i].dim()) + ", type requires " + std::to_string(type[i]));
    }
  }
  for (std::size_t i = 1; i < levels.size(); ++i) {
    if (!contains(levels[i], levels[i - 1])) {
      throw Error(ErrorKind::NotNested, "subspace " + std::to_string(i) +
                                            " is not contained in subspace " + std::to_string(i + 1));
    }
  }
  return Flag(type, std::move(levels));
}

Flag Flag::from_generators(const TypeVector& type, const Matrix& generators) {
  if (generators.cols() != type.ambient()) {
    throw Error(ErrorKind::AmbientMismatch, "generator matrix has the wrong number of columns");
  }
  if (generators.rows() < type.top()) {
    throw Error(ErrorKind::DimensionMismatch, "generator matrix needs " +
                                                  std::to_string(type.top()) + " rows");
  }
  std::vector<Subspace> levels;
  levels.reserve(type.levels());
  for (std::size_t t : type.dims()) levels.push_back(Subspace::span(generators.top_rows(t)));
  return make(type, std::move(levels));
}

std::size_t Flag::hash() const noexcept {
  std::size_t h = type_.ambient();
  for (const auto& s : levels_) h = h * 1099511628211ull ^ s.hash();
  return h;
}

std::size_t extended_distance(std::span<const Subspace> u, std::span<const Subspace> v) {
  if (u.size() != v.size()) {
    throw Error(ErrorKind::TypeMismatch, "sequences have different lengths");
  }
  std::size_t total = 0;
  for (std::size_t i = 0; i < u.size(); ++i) total += subspace_distance(u[i], v[i]);
  return total;
}

std::size_t flag_distance(const Flag& f, const Flag& g) {
  if (!(f.type() == g.type())) throw Error(ErrorKind::TypeMismatch, "flags have different types");
  return extended_distance(f.levels(), g.levels());
}

std::size_t flag_distance(const Flag& f, const StutteringFlag& x) {
  return extended_distance(f.levels(), x.levels());
}

StutteringFlag level_intersection(const Flag& f, const Flag& g) {
  if (!(f.type() == g.type())) throw Error(ErrorKind::TypeMismatch, "flags have different types");
  std::vector<Subspace> out;
  out.reserve(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out.push_back(intersect(f[i], g[i]));
  return StutteringFlag(std::move(out));
}

}  // namespace flagcodes
