#pragma once

// Shared fixtures for the unit and acceptance suites: example code codes over
// F_2, random generators, and a brute-force subspace oracle over F_2 that
// works on explicit vector sets and never touches the RREF machinery.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <vector>

#include "flagcodes/flagcodes.hpp"

namespace flagcodes::testing {

inline FieldPtr f2() {
  static const FieldPtr f = make_field(2);
  return f;
}

/// Standard basis vector u_i (1-based) of F_q^n.
inline std::vector<Element> unit(std::size_t n, std::size_t i) {
  std::vector<Element> v(n, 0);
  v.at(i - 1) = 1;
  return v;
}

/// Sum of standard basis vectors, e.g. vec(3, {2, 3}) = u2 + u3 over F_2.
inline std::vector<Element> vec(std::size_t n, std::initializer_list<std::size_t> ones) {
  std::vector<Element> v(n, 0);
  for (auto i : ones) v.at(i - 1) = 1;
  return v;
}

/// ⟨u_a, u_b, ...⟩ over F_2 (1-based).
inline Subspace span_units(std::size_t n, std::initializer_list<std::size_t> idx, FieldPtr f = f2()) {
  std::vector<std::vector<Element>> rows;
  for (auto i : idx) rows.push_back(unit(n, i));
  return Subspace::from_rows(std::move(f), n, rows);
}

/// Flag from generator rows (first t_i rows span F_i).
inline Flag flag_from_rows(const TypeVector& type, const std::vector<std::vector<Element>>& rows,
                           FieldPtr f = f2()) {
  return Flag::from_generators(type, Matrix::from_rows(std::move(f), type.ambient(), rows));
}

// Example codes over F_2. Generators are listed so that the first t_i rows
// span the i-th subspace.

/// Type (1,2,3) on F^5, not distance-coherent.
inline FlagCode noncoherent_example() {
  const TypeVector t({1, 2, 3}, 5);
  auto u = [](std::size_t i) { return unit(5, i); };
  return FlagCode({flag_from_rows(t, {u(1), u(3), u(4)}), flag_from_rows(t, {u(1), u(5), u(2)}),
                   flag_from_rows(t, {u(2), u(1), u(4)})});
}

/// Type (1,2,3,4) on F^6: distance-coherent but not disjoint.
inline FlagCode distance_coherent_example() {
  const TypeVector t({1, 2, 3, 4}, 6);
  auto u = [](std::size_t i) { return unit(6, i); };
  return FlagCode({flag_from_rows(t, {u(1), u(2), u(3), u(4)}),
                   flag_from_rows(t, {u(2), u(3), u(4), u(5)}),
                   flag_from_rows(t, {u(1), u(5), u(4), u(6)})});
}

/// Type (2,3) on F^5: equidistant, no projected code equidistant.
inline FlagCode equidistant_example() {
  const TypeVector t({2, 3}, 5);
  auto u = [](std::size_t i) { return unit(5, i); };
  return FlagCode({flag_from_rows(t, {u(1), u(2), u(3)}), flag_from_rows(t, {u(1), u(4), u(5)}),
                   flag_from_rows(t, {u(3), u(4), u(2)})});
}

/// Full flags on F^3: projected-equidistant, not equidistant.
inline FlagCode projected_equidistant_example() {
  const TypeVector t = TypeVector::full(3);
  auto u = [](std::size_t i) { return unit(3, i); };
  return FlagCode({flag_from_rows(t, {u(1), u(3)}), flag_from_rows(t, {u(1), vec(3, {2, 3})}),
                   flag_from_rows(t, {u(2), u(1)})});
}

/// Type (2,3) on F^4: projected-sunflower, not a sunflower.
inline FlagCode projected_sunflower_example() {
  const TypeVector t({2, 3}, 4);
  auto u = [](std::size_t i) { return unit(4, i); };
  return FlagCode({flag_from_rows(t, {u(1), u(2), u(3)}), flag_from_rows(t, {u(1), u(3), u(2)}),
                   flag_from_rows(t, {u(1), u(4), u(2)})});
}

/// {(⟨e1⟩,⟨e1,e2⟩), (⟨e3⟩,⟨e3,e4⟩)} on F_2^4: coherent, d_f = 6, m = (0,0).
inline FlagCode spread_example() {
  const TypeVector t({1, 2}, 4);
  auto u = [](std::size_t i) { return unit(4, i); };
  return FlagCode({flag_from_rows(t, {u(1), u(2)}), flag_from_rows(t, {u(3), u(4)})});
}

inline std::vector<FlagCode> example_codes() {
  return {noncoherent_example(),  distance_coherent_example(),    equidistant_example(),
          projected_equidistant_example(), projected_sunflower_example(), spread_example()};
}

/// Random subspace of F_q^n spanned by `rows` random vectors.
inline Subspace random_subspace(const FieldPtr& f, std::size_t n, std::size_t rows, Rng& rng) {
  Matrix m(f, rows, n);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < n; ++c) m(r, c) = static_cast<Element>(uniform_below(rng, f->order()));
  }
  return Subspace::span(m);
}

/// Random strictly increasing type vector on F^n.
inline TypeVector random_type(std::size_t n, Rng& rng) {
  std::vector<std::size_t> dims;
  while (dims.empty()) {
    for (std::size_t t = 1; t < n; ++t) {
      if (uniform_below(rng, 2)) dims.push_back(t);
    }
  }
  return TypeVector(dims, n);
}

/// Random feasible erasure pattern with total at most `max_total`, drawn by
/// rejection from patterns with uniform per-shot increments.
inline std::vector<std::size_t> random_pattern(const TypeVector& type, std::size_t max_total, Rng& rng) {
  for (;;) {
    std::vector<std::size_t> pattern;
    std::size_t e = 0, prev_t = 0, total = 0;
    for (std::size_t i = 0; i < type.levels(); ++i) {
      e += uniform_below(rng, type[i] - prev_t + 1);
      prev_t = type[i];
      pattern.push_back(e);
      total += e;
    }
    if (total <= max_total) return pattern;
  }
}

/// Coherent codes with at least two flags and d_f >= min_distance, found by
/// filtering random codes.
inline std::vector<FlagCode> random_coherent_codes(const FieldPtr& f, const TypeVector& type,
                                                   std::size_t size, std::size_t count,
                                                   std::size_t min_distance, Rng& rng) {
  std::vector<FlagCode> out;
  while (out.size() < count) {
    FlagCode code = random_flag_code(type, f, size, rng);
    const CoherenceReport r = coherence_report(code);
    if (r.is_coherent && code.size() >= 2 && r.distance >= min_distance) out.push_back(std::move(code));
  }
  return out;
}

// ---------------------------------------------------------------------------
// F_2 brute-force oracle: subspaces as explicit sets of bitmask vectors.

using VectorSet = std::set<std::uint32_t>;

inline std::uint32_t to_mask(std::span<const Element> v) {
  std::uint32_t m = 0;
  for (std::size_t i = 0; i < v.size(); ++i) m |= (v[i] & 1u) << i;
  return m;
}

/// All F_2-combinations of the given vectors.
inline VectorSet span_of(const std::vector<std::uint32_t>& gens) {
  VectorSet out;
  const std::uint64_t combos = std::uint64_t{1} << gens.size();
  for (std::uint64_t c = 0; c < combos; ++c) {
    std::uint32_t v = 0;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (c >> i & 1) v ^= gens[i];
    }
    out.insert(v);
  }
  return out;
}

inline VectorSet span_of_rows(const std::vector<std::vector<Element>>& rows) {
  std::vector<std::uint32_t> gens;
  for (const auto& r : rows) gens.push_back(to_mask(r));
  return span_of(gens);
}

/// Vector set of a Subspace, read through its basis rows only.
inline VectorSet vectors_of(const Subspace& s) {
  std::vector<std::uint32_t> gens;
  for (std::size_t r = 0; r < s.dim(); ++r) gens.push_back(to_mask(s.basis().row(r)));
  return span_of(gens);
}

inline std::size_t set_dim(const VectorSet& s) {
  return static_cast<std::size_t>(std::countr_zero(static_cast<std::uint64_t>(s.size())));
}

inline VectorSet set_meet(const VectorSet& a, const VectorSet& b) {
  VectorSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.begin()));
  return out;
}

inline VectorSet set_join(const VectorSet& a, const VectorSet& b) {
  // U + V = {x + y}
  VectorSet out;
  for (auto x : a) {
    for (auto y : b) out.insert(x ^ y);
  }
  return out;
}

inline std::size_t set_distance(const VectorSet& a, const VectorSet& b) {
  return set_dim(set_join(a, b)) - set_dim(set_meet(a, b));
}

}  // namespace flagcodes::testing
