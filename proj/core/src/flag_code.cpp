#include "flagcodes/flag_code.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>
#include <unordered_set>

#include "flagcodes/errors.hpp"

namespace flagcodes {

FlagCode::FlagCode(std::vector<Flag> flags) {
  if (flags.empty()) throw Error(ErrorKind::InvalidArgument, "a flag code needs at least one flag");
  std::unordered_set<Flag> seen;
  for (auto& f : flags) {
    if (!flags_.empty()) {
      if (!(f.type() == flags_.front().type())) {
        throw Error(ErrorKind::TypeMismatch, "flags of a code must share their type vector");
      }
      require_compatible(f[0], flags_.front()[0]);
    }
    if (seen.insert(f).second) flags_.push_back(std::move(f));
  }
}

namespace {

struct PairDistances {
  std::size_t first;
  std::size_t second;
  std::size_t total;
  std::vector<std::size_t> levels;
};

std::vector<PairDistances> all_pairs(const FlagCode& code) {
  std::vector<PairDistances> out;
  const auto& fl = code.flags();
  for (std::size_t i = 0; i < fl.size(); ++i) {
    for (std::size_t j = i + 1; j < fl.size(); ++j) {
      PairDistances p{i, j, 0, {}};
      p.levels.reserve(code.levels());
      for (std::size_t l = 0; l < code.levels(); ++l) {
        p.levels.push_back(subspace_distance(fl[i][l], fl[j][l]));
        p.total += p.levels.back();
      }
      out.push_back(std::move(p));
    }
  }
  return out;
}

std::size_t min_total(const std::vector<PairDistances>& pairs) {
  if (pairs.empty()) return 0;
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (const auto& p : pairs) best = std::min(best, p.total);
  return best;
}

std::vector<ConstantDimensionCode> all_projected(const FlagCode& code) {
  std::vector<ConstantDimensionCode> out;
  out.reserve(code.levels());
  for (std::size_t l = 0; l < code.levels(); ++l) out.push_back(projected_code(code, l));
  return out;
}

std::optional<SharedLevelWitness> find_shared_level(const FlagCode& code) {
  const auto& fl = code.flags();
  for (std::size_t l = 0; l < code.levels(); ++l) {
    for (std::size_t i = 0; i < fl.size(); ++i) {
      for (std::size_t j = i + 1; j < fl.size(); ++j) {
        if (fl[i][l] == fl[j][l]) return SharedLevelWitness{l, i, j};
      }
    }
  }
  return std::nullopt;
}

std::optional<CoherenceWitness> find_incoherent_pair(const std::vector<PairDistances>& pairs,
                                                     std::size_t distance,
                                                     const std::vector<std::size_t>& level_min) {
  for (const auto& p : pairs) {
    const bool attains_flag = p.total == distance;
    const bool attains_levels = p.levels == level_min;
    if (attains_flag != attains_levels) {
      return CoherenceWitness{p.first, p.second, p.total, p.levels};
    }
  }
  return std::nullopt;
}

}  // namespace

std::size_t flag_min_distance(const FlagCode& code) { return min_total(all_pairs(code)); }

ConstantDimensionCode projected_code(const FlagCode& code, std::size_t level) {
  if (level >= code.levels()) {
    throw Error(ErrorKind::IndexOutOfRange, "level " + std::to_string(level + 1) +
                                                " exceeds the " + std::to_string(code.levels()) +
                                                " levels of the code");
  }
  std::vector<Subspace> words;
  words.reserve(code.size());
  for (const auto& f : code.flags()) words.push_back(f[level]);
  return ConstantDimensionCode(std::move(words));
}

bool is_disjoint(const FlagCode& code) {
  for (std::size_t l = 0; l < code.levels(); ++l) {
    if (projected_code(code, l).size() != code.size()) return false;
  }
  return true;
}

bool is_distance_coherent(const FlagCode& code) {
  if (code.size() < 2) return true;
  const auto pairs = all_pairs(code);
  std::vector<std::size_t> level_min;
  for (const auto& c : all_projected(code)) level_min.push_back(cdc_min_distance(c));
  return !find_incoherent_pair(pairs, min_total(pairs), level_min).has_value();
}

CoherenceReport coherence_report(const FlagCode& code) {
  CoherenceReport r;
  r.cardinality = code.size();
  const auto projected = all_projected(code);
  for (const auto& c : projected) {
    r.projected_sizes.push_back(c.size());
    r.projected_distances.push_back(cdc_min_distance(c));
  }
  const auto pairs = all_pairs(code);
  r.distance = min_total(pairs);

  r.is_disjoint = std::all_of(r.projected_sizes.begin(), r.projected_sizes.end(),
                              [&](std::size_t s) { return s == code.size(); });
  if (!r.is_disjoint) r.disjoint_witness = find_shared_level(code);

  r.coherence_witness = find_incoherent_pair(pairs, r.distance, r.projected_distances);
  r.is_distance_coherent = !r.coherence_witness.has_value();
  r.is_coherent = r.is_disjoint && r.is_distance_coherent;

  const std::size_t level_sum =
      std::accumulate(r.projected_distances.begin(), r.projected_distances.end(), std::size_t{0});
  r.is_coherent_by_distance_sum = r.is_disjoint && r.distance == level_sum;

  if (r.is_distance_coherent && code.size() >= 2) {
    std::vector<std::size_t> m;
    for (std::size_t l = 0; l < code.levels(); ++l) {
      m.push_back(code.type()[l] - r.projected_distances[l] / 2);
    }
    r.m_vector = std::move(m);
  }
  return r;
}

std::vector<StutteringFlag> min_distance_intersection_code(const FlagCode& code) {
  if (code.size() < 2) {
    throw Error(ErrorKind::TooFewFlags,
                "minimum distance intersection code needs at least two flags");
  }
  const auto pairs = all_pairs(code);
  const std::size_t d = min_total(pairs);
  std::vector<StutteringFlag> out;
  for (const auto& p : pairs) {
    if (p.total != d) continue;
    StutteringFlag meet = level_intersection(code[p.first], code[p.second]);
    if (std::find(out.begin(), out.end(), meet) == out.end()) out.push_back(std::move(meet));
  }
  return out;
}

EquidistanceProfile equidistance_profile(const FlagCode& code) {
  EquidistanceProfile out;
  const auto pairs = all_pairs(code);
  out.distance = min_total(pairs);
  out.flag_equidistant = true;
  for (const auto& p : pairs) {
    if (p.total != out.distance) {
      out.flag_equidistant = false;
      const auto min_it = std::find_if(pairs.begin(), pairs.end(),
                                       [&](const auto& q) { return q.total == out.distance; });
      out.min_pair = PairWitness{min_it->first, min_it->second, min_it->total};
      out.off_pair = PairWitness{p.first, p.second, p.total};
      break;
    }
  }

  out.projected_equidistant = true;
  std::vector<std::size_t> c;
  for (std::size_t l = 0; l < code.levels(); ++l) {
    const auto prof = equidistant_profile(projected_code(code, l));
    if (!prof.is_equidistant) {
      out.projected_equidistant = false;
      out.failing_level = l;
      out.level_min_pair = prof.min_pair;
      out.level_off_pair = prof.off_pair;
      break;
    }
    c.push_back(*prof.c);
  }
  if (out.projected_equidistant && is_disjoint(code)) out.c_vector = std::move(c);
  return out;
}

SunflowerProfile sunflower_profile(const FlagCode& code) {
  SunflowerProfile out;
  const auto& fl = code.flags();
  if (fl.size() == 1) {
    out.flag_center = fl.front().as_stuttering();
  } else {
    std::optional<StutteringFlag> center;
    std::size_t ref_i = 0, ref_j = 1;
    for (std::size_t i = 0; i < fl.size() && !out.flag_witness; ++i) {
      for (std::size_t j = i + 1; j < fl.size(); ++j) {
        StutteringFlag meet = level_intersection(fl[i], fl[j]);
        if (!center) {
          center = std::move(meet);
          ref_i = i;
          ref_j = j;
          continue;
        }
        if (meet == *center) continue;
        std::size_t level = 0;
        while (meet[level] == (*center)[level]) ++level;
        out.flag_witness = SunflowerWitness{level, ref_i, ref_j, i, j};
        break;
      }
    }
    if (!out.flag_witness) out.flag_center = std::move(center);
  }

  std::vector<Subspace> centers;
  for (std::size_t l = 0; l < code.levels(); ++l) {
    auto c = sunflower_center(projected_code(code, l));
    if (!c) {
      out.failing_level = l;
      break;
    }
    centers.push_back(std::move(*c));
  }
  if (!out.failing_level) out.projected_centers = std::move(centers);
  return out;
}

std::size_t optimum_distance_bound(const TypeVector& type) {
  const std::size_t n = type.ambient();
  std::size_t total = 0;
  for (std::size_t t : type.dims()) total += t <= n / 2 ? t : n - t;
  return 2 * total;
}

OptimumDistanceCheck optimum_distance_check(const FlagCode& code) {
  OptimumDistanceCheck out;
  out.bound = optimum_distance_bound(code.type());
  out.distance = flag_min_distance(code);
  out.attained = out.distance == out.bound;
  return out;
}

Flag random_flag(const TypeVector& type, const FieldPtr& field, Rng& rng) {
  const std::size_t n = type.ambient();
  const std::uint64_t q = field->order();
  while (true) {
    Matrix a(field, n, n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) a(r, c) = static_cast<Element>(uniform_below(rng, q));
    }
    if (rref(a).rank == n) return Flag::from_generators(type, a);
  }
}

FlagCode random_flag_code(const TypeVector& type, const FieldPtr& field, std::size_t size,
                          Rng& rng, std::size_t max_attempts) {
  if (size == 0) throw Error(ErrorKind::InvalidArgument, "code size must be positive");
  if (max_attempts == 0) max_attempts = 1000 * size + 1000;
  std::vector<Flag> flags;
  std::unordered_set<Flag> seen;
  for (std::size_t attempt = 0; attempt < max_attempts && flags.size() < size; ++attempt) {
    Flag f = random_flag(type, field, rng);
    if (seen.insert(f).second) flags.push_back(std::move(f));
  }
  if (flags.size() < size) {
    throw Error(ErrorKind::Unsatisfiable, "could not draw " + std::to_string(size) +
                                              " distinct flags in " +
                                              std::to_string(max_attempts) + " attempts");
  }
  return FlagCode(std::move(flags));
}

}  // namespace flagcodes
