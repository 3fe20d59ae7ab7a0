#include "flagcodes/cdc.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <unordered_set>

#include "flagcodes/errors.hpp"

namespace flagcodes {

ConstantDimensionCode::ConstantDimensionCode(std::vector<Subspace> words) {
  if (words.empty()) throw Error(ErrorKind::InvalidArgument, "a code needs at least one word");
  std::unordered_set<Subspace> seen;
  for (auto& w : words) {
    if (!words_.empty()) {
      require_compatible(words_.front(), w);
      if (w.dim() != words_.front().dim()) {
        throw Error(ErrorKind::DimensionMismatch,
                    "word of dimension " + std::to_string(w.dim()) + " in a code of dimension " +
                        std::to_string(words_.front().dim()));
      }
    }
    if (seen.insert(w).second) words_.push_back(std::move(w));
  }
}

std::optional<std::size_t> ConstantDimensionCode::find(const Subspace& w) const {
  const auto it = std::find(words_.begin(), words_.end(), w);
  if (it == words_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - words_.begin());
}

std::size_t cdc_min_distance(const ConstantDimensionCode& code) {
  const auto& w = code.words();
  if (w.size() < 2) return 0;
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) best = std::min(best, subspace_distance(w[i], w[j]));
  }
  return best;
}

std::size_t max_distance_bound(std::size_t k, std::size_t n) {
  if (k == 0 || k >= n) {
    throw Error(ErrorKind::InvalidDimension, "distance bound needs 0 < k < n, got k=" +
                                                 std::to_string(k) + " n=" + std::to_string(n));
  }
  return std::min(2 * k, 2 * (n - k));
}

EquidistantProfile equidistant_profile(const ConstantDimensionCode& code) {
  EquidistantProfile out;
  const auto& w = code.words();
  if (w.size() == 1) {
    out.is_equidistant = true;
    out.c = code.dim();
    return out;
  }
  std::vector<PairWitness> pairs;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) pairs.push_back({i, j, subspace_distance(w[i], w[j])});
  }
  const auto min_it = std::min_element(pairs.begin(), pairs.end(),
                                       [](const auto& a, const auto& b) { return a.distance < b.distance; });
  out.min_distance = min_it->distance;
  const auto off = std::find_if(pairs.begin(), pairs.end(),
                                [&](const auto& p) { return p.distance != out.min_distance; });
  if (off == pairs.end()) {
    out.is_equidistant = true;
    out.c = code.dim() - out.min_distance / 2;
  } else {
    out.min_pair = *min_it;
    out.off_pair = *off;
  }
  return out;
}

std::optional<Subspace> sunflower_center(const ConstantDimensionCode& code) {
  const auto& w = code.words();
  if (w.size() == 1) return w.front();
  std::optional<Subspace> center;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      Subspace meet = intersect(w[i], w[j]);
      if (!center) {
        center = std::move(meet);
      } else if (!(meet == *center)) {
        return std::nullopt;
      }
    }
  }
  return center;
}

ContainmentResult containment_decode(const ConstantDimensionCode& code, const Subspace& x) {
  require_compatible(code.words().front(), x);
  ContainmentResult out{ContainmentStatus::NotFound, std::nullopt, 0};
  for (std::size_t i = 0; i < code.size(); ++i) {
    if (contains(code.words()[i], x)) {
      if (++out.matches == 1) out.index = i;
    }
  }
  if (out.matches == 1) {
    out.status = ContainmentStatus::Unique;
  } else {
    out.index.reset();
    if (out.matches > 1) out.status = ContainmentStatus::Ambiguous;
  }
  return out;
}

}  // namespace flagcodes
