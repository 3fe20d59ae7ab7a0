#include "flagcodes/channel.hpp"

#include <numeric>
#include <string>

#include "flagcodes/errors.hpp"

namespace flagcodes {

Matrix nested_generator_matrix(const Flag& flag) {
  const std::size_t n = flag.ambient();
  Matrix chosen(flag.field(), 0, n);
  // Echelon copy of `chosen`, used to reduce candidates.
  Matrix echelon(flag.field(), 0, n);
  std::vector<std::size_t> pivots;
  std::vector<Element> work(n);
  for (const Subspace& level : flag.levels()) {
    for (std::size_t r = 0; r < level.dim() && chosen.rows() < level.dim(); ++r) {
      auto src = level.basis().row(r);
      std::copy(src.begin(), src.end(), work.begin());
      if (!reduce_against(echelon, pivots, work)) continue;
      chosen.append_row(work);
      RrefResult e = rref(chosen);
      echelon = std::move(e.basis);
      pivots = std::move(e.pivots);
    }
  }
  return chosen;
}

void check_pattern(const TypeVector& type, std::span<const std::size_t> erasures) {
  if (erasures.size() != type.levels()) {
    throw Error(ErrorKind::InfeasiblePattern,
                "pattern has " + std::to_string(erasures.size()) + " entries for " +
                    std::to_string(type.levels()) + " shots");
  }
  std::size_t prev_e = 0;
  std::size_t prev_t = 0;
  for (std::size_t i = 0; i < erasures.size(); ++i) {
    const std::size_t e = erasures[i];
    if (e < prev_e) {
      throw Error(ErrorKind::InfeasiblePattern,
                  "erasures decrease at shot " + std::to_string(i + 1));
    }
    if (e - prev_e > type[i] - prev_t) {
      throw Error(ErrorKind::InfeasiblePattern,
                  "shot " + std::to_string(i + 1) + " cannot lose " + std::to_string(e - prev_e) +
                      " of its " + std::to_string(type[i] - prev_t) + " generators");
    }
    prev_e = e;
    prev_t = type[i];
  }
}

Transmission transmit(const Flag& flag, const LossModel& loss, Rng& rng) {
  const TypeVector& type = flag.type();
  Matrix gens = nested_generator_matrix(flag);
  std::vector<bool> survived(type.top(), true);

  if (const auto* pv = std::get_if<PerVectorLoss>(&loss)) {
    if (!(pv->probability >= 0.0 && pv->probability <= 1.0)) {
      throw Error(ErrorKind::InvalidArgument, "loss probability must lie in [0, 1]");
    }
    for (std::size_t k = 0; k < survived.size(); ++k) {
      survived[k] = !(uniform_unit(rng) < pv->probability);
    }
  } else {
    const auto& pattern = std::get<PatternLoss>(loss).erasures;
    check_pattern(type, pattern);
    std::size_t prev_t = 0;
    std::size_t prev_e = 0;
    std::vector<std::size_t> block;
    for (std::size_t i = 0; i < type.levels(); ++i) {
      block.resize(type[i] - prev_t);
      std::iota(block.begin(), block.end(), prev_t);
      const std::size_t drops = pattern[i] - prev_e;
      // partial Fisher-Yates: the first `drops` entries become a uniform subset
      for (std::size_t k = 0; k < drops; ++k) {
        const std::size_t pick = k + uniform_below(rng, block.size() - k);
        std::swap(block[k], block[pick]);
        survived[block[k]] = false;
      }
      prev_t = type[i];
      prev_e = pattern[i];
    }
  }

  std::vector<Subspace> levels;
  std::vector<std::size_t> erasures;
  Matrix kept(flag.field(), 0, flag.ambient());
  std::size_t injected = 0;
  for (std::size_t i = 0; i < type.levels(); ++i) {
    for (; injected < type[i]; ++injected) {
      if (survived[injected]) kept.append_row(gens.row(injected));
    }
    levels.push_back(Subspace::span(kept));
    erasures.push_back(type[i] - levels.back().dim());
  }
  const std::size_t total = std::accumulate(erasures.begin(), erasures.end(), std::size_t{0});
  return Transmission{StutteringFlag(std::move(levels)),
                      ChannelTrace{flag, std::move(gens), std::move(survived), std::move(erasures),
                                   total}};
}

ErasureCounts erasure_counts(const Flag& flag, const StutteringFlag& received) {
  if (received.size() != flag.size()) {
    throw Error(ErrorKind::TypeMismatch, "received flag has " + std::to_string(received.size()) +
                                             " levels, sent flag has " +
                                             std::to_string(flag.size()));
  }
  ErasureCounts out;
  for (std::size_t i = 0; i < flag.size(); ++i) {
    if (!contains(flag[i], received[i])) {
      throw Error(ErrorKind::NotASubflag, "received level " + std::to_string(i + 1) +
                                              " is not contained in the sent subspace");
    }
    out.per_shot.push_back(flag[i].dim() - received[i].dim());
    out.total += out.per_shot.back();
  }
  return out;
}

bool correctable_at(std::size_t distance, std::size_t erasures) noexcept {
  if (distance == 0) return false;
  return erasures <= (distance - 1) / 2;
}

bool correctable(const FlagCode& code, std::size_t erasures) {
  return correctable_at(flag_min_distance(code), erasures);
}

}  // namespace flagcodes
