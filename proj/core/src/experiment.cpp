#include "flagcodes/experiment.hpp"

#include <algorithm>
#include <thread>

#include "flagcodes/errors.hpp"

namespace flagcodes {

void SimulationStats::merge(const SimulationStats& o) {
  trials += o.trials;
  correctable += o.correctable;
  decoded += o.decoded;
  decoded_correctly += o.decoded_correctly;
  oracle_agreement += o.oracle_agreement;
  correctable_decoded_correctly += o.correctable_decoded_correctly;
  correctable_oracle_agreement += o.correctable_oracle_agreement;
  correctable_oracle_unique += o.correctable_oracle_unique;
  correctable_some_shot_correctable += o.correctable_some_shot_correctable;
  dimension_criterion_violations += o.dimension_criterion_violations;
  sequential_violations += o.sequential_violations;
  const auto add = [](std::vector<std::size_t>& into, const std::vector<std::size_t>& from) {
    if (into.size() < from.size()) into.resize(from.size(), 0);
    for (std::size_t i = 0; i < from.size(); ++i) into[i] += from[i];
  };
  add(shots_used, o.shots_used);
  add(erasure_totals, o.erasure_totals);
}

namespace {

void run_trial(const CoherentDecoder& decoder, const ExperimentConfig& config, std::size_t trial,
               SimulationStats& stats) {
  const FlagCode& code = decoder.code();
  const CoherenceReport& report = decoder.report();
  const auto& m = decoder.m_vector();

  Rng rng(mix_seed(config.seed, trial));
  const std::size_t sent = uniform_below(rng, code.size());
  const Transmission tx = transmit(code[sent], config.loss, rng);
  const std::size_t e = tx.trace.total_erasures;
  const bool can_correct = correctable_at(report.distance, e);

  ++stats.trials;
  if (e >= stats.erasure_totals.size()) stats.erasure_totals.resize(e + 1, 0);
  ++stats.erasure_totals[e];

  std::optional<std::size_t> first_passing;
  bool some_shot = false;
  for (std::size_t i = 0; i < code.levels(); ++i) {
    const bool shot_ok = correctable_at(report.projected_distances[i], tx.trace.erasures[i]);
    const bool dim_ok = tx.received[i].dim() > m[i];
    if (shot_ok != dim_ok) ++stats.dimension_criterion_violations;
    some_shot = some_shot || shot_ok;
    if (dim_ok && !first_passing) first_passing = i;
  }

  const DecodeOutcome out = decoder.decode(tx.received);
  const ExhaustiveResult oracle = exhaustive_decode(code, tx.received);
  const bool right = out.success && *out.flag_index == sent;
  const bool agrees = out.success && oracle.flags.size() == 1 && oracle.flags.front() == *out.flag_index;

  if (out.success) {
    ++stats.decoded;
    if (stats.shots_used.size() < code.levels()) stats.shots_used.resize(code.levels(), 0);
    ++stats.shots_used[*out.shot_used];
    if (out.shot_used != first_passing) ++stats.sequential_violations;
  }
  if (right) ++stats.decoded_correctly;
  if (agrees) ++stats.oracle_agreement;
  if (can_correct) {
    ++stats.correctable;
    if (right) ++stats.correctable_decoded_correctly;
    if (agrees) ++stats.correctable_oracle_agreement;
    if (oracle.flags.size() == 1 && oracle.flags.front() == sent) ++stats.correctable_oracle_unique;
    if (some_shot) ++stats.correctable_some_shot_correctable;
  }
}

}  // namespace

SimulationStats run_simulation(const CoherentDecoder& decoder, const ExperimentConfig& config) {
  if (config.trials == 0) throw Error(ErrorKind::InvalidArgument, "trials must be at least 1");
  if (const auto* pattern = std::get_if<PatternLoss>(&config.loss)) {
    check_pattern(decoder.code().type(), pattern->erasures);
  }
  if (const auto* pv = std::get_if<PerVectorLoss>(&config.loss)) {
    if (!(pv->probability >= 0.0 && pv->probability <= 1.0)) {
      throw Error(ErrorKind::InvalidArgument, "loss probability must lie in [0, 1]");
    }
  }

  const std::size_t workers = std::clamp<std::size_t>(config.workers, 1, config.trials);
  std::vector<SimulationStats> partial(workers);
  const auto chunk = [&](std::size_t w) {
    const std::size_t begin = config.trials * w / workers;
    const std::size_t end = config.trials * (w + 1) / workers;
    for (std::size_t t = begin; t < end; ++t) run_trial(decoder, config, t, partial[w]);
  };
  if (workers == 1) {
    chunk(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(chunk, w);
  }

  SimulationStats total;
  total.shots_used.assign(decoder.code().levels(), 0);
  for (const auto& p : partial) total.merge(p);
  return total;
}

}  // namespace flagcodes
