#include <benchmark/benchmark.h>

#include "flagcodes/flagcodes.hpp"

namespace {

using namespace flagcodes;

Matrix random_matrix(const FieldPtr& f, std::size_t rows, std::size_t cols, Rng& rng) {
  Matrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = static_cast<Element>(uniform_below(rng, f->order()));
  }
  return m;
}

void BM_Rref(benchmark::State& state) {
  const auto f = make_field(static_cast<std::uint32_t>(state.range(0)));
  const auto n = static_cast<std::size_t>(state.range(1));
  Rng rng(1);
  const Matrix m = random_matrix(f, n, n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_Rref)->Args({2, 8})->Args({2, 32})->Args({16, 32})->Args({256, 32});

void BM_Intersect(benchmark::State& state) {
  const auto f = make_field(static_cast<std::uint32_t>(state.range(0)));
  const auto n = static_cast<std::size_t>(state.range(1));
  Rng rng(2);
  const Subspace u = Subspace::span(random_matrix(f, n / 2, n, rng));
  const Subspace v = Subspace::span(random_matrix(f, n / 2, n, rng));
  for (auto _ : state) benchmark::DoNotOptimize(intersect(u, v));
}
BENCHMARK(BM_Intersect)->Args({2, 8})->Args({2, 32})->Args({16, 32});

FlagCode coherent_code(const TypeVector& type, std::size_t size, Rng& rng) {
  for (;;) {
    FlagCode c = random_flag_code(type, make_field(2), size, rng);
    if (coherence_report(c).is_coherent) return c;
  }
}

void BM_CoherenceReport(benchmark::State& state) {
  Rng rng(3);
  const FlagCode code = random_flag_code(TypeVector({1, 2, 3}, 6), make_field(2),
                                         static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(coherence_report(code));
}
BENCHMARK(BM_CoherenceReport)->Arg(4)->Arg(16)->Arg(64);

void BM_Decode(benchmark::State& state) {
  Rng rng(4);
  const CoherentDecoder dec(coherent_code(TypeVector({1, 3}, 6), 4, rng));
  std::vector<StutteringFlag> received;
  for (int i = 0; i < 256; ++i) {
    received.push_back(transmit(dec.code()[uniform_below(rng, dec.code().size())], PerVectorLoss{0.25}, rng).received);
  }
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(dec.decode(received[i++ % received.size()]));
}
BENCHMARK(BM_Decode);

void BM_Simulation(benchmark::State& state) {
  Rng rng(5);
  const CoherentDecoder dec(coherent_code(TypeVector({1, 3}, 6), 4, rng));
  const ExperimentConfig cfg{.trials = 2000, .loss = PerVectorLoss{0.2}, .seed = 7,
                             .workers = static_cast<std::size_t>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(run_simulation(dec, cfg));
}
BENCHMARK(BM_Simulation)->Arg(1)->Arg(4)->UseRealTime();

}  // namespace
BENCHMARK_MAIN();
