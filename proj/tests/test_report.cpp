#include <gtest/gtest.h>

#include <string>

#include "flagcodes/report.hpp"
#include "test_support.hpp"

namespace flagcodes {
namespace {

using namespace testing;

bool has(const std::string& text, const std::string& needle) {
  return text.find(needle) != std::string::npos;
}

TEST(Format, Subspaces) {
  EXPECT_EQ(format_subspace(Subspace::zero(f2(), 3)), "{0}");
  EXPECT_EQ(format_subspace(span_units(3, {1, 2})), "<(1,0,0),(0,1,0)>");
  EXPECT_EQ(format_dims({0, 1, 2}), "(0,1,2)");
}

TEST(AnalysisReport, DistanceCoherentExample) {
  const auto text = analysis_report(distance_coherent_example(), ReportFormat::Human);
  EXPECT_TRUE(has(text, "disjoint: no (C_1 has 2 of 3 subspaces)")) << text;
  EXPECT_TRUE(has(text, "distance-coherent: yes")) << text;
  EXPECT_TRUE(has(text, "coherent: no")) << text;
  EXPECT_TRUE(has(text, "m = (0,1,2,3)")) << text;
}

TEST(AnalysisReport, EquidistantExample) {
  const auto text = analysis_report(equidistant_example(), ReportFormat::Human);
  EXPECT_TRUE(has(text, "equidistant: yes (d=6)")) << text;
  EXPECT_TRUE(has(text, "projected-equidistant: no (level 1 witness: 2 vs 4)")) << text;
}

TEST(AnalysisReport, SpreadCode) {
  const auto text = analysis_report(spread_example(), ReportFormat::Human);
  EXPECT_TRUE(has(text, "coherent: yes")) << text;
  EXPECT_TRUE(has(text, "optimum distance: yes (6/6)")) << text;
  const auto machine = analysis_report(spread_example(), ReportFormat::Machine);
  EXPECT_TRUE(has(machine, "coherent=1\n")) << machine;
  EXPECT_TRUE(has(machine, "m=0,0\n")) << machine;
  EXPECT_TRUE(has(machine, "optimum_bound=6\n")) << machine;
}

TEST(AnalysisReport, NonCoherentIntersectionTypes) {
  const auto machine = analysis_report(noncoherent_example(), ReportFormat::Machine);
  EXPECT_TRUE(has(machine, "distance=6\n"));
  EXPECT_TRUE(has(machine, "projected_distances=2,2,2\n"));
  EXPECT_TRUE(has(machine, "distance_coherent=0\n"));
  EXPECT_TRUE(has(machine, "_type=1,1,1\n"));
  EXPECT_TRUE(has(machine, "_type=0,1,2\n"));
}

TEST(AnalysisReport, SunflowerExample) {
  const auto text = analysis_report(projected_sunflower_example(), ReportFormat::Human);
  EXPECT_TRUE(has(text, "sunflower: no")) << text;
  EXPECT_TRUE(has(text, "projected-sunflower: yes (centers (<(1,0,0,0)>, <(1,0,0,0),(0,1,0,0)>))"))
      << text;
}

TEST(AnalysisReport, Singleton) {
  const auto text = analysis_report(FlagCode({spread_example()[0]}), ReportFormat::Human);
  EXPECT_TRUE(has(text, "coherent: yes")) << text;
  EXPECT_FALSE(has(text, "m = ")) << text;
}

TEST(DistanceReport, Pairs) {
  const auto machine = distance_report(noncoherent_example(), ReportFormat::Machine);
  EXPECT_TRUE(has(machine, "distance=6\n"));
  EXPECT_TRUE(has(machine, "pair_1_2=6;0,2,4\n")) << machine;
}

TEST(DecodeReport, WorkedExample) {
  const CoherentDecoder dec(spread_example());
  const std::vector<StutteringFlag> rx{StutteringFlag({Subspace::zero(f2(), 4), span_units(4, {2})}),
                                       StutteringFlag({Subspace::zero(f2(), 4), Subspace::zero(f2(), 4)})};
  std::vector<DecodeOutcome> outs;
  for (const auto& x : rx) outs.push_back(dec.decode(x));
  const auto text = decode_report(dec, rx, outs, ReportFormat::Human);
  EXPECT_TRUE(has(text, "received 1 dims (0,1): success at shot 2 -> F1")) << text;
  EXPECT_TRUE(has(text, "shot 1: dim 0 <= m 0")) << text;
  EXPECT_TRUE(has(text, "shot 2: dim 1 > m 0, containment unique")) << text;
  EXPECT_TRUE(has(text, "received 2 dims (0,0): DecodeFailed (no shot passed the dimension test)"))
      << text;
  const auto machine = decode_report(dec, rx, outs, ReportFormat::Machine);
  EXPECT_TRUE(has(machine, "received_1_shot=2\n"));
  EXPECT_TRUE(has(machine, "received_1_flag=1\n"));
  EXPECT_TRUE(has(machine, "received_2_status=DecodeFailed\n"));
}

TEST(SimulationReport, Counters) {
  const CoherentDecoder dec(spread_example());
  const ExperimentConfig cfg{.trials = 50, .loss = PatternLoss{{0, 1}}, .seed = 3, .workers = 1};
  const auto stats = run_simulation(dec, cfg);
  const auto machine = simulation_report(dec, cfg, stats, ReportFormat::Machine);
  EXPECT_TRUE(has(machine, "loss=pattern 0,1\n")) << machine;
  EXPECT_TRUE(has(machine, "correctable=50\n")) << machine;
  EXPECT_TRUE(has(machine, "decoded_correctly=50\n")) << machine;
  EXPECT_TRUE(has(machine, "shots_used=50,0\n")) << machine;
  EXPECT_EQ(machine, simulation_report(dec, cfg, run_simulation(dec, cfg), ReportFormat::Machine));
}

}  // namespace
}  // namespace flagcodes
