#pragma once

#include <span>
#include <string>

#include "flagcodes/decoder.hpp"
#include "flagcodes/experiment.hpp"

namespace flagcodes {

/// Output style of the text reports. Machine reports are `key=value` lines.
enum class ReportFormat { Human, Machine };

/// `<(1,0,0),(0,1,0)>`, or `{0}` for the zero subspace.
std::string format_subspace(const Subspace& s);
std::string format_dims(const std::vector<std::size_t>& dims);

/// Coherence, equidistance, sunflower and optimum-distance analysis with a
/// witness for every property that fails.
std::string analysis_report(const FlagCode& code, ReportFormat format);

/// Pairwise flag distances and per-level projected distances.
std::string distance_report(const FlagCode& code, ReportFormat format);

/// One block per received flag. Flags are numbered from 1.
std::string decode_report(const CoherentDecoder& decoder, std::span<const StutteringFlag> received,
                          std::span<const DecodeOutcome> outcomes, ReportFormat format);

std::string simulation_report(const CoherentDecoder& decoder, const ExperimentConfig& config,
                              const SimulationStats& stats, ReportFormat format);

}  // namespace flagcodes
