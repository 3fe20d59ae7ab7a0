// flagcode: analyze, decode and simulate flag codes stored in the text code format.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "flagcodes/flagcodes.hpp"

namespace {

using namespace flagcodes;

constexpr int kExitDomainError = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDecodeFailed = 4;

ReportFormat format_of(bool machine) { return machine ? ReportFormat::Machine : ReportFormat::Human; }

std::vector<std::size_t> parse_pattern(const std::string& text) {
  std::vector<std::size_t> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (tok.empty() || used != tok.size()) {
      throw Error(ErrorKind::InvalidArgument, "invalid pattern entry '" + tok + "'");
    }
    out.push_back(static_cast<std::size_t>(v));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Flag codes over finite fields: analysis, erasure-channel simulation and decoding"};
  app.require_subcommand(1);
  bool machine = false;
  app.add_flag("--machine", machine, "Print key=value output");

  std::string analyze_path;
  auto* analyze = app.add_subcommand("analyze", "Coherence, equidistance, sunflower and optimum-distance report");
  analyze->add_option("file", analyze_path, "Code file")->required();
  analyze->add_flag("--machine", machine, "Print key=value output");

  std::string distance_path;
  auto* distance = app.add_subcommand("distance", "Flag and projected-code distances");
  distance->add_option("file", distance_path, "Code file")->required();
  distance->add_flag("--machine", machine, "Print key=value output");

  std::string code_path, received_path;
  auto* decode_cmd = app.add_subcommand("decode", "Decode received stuttering flags");
  decode_cmd->add_option("--code", code_path, "Code file")->required();
  decode_cmd->add_option("--received", received_path, "Received flags file")->required();
  decode_cmd->add_flag("--machine", machine, "Print key=value output");

  std::string sim_path;
  std::size_t trials = 1000;
  double loss_prob = 0.0;
  std::string pattern;
  std::uint64_t seed = 0;
  std::size_t workers = 1;
  auto* simulate = app.add_subcommand("simulate", "Monte-Carlo transmissions through the erasure channel");
  simulate->add_option("file,--code", sim_path, "Code file")->required();
  simulate->add_option("--trials", trials, "Number of transmissions")->check(CLI::PositiveNumber);
  auto* prob_opt = simulate->add_option("--loss-prob", loss_prob, "Independent loss probability per generator")
                       ->check(CLI::Range(0.0, 1.0));
  auto* pattern_opt = simulate->add_option("--pattern", pattern, "Per-shot erasure counts e1,...,er");
  prob_opt->excludes(pattern_opt);
  simulate->add_option("--seed", seed, "Random seed");
  simulate->add_option("--workers", workers, "Worker threads (output does not depend on it)")
      ->check(CLI::PositiveNumber);
  simulate->add_flag("--machine", machine, "Print key=value output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error=UsageError message=" << e.what() << '\n';
    return kExitUsage;
  }

  try {
    const ReportFormat fmt = format_of(machine);
    if (*analyze) {
      std::cout << analysis_report(load_code(analyze_path), fmt);
    } else if (*distance) {
      std::cout << distance_report(load_code(distance_path), fmt);
    } else if (*decode_cmd) {
      const CoherentDecoder decoder(load_code(code_path));
      const auto received = load_received(received_path);
      std::vector<DecodeOutcome> outcomes;
      for (const auto& x : received) outcomes.push_back(decoder.decode(x));
      std::cout << decode_report(decoder, received, outcomes, fmt);
      for (const auto& o : outcomes) {
        if (!o.success) return kExitDecodeFailed;
      }
    } else if (*simulate) {
      ExperimentConfig config;
      config.trials = trials;
      config.seed = seed;
      config.workers = workers;
      if (*pattern_opt) {
        config.loss = PatternLoss{parse_pattern(pattern)};
      } else {
        config.loss = PerVectorLoss{loss_prob};
      }
      const CoherentDecoder decoder(load_code(sim_path));
      const SimulationStats stats = run_simulation(decoder, config);
      std::cout << simulation_report(decoder, config, stats, fmt);
    }
  } catch (const Error& e) {
    std::cerr << "error=" << e.error_class() << " message=" << e.what() << '\n';
    return kExitDomainError;
  }
  return 0;
}
