#include "flagcodes/report.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <sstream>

namespace flagcodes {

namespace {

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string csv(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::string percent(std::size_t part, std::size_t whole) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f%%", whole ? 100.0 * static_cast<double>(part) / static_cast<double>(whole) : 0.0);
  return buf;
}

std::string flag_name(std::size_t index) { return "F" + std::to_string(index + 1); }

std::string format_levels(const std::vector<Subspace>& levels) {
  std::string s = "(";
  for (std::size_t i = 0; i < levels.size(); ++i) s += (i ? ", " : "") + format_subspace(levels[i]);
  return s + ")";
}

std::string containment_name(ContainmentStatus s) {
  switch (s) {
    case ContainmentStatus::Unique: return "unique";
    case ContainmentStatus::Ambiguous: return "ambiguous";
    case ContainmentStatus::NotFound: return "not-found";
  }
  return "?";
}

void write_generators(std::ostringstream& out, const Flag& f, const std::string& indent) {
  const Matrix g = nested_generator_matrix(f);
  for (std::size_t r = 0; r < g.rows(); ++r) {
    out << indent;
    for (std::size_t c = 0; c < g.cols(); ++c) out << (c ? " " : "") << g(r, c);
    out << '\n';
  }
}

}  // namespace

std::string format_subspace(const Subspace& s) {
  if (s.is_zero()) return "{0}";
  std::string out = "<";
  for (std::size_t r = 0; r < s.dim(); ++r) {
    out += r ? ",(" : "(";
    auto row = s.basis().row(r);
    for (std::size_t c = 0; c < row.size(); ++c) out += (c ? "," : "") + std::to_string(row[c]);
    out += ")";
  }
  return out + ">";
}

std::string format_dims(const std::vector<std::size_t>& dims) { return "(" + csv(dims) + ")"; }

std::string analysis_report(const FlagCode& code, ReportFormat format) {
  const CoherenceReport coh = coherence_report(code);
  const EquidistanceProfile eq = equidistance_profile(code);
  const SunflowerProfile sun = sunflower_profile(code);
  const OptimumDistanceCheck opt = optimum_distance_check(code);
  std::vector<StutteringFlag> mdi;
  if (code.size() >= 2) mdi = min_distance_intersection_code(code);
  const std::size_t level_sum =
      std::accumulate(coh.projected_distances.begin(), coh.projected_distances.end(), std::size_t{0});

  std::ostringstream out;
  if (format == ReportFormat::Machine) {
    out << "q=" << code.field()->order() << '\n';
    out << "n=" << code.ambient() << '\n';
    out << "type=" << csv(code.type().dims()) << '\n';
    out << "cardinality=" << coh.cardinality << '\n';
    out << "distance=" << coh.distance << '\n';
    out << "projected_sizes=" << csv(coh.projected_sizes) << '\n';
    out << "projected_distances=" << csv(coh.projected_distances) << '\n';
    out << "projected_distance_sum=" << level_sum << '\n';
    out << "disjoint=" << coh.is_disjoint << '\n';
    if (coh.disjoint_witness) {
      const auto& w = *coh.disjoint_witness;
      out << "disjoint_witness=level:" << w.level + 1 << ",flags:" << w.first + 1 << ","
          << w.second + 1 << '\n';
    }
    out << "distance_coherent=" << coh.is_distance_coherent << '\n';
    if (coh.coherence_witness) {
      const auto& w = *coh.coherence_witness;
      out << "distance_coherent_witness=flags:" << w.first + 1 << "," << w.second + 1
          << ",distance:" << w.distance << ",levels:" << csv(w.level_distances) << '\n';
    }
    out << "coherent=" << coh.is_coherent << '\n';
    out << "coherent_by_distance_sum=" << coh.is_coherent_by_distance_sum << '\n';
    if (coh.m_vector) out << "m=" << csv(*coh.m_vector) << '\n';
    out << "min_distance_intersection_count=" << mdi.size() << '\n';
    for (std::size_t k = 0; k < mdi.size(); ++k) {
      out << "min_distance_intersection_" << k + 1 << "_type=" << csv(mdi[k].dims()) << '\n';
    }
    out << "equidistant=" << eq.flag_equidistant << '\n';
    if (eq.off_pair) {
      out << "equidistant_witness=flags:" << eq.min_pair->first + 1 << "," << eq.min_pair->second + 1
          << ":" << eq.min_pair->distance << ";flags:" << eq.off_pair->first + 1 << ","
          << eq.off_pair->second + 1 << ":" << eq.off_pair->distance << '\n';
    }
    out << "projected_equidistant=" << eq.projected_equidistant << '\n';
    if (eq.failing_level) {
      out << "projected_equidistant_witness=level:" << *eq.failing_level + 1 << ",distances:"
          << eq.level_min_pair->distance << "," << eq.level_off_pair->distance << '\n';
    }
    if (eq.c_vector) out << "c=" << csv(*eq.c_vector) << '\n';
    out << "sunflower=" << sun.flag_center.has_value() << '\n';
    if (sun.flag_center) out << "sunflower_center_dims=" << csv(sun.flag_center->dims()) << '\n';
    if (sun.flag_witness) {
      const auto& w = *sun.flag_witness;
      out << "sunflower_witness=level:" << w.level + 1 << ",flags:" << w.first + 1 << ","
          << w.second + 1 << ",reference:" << w.reference_first + 1 << "," << w.reference_second + 1
          << '\n';
    }
    out << "projected_sunflower=" << sun.projected_centers.has_value() << '\n';
    if (sun.projected_centers) {
      std::vector<std::size_t> dims;
      for (const auto& c : *sun.projected_centers) dims.push_back(c.dim());
      out << "projected_sunflower_center_dims=" << csv(dims) << '\n';
    }
    if (sun.failing_level) out << "projected_sunflower_witness=level:" << *sun.failing_level + 1 << '\n';
    out << "optimum_bound=" << opt.bound << '\n';
    out << "optimum_distance=" << opt.attained << '\n';
    return out.str();
  }

  out << "code: q=" << code.field()->order() << " n=" << code.ambient()
      << " type=" << format_dims(code.type().dims()) << " flags=" << code.size() << '\n';
  out << "distance: d_f = " << coh.distance << '\n';
  for (std::size_t l = 0; l < code.levels(); ++l) {
    out << "  C_" << l + 1 << ": " << coh.projected_sizes[l] << " subspaces, d_S = "
        << coh.projected_distances[l] << '\n';
  }
  out << "  sum of projected distances: " << level_sum << '\n';

  out << "disjoint: " << yes_no(coh.is_disjoint);
  if (coh.disjoint_witness) {
    const auto& w = *coh.disjoint_witness;
    out << " (C_" << w.level + 1 << " has " << coh.projected_sizes[w.level] << " of "
        << coh.cardinality << " subspaces)\n";
    out << "  witness: " << flag_name(w.first) << " and " << flag_name(w.second)
        << " share subspace " << w.level + 1 << '\n';
  } else {
    out << '\n';
  }
  out << "distance-coherent: " << yes_no(coh.is_distance_coherent);
  if (coh.coherence_witness) {
    const auto& w = *coh.coherence_witness;
    out << " (" << flag_name(w.first) << "," << flag_name(w.second) << ": d_f = " << w.distance
        << (w.distance == coh.distance ? " attains" : " misses") << " d_f(C) = " << coh.distance
        << ", level distances " << format_dims(w.level_distances) << " vs "
        << format_dims(coh.projected_distances) << ")";
  }
  out << '\n';
  out << "coherent: " << yes_no(coh.is_coherent) << '\n';
  out << "coherent (disjoint and d_f = sum d_S): " << yes_no(coh.is_coherent_by_distance_sum) << '\n';
  if (coh.m_vector) out << "m = " << format_dims(*coh.m_vector) << '\n';

  if (!mdi.empty()) {
    out << "minimum distance intersection code: " << mdi.size() << " member(s)\n";
    for (const auto& x : mdi) {
      out << "  type " << format_dims(x.dims()) << ": " << format_levels(x.levels()) << '\n';
    }
  }

  out << "equidistant: " << yes_no(eq.flag_equidistant);
  if (eq.flag_equidistant) {
    out << " (d=" << eq.distance << ")";
  } else {
    out << " (witness: " << flag_name(eq.min_pair->first) << "," << flag_name(eq.min_pair->second)
        << " at " << eq.min_pair->distance << " vs " << flag_name(eq.off_pair->first) << ","
        << flag_name(eq.off_pair->second) << " at " << eq.off_pair->distance << ")";
  }
  out << '\n';
  out << "projected-equidistant: " << yes_no(eq.projected_equidistant);
  if (eq.failing_level) {
    out << " (level " << *eq.failing_level + 1 << " witness: " << eq.level_min_pair->distance
        << " vs " << eq.level_off_pair->distance << ")";
  }
  out << '\n';
  if (eq.c_vector) out << "c = " << format_dims(*eq.c_vector) << '\n';

  out << "sunflower: " << yes_no(sun.flag_center.has_value());
  if (sun.flag_center) {
    out << " (center " << format_levels(sun.flag_center->levels()) << ")";
  } else if (sun.flag_witness) {
    const auto& w = *sun.flag_witness;
    out << " (level " << w.level + 1 << ": " << flag_name(w.first) << "∩" << flag_name(w.second)
        << " differs from " << flag_name(w.reference_first) << "∩" << flag_name(w.reference_second)
        << ")";
  }
  out << '\n';
  out << "projected-sunflower: " << yes_no(sun.projected_centers.has_value());
  if (sun.projected_centers) {
    out << " (centers " << format_levels(*sun.projected_centers) << ")";
  } else {
    out << " (C_" << *sun.failing_level + 1 << " is not a sunflower)";
  }
  out << '\n';
  out << "optimum distance: " << yes_no(opt.attained) << " (" << opt.distance << "/" << opt.bound
      << ")\n";
  return out.str();
}

std::string distance_report(const FlagCode& code, ReportFormat format) {
  std::ostringstream out;
  const bool machine = format == ReportFormat::Machine;
  const CoherenceReport coh = coherence_report(code);
  if (machine) {
    out << "distance=" << coh.distance << '\n';
    out << "projected_distances=" << csv(coh.projected_distances) << '\n';
  } else {
    out << "d_f(C) = " << coh.distance << '\n';
    for (std::size_t l = 0; l < code.levels(); ++l) {
      out << "d_S(C_" << l + 1 << ") = " << coh.projected_distances[l] << '\n';
    }
  }
  for (std::size_t i = 0; i < code.size(); ++i) {
    for (std::size_t j = i + 1; j < code.size(); ++j) {
      std::vector<std::size_t> levels;
      for (std::size_t l = 0; l < code.levels(); ++l) levels.push_back(subspace_distance(code[i][l], code[j][l]));
      const std::size_t total = std::accumulate(levels.begin(), levels.end(), std::size_t{0});
      if (machine) {
        out << "pair_" << i + 1 << "_" << j + 1 << "=" << total << ";" << csv(levels) << '\n';
      } else {
        out << "d_f(" << flag_name(i) << "," << flag_name(j) << ") = " << total << "  levels "
            << format_dims(levels) << '\n';
      }
    }
  }
  return out.str();
}

std::string decode_report(const CoherentDecoder& decoder, std::span<const StutteringFlag> received,
                          std::span<const DecodeOutcome> outcomes, ReportFormat format) {
  std::ostringstream out;
  const bool machine = format == ReportFormat::Machine;
  if (machine) out << "m=" << csv(decoder.m_vector()) << '\n';
  else out << "m = " << format_dims(decoder.m_vector()) << '\n';
  for (std::size_t k = 0; k < outcomes.size(); ++k) {
    const DecodeOutcome& o = outcomes[k];
    const std::string key = "received_" + std::to_string(k + 1);
    if (machine) {
      out << key << "_dims=" << csv(received[k].dims()) << '\n';
      out << key << "_status=" << (o.success ? "success" : "DecodeFailed") << '\n';
      if (o.success) {
        out << key << "_shot=" << *o.shot_number() << '\n';
        out << key << "_flag=" << *o.flag_index + 1 << '\n';
      }
      for (const auto& c : o.checks) {
        out << key << "_shot_" << c.level + 1 << "=dim:" << c.dim << ",m:" << c.threshold
            << ",passed:" << c.passed;
        if (c.containment) out << ",containment:" << containment_name(*c.containment);
        out << '\n';
      }
      continue;
    }
    out << "received " << k + 1 << " dims " << format_dims(received[k].dims()) << ": ";
    if (o.success) {
      out << "success at shot " << *o.shot_number() << " -> " << flag_name(*o.flag_index) << '\n';
    } else {
      out << "DecodeFailed (" << (o.checks.empty() || std::none_of(o.checks.begin(), o.checks.end(),
                                                                   [](const ShotCheck& c) { return c.passed; })
                                      ? "no shot passed the dimension test"
                                      : "containment did not single out a subspace")
          << ")\n";
    }
    for (const auto& c : o.checks) {
      out << "  shot " << c.level + 1 << ": dim " << c.dim << (c.passed ? " > " : " <= ") << "m "
          << c.threshold;
      if (c.containment) out << ", containment " << containment_name(*c.containment);
      out << '\n';
    }
    if (o.success) {
      out << "  recovered flag generators:\n";
      write_generators(out, *o.flag, "    ");
    }
  }
  return out.str();
}

std::string simulation_report(const CoherentDecoder& decoder, const ExperimentConfig& config,
                              const SimulationStats& s, ReportFormat format) {
  std::ostringstream out;
  std::string loss;
  if (const auto* pv = std::get_if<PerVectorLoss>(&config.loss)) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "per-vector p=%.6g", pv->probability);
    loss = buf;
  } else {
    loss = "pattern " + csv(std::get<PatternLoss>(config.loss).erasures);
  }
  if (format == ReportFormat::Machine) {
    out << "trials=" << s.trials << '\n';
    out << "seed=" << config.seed << '\n';
    out << "loss=" << loss << '\n';
    out << "distance=" << decoder.report().distance << '\n';
    out << "m=" << csv(decoder.m_vector()) << '\n';
    out << "correctable=" << s.correctable << '\n';
    out << "decoded=" << s.decoded << '\n';
    out << "decoded_correctly=" << s.decoded_correctly << '\n';
    out << "oracle_agreement=" << s.oracle_agreement << '\n';
    out << "correctable_decoded_correctly=" << s.correctable_decoded_correctly << '\n';
    out << "correctable_oracle_agreement=" << s.correctable_oracle_agreement << '\n';
    out << "correctable_some_shot_correctable=" << s.correctable_some_shot_correctable << '\n';
    out << "dimension_criterion_violations=" << s.dimension_criterion_violations << '\n';
    out << "sequential_violations=" << s.sequential_violations << '\n';
    out << "shots_used=" << csv(s.shots_used) << '\n';
    out << "erasure_totals=" << csv(s.erasure_totals) << '\n';
    return out.str();
  }
  out << "trials: " << s.trials << " (seed " << config.seed << ")\n";
  out << "loss model: " << loss
      << (std::holds_alternative<PerVectorLoss>(config.loss) ? " (independent per-generator loss)" : "")
      << '\n';
  out << "code: d_f = " << decoder.report().distance << ", m = " << format_dims(decoder.m_vector())
      << '\n';
  out << "correctable e: " << s.correctable << " (" << percent(s.correctable, s.trials) << ")\n";
  out << "decoded: " << s.decoded << " (" << percent(s.decoded, s.trials) << ")\n";
  out << "decoded correctly: " << s.decoded_correctly << " (" << percent(s.decoded_correctly, s.trials)
      << ")\n";
  out << "oracle agreement: " << s.oracle_agreement << " (" << percent(s.oracle_agreement, s.trials)
      << ")\n";
  out << "with correctable e:\n";
  out << "  decode success: " << s.correctable_decoded_correctly << " ("
      << percent(s.correctable_decoded_correctly, s.correctable) << ")\n";
  out << "  oracle agreement: " << s.correctable_oracle_agreement << " ("
      << percent(s.correctable_oracle_agreement, s.correctable) << ")\n";
  out << "  some shot correctable: " << s.correctable_some_shot_correctable << " ("
      << percent(s.correctable_some_shot_correctable, s.correctable) << ")\n";
  out << "dimension criterion violations: " << s.dimension_criterion_violations << '\n';
  out << "sequential violations: " << s.sequential_violations << '\n';
  out << "shots used:";
  for (std::size_t i = 0; i < s.shots_used.size(); ++i) out << " " << i + 1 << ":" << s.shots_used[i];
  out << '\n';
  out << "erasure totals:";
  for (std::size_t e = 0; e < s.erasure_totals.size(); ++e) {
    if (s.erasure_totals[e]) out << " " << e << ":" << s.erasure_totals[e];
  }
  out << '\n';
  return out.str();
}

}  // namespace flagcodes
