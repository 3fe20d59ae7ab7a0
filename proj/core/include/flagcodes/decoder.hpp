#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "flagcodes/flag_code.hpp"

namespace flagcodes {

struct ShotCheck {
  std::size_t level;      // 0-based shot index
  std::size_t dim;        // dim X_i
  std::size_t threshold;  // m_i
  bool passed;            // dim X_i > m_i
  std::optional<ContainmentStatus> containment;  // set when the shot was decoded
};

struct DecodeOutcome {
  bool success = false;
  std::optional<std::size_t> flag_index;
  std::optional<Flag> flag;
  std::optional<std::size_t> shot_used;  // 0-based
  std::vector<ShotCheck> checks;         // one per inspected shot, in order

  /// 1-based shot number for reports.
  std::optional<std::size_t> shot_number() const {
    return shot_used ? std::optional<std::size_t>(*shot_used + 1) : std::nullopt;
  }
};

/// Sequential erasure decoder for coherent flag codes. The coherence analysis,
/// m-vector and projected codes are computed once and shared by every call.
///
/// Shots are scanned in order. The first shot with dim X_i > m_i is decoded
/// by containment in C_i; a unique hit identifies the flag, since a coherent
/// code is disjoint. On an ambiguous or empty containment result the scan goes
/// on with later shots, and the outcome is a failure once shots run out. No
/// flag is returned without that dimension certificate.
class CoherentDecoder {
 public:
  /// Throws NotCoherent unless the code is coherent with at least two flags.
  explicit CoherentDecoder(FlagCode code);

  const FlagCode& code() const noexcept { return code_; }
  const CoherenceReport& report() const noexcept { return report_; }
  const std::vector<std::size_t>& m_vector() const noexcept { return m_; }
  const ConstantDimensionCode& projected(std::size_t level) const { return projected_.at(level); }

  /// Throws TypeMismatch unless the received flag has r levels in F_q^n.
  DecodeOutcome decode(const StutteringFlag& received) const;

  /// Decodes from the first k <= r received shots only. Never looks past the
  /// shot it succeeds on.
  DecodeOutcome decode_prefix(std::span<const Subspace> shots) const;

 private:
  FlagCode code_;
  CoherenceReport report_;
  std::vector<std::size_t> m_;
  std::vector<ConstantDimensionCode> projected_;
  std::vector<std::vector<std::size_t>> word_to_flag_;
};

/// One-off convenience wrapper around CoherentDecoder.
DecodeOutcome decode(const FlagCode& code, const StutteringFlag& received);

struct ExhaustiveResult {
  std::vector<std::size_t> flags;  // indices attaining the minimum
  std::size_t distance = 0;
};

/// Minimum extended-distance decoding by scanning the whole code.
ExhaustiveResult exhaustive_decode(const FlagCode& code, const StutteringFlag& received);

}  // namespace flagcodes
