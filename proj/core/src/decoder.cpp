#include "flagcodes/decoder.hpp"

#include <limits>
#include <string>

#include "flagcodes/errors.hpp"

namespace flagcodes {

CoherentDecoder::CoherentDecoder(FlagCode code)
    : code_(std::move(code)), report_(coherence_report(code_)) {
  if (code_.size() < 2) {
    throw Error(ErrorKind::NotCoherent, "decoding needs a code with at least two flags");
  }
  if (!report_.is_coherent) {
    std::string why = !report_.is_disjoint ? "code is not disjoint" : "code is not distance-coherent";
    throw Error(ErrorKind::NotCoherent, why);
  }
  m_ = *report_.m_vector;
  word_to_flag_.resize(code_.levels());
  for (std::size_t l = 0; l < code_.levels(); ++l) {
    projected_.push_back(projected_code(code_, l));
    auto& map = word_to_flag_[l];
    map.resize(projected_.back().size());
    for (std::size_t f = 0; f < code_.size(); ++f) map[*projected_.back().find(code_[f][l])] = f;
  }
}

DecodeOutcome CoherentDecoder::decode(const StutteringFlag& received) const {
  if (received.size() != code_.levels()) {
    throw Error(ErrorKind::TypeMismatch, "received flag has " + std::to_string(received.size()) +
                                             " levels, code has " +
                                             std::to_string(code_.levels()));
  }
  return decode_prefix(received.levels());
}

DecodeOutcome CoherentDecoder::decode_prefix(std::span<const Subspace> shots) const {
  if (shots.size() > code_.levels()) {
    throw Error(ErrorKind::TypeMismatch, "more received shots than code levels");
  }
  for (const Subspace& x : shots) {
    if (x.ambient() != code_.ambient() || !(*x.field() == *code_.field())) {
      throw Error(ErrorKind::TypeMismatch, "received subspaces do not live in the code's space");
    }
  }
  DecodeOutcome out;
  for (std::size_t i = 0; i < shots.size(); ++i) {
    const Subspace& x = shots[i];
    ShotCheck check{i, x.dim(), m_[i], x.dim() > m_[i], std::nullopt};
    if (!check.passed) {
      out.checks.push_back(check);
      continue;
    }
    const ContainmentResult hit = containment_decode(projected_[i], x);
    check.containment = hit.status;
    out.checks.push_back(check);
    if (hit.status == ContainmentStatus::Unique) {
      const std::size_t f = word_to_flag_[i][*hit.index];
      out.success = true;
      out.flag_index = f;
      out.flag = code_[f];
      out.shot_used = i;
      return out;
    }
  }
  return out;
}

DecodeOutcome decode(const FlagCode& code, const StutteringFlag& received) {
  return CoherentDecoder(code).decode(received);
}

ExhaustiveResult exhaustive_decode(const FlagCode& code, const StutteringFlag& received) {
  if (received.size() != code.levels()) {
    throw Error(ErrorKind::TypeMismatch, "received flag has the wrong number of levels");
  }
  ExhaustiveResult out;
  out.distance = std::numeric_limits<std::size_t>::max();
  for (std::size_t f = 0; f < code.size(); ++f) {
    const std::size_t d = flag_distance(code[f], received);
    if (d < out.distance) {
      out.distance = d;
      out.flags.clear();
    }
    if (d == out.distance) out.flags.push_back(f);
  }
  return out;
}

}  // namespace flagcodes
