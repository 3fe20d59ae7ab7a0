#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

namespace flagcodes {

/// Field element encoding. For q = p^m with m > 1 the integer is the base-p
/// evaluation of the coefficient tuple in the polynomial basis, i.e.
/// c_0 + c_1 p + ... + c_{m-1} p^{m-1} stands for c_0 + c_1 x + ... .
using Element = std::uint32_t;

inline constexpr std::uint32_t kMaxFieldOrder = 1u << 16;

enum class FieldOp { Add, Mul, Neg, Inv };

/// Arithmetic context for F_q. Immutable after construction and shared by
/// every matrix and subspace built over it.
class FieldContext {
 public:
  /// Throws NotAPrimePower for q < 2 or q with two prime factors, and
  /// UnsupportedField for q > 2^16.
  static std::shared_ptr<const FieldContext> make(std::uint32_t q);

  std::uint32_t order() const noexcept { return q_; }
  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t degree() const noexcept { return m_; }

  /// Coefficients c_0..c_{m-1} of the monic modulus x^m + c_{m-1}x^{m-1} + ... + c_0,
  /// leading 1 included as the last entry. Empty for prime fields.
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  Element add(Element a, Element b) const noexcept {
    if (p_ == 2) return a ^ b;
    if (m_ == 1) return a + b >= p_ ? a + b - p_ : a + b;
    if (!add_table_.empty()) return add_table_[a * q_ + b];
    return add_digits(a, b);
  }
  Element neg(Element a) const noexcept { return neg_table_[a]; }
  Element sub(Element a, Element b) const noexcept { return add(a, neg(b)); }
  Element mul(Element a, Element b) const noexcept {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  /// Undefined for a == 0; use `apply` for checked access.
  Element inv(Element a) const noexcept { return exp_[(q_ - 1) - log_[a]]; }
  Element pow(Element a, std::uint64_t e) const noexcept;

  /// Checked entry point: validates operands and throws OutOfRange or
  /// DivisionByZero. `b` must be present exactly for Add and Mul.
  Element apply(FieldOp op, Element a, std::optional<Element> b = std::nullopt) const;

  bool contains(Element a) const noexcept { return a < q_; }

  bool operator==(const FieldContext& other) const noexcept { return q_ == other.q_; }

 private:
  FieldContext() = default;

  Element add_digits(Element a, Element b) const noexcept;

  std::uint32_t q_ = 0;
  std::uint32_t p_ = 0;
  std::uint32_t m_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<Element> add_table_;  // q*q, only for small odd-characteristic extensions
  std::vector<Element> neg_table_;
  std::vector<std::uint32_t> log_;
  std::vector<Element> exp_;  // length 2(q-1) so log sums need no reduction
};

using FieldPtr = std::shared_ptr<const FieldContext>;

/// Convenience wrapper over FieldContext::make.
inline FieldPtr make_field(std::uint32_t q) { return FieldContext::make(q); }

}  // namespace flagcodes
