#include "flagcodes/field.hpp"

#include <string>

#include "flagcodes/errors.hpp"

namespace flagcodes {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotAPrimePower: return "NotAPrimePower";
    case ErrorKind::UnsupportedField: return "UnsupportedField";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::AmbientMismatch: return "AmbientMismatch";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::InvalidDimension: return "InvalidDimension";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NotNested: return "NotNested";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::TypeMismatch: return "TypeMismatch";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::TooFewFlags: return "TooFewFlags";
    case ErrorKind::Unsatisfiable: return "Unsatisfiable";
    case ErrorKind::InfeasiblePattern: return "InfeasiblePattern";
    case ErrorKind::NotASubflag: return "NotASubflag";
    case ErrorKind::NotCoherent: return "NotCoherent";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

namespace {

using Poly = std::vector<std::uint32_t>;  // coefficients, lowest degree first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo the monic polynomial b over F_p.
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() >= b.size()) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      a[shift + i] = (a[shift + i] + (p - lead) * b[i]) % p;
    }
    trim(a);
  }
  return a;
}

Poly digits_of(std::uint32_t value, std::uint32_t p, std::uint32_t m) {
  Poly d(m);
  for (std::uint32_t i = 0; i < m; ++i) {
    d[i] = value % p;
    value /= p;
  }
  return d;
}

// Monic polynomial of degree `deg` whose lower coefficients are the base-p digits of `code`.
Poly monic_from_code(std::uint32_t code, std::uint32_t p, std::uint32_t deg) {
  Poly f = digits_of(code, p, deg);
  f.push_back(1);
  return f;
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
  const std::uint32_t m = static_cast<std::uint32_t>(f.size() - 1);
  for (std::uint32_t d = 1; 2 * d <= m; ++d) {
    std::uint32_t count = 1;
    for (std::uint32_t i = 0; i < d; ++i) count *= p;
    for (std::uint32_t code = 0; code < count; ++code) {
      if (poly_mod(f, monic_from_code(code, p, d), p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

FieldPtr FieldContext::make(std::uint32_t q) {
  if (q < 2) throw Error(ErrorKind::NotAPrimePower, "field order must be at least 2");
  if (q > kMaxFieldOrder) {
    throw Error(ErrorKind::UnsupportedField,
                "field order " + std::to_string(q) + " exceeds supported maximum 65536");
  }
  std::uint32_t p = 2;
  while (q % p != 0) ++p;
  std::uint32_t m = 0;
  std::uint32_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++m;
  }
  if (rest != 1) {
    throw Error(ErrorKind::NotAPrimePower, std::to_string(q) + " is not a prime power");
  }

  std::shared_ptr<FieldContext> ctx(new FieldContext());
  ctx->q_ = q;
  ctx->p_ = p;
  ctx->m_ = m;

  if (m > 1) {
    for (std::uint32_t code = 0; code < q; ++code) {
      Poly f = monic_from_code(code, p, m);
      if (is_irreducible(f, p)) {
        ctx->modulus_ = std::move(f);
        break;
      }
    }
  }

  ctx->neg_table_.resize(q);
  for (Element a = 0; a < q; ++a) {
    Poly d = digits_of(a, p, m);
    Element r = 0;
    for (std::uint32_t i = m; i-- > 0;) r = r * p + (p - d[i]) % p;
    ctx->neg_table_[a] = r;
  }
  if (p != 2 && m > 1 && q <= 256) {
    ctx->add_table_.resize(std::size_t{q} * q);
    for (Element a = 0; a < q; ++a) {
      for (Element b = 0; b < q; ++b) ctx->add_table_[a * q + b] = ctx->add_digits(a, b);
    }
  }

  // Reference multiplication used only to build log/exp tables.
  const auto slow_mul = [&](Element a, Element b) -> Element {
    if (m == 1) return static_cast<Element>((std::uint64_t{a} * b) % p);
    const Poly da = digits_of(a, p, m);
    const Poly db = digits_of(b, p, m);
    Poly prod(2 * m - 1, 0);
    for (std::uint32_t i = 0; i < m; ++i) {
      for (std::uint32_t j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
    }
    const Poly r = poly_mod(prod, ctx->modulus_, p);
    Element out = 0;
    for (std::size_t i = r.size(); i-- > 0;) out = out * p + r[i];
    return out;
  };

  const std::uint32_t group = q - 1;
  ctx->log_.assign(q, 0);
  ctx->exp_.assign(2 * std::size_t{group}, 0);
  for (Element g = 1; g < q; ++g) {
    Element x = 1;
    std::uint32_t order = 0;
    do {
      ctx->exp_[order] = x;
      x = slow_mul(x, g);
      ++order;
    } while (x != 1 && order < group);
    if (x == 1 && order == group) break;
  }
  for (std::uint32_t k = 0; k < group; ++k) {
    ctx->exp_[group + k] = ctx->exp_[k];
    ctx->log_[ctx->exp_[k]] = k;
  }
  return ctx;
}

Element FieldContext::add_digits(Element a, Element b) const noexcept {
  Element out = 0;
  Element scale = 1;
  for (std::uint32_t i = 0; i < m_; ++i) {
    out += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return out;
}

Element FieldContext::pow(Element a, std::uint64_t e) const noexcept {
  if (e == 0) return 1;
  if (a == 0) return 0;
  return exp_[(log_[a] * (e % (q_ - 1))) % (q_ - 1)];
}

Element FieldContext::apply(FieldOp op, Element a, std::optional<Element> b) const {
  const bool binary = op == FieldOp::Add || op == FieldOp::Mul;
  if (binary != b.has_value()) {
    throw Error(ErrorKind::InvalidArgument,
                binary ? "binary field operation needs two operands"
                       : "unary field operation takes one operand");
  }
  if (!contains(a) || (b && !contains(*b))) {
    throw Error(ErrorKind::OutOfRange,
                "element encoding out of range for F_" + std::to_string(q_));
  }
  switch (op) {
    case FieldOp::Add: return add(a, *b);
    case FieldOp::Mul: return mul(a, *b);
    case FieldOp::Neg: return neg(a);
    case FieldOp::Inv:
      if (a == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
      return inv(a);
  }
  return 0;
}

}  // namespace flagcodes
