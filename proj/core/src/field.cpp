#include "psl/field.hpp"

#include <charconv>
#include <sstream>

namespace psl {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::AmbientMismatch: return "AmbientMismatch";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::InvalidField: return "InvalidField";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::MissingUnit: return "MissingUnit";
    case ErrorKind::NotAnIdeal: return "NotAnIdeal";
    case ErrorKind::NotHStable: return "NotHStable";
    case ErrorKind::InvalidGroupTable: return "InvalidGroupTable";
    case ErrorKind::BadCharacteristic: return "BadCharacteristic";
    case ErrorKind::BadSubgroup: return "BadSubgroup";
    case ErrorKind::CharDividesOrder: return "CharDividesOrder";
    case ErrorKind::NotIdempotent: return "NotIdempotent";
    case ErrorKind::NotRightIdealUnit: return "NotRightIdealUnit";
    case ErrorKind::UnsupportedCharacteristic: return "UnsupportedCharacteristic";
    case ErrorKind::FieldNotFinite: return "FieldNotFinite";
    case ErrorKind::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorKind::ZeroModule: return "ZeroModule";
    case ErrorKind::NotAModule: return "NotAModule";
    case ErrorKind::AxiomViolation: return "AxiomViolation";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnresolvedReference: return "UnresolvedReference";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(std::uint32_t p) {
  if (!is_prime(p) || p >= (1u << 31))
    throw Error(ErrorKind::InvalidField, "modulus " + std::to_string(p) + " is not a supported prime");
  return Field{p};
}

Field Field::parse(std::string_view text) {
  if (text == "Q") return rationals();
  if (text.size() >= 2 && (text[0] == 'F' || text[0] == 'f')) {
    std::uint32_t p = 0;
    auto [ptr, ec] = std::from_chars(text.data() + 1, text.data() + text.size(), p);
    if (ec == std::errc() && ptr == text.data() + text.size()) return prime(p);
  }
  throw Error(ErrorKind::ParseError, "unknown field '" + std::string(text) + "'");
}

std::string Field::name() const { return is_rational() ? "Q" : "F" + std::to_string(p_); }

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long long v) const {
  if (is_rational()) return Scalar::rational(mpq_class(static_cast<long>(v)));
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return Scalar::residue(static_cast<std::uint32_t>(r), *this);
}

Scalar Field::from_fraction(long long num, long long den) const {
  if (den == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator");
  return from_int(num) / from_int(den);
}

Scalar Field::element(std::uint32_t i) const {
  if (!is_finite()) throw Error(ErrorKind::FieldNotFinite, "element enumeration over Q");
  return Scalar::residue(i % p_, *this);
}

Scalar Field::parse_scalar(std::string_view text) const {
  auto parse_int = [&](std::string_view t) -> mpz_class {
    mpz_class z;
    std::string s(t);
    if (s.empty() || z.set_str(s[0] == '+' ? s.substr(1) : s, 10) != 0)
      throw Error(ErrorKind::ParseError, "bad scalar '" + std::string(text) + "'");
    return z;
  };
  auto slash = text.find('/');
  mpz_class num = parse_int(text.substr(0, slash));
  mpz_class den = slash == std::string_view::npos ? mpz_class(1) : parse_int(text.substr(slash + 1));
  if (den == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
  if (is_rational()) {
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar::rational(q);
  }
  auto reduce = [&](const mpz_class& z) {
    mpz_class r = z % p_;
    if (r < 0) r += p_;
    return Scalar::residue(static_cast<std::uint32_t>(r.get_ui()), *this);
  };
  Scalar d = reduce(den);
  if (d.is_zero()) throw Error(ErrorKind::ParseError, "denominator divisible by p in '" + std::string(text) + "'");
  return reduce(num) / d;
}

Scalar Scalar::rational(mpq_class q) {
  Scalar s;
  s.field_ = Field::rationals();
  s.value_ = std::move(q);
  return s;
}

Scalar Scalar::residue(std::uint32_t value, Field field) {
  Scalar s;
  s.field_ = field;
  s.value_ = value % field.characteristic();
  return s;
}

bool Scalar::is_zero() const {
  if (field_.is_finite()) return std::get<std::uint32_t>(value_) == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const {
  if (field_.is_finite()) return std::get<std::uint32_t>(value_) == 1;
  return std::get<mpq_class>(value_) == 1;
}

std::uint32_t Scalar::residue_value() const {
  if (!field_.is_finite()) throw Error(ErrorKind::FieldMismatch, "residue of a rational");
  return std::get<std::uint32_t>(value_);
}

const mpq_class& Scalar::rational_value() const {
  if (field_.is_finite()) throw Error(ErrorKind::FieldMismatch, "rational value of a residue");
  return std::get<mpq_class>(value_);
}

void Scalar::require_same_field(const Scalar& o) const {
  if (field_ != o.field_)
    throw Error(ErrorKind::FieldMismatch, "combining " + field_.name() + " with " + o.field_.name());
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (field_.is_finite()) {
    auto v = std::get<std::uint32_t>(value_);
    r.value_ = v == 0 ? 0u : field_.characteristic() - v;
  } else {
    r.value_ = mpq_class(-std::get<mpq_class>(value_));
  }
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorKind::InvalidArgument, "inverse of zero");
  Scalar r = *this;
  if (field_.is_finite()) {
    // Extended Euclid on (v, p).
    std::int64_t a = std::get<std::uint32_t>(value_), m = field_.characteristic();
    std::int64_t x0 = 1, x1 = 0;
    std::int64_t b = m;
    while (b != 0) {
      std::int64_t q = a / b;
      std::int64_t t = a - q * b;
      a = b;
      b = t;
      t = x0 - q * x1;
      x0 = x1;
      x1 = t;
    }
    x0 %= m;
    if (x0 < 0) x0 += m;
    r.value_ = static_cast<std::uint32_t>(x0);
  } else {
    r.value_ = mpq_class(1 / std::get<mpq_class>(value_));
  }
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  require_same_field(o);
  if (field_.is_finite()) {
    std::uint64_t s = std::uint64_t(std::get<std::uint32_t>(value_)) + std::get<std::uint32_t>(o.value_);
    value_ = static_cast<std::uint32_t>(s % field_.characteristic());
  } else {
    std::get<mpq_class>(value_) += std::get<mpq_class>(o.value_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  require_same_field(o);
  if (field_.is_finite()) {
    std::uint64_t p = field_.characteristic();
    std::uint64_t s = std::uint64_t(std::get<std::uint32_t>(value_)) + p - std::get<std::uint32_t>(o.value_);
    value_ = static_cast<std::uint32_t>(s % p);
  } else {
    std::get<mpq_class>(value_) -= std::get<mpq_class>(o.value_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  require_same_field(o);
  if (field_.is_finite()) {
    std::uint64_t s = std::uint64_t(std::get<std::uint32_t>(value_)) * std::get<std::uint32_t>(o.value_);
    value_ = static_cast<std::uint32_t>(s % field_.characteristic());
  } else {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(o.value_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  require_same_field(o);
  return *this *= o.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.field_ != b.field_) return false;
  return a.value_ == b.value_;
}

bool canonical_less(const Scalar& a, const Scalar& b) {
  a.require_same_field(b);
  if (a.field_.is_finite()) return std::get<std::uint32_t>(a.value_) < std::get<std::uint32_t>(b.value_);
  return std::get<mpq_class>(a.value_) < std::get<mpq_class>(b.value_);
}

std::string Scalar::to_string() const {
  if (field_.is_finite()) return std::to_string(std::get<std::uint32_t>(value_));
  const auto& q = std::get<mpq_class>(value_);
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace psl
