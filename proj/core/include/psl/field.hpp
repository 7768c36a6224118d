#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "psl/error.hpp"

namespace psl {

class Scalar;

/// Field descriptor: the rationals, or the prime field F_p.
class Field {
 public:
  Field() = default;

  static Field rationals() { return Field{}; }
  static Field prime(std::uint32_t p);
  /// Parses "Q" or "F<p>" (e.g. "F5").
  static Field parse(std::string_view text);

  bool is_rational() const noexcept { return p_ == 0; }
  bool is_finite() const noexcept { return p_ != 0; }
  /// 0 for the rationals.
  std::uint32_t characteristic() const noexcept { return p_; }
  std::string name() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long v) const;
  Scalar from_fraction(long long num, long long den) const;
  /// Accepts "a", "-a", "a/b" for Q and integer text for F_p (reduced mod p).
  Scalar parse_scalar(std::string_view text) const;
  /// The i-th element of F_p in the canonical order 0, 1, ..., p-1.
  Scalar element(std::uint32_t i) const;

  friend bool operator==(Field a, Field b) noexcept { return a.p_ == b.p_; }
  friend bool operator!=(Field a, Field b) noexcept { return a.p_ != b.p_; }

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

bool is_prime(std::uint64_t n);

/// An exact field element. Rationals are kept canonical (positive reduced
/// denominator); residues lie in [0, p). Arithmetic between elements of
/// different fields throws FieldMismatch.
class Scalar {
 public:
  Scalar() : value_(mpq_class(0)) {}

  static Scalar rational(mpq_class q);
  static Scalar residue(std::uint32_t value, Field field);

  Field field() const noexcept { return field_; }
  bool is_zero() const;
  bool is_one() const;

  /// Residue value (F_p only).
  std::uint32_t residue_value() const;
  /// Rational value (Q only).
  const mpq_class& rational_value() const;

  Scalar operator-() const;
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// "num/den" (or "num" when den = 1) for Q, decimal residue for F_p.
  std::string to_string() const;

  /// Total order used only for canonical sorting (not a field order).
  friend bool canonical_less(const Scalar& a, const Scalar& b);

 private:
  void require_same_field(const Scalar& o) const;

  Field field_;
  std::variant<mpq_class, std::uint32_t> value_;
};

}  // namespace psl
