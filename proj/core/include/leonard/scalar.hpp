#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <ostream>
#include <string>
#include <string_view>

namespace leonard {

/// The base field: either the rationals or GF(p) for an odd prime p.
class Field {
 public:
  enum class Kind { Rational, Prime };

  static Field rational();
  /// Throws ConstraintError unless `p` is an odd prime.
  static Field prime(const mpz_class& p);
  static Field prime(unsigned long p) { return prime(mpz_class(p)); }

  Field() = default;  // rational

  Kind kind() const noexcept {
    return modulus_ ? Kind::Prime : Kind::Rational;
  }
  bool is_rational() const noexcept { return !modulus_; }
  bool is_prime() const noexcept { return static_cast<bool>(modulus_); }
  /// Only meaningful for prime fields.
  const mpz_class& modulus() const;

  /// True when the characteristic is zero or exceeds `bound`.
  bool characteristic_exceeds(unsigned long bound) const;

  /// "Q" or "GF(p)".
  std::string name() const;

  friend bool operator==(const Field& a, const Field& b);
  friend bool operator!=(const Field& a, const Field& b) { return !(a == b); }

 private:
  explicit Field(std::shared_ptr<const mpz_class> modulus)
      : modulus_(std::move(modulus)) {}

  std::shared_ptr<const mpz_class> modulus_;
};

/// An exact element of a Field. Rationals are kept in lowest terms with a
/// positive denominator; prime-field values are residues in [0, p).
class Scalar {
 public:
  Scalar() = default;  // rational zero
  Scalar(const Field& field, long value);
  Scalar(const Field& field, const mpz_class& value);
  /// For prime fields the denominator must be invertible mod p.
  Scalar(const Field& field, const mpq_class& value);

  static Scalar zero(const Field& field) { return Scalar(field, 0L); }
  static Scalar one(const Field& field) { return Scalar(field, 1L); }

  /// Parses `[-]?digits(/digits)?` and embeds the value in `field`.
  static Scalar parse(std::string_view text, const Field& field);

  const Field& field() const noexcept { return field_; }
  /// Canonical representative (a residue with denominator 1 for GF(p)).
  const mpq_class& value() const noexcept { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }

  Scalar inverse() const;
  Scalar pow(long exponent) const;

  /// "num/den" (den omitted when 1) or the canonical residue.
  std::string to_string() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  /// Exact equality; scalars from different fields never compare equal.
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.field_ == b.field_ && a.value_ == b.value_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) {
    return os << s.to_string();
  }

 private:
  void reduce();
  void require_same_field(const Scalar& other, const char* op) const;

  Field field_;
  mpq_class value_;
};

/// Binary field operation selector, mirroring the textual CLI/test surface.
enum class ArithOp { Add, Sub, Mul, Div };

Scalar field_arith(const Scalar& a, const Scalar& b, ArithOp op);

}  // namespace leonard
