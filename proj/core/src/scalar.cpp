#include "leonard/scalar.hpp"

#include "leonard/errors.hpp"

#include <cctype>

namespace leonard {

Field Field::rational() { return Field(); }

Field Field::prime(const mpz_class& p) {
  if (p < 3 || mpz_even_p(p.get_mpz_t()) ||
      mpz_probab_prime_p(p.get_mpz_t(), 40) == 0) {
    throw ConstraintError("odd-prime-modulus",
                          "field modulus " + p.get_str() +
                              " is not an odd prime");
  }
  return Field(std::make_shared<const mpz_class>(p));
}

const mpz_class& Field::modulus() const {
  if (!modulus_) throw MismatchError("the rational field has no modulus");
  return *modulus_;
}

bool Field::characteristic_exceeds(unsigned long bound) const {
  return !modulus_ || *modulus_ > bound;
}

std::string Field::name() const {
  return modulus_ ? "GF(" + modulus_->get_str() + ")" : "Q";
}

bool operator==(const Field& a, const Field& b) {
  if (a.modulus_ == b.modulus_) return true;
  if (!a.modulus_ || !b.modulus_) return false;
  return *a.modulus_ == *b.modulus_;
}

Scalar::Scalar(const Field& field, long value) : field_(field), value_(value) {
  reduce();
}

Scalar::Scalar(const Field& field, const mpz_class& value)
    : field_(field), value_(value) {
  reduce();
}

Scalar::Scalar(const Field& field, const mpq_class& value)
    : field_(field), value_(value) {
  value_.canonicalize();
  reduce();
}

// Brings value_ into canonical form for the field.
void Scalar::reduce() {
  if (field_.is_rational()) return;
  const mpz_class& p = field_.modulus();
  mpz_class num = value_.get_num();
  mpz_class den = value_.get_den();
  if (den != 1) {
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0) {
      throw DivisionByZero("denominator " + den.get_str() +
                           " is not invertible in " + field_.name());
    }
    num *= inv;
  }
  mpz_class r;
  mpz_mod(r.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t());
  value_ = mpq_class(r);
}

Scalar Scalar::parse(std::string_view text, const Field& field) {
  auto bad = [&] {
    return ParseError("malformed scalar '" + std::string(text) + "'");
  };
  std::size_t pos = 0;
  const bool negative = !text.empty() && text[0] == '-';
  if (negative) ++pos;
  auto digits = [&](std::size_t from) {
    std::size_t end = from;
    while (end < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[end]))) {
      ++end;
    }
    return end;
  };
  const std::size_t num_end = digits(pos);
  if (num_end == pos) throw bad();
  mpz_class num(std::string(text.substr(pos, num_end - pos)), 10);
  mpz_class den = 1;
  if (num_end != text.size()) {
    if (text[num_end] != '/') throw bad();
    const std::size_t den_end = digits(num_end + 1);
    if (den_end == num_end + 1 || den_end != text.size()) throw bad();
    den = mpz_class(std::string(text.substr(num_end + 1)), 10);
    if (den == 0) throw DivisionByZero("zero denominator in '" +
                                       std::string(text) + "'");
  }
  if (negative) num = -num;
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(field, q);
}

void Scalar::require_same_field(const Scalar& other, const char* op) const {
  if (field_ != other.field_) {
    throw MismatchError(std::string("field mismatch in ") + op + ": " +
                        field_.name() + " vs " + other.field_.name());
  }
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.value_ = -r.value_;
  r.reduce();
  return r;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  require_same_field(rhs, "add");
  value_ += rhs.value_;
  reduce();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  require_same_field(rhs, "sub");
  value_ -= rhs.value_;
  reduce();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  require_same_field(rhs, "mul");
  value_ *= rhs.value_;
  reduce();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  require_same_field(rhs, "div");
  if (rhs.is_zero()) throw DivisionByZero("division by zero");
  if (field_.is_rational()) {
    value_ /= rhs.value_;
  } else {
    *this *= rhs.inverse();
  }
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero("zero has no inverse");
  if (field_.is_rational()) {
    Scalar r = *this;
    r.value_ = 1 / value_;
    return r;
  }
  mpz_class inv;
  mpz_class v = value_.get_num();
  mpz_invert(inv.get_mpz_t(), v.get_mpz_t(), field_.modulus().get_mpz_t());
  return Scalar(field_, inv);
}

Scalar Scalar::pow(long exponent) const {
  if (exponent < 0) {
    if (is_zero()) throw DivisionByZero("zero raised to a negative power");
    return inverse().pow(-exponent);
  }
  Scalar result = one(field_);
  Scalar base = *this;
  unsigned long e = static_cast<unsigned long>(exponent);
  while (e != 0) {
    if (e & 1UL) result *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return result;
}

std::string Scalar::to_string() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Scalar field_arith(const Scalar& a, const Scalar& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div: return a / b;
  }
  throw Error("unknown arithmetic operation");
}

}  // namespace leonard
