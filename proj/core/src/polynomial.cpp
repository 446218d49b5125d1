#include "leonard/polynomial.hpp"

#include "leonard/errors.hpp"

namespace leonard {

Polynomial::Polynomial(const Field& field, std::vector<Scalar> coefficients)
    : field_(field), coeffs_(std::move(coefficients)) {
  for (const auto& c : coeffs_) require_field(c.field());
  trim();
}

Polynomial Polynomial::constant(const Scalar& c) {
  return Polynomial(c.field(), {c});
}

Polynomial Polynomial::lambda(const Field& field) {
  return Polynomial(field, {Scalar::zero(field), Scalar::one(field)});
}

Polynomial Polynomial::linear(const Scalar& root) {
  return Polynomial(root.field(), {-root, Scalar::one(root.field())});
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

void Polynomial::require_field(const Field& other) const {
  if (other != field_) {
    throw MismatchError("polynomial field mismatch: " + field_.name() +
                        " vs " + other.name());
  }
}

std::optional<std::size_t> Polynomial::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

bool Polynomial::is_monic() const {
  return !coeffs_.empty() && coeffs_.back().is_one();
}

Scalar Polynomial::coefficient(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Scalar::zero(field_);
}

Scalar Polynomial::leading() const {
  return coeffs_.empty() ? Scalar::zero(field_) : coeffs_.back();
}

Scalar Polynomial::operator()(const Scalar& x) const {
  require_field(x.field());
  Scalar acc = Scalar::zero(field_);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Matrix Polynomial::operator()(const Matrix& a) const {
  require_field(a.field());
  Matrix acc(field_, a.order());
  const Matrix id = Matrix::identity(field_, a.order());
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * a;
    if (!it->is_zero()) acc += id * *it;
  }
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  require_field(rhs.field_);
  if (coeffs_.size() < rhs.coeffs_.size()) {
    coeffs_.resize(rhs.coeffs_.size(), Scalar::zero(field_));
  }
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  require_field(rhs.field_);
  if (coeffs_.size() < rhs.coeffs_.size()) {
    coeffs_.resize(rhs.coeffs_.size(), Scalar::zero(field_));
  }
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Scalar& s) {
  require_field(s.field());
  for (auto& c : coeffs_) c *= s;
  trim();
  return *this;
}

Polynomial& Polynomial::operator/=(const Scalar& s) {
  return *this *= s.inverse();
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.require_field(b.field_);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.field_);
  std::vector<Scalar> out(a.coeffs_.size() + b.coeffs_.size() - 1,
                          Scalar::zero(a.field_));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return Polynomial(a.field_, std::move(out));
}

std::string Polynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string s;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    if (coeffs_[k].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += "(" + coeffs_[k].to_string() + ")";
    if (k == 1) s += "*L";
    if (k > 1) s += "*L^" + std::to_string(k);
  }
  return s;
}

Scalar poly_eval(const Polynomial& p, const Scalar& x) { return p(x); }

Matrix poly_apply_matrix(const Polynomial& p, const Matrix& a) { return p(a); }

Polynomial tau_eta_polynomial(const std::vector<Scalar>& thetas,
                              std::size_t i, ProductKind kind) {
  if (thetas.empty()) throw ConstraintError("index-range", "empty sequence");
  if (i > thetas.size()) {
    throw ConstraintError("index-range",
                          "product index " + std::to_string(i) +
                              " exceeds d+1 = " + std::to_string(thetas.size()));
  }
  const Field& field = thetas.front().field();
  const std::size_t d = thetas.size() - 1;
  Polynomial p = Polynomial::constant(Scalar::one(field));
  for (std::size_t h = 0; h < i; ++h) {
    const Scalar& root = kind == ProductKind::Tau ? thetas[h] : thetas[d - h];
    p = p * Polynomial::linear(root);
  }
  return p;
}

Scalar tau_value(const std::vector<Scalar>& thetas, std::size_t i,
                 const Scalar& x) {
  Scalar v = Scalar::one(x.field());
  for (std::size_t h = 0; h < i; ++h) v *= x - thetas.at(h);
  return v;
}

Scalar eta_value(const std::vector<Scalar>& thetas, std::size_t i,
                 const Scalar& x) {
  const std::size_t d = thetas.size() - 1;
  Scalar v = Scalar::one(x.field());
  for (std::size_t h = 0; h < i; ++h) v *= x - thetas.at(d - h);
  return v;
}

}  // namespace leonard
