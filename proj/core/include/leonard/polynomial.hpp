#pragma once

#include "leonard/matrix.hpp"
#include "leonard/scalar.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace leonard {

/// Univariate polynomial in lambda, coefficients lowest degree first.
/// The zero polynomial has an empty coefficient list and no degree.
class Polynomial {
 public:
  Polynomial() = default;  // zero over Q
  explicit Polynomial(const Field& field) : field_(field) {}
  Polynomial(const Field& field, std::vector<Scalar> coefficients);

  static Polynomial constant(const Scalar& c);
  /// The monomial lambda.
  static Polynomial lambda(const Field& field);
  /// lambda - root
  static Polynomial linear(const Scalar& root);

  const Field& field() const noexcept { return field_; }
  const std::vector<Scalar>& coefficients() const noexcept { return coeffs_; }

  std::optional<std::size_t> degree() const;
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_monic() const;
  /// Coefficient of lambda^k (zero beyond the degree).
  Scalar coefficient(std::size_t k) const;
  Scalar leading() const;

  /// Horner evaluation.
  Scalar operator()(const Scalar& x) const;
  /// sum_k coeff_k * a^k
  Matrix operator()(const Matrix& a) const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Scalar& s);
  Polynomial& operator/=(const Scalar& s);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) {
    return a += b;
  }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) {
    return a -= b;
  }
  friend Polynomial operator*(Polynomial a, const Scalar& s) { return a *= s; }
  friend Polynomial operator*(const Scalar& s, Polynomial a) { return a *= s; }
  friend Polynomial operator/(Polynomial a, const Scalar& s) { return a /= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) {
    return !(a == b);
  }

  std::string to_string() const;

 private:
  void trim();
  void require_field(const Field& other) const;

  Field field_;
  std::vector<Scalar> coeffs_;
};

Scalar poly_eval(const Polynomial& p, const Scalar& x);
Matrix poly_apply_matrix(const Polynomial& p, const Matrix& a);

/// The four product polynomials built from an eigenvalue sequence.
enum class ProductKind {
  Tau,  ///< prod_{h<i} (lambda - theta_h)
  Eta,  ///< prod_{h<i} (lambda - theta_{d-h})
};

/// tau_i or eta_i for the sequence `thetas` (length d+1), 0 <= i <= d+1.
/// Pass the dual sequence to obtain the starred variants.
Polynomial tau_eta_polynomial(const std::vector<Scalar>& thetas,
                              std::size_t i, ProductKind kind);

inline Polynomial tau(const std::vector<Scalar>& thetas, std::size_t i) {
  return tau_eta_polynomial(thetas, i, ProductKind::Tau);
}
inline Polynomial eta(const std::vector<Scalar>& thetas, std::size_t i) {
  return tau_eta_polynomial(thetas, i, ProductKind::Eta);
}

/// tau_i(x) evaluated directly as a product, without building coefficients.
Scalar tau_value(const std::vector<Scalar>& thetas, std::size_t i,
                 const Scalar& x);
Scalar eta_value(const std::vector<Scalar>& thetas, std::size_t i,
                 const Scalar& x);

}  // namespace leonard
