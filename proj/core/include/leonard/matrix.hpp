#pragma once

#include "leonard/scalar.hpp"

#include <cstddef>
#include <vector>

namespace leonard {

using Vector = std::vector<Scalar>;

/// Dense square matrix over a Field, rows and columns indexed 0..n-1.
class Matrix {
 public:
  Matrix() = default;
  Matrix(const Field& field, std::size_t order);  // zero matrix

  static Matrix identity(const Field& field, std::size_t order);
  static Matrix diagonal(const Vector& entries);
  /// Builds from row-major rows; all rows must have the same length as the
  /// number of rows and share one field.
  static Matrix from_rows(const Field& field,
                          const std::vector<Vector>& rows);

  std::size_t order() const noexcept { return order_; }
  const Field& field() const noexcept { return field_; }

  const Scalar& operator()(std::size_t i, std::size_t j) const {
    return data_[i * order_ + j];
  }
  Scalar& operator()(std::size_t i, std::size_t j) {
    return data_[i * order_ + j];
  }

  Vector column(std::size_t j) const;
  Vector row(std::size_t i) const;

  bool is_zero() const;
  Matrix transpose() const;
  Scalar trace() const;
  /// Exact Gaussian elimination with first-nonzero pivoting.
  /// Throws DivisionByZero when singular.
  Matrix inverse() const;

  Matrix& operator+=(const Matrix& rhs);
  Matrix& operator-=(const Matrix& rhs);
  Matrix& operator*=(const Scalar& s);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
  friend Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, const Vector& v);

  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  void require_compatible(const Matrix& other, const char* op) const;

  Field field_;
  std::size_t order_ = 0;
  std::vector<Scalar> data_;
};

Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix mat_inverse(const Matrix& a);
Scalar mat_trace(const Matrix& a);

/// Nonzero entries only on the three central diagonals, and every sub- and
/// superdiagonal entry nonzero.
bool is_irreducible_tridiagonal(const Matrix& a);
bool is_diagonal(const Matrix& a);

/// Rank of a rectangular list of row vectors over one field.
std::size_t rank(std::vector<Vector> rows);

/// First column index holding a nonzero entry, or order() when `a` is zero.
std::size_t first_nonzero_column(const Matrix& a);

bool is_zero(const Vector& v);

}  // namespace leonard
