#include "leonard/matrix.hpp"

#include "leonard/errors.hpp"

#include <utility>

namespace leonard {

Matrix::Matrix(const Field& field, std::size_t order)
    : field_(field), order_(order), data_(order * order, Scalar::zero(field)) {}

Matrix Matrix::identity(const Field& field, std::size_t order) {
  Matrix m(field, order);
  for (std::size_t i = 0; i < order; ++i) m(i, i) = Scalar::one(field);
  return m;
}

Matrix Matrix::diagonal(const Vector& entries) {
  if (entries.empty()) throw MismatchError("empty diagonal");
  Matrix m(entries.front().field(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].field() != m.field_) {
      throw MismatchError("diagonal entries from different fields");
    }
    m(i, i) = entries[i];
  }
  return m;
}

Matrix Matrix::from_rows(const Field& field, const std::vector<Vector>& rows) {
  Matrix m(field, rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) {
      throw MismatchError("matrix is not square");
    }
    for (std::size_t j = 0; j < rows.size(); ++j) {
      if (rows[i][j].field() != field) {
        throw MismatchError("matrix entry from a different field");
      }
      m(i, j) = rows[i][j];
    }
  }
  return m;
}

Vector Matrix::column(std::size_t j) const {
  Vector v;
  v.reserve(order_);
  for (std::size_t i = 0; i < order_; ++i) v.push_back((*this)(i, j));
  return v;
}

Vector Matrix::row(std::size_t i) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * order_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * order_));
}

bool Matrix::is_zero() const {
  for (const auto& x : data_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, order_);
  for (std::size_t i = 0; i < order_; ++i) {
    for (std::size_t j = 0; j < order_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

Scalar Matrix::trace() const {
  Scalar s = Scalar::zero(field_);
  for (std::size_t i = 0; i < order_; ++i) s += (*this)(i, i);
  return s;
}

Matrix Matrix::inverse() const {
  const std::size_t n = order_;
  Matrix work = *this;
  Matrix inv = identity(field_, n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && work(pivot, col).is_zero()) ++pivot;
    if (pivot == n) throw DivisionByZero("matrix is singular");
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(work(pivot, j), work(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    }
    const Scalar scale = work(col, col).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      work(col, j) *= scale;
      inv(col, j) *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || work(r, col).is_zero()) continue;
      const Scalar factor = work(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        work(r, j) -= factor * work(col, j);
        inv(r, j) -= factor * inv(col, j);
      }
    }
  }
  return inv;
}

void Matrix::require_compatible(const Matrix& other, const char* op) const {
  if (order_ != other.order_) {
    throw MismatchError(std::string("order mismatch in ") + op);
  }
  if (field_ != other.field_) {
    throw MismatchError(std::string("field mismatch in ") + op);
  }
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
  require_compatible(rhs, "matrix add");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
  require_compatible(rhs, "matrix sub");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
  if (s.field() != field_) throw MismatchError("field mismatch in scaling");
  for (auto& x : data_) x *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  a.require_compatible(b, "matrix multiply");
  const std::size_t n = a.order_;
  Matrix c(a.field_, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (!b(k, j).is_zero()) c(i, j) += aik * b(k, j);
      }
    }
  }
  return c;
}

Vector operator*(const Matrix& a, const Vector& v) {
  if (v.size() != a.order_) throw MismatchError("vector length mismatch");
  Vector out(a.order_, Scalar::zero(a.field_));
  for (std::size_t i = 0; i < a.order_; ++i) {
    for (std::size_t j = 0; j < a.order_; ++j) out[i] += a(i, j) * v[j];
  }
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.order_ == b.order_ && a.field_ == b.field_ && a.data_ == b.data_;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) { return a * b; }
Matrix mat_inverse(const Matrix& a) { return a.inverse(); }
Scalar mat_trace(const Matrix& a) { return a.trace(); }

bool is_irreducible_tridiagonal(const Matrix& a) {
  const std::size_t n = a.order();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t gap = i > j ? i - j : j - i;
      if (gap > 1 && !a(i, j).is_zero()) return false;
      if (gap == 1 && a(i, j).is_zero()) return false;
    }
  }
  return true;
}

bool is_diagonal(const Matrix& a) {
  for (std::size_t i = 0; i < a.order(); ++i) {
    for (std::size_t j = 0; j < a.order(); ++j) {
      if (i != j && !a(i, j).is_zero()) return false;
    }
  }
  return true;
}

std::size_t rank(std::vector<Vector> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][c].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[r]);
    const Scalar inv = rows[r][c].inverse();
    for (std::size_t k = r + 1; k < rows.size(); ++k) {
      if (rows[k][c].is_zero()) continue;
      const Scalar factor = rows[k][c] * inv;
      for (std::size_t j = c; j < cols; ++j) rows[k][j] -= factor * rows[r][j];
    }
    ++r;
  }
  return r;
}

std::size_t first_nonzero_column(const Matrix& a) {
  for (std::size_t j = 0; j < a.order(); ++j) {
    for (std::size_t i = 0; i < a.order(); ++i) {
      if (!a(i, j).is_zero()) return j;
    }
  }
  return a.order();
}

bool is_zero(const Vector& v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

}  // namespace leonard
