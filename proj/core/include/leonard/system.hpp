#pragma once

#include "leonard/d4.hpp"
#include "leonard/matrix.hpp"
#include "leonard/parameter_array.hpp"
#include "leonard/polynomial.hpp"
#include "leonard/report.hpp"

#include <cstddef>
#include <vector>

namespace leonard {

/// E_i = prod_{j != i} (A - theta_j I) / (theta_i - theta_j).
/// Throws DivisionByZero when the thetas repeat.
std::vector<Matrix> primitive_idempotents(const Matrix& a,
                                          const Sequence& thetas);

/// A validated Leonard system (A; A*; {E_i}; {E*_i}) together with its
/// eigenvalue and dual eigenvalue sequences. Immutable once assembled; the
/// idempotents are computed at assembly and cached.
class LeonardSystem {
 public:
  /// Builds every E_i, E*_i and checks the defining conditions. Throws
  /// ValidationError naming the first failed condition and its indices.
  static LeonardSystem assemble(Matrix a, Matrix a_star, Sequence theta,
                                Sequence theta_star);

  std::size_t d() const noexcept { return theta_.size() - 1; }
  const Field& field() const noexcept { return a_.field(); }
  const Matrix& A() const noexcept { return a_; }
  const Matrix& Astar() const noexcept { return a_star_; }
  const Sequence& theta() const noexcept { return theta_; }
  const Sequence& theta_star() const noexcept { return theta_star_; }
  const std::vector<Matrix>& E() const noexcept { return e_; }
  const std::vector<Matrix>& Estar() const noexcept { return e_star_; }

  /// The dual system (A*; A; {E*_i}; {E_i}), reusing cached idempotents.
  LeonardSystem dual() const;

 private:
  LeonardSystem() = default;

  Matrix a_;
  Matrix a_star_;
  Sequence theta_;
  Sequence theta_star_;
  std::vector<Matrix> e_;
  std::vector<Matrix> e_star_;
};

inline LeonardSystem assemble_system(Matrix a, Matrix a_star, Sequence theta,
                                     Sequence theta_star) {
  return LeonardSystem::assemble(std::move(a), std::move(a_star),
                                 std::move(theta), std::move(theta_star));
}

/// Scalars a_i, x_i, b_i, c_i, m_i, m*_i, k_i, k*_i and nu of one system.
/// x_0, c_0 and b_d are stored as explicit zeros.
struct ScalarTable {
  Sequence a;
  Sequence x;
  Sequence b;
  Sequence c;
  Sequence m;
  Sequence m_star;
  Sequence k;
  Sequence k_star;
  Scalar nu;

  friend bool operator==(const ScalarTable&, const ScalarTable&) = default;
};

/// Reads every scalar off traces of idempotent products; b_i and c_i come
/// from the values p_i(theta_0).
ScalarTable trace_scalars(const LeonardSystem& sys);

/// p_0..p_{d+1}, u_0..u_d, v_0..v_d.
struct PolynomialTriple {
  std::vector<Polynomial> p;
  std::vector<Polynomial> u;
  std::vector<Polynomial> v;
};

/// Monic polynomials from lambda p_i = p_{i+1} + a_i p_i + x_i p_{i-1},
/// with p_{-1} = 0 and p_0 = 1.
std::vector<Polynomial> monic_sequence(const Field& field, const Sequence& a,
                                       const Sequence& x);

PolynomialTriple polynomial_triple(const LeonardSystem& sys,
                                   const ScalarTable& table);

/// P_{ij} = v_j(theta_i).
Matrix p_matrix(const LeonardSystem& sys, const PolynomialTriple& triple,
                const ScalarTable& table);

/// D with D_ii = B_01 B_12 ... B_{i-1,i} / (B_10 B_21 ... B_{i,i-1}) for an
/// irreducible tridiagonal B; D^{-1} B^t D = B.
Matrix dagger_diagonal(const Matrix& tridiagonal);

/// The antiautomorphism fixing A and A*, realized in a basis of
/// E*-eigenvectors: `basis` holds those eigenvectors as columns,
/// `tridiagonal` is A in that basis, and X^dagger = D^{-1} X^t D there.
struct DaggerForm {
  Matrix basis;
  Matrix tridiagonal;
  Matrix gram;  ///< the diagonal D
};

DaggerForm dagger_gram(const LeonardSystem& sys);

/// Columns E*_0 u, ..., E*_d u for a nonzero u in E_0 V.
Matrix standard_basis(const LeonardSystem& sys, const Vector& u);
/// The first nonzero column of E_0.
Vector default_standard_vector(const LeonardSystem& sys);
/// Matrix of X in the standard basis built from `u`.
Matrix flat(const LeonardSystem& sys, const Matrix& x, const Vector& u);
Matrix flat(const LeonardSystem& sys, const Matrix& x);

/// <E*_i u, E*_j u> = delta_ij k_i nu^{-1} ||u||^2 for the dagger form.
Report bilinear_gram_check(const LeonardSystem& sys, const ScalarTable& table);
/// u_i(theta_j) = u*_j(theta*_i) and its p-form.
Report duality_check(const LeonardSystem& sys);
/// The v-, u- and p-orthogonality relations and their dual summations.
Report orthogonality_check(const LeonardSystem& sys,
                           const PolynomialTriple& triple,
                           const ScalarTable& table);
/// Difference equation for the u_i, the three-term recurrence at the
/// eigenvalues, and the b/a/c relation against the dual eigenvalues.
Report difference_equation_check(const LeonardSystem& sys);

LeonardSystem d4_transform_system(const LeonardSystem& sys,
                                  const D4Word& word);

/// varphi_i = p_i(theta_0) tau*_i(theta*_i) / (p_{i-1}(theta_0)
/// tau*_{i-1}(theta*_{i-1})).
Sequence first_split_sequence(const LeonardSystem& sys);

ParameterArray extract_parameter_array(const LeonardSystem& sys);

}  // namespace leonard
