#include "leonard/system.hpp"

#include "leonard/errors.hpp"

#include <algorithm>
#include <string>

namespace leonard {

namespace {

long idx(std::size_t i) { return static_cast<long>(i); }

std::string pair_text(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

void require_distinct(const Sequence& s, const char* condition,
                      const char* label) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (s[i] == s[j]) {
        throw ValidationError(condition, idx(i), idx(j),
                              std::string(label) + " not mutually distinct at " +
                                  pair_text(i, j));
      }
    }
  }
}

// Checks that the Lagrange idempotents are nonzero eigenprojections of `a`.
// Orthogonality and the resolution of the identity then follow, but they are
// checked anyway since the cost is negligible at these orders.
void check_idempotents(const Matrix& a, const Sequence& thetas,
                       const std::vector<Matrix>& e, const char* condition) {
  const Field& field = a.field();
  const std::size_t n = thetas.size();
  Matrix sum(field, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (e[i].is_zero()) {
      throw ValidationError(condition, idx(i), -1,
                            "idempotent " + std::to_string(i) + " is zero");
    }
    if (a * e[i] != e[i] * thetas[i]) {
      throw ValidationError(condition, idx(i), -1,
                            "eigenvalue " + thetas[i].to_string() +
                                " at position " + std::to_string(i) +
                                " is not an eigenvalue of the matrix");
    }
    sum += e[i];
  }
  if (sum != Matrix::identity(field, n)) {
    throw ValidationError(condition, -1, -1, "idempotents do not sum to I");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Matrix prod = e[i] * e[j];
      if ((i == j && prod != e[i]) || (i != j && !prod.is_zero())) {
        throw ValidationError(condition, idx(i), idx(j),
                              "idempotents not orthogonal at " + pair_text(i, j));
      }
    }
  }
}

// E_i X E_j = 0 iff |i-j| > 1 and != 0 iff |i-j| = 1.
void check_coupling(const std::vector<Matrix>& e, const Matrix& x,
                    const char* condition) {
  const std::size_t n = e.size();
  for (std::size_t j = 0; j < n; ++j) {
    const Matrix xe = x * e[j];
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t gap = i > j ? i - j : j - i;
      if (gap == 0) continue;
      const bool zero = (e[i] * xe).is_zero();
      if (gap > 1 && !zero) {
        throw ValidationError(condition, idx(i), idx(j),
                              std::string(condition) + ": product nonzero at " +
                                  pair_text(i, j) + " with |i-j| > 1");
      }
      if (gap == 1 && zero) {
        throw ValidationError(condition, idx(i), idx(j),
                              std::string(condition) + ": product zero at " +
                                  pair_text(i, j) + " with |i-j| = 1");
      }
    }
  }
}

// p_0(t), ..., p_{d+1}(t) via the scalar three-term recurrence.
Sequence recurrence_values(const Sequence& a, const Sequence& x,
                           const Scalar& t) {
  const Field& field = t.field();
  const std::size_t d = a.size() - 1;
  Sequence v;
  v.reserve(d + 2);
  v.push_back(Scalar::one(field));
  Scalar prev = Scalar::zero(field);
  for (std::size_t i = 0; i <= d; ++i) {
    Scalar next = (t - a[i]) * v[i] - x[i] * prev;
    prev = v[i];
    v.push_back(std::move(next));
  }
  return v;
}

Sequence reversed(Sequence s) {
  std::reverse(s.begin(), s.end());
  return s;
}

}  // namespace

std::vector<Matrix> primitive_idempotents(const Matrix& a,
                                          const Sequence& thetas) {
  if (thetas.size() != a.order()) {
    throw MismatchError("eigenvalue sequence length " +
                        std::to_string(thetas.size()) + " does not match order " +
                        std::to_string(a.order()));
  }
  const Field& field = a.field();
  const std::size_t n = a.order();
  const Matrix id = Matrix::identity(field, n);
  std::vector<Matrix> shifted;
  shifted.reserve(n);
  for (const auto& t : thetas) shifted.push_back(a - id * t);

  std::vector<Matrix> e;
  e.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Matrix prod = id;
    Scalar denom = Scalar::one(field);
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      prod = prod * shifted[j];
      denom *= thetas[i] - thetas[j];
    }
    if (denom.is_zero()) {
      throw DivisionByZero("repeated eigenvalue " + thetas[i].to_string());
    }
    e.push_back(prod * denom.inverse());
  }
  return e;
}

LeonardSystem LeonardSystem::assemble(Matrix a, Matrix a_star, Sequence theta,
                                      Sequence theta_star) {
  if (a.order() == 0) throw ValidationError("shape", -1, -1, "empty matrix");
  if (a.order() != a_star.order() || theta.size() != a.order() ||
      theta_star.size() != a.order()) {
    throw ValidationError("shape", -1, -1,
                          "matrix orders and sequence lengths disagree");
  }
  const Field& field = a.field();
  if (a_star.field() != field) {
    throw ValidationError("shape", -1, -1, "A and A* live in different fields");
  }
  for (const auto* seq : {&theta, &theta_star}) {
    for (const auto& s : *seq) {
      if (s.field() != field) {
        throw ValidationError("shape", -1, -1,
                              "eigenvalue from a different field");
      }
    }
  }
  require_distinct(theta, "distinct-theta", "eigenvalues");
  require_distinct(theta_star, "distinct-theta-star", "dual eigenvalues");

  LeonardSystem sys;
  sys.e_ = primitive_idempotents(a, theta);
  sys.e_star_ = primitive_idempotents(a_star, theta_star);
  check_idempotents(a, theta, sys.e_, "idempotents-A");
  check_idempotents(a_star, theta_star, sys.e_star_, "idempotents-Astar");
  check_coupling(sys.e_, a_star, "tridiagonal-E-Astar-E");
  check_coupling(sys.e_star_, a, "tridiagonal-Estar-A-Estar");

  sys.a_ = std::move(a);
  sys.a_star_ = std::move(a_star);
  sys.theta_ = std::move(theta);
  sys.theta_star_ = std::move(theta_star);
  return sys;
}

LeonardSystem LeonardSystem::dual() const {
  LeonardSystem s;
  s.a_ = a_star_;
  s.a_star_ = a_;
  s.theta_ = theta_star_;
  s.theta_star_ = theta_;
  s.e_ = e_star_;
  s.e_star_ = e_;
  return s;
}

ScalarTable trace_scalars(const LeonardSystem& sys) {
  const std::size_t d = sys.d();
  const Field& field = sys.field();
  const Scalar zero = Scalar::zero(field);
  const auto& e = sys.E();
  const auto& es = sys.Estar();
  const Matrix& a = sys.A();

  ScalarTable t;
  t.a.reserve(d + 1);
  t.x.assign(1, zero);
  std::vector<Matrix> es_a;
  es_a.reserve(d + 1);
  for (std::size_t i = 0; i <= d; ++i) es_a.push_back(es[i] * a);
  for (std::size_t i = 0; i <= d; ++i) {
    t.a.push_back(es_a[i].trace());
    if (i > 0) t.x.push_back((es_a[i] * es_a[i - 1]).trace());
    t.m.push_back((e[i] * es[0]).trace());
    t.m_star.push_back((es[i] * e[0]).trace());
  }
  if (t.m[0] != t.m_star[0]) {
    throw ValidationError("m0-equals-m0-star", 0, -1,
                          "tr(E_0 E*_0) differs from tr(E*_0 E_0)");
  }
  if (t.m[0].is_zero()) {
    throw ValidationError("nonzero-m0", 0, -1, "tr(E_0 E*_0) is zero");
  }
  t.nu = t.m[0].inverse();
  for (std::size_t i = 0; i <= d; ++i) {
    t.k.push_back(t.m_star[i] * t.nu);
    t.k_star.push_back(t.m[i] * t.nu);
  }

  const Sequence p0 = recurrence_values(t.a, t.x, sys.theta()[0]);
  for (std::size_t i = 0; i <= d; ++i) {
    if (p0[i].is_zero()) {
      throw ValidationError("nonzero-p-at-theta0", idx(i), -1,
                            "p_" + std::to_string(i) + "(theta_0) vanishes");
    }
  }
  t.b.reserve(d + 1);
  t.c.reserve(d + 1);
  for (std::size_t i = 0; i <= d; ++i) {
    t.b.push_back(i < d ? p0[i + 1] / p0[i] : zero);
    t.c.push_back(i > 0 ? t.x[i] * p0[i - 1] / p0[i] : zero);
  }
  return t;
}

std::vector<Polynomial> monic_sequence(const Field& field, const Sequence& a,
                                       const Sequence& x) {
  const std::size_t d = a.size() - 1;
  const Polynomial lambda = Polynomial::lambda(field);
  std::vector<Polynomial> p;
  p.reserve(d + 2);
  p.push_back(Polynomial::constant(Scalar::one(field)));
  Polynomial prev(field);
  for (std::size_t i = 0; i <= d; ++i) {
    Polynomial next = lambda * p[i] - p[i] * a[i] - prev * x[i];
    prev = p[i];
    p.push_back(std::move(next));
  }
  return p;
}

PolynomialTriple polynomial_triple(const LeonardSystem& sys,
                                   const ScalarTable& table) {
  const std::size_t d = sys.d();
  const Field& field = sys.field();
  PolynomialTriple t;
  t.p = monic_sequence(field, table.a, table.x);
  Scalar c_prod = Scalar::one(field);
  for (std::size_t i = 0; i <= d; ++i) {
    if (i > 0) c_prod *= table.c[i];
    t.u.push_back(t.p[i] / t.p[i](sys.theta()[0]));
    t.v.push_back(t.p[i] / c_prod);
  }
  return t;
}

Matrix p_matrix(const LeonardSystem& sys, const PolynomialTriple& triple,
                const ScalarTable&) {
  const std::size_t n = sys.d() + 1;
  Matrix p(sys.field(), n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) p(i, j) = triple.v[j](sys.theta()[i]);
  }
  return p;
}

Matrix dagger_diagonal(const Matrix& b) {
  const std::size_t n = b.order();
  Matrix dmat(b.field(), n);
  Scalar up = Scalar::one(b.field());
  Scalar down = Scalar::one(b.field());
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0) {
      if (b(i - 1, i).is_zero() || b(i, i - 1).is_zero()) {
        throw ValidationError("irreducible-tridiagonal", idx(i - 1), idx(i),
                              "zero off-diagonal entry in a chain product");
      }
      up *= b(i - 1, i);
      down *= b(i, i - 1);
    }
    dmat(i, i) = up / down;
  }
  return dmat;
}

DaggerForm dagger_gram(const LeonardSystem& sys) {
  const std::size_t n = sys.d() + 1;
  Matrix basis(sys.field(), n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t col = first_nonzero_column(sys.Estar()[i]);
    for (std::size_t r = 0; r < n; ++r) basis(r, i) = sys.Estar()[i](r, col);
  }
  Matrix b = basis.inverse() * sys.A() * basis;
  if (!is_irreducible_tridiagonal(b)) {
    throw ValidationError("irreducible-tridiagonal", -1, -1,
                          "A is not irreducible tridiagonal in an E* eigenbasis");
  }
  Matrix dmat = dagger_diagonal(b);
  return DaggerForm{std::move(basis), std::move(b), std::move(dmat)};
}

Vector default_standard_vector(const LeonardSystem& sys) {
  return sys.E()[0].column(first_nonzero_column(sys.E()[0]));
}

Matrix standard_basis(const LeonardSystem& sys, const Vector& u) {
  const std::size_t n = sys.d() + 1;
  Matrix s(sys.field(), n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vector col = sys.Estar()[i] * u;
    if (is_zero(col)) {
      throw ValidationError("nonzero-standard-vector", idx(i), -1,
                            "E*_" + std::to_string(i) + " u vanishes");
    }
    for (std::size_t r = 0; r < n; ++r) s(r, i) = col[r];
  }
  return s;
}

Matrix flat(const LeonardSystem& sys, const Matrix& x, const Vector& u) {
  const Matrix s = standard_basis(sys, u);
  return s.inverse() * x * s;
}

Matrix flat(const LeonardSystem& sys, const Matrix& x) {
  return flat(sys, x, default_standard_vector(sys));
}

Report bilinear_gram_check(const LeonardSystem& sys, const ScalarTable& table) {
  Report report;
  const std::size_t n = sys.d() + 1;
  const DaggerForm form = dagger_gram(sys);
  const Matrix winv = form.basis.inverse();
  // <x, y> = (W^{-1} x)^t D (W^{-1} y)
  const Matrix g = winv.transpose() * form.gram * winv;

  const Matrix dinv = form.gram.inverse();
  report.expect_equal("dagger-fixes-tridiagonal", {},
                      dinv * form.tridiagonal.transpose() * form.gram,
                      form.tridiagonal);
  report.expect_equal("form-adjoint-A", {}, sys.A().transpose() * g,
                      g * sys.A());
  report.expect_equal("form-adjoint-Astar", {}, sys.Astar().transpose() * g,
                      g * sys.Astar());

  auto form_value = [&](const Vector& x, const Vector& y) {
    const Vector gy = g * y;
    Scalar s = Scalar::zero(sys.field());
    for (std::size_t r = 0; r < n; ++r) s += x[r] * gy[r];
    return s;
  };
  const Vector u = default_standard_vector(sys);
  const Matrix basis = standard_basis(sys, u);
  const Scalar norm_u = form_value(u, u);
  const Scalar nu_inv = table.nu.inverse();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Scalar lhs = form_value(basis.column(i), basis.column(j));
      const Scalar rhs =
          i == j ? table.k[i] * nu_inv * norm_u : Scalar::zero(sys.field());
      report.expect_equal("standard-basis-gram", {idx(i), idx(j)}, lhs, rhs);
    }
  }
  return report;
}

Report duality_check(const LeonardSystem& sys) {
  Report report;
  const std::size_t n = sys.d() + 1;
  const LeonardSystem dual = sys.dual();
  const ScalarTable table = trace_scalars(sys);
  const ScalarTable dual_table = trace_scalars(dual);
  const PolynomialTriple triple = polynomial_triple(sys, table);
  const PolynomialTriple dual_triple = polynomial_triple(dual, dual_table);
  const auto& th = sys.theta();
  const auto& ths = sys.theta_star();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      report.expect_equal("askey-wilson-duality", {idx(i), idx(j)},
                          triple.u[i](th[j]), dual_triple.u[j](ths[i]));
      report.expect_equal(
          "askey-wilson-duality-p-form", {idx(i), idx(j)},
          triple.p[i](th[j]) / triple.p[i](th[0]),
          dual_triple.p[j](ths[i]) / dual_triple.p[j](ths[0]));
    }
  }
  return report;
}

Report orthogonality_check(const LeonardSystem& sys,
                           const PolynomialTriple& triple,
                           const ScalarTable& table) {
  Report report;
  const std::size_t n = sys.d() + 1;
  const Field& field = sys.field();
  const Scalar zero = Scalar::zero(field);
  const auto& th = sys.theta();

  // values[i][r] = poly_i(theta_r)
  auto grid = [&](const std::vector<Polynomial>& polys) {
    std::vector<Sequence> g(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t r = 0; r < n; ++r) g[i].push_back(polys[i](th[r]));
    }
    return g;
  };
  const auto v = grid(triple.v);
  const auto u = grid(triple.u);
  const auto p = grid(triple.p);

  Sequence x_prod(n, Scalar::one(field));
  for (std::size_t i = 1; i < n; ++i) x_prod[i] = x_prod[i - 1] * table.x[i];

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Scalar sv = zero, su = zero, sp = zero;
      for (std::size_t r = 0; r < n; ++r) {
        sv += v[i][r] * v[j][r] * table.k_star[r];
        su += u[i][r] * u[j][r] * table.k_star[r];
        sp += p[i][r] * p[j][r] * table.m[r];
      }
      const bool diag = i == j;
      report.expect_equal("v-orthogonality", {idx(i), idx(j)}, sv,
                          diag ? table.nu * table.k[i] : zero);
      report.expect_equal("u-orthogonality", {idx(i), idx(j)}, su,
                          diag ? table.nu / table.k[i] : zero);
      report.expect_equal("p-orthogonality", {idx(i), idx(j)}, sp,
                          diag ? x_prod[i] : zero);
    }
  }
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t s = 0; s < n; ++s) {
      Scalar sv = zero, su = zero, sp = zero;
      for (std::size_t i = 0; i < n; ++i) {
        sv += v[i][r] * v[i][s] / table.k[i];
        su += u[i][r] * u[i][s] * table.k[i];
        sp += p[i][r] * p[i][s] / x_prod[i];
      }
      const bool diag = r == s;
      report.expect_equal("v-orthogonality-dual", {idx(r), idx(s)}, sv,
                          diag ? table.nu / table.k_star[r] : zero);
      report.expect_equal("u-orthogonality-dual", {idx(r), idx(s)}, su,
                          diag ? table.nu / table.k_star[r] : zero);
      report.expect_equal("p-orthogonality-dual", {idx(r), idx(s)}, sp,
                          diag ? table.m[r].inverse() : zero);
    }
  }
  return report;
}

Report difference_equation_check(const LeonardSystem& sys) {
  Report report;
  const std::size_t d = sys.d();
  const std::size_t n = d + 1;
  const ScalarTable table = trace_scalars(sys);
  const ScalarTable dual_table = trace_scalars(sys.dual());
  const PolynomialTriple triple = polynomial_triple(sys, table);
  const auto& th = sys.theta();
  const auto& ths = sys.theta_star();

  std::vector<Sequence> u(n);  // u[i][j] = u_i(theta_j)
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) u[i].push_back(triple.u[i](th[j]));
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      // b*_d = 0 and c*_0 = 0, so theta_{d+1} and theta_{-1} never appear.
      Scalar rhs = dual_table.a[j] * u[i][j];
      if (j < d) rhs += dual_table.b[j] * u[i][j + 1];
      if (j > 0) rhs += dual_table.c[j] * u[i][j - 1];
      report.expect_equal("difference-equation", {idx(i), idx(j)},
                          ths[i] * u[i][j], rhs);

      Scalar rec = table.a[i] * u[i][j];
      if (i < d) rec += table.b[i] * u[i + 1][j];
      if (i > 0) rec += table.c[i] * u[i - 1][j];
      report.expect_equal("three-term-at-eigenvalues", {idx(i), idx(j)},
                          th[j] * u[i][j], rec);
    }
  }

  if (d >= 1) {
    for (std::size_t i = 0; i <= d; ++i) {
      Scalar lhs = table.a[i] * ths[i];
      if (i < d) lhs += table.b[i] * ths[i + 1];
      if (i > 0) lhs += table.c[i] * ths[i - 1];
      report.expect_equal("abc-dual-eigenvalue-relation", {idx(i)}, lhs,
                          th[1] * ths[i] + dual_table.a[0] * (th[0] - th[1]));
    }
  } else {
    report.touch("abc-dual-eigenvalue-relation");
  }
  return report;
}

LeonardSystem d4_transform_system(const LeonardSystem& sys,
                                  const D4Word& word) {
  Matrix a = sys.A();
  Matrix a_star = sys.Astar();
  Sequence theta = sys.theta();
  Sequence theta_star = sys.theta_star();
  for (auto g : word) {
    switch (g) {
      case D4Generator::Star:
        std::swap(a, a_star);
        std::swap(theta, theta_star);
        break;
      case D4Generator::Down:
        theta_star = reversed(std::move(theta_star));
        break;
      case D4Generator::DoubleDown:
        theta = reversed(std::move(theta));
        break;
    }
  }
  return LeonardSystem::assemble(std::move(a), std::move(a_star),
                                 std::move(theta), std::move(theta_star));
}

Sequence first_split_sequence(const LeonardSystem& sys) {
  const std::size_t d = sys.d();
  const ScalarTable table = trace_scalars(sys);
  const Sequence p0 = recurrence_values(table.a, table.x, sys.theta()[0]);
  const auto& ths = sys.theta_star();
  Sequence split;
  Scalar prev = Scalar::one(sys.field());  // p_0(theta_0) tau*_0(theta*_0)
  for (std::size_t i = 1; i <= d; ++i) {
    Scalar cur = p0[i] * tau_value(ths, i, ths[i]);
    if (cur.is_zero()) {
      throw ValidationError("nonzero-split", idx(i), -1,
                            "split sequence entry " + std::to_string(i) +
                                " vanishes");
    }
    split.push_back(cur / prev);
    prev = std::move(cur);
  }
  return split;
}

ParameterArray extract_parameter_array(const LeonardSystem& sys) {
  ParameterArray arr;
  arr.d = sys.d();
  arr.field = sys.field();
  arr.theta = sys.theta();
  arr.theta_star = sys.theta_star();
  arr.varphi = first_split_sequence(sys);
  arr.phi = first_split_sequence(
      d4_transform_system(sys, {D4Generator::DoubleDown}));
  return arr;
}

}  // namespace leonard
