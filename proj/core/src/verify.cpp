#include "leonard/verify.hpp"

#include "leonard/array_ops.hpp"

#include <string>

namespace leonard {

namespace {

long idx(std::size_t i) { return static_cast<long>(i); }

void idempotent_relations(Report& r, const char* name, const Matrix& a,
                          const Sequence& thetas,
                          const std::vector<Matrix>& e) {
  const Field& field = a.field();
  const std::size_t n = thetas.size();
  Matrix sum(field, n);
  Matrix weighted(field, n);
  for (std::size_t i = 0; i < n; ++i) {
    sum += e[i];
    weighted += e[i] * thetas[i];
    for (std::size_t j = 0; j < n; ++j) {
      r.expect_equal(name, {idx(i), idx(j)}, e[i] * e[j],
                     i == j ? e[i] : Matrix(field, n));
    }
  }
  r.expect_equal(name, {-1}, sum, Matrix::identity(field, n));
  r.expect_equal(name, {-2}, weighted, a);
}

void expect_poly(Report& r, const std::string& name, long i,
                 const Polynomial& lhs, const Polynomial& rhs) {
  r.expect(name, {i}, lhs == rhs, lhs.to_string(), rhs.to_string());
}

Matrix power(const Matrix& a, std::size_t k) {
  Matrix out = Matrix::identity(a.field(), a.order());
  for (std::size_t i = 0; i < k; ++i) out = out * a;
  return out;
}

void expect_sequence(Report& r, const std::string& name, const Sequence& lhs,
                     const Sequence& rhs) {
  r.expect(name, {}, lhs.size() == rhs.size(), std::to_string(lhs.size()),
           std::to_string(rhs.size()));
  for (std::size_t i = 0; i < lhs.size() && i < rhs.size(); ++i) {
    r.expect_equal(name, {idx(i)}, lhs[i], rhs[i]);
  }
}

}  // namespace

Report identity_suite(const LeonardSystem& sys) {
  Report r;
  const std::size_t d = sys.d();
  const std::size_t n = d + 1;
  const Field& field = sys.field();
  const Scalar zero = Scalar::zero(field);
  const Scalar one = Scalar::one(field);
  const auto& e = sys.E();
  const auto& es = sys.Estar();
  const Matrix& a = sys.A();
  const Matrix& as = sys.Astar();
  const auto& th = sys.theta();
  const auto& ths = sys.theta_star();

  idempotent_relations(r, "idempotent-relations", a, th, e);
  idempotent_relations(r, "dual-idempotent-relations", as, ths, es);

  const ScalarTable table = trace_scalars(sys);
  const PolynomialTriple triple = polynomial_triple(sys, table);
  const LeonardSystem dual = sys.dual();
  const ScalarTable dual_table = trace_scalars(dual);
  const PolynomialTriple dual_triple = polynomial_triple(dual, dual_table);

  r.expect_equal("k0-equals-one", {0}, table.k[0], one);
  Scalar k_sum = zero;
  Scalar m_sum = zero;
  for (std::size_t i = 0; i < n; ++i) {
    k_sum += table.k[i];
    m_sum += table.m[i];
    r.expect("nonzero-m", {idx(i)}, !table.m[i].is_zero(), "0", "nonzero");
    r.expect_equal("abc-sum", {idx(i)}, table.c[i] + table.a[i] + table.b[i],
                   th[0]);
  }
  r.expect_equal("k-sum", {}, k_sum, table.nu);
  r.expect_equal("m-sum", {}, m_sum, one);
  r.touch("bc-product");
  r.touch("nonzero-x");
  for (std::size_t i = 1; i <= d; ++i) {
    r.expect_equal("bc-product", {idx(i)}, table.b[i - 1] * table.c[i],
                   table.x[i]);
    r.expect("nonzero-x", {idx(i)}, !table.x[i].is_zero(), "0", "nonzero");
  }

  for (std::size_t i = 0; i < n; ++i) {
    expect_poly(r, "v-equals-k-u", idx(i), triple.v[i],
                triple.u[i] * table.k[i]);
  }
  for (std::size_t i = 0; i <= n; ++i) {
    const auto deg = triple.p[i].degree();
    r.expect("p-monic-degree", {idx(i)},
             deg && *deg == i && triple.p[i].is_monic(),
             triple.p[i].to_string(), "monic of degree " + std::to_string(i));
  }
  r.expect_equal("p-last-annihilates", {-1}, triple.p[n](a), Matrix(field, n));
  for (std::size_t i = 0; i < n; ++i) {
    r.expect_equal("p-last-annihilates", {idx(i)}, triple.p[n](th[i]), zero);
  }

  Sequence x_prod(n, one);
  for (std::size_t i = 1; i < n; ++i) x_prod[i] = x_prod[i - 1] * table.x[i];
  std::vector<Matrix> a_pow;
  a_pow.reserve(n);
  for (std::size_t i = 0; i < n; ++i) a_pow.push_back(power(a, i));
  for (std::size_t i = 0; i < n; ++i) {
    const Matrix pa = triple.p[i](a);
    r.expect_equal("eispoly", {idx(i)}, es[i] * x_prod[i], pa * es[0] * pa);
    r.expect_equal("pimon", {idx(i)}, pa * es[0], es[i] * a_pow[i] * es[0]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const Matrix& ap = a_pow[j - i];
      r.expect_equal("xrec", {idx(i), idx(j)}, es[j] * ap * es[i] * ap * es[j],
                     es[j] * (x_prod[j] / x_prod[i]));
    }
  }

  const Matrix p = p_matrix(sys, triple, table);
  const Matrix p_dual = p_matrix(dual, dual_triple, dual_table);
  r.expect_equal("p-matrix-inverse", {}, p_dual * p,
                 Matrix::identity(field, n) * table.nu);
  for (std::size_t j = 0; j < n; ++j) {
    r.expect_equal("p-matrix-border", {0, idx(j)}, p(0, j), table.k[j]);
    r.expect_equal("p-matrix-border", {idx(j), 0}, p(j, 0), one);
  }

  Scalar frame_lhs = one;
  Scalar frame_rhs = table.nu;
  for (std::size_t i = 1; i < n; ++i) {
    frame_lhs *= th[0] - th[i];
    frame_rhs *= table.c[i];
  }
  r.expect_equal("frame", {}, frame_lhs, frame_rhs);

  Scalar a_sum = zero;
  for (std::size_t i = 0; i < n; ++i) {
    a_sum += table.a[i];
    r.expect_equal("aisum", {idx(i)}, triple.p[i + 1].coefficient(i), -a_sum);
  }

  const Matrix a_flat = flat(sys, a);
  const Matrix as_flat = flat(sys, as);
  r.expect_equal("flat-vs-sharp", {0}, flat(dual, a) * p, p * a_flat);
  r.expect_equal("flat-vs-sharp", {1}, flat(dual, as) * p, p * as_flat);

  Matrix expected_flat(field, n);
  for (std::size_t i = 0; i < n; ++i) {
    expected_flat(i, i) = table.a[i];
    if (i > 0) expected_flat(i, i - 1) = table.c[i];
    if (i < d) expected_flat(i, i + 1) = table.b[i];
  }
  r.expect_equal("flat-shape", {0}, a_flat, expected_flat);
  r.expect_equal("flat-shape", {1}, as_flat, Matrix::diagonal(ths));

  Vector probe;
  for (std::size_t i = 0; i < n; ++i) probe.push_back(Scalar(field, idx(i + 2)));
  Vector u_alt = e[0] * probe;
  if (is_zero(u_alt)) u_alt = e[0].column(n - 1);
  r.touch("flat-u-independence");
  if (!is_zero(u_alt)) {
    r.expect_equal("flat-u-independence", {0}, flat(sys, a, u_alt), a_flat);
    r.expect_equal("flat-u-independence", {1}, flat(sys, as, u_alt), as_flat);
  }

  for (std::size_t i = 0; i < n; ++i) {
    const Matrix left = es[i] * a;
    for (std::size_t j = 0; j < n; ++j) {
      r.expect_equal("flat-entry-trace", {idx(i), idx(j)}, a_flat(i, j),
                     (left * es[j] * e[0]).trace() / table.m_star[i]);
    }
  }

  r.merge(bilinear_gram_check(sys, table));
  r.merge(duality_check(sys));
  r.merge(orthogonality_check(sys, triple, table));
  r.merge(difference_equation_check(sys));
  return r;
}

Report matrix_basis_check(const LeonardSystem& sys) {
  Report r;
  const std::size_t n = sys.d() + 1;
  std::vector<Matrix> a_pow{Matrix::identity(sys.field(), n)};
  for (std::size_t i = 1; i < n; ++i) a_pow.push_back(a_pow.back() * sys.A());
  std::vector<Vector> rows;
  rows.reserve(n * n);
  for (std::size_t rr = 0; rr < n; ++rr) {
    const Matrix left = a_pow[rr] * sys.Estar()[0];
    for (std::size_t s = 0; s < n; ++s) {
      const Matrix m = left * a_pow[s];
      Vector flat_entries;
      flat_entries.reserve(n * n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) flat_entries.push_back(m(i, j));
      }
      rows.push_back(std::move(flat_entries));
    }
  }
  const std::size_t got = rank(std::move(rows));
  r.expect("matrix-basis", {}, got == n * n, "rank " + std::to_string(got),
           "rank " + std::to_string(n * n));
  return r;
}

Report array_consistency(const ParameterArray& arr, const LeonardSystem& sys) {
  Report r;
  const ScalarTable closed = closed_scalars(arr);
  const ScalarTable traced = trace_scalars(sys);
  expect_sequence(r, "dual-path-a", closed.a, traced.a);
  expect_sequence(r, "dual-path-x", closed.x, traced.x);
  expect_sequence(r, "dual-path-b", closed.b, traced.b);
  expect_sequence(r, "dual-path-c", closed.c, traced.c);
  expect_sequence(r, "dual-path-m", closed.m, traced.m);
  expect_sequence(r, "dual-path-m-star", closed.m_star, traced.m_star);
  expect_sequence(r, "dual-path-k", closed.k, traced.k);
  expect_sequence(r, "dual-path-k-star", closed.k_star, traced.k_star);
  r.expect_equal("dual-path-nu", {}, closed.nu, traced.nu);

  const PolynomialTriple triple = polynomial_triple(sys, traced);
  const Sequence p0 = p0_values(arr);
  for (std::size_t i = 0; i <= arr.d; ++i) {
    const Polynomial u = u_closed_form(arr, i);
    expect_poly(r, "u-closed-form", idx(i), u, triple.u[i]);
    expect_poly(r, "p-closed-form", idx(i), p_closed_form(arr, i), triple.p[i]);
    r.expect_equal("p0-values", {idx(i)}, p0[i], triple.p[i](arr.theta[0]));
    const auto deg = u.degree();
    r.expect("u-leading", {idx(i)},
             deg && *deg == i && u.leading() == p0[i].inverse(),
             u.to_string(), "degree " + std::to_string(i) + ", leading " +
                                p0[i].inverse().to_string());
  }

  const ParameterArray back = extract_parameter_array(sys);
  expect_sequence(r, "extract-round-trip", back.theta, arr.theta);
  expect_sequence(r, "extract-round-trip", back.theta_star, arr.theta_star);
  expect_sequence(r, "extract-round-trip", back.varphi, arr.varphi);
  expect_sequence(r, "extract-round-trip", back.phi, arr.phi);
  return r;
}

Report full_verification(const LeonardSystem& sys) {
  Report r = identity_suite(sys);
  r.merge(array_consistency(extract_parameter_array(sys), sys));
  if (sys.d() <= 4) r.merge(matrix_basis_check(sys));
  return r;
}

}  // namespace leonard
