#include "leonard/characterization.hpp"

#include "leonard/errors.hpp"

#include <string>

namespace leonard {

namespace {

long idx(std::size_t i) { return static_cast<long>(i); }

Scalar prefix_product(const Field& field, const Sequence& x, std::size_t i) {
  Scalar r = Scalar::one(field);
  for (std::size_t k = 1; k <= i; ++k) r *= x[k];
  return r;
}

Matrix monic_tridiagonal(const Field& field, const RecurrenceScalars& rec) {
  const std::size_t n = rec.a.size();
  Matrix m(field, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = rec.a[i];
    if (i + 1 < n) {
      m(i, i + 1) = rec.x[i + 1];
      m(i + 1, i) = Scalar::one(field);
    }
  }
  return m;
}

bool shape_ok(const PolynomialSystemData& data) {
  if (data.p.size() != data.d + 2 || data.p_star.size() != data.d + 2 ||
      data.theta.size() != data.d + 1 ||
      data.theta_star.size() != data.d + 1) {
    return false;
  }
  for (const auto& q : data.p) {
    if (q.field() != data.field) return false;
  }
  for (const auto& q : data.p_star) {
    if (q.field() != data.field) return false;
  }
  for (const auto& t : data.theta) {
    if (t.field() != data.field) return false;
  }
  for (const auto& t : data.theta_star) {
    if (t.field() != data.field) return false;
  }
  return true;
}

void check_recurrence(Report& report, const char* name, const Field& field,
                      const std::vector<Polynomial>& p) {
  report.touch(name);
  const Polynomial lambda = Polynomial::lambda(field);
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    Polynomial rem = lambda * p[i] - p[i + 1];
    rem -= p[i] * rem.coefficient(i);
    if (i > 0) rem -= p[i - 1] * rem.coefficient(i - 1);
    report.expect(name, {idx(i)}, rem.is_zero(), rem.to_string(), "0");
  }
}

}  // namespace

std::optional<RecurrenceScalars> recurrence_scalars(
    const Field& field, const std::vector<Polynomial>& p) {
  if (p.empty() || p[0] != Polynomial::constant(Scalar::one(field))) {
    return std::nullopt;
  }
  RecurrenceScalars rec;
  const Polynomial lambda = Polynomial::lambda(field);
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    Polynomial rem = lambda * p[i] - p[i + 1];
    const Scalar a = rem.coefficient(i);
    rem -= p[i] * a;
    Scalar x = Scalar::zero(field);
    if (i > 0) {
      x = rem.coefficient(i - 1);
      rem -= p[i - 1] * x;
    }
    if (!rem.is_zero()) return std::nullopt;
    rec.a.push_back(a);
    rec.x.push_back(x);
  }
  return rec;
}

Report verify_conditions(const PolynomialSystemData& data) {
  Report report;
  const bool shape = shape_ok(data);
  report.expect("shape", {}, shape, "sequence lengths or fields",
                "d+2 polynomials, d+1 eigenvalues over " + data.field.name());
  if (!shape) return report;
  const Field& field = data.field;
  const std::size_t d = data.d;
  const Polynomial one = Polynomial::constant(Scalar::one(field));

  report.expect("initial-polynomial", {0}, data.p[0] == one,
                data.p[0].to_string(), "1");
  report.expect("initial-polynomial", {1}, data.p_star[0] == one,
                data.p_star[0].to_string(), "1");

  check_recurrence(report, "recurrence", field, data.p);
  check_recurrence(report, "dual-recurrence", field, data.p_star);

  const auto rec = recurrence_scalars(field, data.p);
  const auto rec_star = recurrence_scalars(field, data.p_star);
  auto nonzero_x = [&](const std::optional<RecurrenceScalars>& r,
                       const char* name) {
    report.touch(name);
    if (!r) return;
    for (std::size_t i = 1; i <= d; ++i) {
      report.expect(name, {idx(i)}, !r->x[i].is_zero(), "0", "nonzero");
    }
  };
  nonzero_x(rec, "nonzero-x");
  nonzero_x(rec_star, "nonzero-x-star");

  auto distinct = [&](const Sequence& s, const char* name) {
    report.touch(name);
    for (std::size_t i = 0; i <= d; ++i) {
      for (std::size_t j = i + 1; j <= d; ++j) {
        report.expect(name, {idx(i), idx(j)}, s[i] != s[j], s[i].to_string(),
                      "distinct from " + s[j].to_string());
      }
    }
  };
  distinct(data.theta, "distinct-theta");
  distinct(data.theta_star, "distinct-theta-star");

  auto vanishing = [&](const Polynomial& top, const Sequence& s,
                       const char* name) {
    for (std::size_t i = 0; i <= d; ++i) {
      report.expect_equal(name, {idx(i)}, top(s[i]), Scalar::zero(field));
    }
  };
  vanishing(data.p[d + 1], data.theta, "vanishing-at-eigenvalues");
  vanishing(data.p_star[d + 1], data.theta_star,
            "dual-vanishing-at-eigenvalues");

  bool at_zero_ok = true;
  auto nonzero_at = [&](const std::vector<Polynomial>& p, const Scalar& t0,
                        const char* name) {
    for (std::size_t i = 0; i <= d; ++i) {
      const Scalar v = p[i](t0);
      at_zero_ok = at_zero_ok && !v.is_zero();
      report.expect(name, {idx(i)}, !v.is_zero(), v.to_string(), "nonzero");
    }
  };
  nonzero_at(data.p, data.theta[0], "nonzero-at-theta0");
  nonzero_at(data.p_star, data.theta_star[0], "dual-nonzero-at-theta0");

  report.touch("duality");
  if (at_zero_ok) {
    for (std::size_t i = 0; i <= d; ++i) {
      const Scalar pi0 = data.p[i](data.theta[0]);
      for (std::size_t j = 0; j <= d; ++j) {
        report.expect_equal(
            "duality", {idx(i), idx(j)}, data.p[i](data.theta[j]) / pi0,
            data.p_star[j](data.theta_star[i]) /
                data.p_star[j](data.theta_star[0]));
      }
    }
  }
  return report;
}

Matrix characterization_matrix(const PolynomialSystemData& data,
                               const RecurrenceScalars& rec) {
  const std::size_t n = data.d + 1;
  Matrix x(data.field, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Scalar scale = prefix_product(data.field, rec.x, i).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      x(i, j) = data.p[i](data.theta[j]) *
                data.p_star[j](data.theta_star[0]) * scale;
    }
  }
  return x;
}

CharacterizationResult build_from_polynomial_data(
    const PolynomialSystemData& data) {
  const Report conditions = verify_conditions(data);
  if (!conditions.passed()) {
    const Failure f = conditions.failures().front();
    throw ValidationError(f.identity, f.indices.empty() ? -1 : f.indices[0],
                          f.indices.size() > 1 ? f.indices[1] : -1,
                          "polynomial data fails " + f.identity);
  }
  const Field& field = data.field;
  const std::size_t n = data.d + 1;
  const RecurrenceScalars rec = *recurrence_scalars(field, data.p);
  const RecurrenceScalars rec_star = *recurrence_scalars(field, data.p_star);

  Matrix a = monic_tridiagonal(field, rec);
  Matrix a_star = Matrix::diagonal(data.theta_star);
  Matrix x = characterization_matrix(data, rec);

  Report report;
  for (std::size_t i = 0; i < n; ++i) {
    const Scalar scale = prefix_product(field, rec.x, i).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      report.expect_equal("x-two-forms", {idx(i), idx(j)}, x(i, j),
                          data.p_star[j](data.theta_star[i]) *
                              data.p[i](data.theta[0]) * scale);
    }
  }
  const Matrix h = Matrix::diagonal(data.theta);
  const Matrix h_star = monic_tridiagonal(field, rec_star);
  report.expect_equal("AX=XH", {}, a * x, x * h);
  report.expect_equal("AstarX=XHstar", {}, a_star * x, x * h_star);
  if (!report.passed()) {
    const Failure f = report.failures().front();
    throw ValidationError(f.identity, f.indices.empty() ? -1 : f.indices[0],
                          f.indices.size() > 1 ? f.indices[1] : -1,
                          "intertwining relation fails: " + f.identity);
  }
  LeonardSystem sys = LeonardSystem::assemble(std::move(a), std::move(a_star),
                                              data.theta, data.theta_star);
  return CharacterizationResult{std::move(sys), std::move(x),
                                std::move(report)};
}

PolynomialSystemData extract_polynomial_data(const LeonardSystem& sys) {
  const LeonardSystem dual = sys.dual();
  PolynomialSystemData data;
  data.d = sys.d();
  data.field = sys.field();
  data.p = polynomial_triple(sys, trace_scalars(sys)).p;
  data.p_star = polynomial_triple(dual, trace_scalars(dual)).p;
  data.theta = sys.theta();
  data.theta_star = sys.theta_star();
  return data;
}

}  // namespace leonard
