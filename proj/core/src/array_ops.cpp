#include "leonard/array_ops.hpp"

#include "leonard/errors.hpp"

#include <algorithm>
#include <string>

namespace leonard {

namespace {

long idx(std::size_t i) { return static_cast<long>(i); }

Sequence reversed(Sequence s) {
  std::reverse(s.begin(), s.end());
  return s;
}

// prod_{j=1}^{i} seq_j for a zero-based stored 1..d sequence.
Scalar prefix_product(const Field& field, const Sequence& seq, std::size_t i) {
  Scalar p = Scalar::one(field);
  for (std::size_t j = 0; j < i; ++j) p *= seq[j];
  return p;
}

}  // namespace

Scalar ParameterArray::varphi_at(std::size_t j) const {
  if (j == 0 || j > d) return Scalar::zero(field);
  return varphi[j - 1];
}

Scalar ParameterArray::phi_at(std::size_t j) const {
  if (j == 0 || j > d) return Scalar::zero(field);
  return phi[j - 1];
}

Report validate_array(const ParameterArray& arr) {
  Report report;
  const bool lengths = arr.theta.size() == arr.d + 1 &&
                       arr.theta_star.size() == arr.d + 1 &&
                       arr.varphi.size() == arr.d && arr.phi.size() == arr.d;
  report.expect("shape", {}, lengths, "sequence lengths",
                "d+1, d+1, d, d for d = " + std::to_string(arr.d));
  if (!lengths) return report;

  bool same_field = true;
  for (const auto* seq : {&arr.theta, &arr.theta_star, &arr.varphi, &arr.phi}) {
    for (const auto& s : *seq) same_field = same_field && s.field() == arr.field;
  }
  report.expect("shape", {}, same_field, "entry fields", arr.field.name());
  if (!same_field) return report;

  auto distinct = [&](const Sequence& s, const char* name) {
    report.touch(name);
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (std::size_t j = i + 1; j < s.size(); ++j) {
        report.expect(name, {idx(i), idx(j)}, s[i] != s[j], s[i].to_string(),
                      "distinct from " + s[j].to_string());
      }
    }
  };
  distinct(arr.theta, "distinct-theta");
  distinct(arr.theta_star, "distinct-theta-star");

  auto nonzero = [&](const Sequence& s, const char* name) {
    report.touch(name);
    for (std::size_t j = 0; j < s.size(); ++j) {
      report.expect(name, {idx(j + 1)}, !s[j].is_zero(), "0", "nonzero");
    }
  };
  nonzero(arr.varphi, "nonzero-varphi");
  nonzero(arr.phi, "nonzero-phi");
  return report;
}

LeonardSystem build_system_from_array(const ParameterArray& arr) {
  const Report structural = validate_array(arr);
  if (!structural.passed()) {
    const Failure f = structural.failures().front();
    throw ValidationError(f.identity, f.indices.empty() ? -1 : f.indices[0],
                          f.indices.size() > 1 ? f.indices[1] : -1,
                          "parameter array fails " + f.identity);
  }
  const std::size_t n = arr.d + 1;
  const Field& field = arr.field;
  Matrix a(field, n);
  Matrix a_star(field, n);
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = arr.theta[i];
    a_star(i, i) = arr.theta_star[i];
    if (i > 0) {
      a(i, i - 1) = Scalar::one(field);
      a_star(i - 1, i) = arr.varphi[i - 1];
    }
  }
  LeonardSystem sys = LeonardSystem::assemble(std::move(a), std::move(a_star),
                                              arr.theta, arr.theta_star);

  const Sequence first = first_split_sequence(sys);
  const Sequence second = first_split_sequence(
      d4_transform_system(sys, {D4Generator::DoubleDown}));
  for (std::size_t j = 0; j < arr.d; ++j) {
    if (first[j] != arr.varphi[j]) {
      throw ValidationError("first-split-consistency", idx(j + 1), -1,
                            "split basis induces varphi_" +
                                std::to_string(j + 1) + " = " +
                                first[j].to_string());
    }
    if (second[j] != arr.phi[j]) {
      throw ValidationError("second-split-consistency", idx(j + 1), -1,
                            "system induces phi_" + std::to_string(j + 1) +
                                " = " + second[j].to_string() +
                                ", array has " + arr.phi[j].to_string());
    }
  }
  return sys;
}

ParameterArray d4_on_array(const ParameterArray& arr, const D4Word& word) {
  ParameterArray out = arr;
  for (auto g : word) {
    ParameterArray next = out;
    switch (g) {
      case D4Generator::Star:
        next.theta = out.theta_star;
        next.theta_star = out.theta;
        next.varphi = out.varphi;
        next.phi = reversed(out.phi);
        break;
      case D4Generator::Down:
        next.theta_star = reversed(out.theta_star);
        next.varphi = reversed(out.phi);
        next.phi = reversed(out.varphi);
        break;
      case D4Generator::DoubleDown:
        next.theta = reversed(out.theta);
        next.varphi = out.phi;
        next.phi = out.varphi;
        break;
    }
    out = std::move(next);
  }
  return out;
}

ScalarTable closed_scalars(const ParameterArray& arr) {
  const std::size_t d = arr.d;
  const Field& field = arr.field;
  const Scalar zero = Scalar::zero(field);
  const auto& th = arr.theta;
  const auto& ths = arr.theta_star;

  ScalarTable t;
  for (std::size_t i = 0; i <= d; ++i) {
    // varphi_0 = varphi_{d+1} = 0 kill the terms with theta*_{-1}, theta*_{d+1}.
    Scalar a = th[i];
    if (i > 0) a += arr.varphi_at(i) / (ths[i] - ths[i - 1]);
    if (i < d) a += arr.varphi_at(i + 1) / (ths[i] - ths[i + 1]);
    t.a.push_back(a);
  }
  for (std::size_t i = 0; i <= d; ++i) {
    t.b.push_back(i < d ? arr.varphi_at(i + 1) * tau_value(ths, i, ths[i]) /
                              tau_value(ths, i + 1, ths[i + 1])
                        : zero);
    t.c.push_back(i > 0 ? arr.phi_at(i) * eta_value(ths, d - i, ths[i]) /
                              eta_value(ths, d - i + 1, ths[i - 1])
                        : zero);
  }
  for (std::size_t i = 0; i <= d; ++i) {
    t.x.push_back(i > 0 ? t.b[i - 1] * t.c[i] : zero);
  }

  const Scalar eta_star_d = eta_value(ths, d, ths[0]);
  t.nu = eta_value(th, d, th[0]) * eta_star_d / prefix_product(field, arr.phi, d);
  for (std::size_t i = 0; i <= d; ++i) {
    t.k.push_back(prefix_product(field, arr.varphi, i) /
                  prefix_product(field, arr.phi, i) * eta_star_d /
                  (tau_value(ths, i, ths[i]) * eta_value(ths, d - i, ths[i])));
    t.m.push_back(prefix_product(field, arr.varphi, i) *
                  prefix_product(field, arr.phi, d - i) /
                  (eta_star_d * tau_value(th, i, th[i]) *
                   eta_value(th, d - i, th[i])));
  }
  for (std::size_t i = 0; i <= d; ++i) {
    t.m_star.push_back(t.k[i] / t.nu);
    t.k_star.push_back(t.m[i] * t.nu);
  }
  return t;
}

Polynomial u_closed_form(const ParameterArray& arr, std::size_t i) {
  if (i > arr.d) {
    throw ConstraintError("index-range", "u index " + std::to_string(i) +
                                             " exceeds d = " +
                                             std::to_string(arr.d));
  }
  const Field& field = arr.field;
  Polynomial u(field);
  Scalar varphi_prod = Scalar::one(field);
  for (std::size_t h = 0; h <= i; ++h) {
    if (h > 0) varphi_prod *= arr.varphi[h - 1];
    const Scalar coeff = tau_value(arr.theta_star, h, arr.theta_star[i]) /
                         varphi_prod;
    u += tau(arr.theta, h) * coeff;
  }
  return u;
}

Polynomial p_closed_form(const ParameterArray& arr, std::size_t i) {
  if (i > arr.d) {
    throw ConstraintError("index-range", "p index " + std::to_string(i) +
                                             " exceeds d = " +
                                             std::to_string(arr.d));
  }
  const Field& field = arr.field;
  const auto& ths = arr.theta_star;
  const Scalar top = prefix_product(field, arr.varphi, i);
  const Scalar tau_ii = tau_value(ths, i, ths[i]);
  Polynomial p(field);
  for (std::size_t h = 0; h <= i; ++h) {
    const Scalar coeff = top / prefix_product(field, arr.varphi, h) *
                         tau_value(ths, h, ths[i]) / tau_ii;
    p += tau(arr.theta, h) * coeff;
  }
  return p;
}

Sequence p0_values(const ParameterArray& arr) {
  Sequence out;
  for (std::size_t i = 0; i <= arr.d; ++i) {
    out.push_back(prefix_product(arr.field, arr.varphi, i) /
                  tau_value(arr.theta_star, i, arr.theta_star[i]));
  }
  return out;
}

}  // namespace leonard
