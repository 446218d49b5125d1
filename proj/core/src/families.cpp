#include "leonard/families.hpp"

#include "leonard/errors.hpp"

#include <algorithm>
#include <string>

namespace leonard {

namespace {

void require_characteristic(const Field& field, std::size_t d,
                            const char* what) {
  if (!field.characteristic_exceeds(d)) {
    throw ConstraintError("characteristic",
                          std::string(what) + " needs characteristic zero or "
                          "greater than d = " + std::to_string(d) + ", got " +
                              field.name());
  }
}

Scalar int_scalar(const Field& field, long v) { return Scalar(field, v); }

}  // namespace

ParameterArray krawtchouk_array(std::size_t d, const Field& field) {
  require_characteristic(field, d, "the Krawtchouk family");
  ParameterArray arr;
  arr.d = d;
  arr.field = field;
  const long dd = static_cast<long>(d);
  for (long i = 0; i <= dd; ++i) {
    arr.theta.push_back(int_scalar(field, dd - 2 * i));
    arr.theta_star.push_back(int_scalar(field, dd - 2 * i));
  }
  for (long i = 1; i <= dd; ++i) {
    arr.varphi.push_back(int_scalar(field, -2 * i * (dd - i + 1)));
    arr.phi.push_back(int_scalar(field, 2 * i * (dd - i + 1)));
  }
  return arr;
}

void validate_qracah(const QRacahParams& prm) {
  const Field& field = prm.field;
  const std::pair<const char*, const Scalar*> named[] = {
      {"q", &prm.q},           {"h", &prm.h},         {"hstar", &prm.h_star},
      {"s", &prm.s},           {"sstar", &prm.s_star}, {"r1", &prm.r1},
      {"r2", &prm.r2},         {"theta0", &prm.theta0},
      {"theta0star", &prm.theta0_star}};
  for (const auto& [name, value] : named) {
    if (value->field() != field) {
      throw ConstraintError("field", std::string("parameter ") + name +
                                         " is not in " + field.name());
    }
  }
  for (std::size_t k = 0; k < 7; ++k) {
    if (named[k].second->is_zero()) {
      throw ConstraintError(std::string("nonzero-") + named[k].first,
                            std::string("parameter ") + named[k].first +
                                " must be nonzero");
    }
  }
  const long d = static_cast<long>(prm.d);
  const Scalar lhs = prm.r1 * prm.r2;
  const Scalar rhs = prm.s * prm.s_star * prm.q.pow(d + 1);
  if (lhs != rhs) {
    throw ConstraintError("r1r2-constraint",
                          "r1*r2 = " + lhs.to_string() + " but s*sstar*q^" +
                              std::to_string(d + 1) + " = " + rhs.to_string());
  }
  auto forbid_one = [&](const Scalar& v, const std::string& label) {
    if (v.is_one()) {
      throw ConstraintError("nondegenerate:" + label,
                            "nondegeneracy violated: " + label + " = 1");
    }
  };
  for (long i = 1; i <= d; ++i) {
    const std::string e = std::to_string(i);
    const Scalar qi = prm.q.pow(i);
    forbid_one(qi, "q^" + e);
    forbid_one(prm.r1 * qi, "r1q^" + e);
    forbid_one(prm.r2 * qi, "r2q^" + e);
    forbid_one(prm.s_star * qi / prm.r1, "sstar*q^" + e + "/r1");
    forbid_one(prm.s_star * qi / prm.r2, "sstar*q^" + e + "/r2");
  }
  for (long i = 2; i <= 2 * d; ++i) {
    const std::string e = std::to_string(i);
    const Scalar qi = prm.q.pow(i);
    forbid_one(prm.s * qi, "sq^" + e);
    forbid_one(prm.s_star * qi, "sstar*q^" + e);
  }
}

ParameterArray qracah_array(const QRacahParams& prm) {
  validate_qracah(prm);
  const Field& field = prm.field;
  const Scalar one = Scalar::one(field);
  const auto& q = prm.q;
  const long d = static_cast<long>(prm.d);
  ParameterArray arr;
  arr.d = prm.d;
  arr.field = field;
  for (long i = 0; i <= d; ++i) {
    const Scalar qi = q.pow(i);
    const Scalar qi1 = q.pow(i + 1);
    arr.theta.push_back(prm.theta0 +
                        prm.h * (one - qi) * (one - prm.s * qi1) / qi);
    arr.theta_star.push_back(prm.theta0_star +
                             prm.h_star * (one - qi) * (one - prm.s_star * qi1) /
                                 qi);
  }
  for (long i = 1; i <= d; ++i) {
    const Scalar qi = q.pow(i);
    const Scalar common = prm.h * prm.h_star * q.pow(1 - 2 * i) * (one - qi) *
                          (one - q.pow(i - d - 1));
    arr.varphi.push_back(common * (one - prm.r1 * qi) * (one - prm.r2 * qi));
    arr.phi.push_back(common * (prm.r1 - prm.s_star * qi) *
                      (prm.r2 - prm.s_star * qi) / prm.s_star);
  }
  return arr;
}

Sequence qracah_b(const QRacahParams& prm) {
  const Field& field = prm.field;
  const Scalar one = Scalar::one(field);
  const auto& q = prm.q;
  const auto& ss = prm.s_star;
  const long d = static_cast<long>(prm.d);
  Sequence b;
  for (long i = 0; i < d; ++i) {
    if (i == 0) {
      b.push_back(prm.h * (one - q.pow(-d)) * (one - prm.r1 * q) *
                  (one - prm.r2 * q) / (one - ss * q.pow(2)));
    } else {
      b.push_back(prm.h * (one - q.pow(i - d)) * (one - ss * q.pow(i + 1)) *
                  (one - prm.r1 * q.pow(i + 1)) * (one - prm.r2 * q.pow(i + 1)) /
                  ((one - ss * q.pow(2 * i + 1)) * (one - ss * q.pow(2 * i + 2))));
    }
  }
  b.push_back(Scalar::zero(field));
  return b;
}

Sequence qracah_c(const QRacahParams& prm) {
  const Field& field = prm.field;
  const Scalar one = Scalar::one(field);
  const auto& q = prm.q;
  const auto& ss = prm.s_star;
  const long d = static_cast<long>(prm.d);
  Sequence c{Scalar::zero(field)};
  for (long i = 1; i <= d; ++i) {
    const Scalar qi = q.pow(i);
    if (i < d) {
      c.push_back(prm.h * (one - qi) * (one - ss * q.pow(i + d + 1)) *
                  (prm.r1 - ss * qi) * (prm.r2 - ss * qi) /
                  (ss * q.pow(d) * (one - ss * q.pow(2 * i)) *
                   (one - ss * q.pow(2 * i + 1))));
    } else {
      c.push_back(prm.h * (one - qi) * (prm.r1 - ss * qi) * (prm.r2 - ss * qi) /
                  (ss * q.pow(d) * (one - ss * q.pow(2 * d))));
    }
  }
  return c;
}

Scalar qracah_nu(const QRacahParams& prm) {
  const auto& q = prm.q;
  const long d = static_cast<long>(prm.d);
  const Scalar q2 = q * q;
  return q_pochhammer(prm.s * q2, q, d) * q_pochhammer(prm.s_star * q2, q, d) /
         (prm.r1.pow(d) * q.pow(d) * q_pochhammer(prm.s * q / prm.r1, q, d) *
          q_pochhammer(prm.s_star * q / prm.r1, q, d));
}

Sequence qracah_k(const QRacahParams& prm) {
  const Scalar one = Scalar::one(prm.field);
  const auto& q = prm.q;
  const auto& s = prm.s;
  const auto& ss = prm.s_star;
  const long d = static_cast<long>(prm.d);
  Sequence k;
  for (long i = 0; i <= d; ++i) {
    const Scalar num = q_pochhammer(prm.r1 * q, q, i) *
                       q_pochhammer(prm.r2 * q, q, i) *
                       q_pochhammer(q.pow(-d), q, i) *
                       q_pochhammer(ss * q, q, i) * (one - ss * q.pow(2 * i + 1));
    const Scalar den = s.pow(i) * q.pow(i) * q_pochhammer(q, q, i) *
                       q_pochhammer(ss * q / prm.r1, q, i) *
                       q_pochhammer(ss * q / prm.r2, q, i) *
                       q_pochhammer(ss * q.pow(d + 2), q, i) * (one - ss * q);
    k.push_back(num / den);
  }
  return k;
}

Sequence qracah_m(const QRacahParams& prm) {
  const Scalar one = Scalar::one(prm.field);
  const auto& q = prm.q;
  const auto& s = prm.s;
  const auto& ss = prm.s_star;
  const long d = static_cast<long>(prm.d);
  const Scalar nu = qracah_nu(prm);
  Sequence m;
  for (long i = 0; i <= d; ++i) {
    const Scalar num = q_pochhammer(prm.r1 * q, q, i) *
                       q_pochhammer(prm.r2 * q, q, i) *
                       q_pochhammer(q.pow(-d), q, i) *
                       q_pochhammer(s * q, q, i) * (one - s * q.pow(2 * i + 1));
    const Scalar den = ss.pow(i) * q.pow(i) * q_pochhammer(q, q, i) *
                       q_pochhammer(s * q / prm.r1, q, i) *
                       q_pochhammer(s * q / prm.r2, q, i) *
                       q_pochhammer(s * q.pow(d + 2), q, i) * (one - s * q) * nu;
    m.push_back(num / den);
  }
  return m;
}

Scalar pochhammer(const Scalar& a, long n) {
  if (n < 0) throw ConstraintError("nonnegative-n", "negative Pochhammer length");
  Scalar r = Scalar::one(a.field());
  Scalar term = a;
  const Scalar one = Scalar::one(a.field());
  for (long k = 0; k < n; ++k) {
    r *= term;
    term += one;
  }
  return r;
}

Scalar q_pochhammer(const Scalar& a, const Scalar& q, long n) {
  if (n < 0) {
    throw ConstraintError("nonnegative-n", "negative q-Pochhammer length");
  }
  const Scalar one = Scalar::one(a.field());
  Scalar r = one;
  Scalar term = a;
  for (long k = 0; k < n; ++k) {
    r *= one - term;
    term *= q;
  }
  return r;
}

Scalar eval_2F1_terminating(std::size_t i, std::size_t j, std::size_t d,
                            const Scalar& z, const Field& field) {
  if (i > d || j > d) {
    throw ConstraintError("index-range", "2F1 indices must not exceed d");
  }
  require_characteristic(field, d, "the terminating 2F1");
  const Scalar one = Scalar::one(field);
  const Scalar mi = int_scalar(field, -static_cast<long>(i));
  const Scalar mj = int_scalar(field, -static_cast<long>(j));
  const Scalar md = int_scalar(field, -static_cast<long>(d));
  Scalar sum = Scalar::zero(field);
  const long top = static_cast<long>(std::min(i, j));
  for (long n = 0; n <= top; ++n) {
    sum += pochhammer(mi, n) * pochhammer(mj, n) * z.pow(n) /
           (pochhammer(md, n) * pochhammer(one, n));
  }
  return sum;
}

namespace {

Scalar qracah_series(std::size_t i, std::size_t j, const QRacahParams& prm,
                     std::size_t top) {
  const long li = static_cast<long>(i);
  const long lj = static_cast<long>(j);
  const long d = static_cast<long>(prm.d);
  const auto& q = prm.q;
  Scalar sum = Scalar::zero(prm.field);
  for (long n = 0; n <= static_cast<long>(top); ++n) {
    const Scalar num = q_pochhammer(q.pow(-li), q, n) *
                       q_pochhammer(prm.s_star * q.pow(li + 1), q, n) *
                       q_pochhammer(q.pow(-lj), q, n) *
                       q_pochhammer(prm.s * q.pow(lj + 1), q, n) * q.pow(n);
    if (num.is_zero()) continue;
    const Scalar den = q_pochhammer(prm.r1 * q, q, n) *
                       q_pochhammer(prm.r2 * q, q, n) *
                       q_pochhammer(q.pow(-d), q, n) * q_pochhammer(q, q, n);
    sum += num / den;
  }
  return sum;
}

}  // namespace

Scalar eval_4phi3_qracah(std::size_t i, std::size_t j,
                         const QRacahParams& prm) {
  if (i > prm.d || j > prm.d) {
    throw ConstraintError("index-range", "4phi3 indices must not exceed d");
  }
  validate_qracah(prm);
  return qracah_series(i, j, prm, std::min(i, j));
}

Scalar eval_4phi3_qracah_full(std::size_t i, std::size_t j,
                              const QRacahParams& prm) {
  if (i > prm.d || j > prm.d) {
    throw ConstraintError("index-range", "4phi3 indices must not exceed d");
  }
  validate_qracah(prm);
  return qracah_series(i, j, prm, prm.d);
}

BinomialPair binomial_pair(std::size_t d, const Field& field) {
  require_characteristic(field, d, "the binomial Leonard pair");
  const std::size_t n = d + 1;
  const long dd = static_cast<long>(d);
  BinomialPair pair{Matrix(field, n), Matrix(field, n), Matrix(field, n)};
  for (std::size_t i = 0; i < n; ++i) {
    const long li = static_cast<long>(i);
    pair.Astar(i, i) = int_scalar(field, dd - 2 * li);
    if (i + 1 < n) {
      pair.A(i, i + 1) = int_scalar(field, dd - li);
      pair.A(i + 1, i) = int_scalar(field, li + 1);
    }
  }
  const Scalar two = int_scalar(field, 2);
  mpz_class binom;
  for (std::size_t j = 0; j < n; ++j) {
    mpz_bin_uiui(binom.get_mpz_t(), d, j);
    const Scalar c(field, binom);
    for (std::size_t i = 0; i < n; ++i) {
      pair.P(i, j) = c * eval_2F1_terminating(i, j, d, two, field);
    }
  }
  return pair;
}

BinomialPair golden_pair(const Field& field) {
  if (!field.characteristic_exceeds(3)) {
    throw ConstraintError("characteristic",
                          "the d = 3 pair needs characteristic not 2 or 3");
  }
  return binomial_pair(3, field);
}

std::vector<std::string> family_names() { return {"krawtchouk", "qracah"}; }

}  // namespace leonard
