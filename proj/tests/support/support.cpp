#include "support.hpp"

#include "leonard/array_ops.hpp"
#include "leonard/errors.hpp"
#include "leonard/json_io.hpp"

#include <fstream>
#include <iterator>
#include <stdexcept>

#ifndef LEONARD_FIXTURE_DIR
#error "LEONARD_FIXTURE_DIR must be defined"
#endif

namespace support {

using leonard::Matrix;
using leonard::ParameterArray;
using leonard::Sequence;

std::string fixture_path(const std::string& name) {
  return std::string(LEONARD_FIXTURE_DIR) + "/" + name;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

ParameterArray load_array_fixture(const std::string& name) {
  return leonard::array_from_json(
      leonard::parse_json(read_file(fixture_path(name))));
}

Scalar q(const std::string& text, const Field& field) {
  return Scalar::parse(text, field);
}

mpz_class binomial(unsigned n, unsigned k) {
  std::vector<mpz_class> row{1};
  for (unsigned r = 1; r <= n; ++r) {
    std::vector<mpz_class> next(r + 1, 1);
    for (unsigned j = 1; j < r; ++j) next[j] = row[j - 1] + row[j];
    row = std::move(next);
  }
  return k <= n ? row[k] : mpz_class(0);
}

long inverse_mod(long a, long p) {
  long old_r = ((a % p) + p) % p, r = p;
  long old_s = 1, s = 0;
  while (r != 0) {
    const long quot = old_r / r;
    long t = old_r - quot * r;
    old_r = r;
    r = t;
    t = old_s - quot * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) throw std::domain_error("not invertible");
  return ((old_s % p) + p) % p;
}

std::vector<std::vector<Scalar>> naive_product(
    const std::vector<std::vector<Scalar>>& a,
    const std::vector<std::vector<Scalar>>& b) {
  const std::size_t n = a.size();
  const Field field = a[0][0].field();
  std::vector<std::vector<Scalar>> c(n, std::vector<Scalar>(n, Scalar::zero(field)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) c[i][j] += a[i][k] * b[k][j];
    }
  }
  return c;
}

leonard::ScalarTable krawtchouk_expected(unsigned d, const Field& field) {
  leonard::ScalarTable t;
  const Scalar zero = Scalar::zero(field);
  const Scalar two_d(field, mpz_class(mpz_class(1) << d));
  for (unsigned i = 0; i <= d; ++i) {
    const Scalar binom(field, binomial(d, i));
    t.a.push_back(zero);
    t.b.push_back(Scalar(field, static_cast<long>(d - i)));
    t.c.push_back(Scalar(field, static_cast<long>(i)));
    t.x.push_back(Scalar(field, static_cast<long>((d - i + 1) * i)));
    t.k.push_back(binom);
    t.k_star.push_back(binom);
    t.m.push_back(binom / two_d);
    t.m_star.push_back(binom / two_d);
  }
  t.nu = two_d;
  return t;
}

namespace {

Matrix from_ints(const Field& field, std::vector<std::vector<long>> rows) {
  std::vector<leonard::Vector> out;
  for (const auto& r : rows) {
    leonard::Vector v;
    for (long x : r) v.push_back(Scalar(field, x));
    out.push_back(std::move(v));
  }
  return Matrix::from_rows(field, out);
}

}  // namespace

Matrix golden_P(const Field& field) {
  return from_ints(field, {{1, 3, 3, 1}, {1, 1, -1, -1}, {1, -1, -1, 1},
                           {1, -3, 3, -1}});
}

Matrix golden_A(const Field& field) {
  return from_ints(field, {{0, 3, 0, 0}, {1, 0, 2, 0}, {0, 2, 0, 1},
                           {0, 0, 3, 0}});
}

Matrix golden_Astar(const Field& field) {
  return from_ints(field, {{3, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, -1, 0},
                           {0, 0, 0, -3}});
}

Scalar random_scalar(Rng& rng, const Field& field, bool nonzero, long bound) {
  for (;;) {
    Scalar s;
    if (field.is_prime()) {
      const unsigned long p = field.modulus().get_ui();
      std::uniform_int_distribution<unsigned long> dist(0, p - 1);
      s = Scalar(field, mpz_class(dist(rng)));
    } else {
      std::uniform_int_distribution<long> num(-bound, bound);
      std::uniform_int_distribution<long> den(1, bound);
      s = Scalar(field, mpq_class(num(rng), den(rng)));
    }
    if (!nonzero || !s.is_zero()) return s;
  }
}

ParameterArray random_affine(Rng& rng, const ParameterArray& arr) {
  const Field& field = arr.field;
  const Scalar alpha = random_scalar(rng, field, true);
  const Scalar beta = random_scalar(rng, field, false);
  const Scalar alpha_s = random_scalar(rng, field, true);
  const Scalar beta_s = random_scalar(rng, field, false);
  ParameterArray out = arr;
  for (auto& t : out.theta) t = alpha * t + beta;
  for (auto& t : out.theta_star) t = alpha_s * t + beta_s;
  for (auto& v : out.varphi) v *= alpha * alpha_s;
  for (auto& v : out.phi) v *= alpha * alpha_s;
  return out;
}

namespace {

Sequence distinct_sequence(Rng& rng, const Field& field, std::size_t n) {
  Sequence s;
  while (s.size() < n) {
    Scalar c = random_scalar(rng, field, false);
    bool fresh = true;
    for (const auto& x : s) fresh = fresh && x != c;
    if (fresh) s.push_back(std::move(c));
  }
  return s;
}

}  // namespace

ParameterArray random_raw_array(Rng& rng, const Field& field, std::size_t d) {
  ParameterArray arr;
  arr.d = d;
  arr.field = field;
  arr.theta = distinct_sequence(rng, field, d + 1);
  arr.theta_star = distinct_sequence(rng, field, d + 1);
  for (std::size_t j = 0; j < d; ++j) {
    arr.varphi.push_back(random_scalar(rng, field, true));
    arr.phi.push_back(random_scalar(rng, field, true));
  }
  return arr;
}

leonard::QRacahParams random_qracah_params(Rng& rng, const Field& field,
                                           std::size_t d) {
  for (;;) {
    leonard::QRacahParams p;
    p.d = d;
    p.field = field;
    p.q = random_scalar(rng, field, true);
    p.h = random_scalar(rng, field, true);
    p.h_star = random_scalar(rng, field, true);
    p.s = random_scalar(rng, field, true);
    p.s_star = random_scalar(rng, field, true);
    p.r1 = random_scalar(rng, field, true);
    p.r2 = p.s * p.s_star * p.q.pow(static_cast<long>(d) + 1) / p.r1;
    p.theta0 = random_scalar(rng, field, false);
    p.theta0_star = random_scalar(rng, field, false);
    try {
      leonard::validate_qracah(p);
      return p;
    } catch (const leonard::ConstraintError&) {
    }
  }
}

std::optional<leonard::QRacahParams> find_qracah_fixture(const Field& field,
                                                         std::size_t d,
                                                         std::uint64_t seed,
                                                         int attempts) {
  Rng rng(seed);
  for (int i = 0; i < attempts; ++i) {
    const leonard::QRacahParams p = random_qracah_params(rng, field, d);
    try {
      leonard::build_system_from_array(leonard::qracah_array(p));
      return p;
    } catch (const leonard::Error&) {
    }
  }
  return std::nullopt;
}

}  // namespace support
