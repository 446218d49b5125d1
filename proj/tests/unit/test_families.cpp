#include "leonard/array_ops.hpp"
#include "leonard/errors.hpp"
#include "leonard/families.hpp"
#include "leonard/json_io.hpp"
#include "leonard/system.hpp"
#include "leonard/verify.hpp"

#include "support.hpp"

#include <doctest.h>

using leonard::Field;
using leonard::Matrix;
using leonard::ParameterArray;
using leonard::QRacahParams;
using leonard::Scalar;
using leonard::Sequence;
using support::q;

namespace {

Sequence seq(const Field& field, std::vector<long> v) {
  Sequence s;
  for (long x : v) s.push_back(Scalar(field, x));
  return s;
}

QRacahParams rational_fixture() {
  const Field Q = Field::rational();
  QRacahParams p;
  p.d = 3;
  p.field = Q;
  p.q = q("2");
  p.h = q("1");
  p.h_star = q("1");
  p.s = q("3");
  p.s_star = q("5");
  p.r1 = q("8");
  p.r2 = q("30");
  p.theta0 = q("0");
  p.theta0_star = q("0");
  return p;
}

QRacahParams params_from_fixture(const std::string& name) {
  const leonard::Json j = leonard::parse_json(
      support::read_file(support::fixture_path(name)));
  const ParameterArray arr = leonard::array_from_json(j);
  return leonard::qracah_params_from_json(j.at("params"), arr.d, arr.field);
}

std::string constraint_of(const QRacahParams& p) {
  try {
    leonard::validate_qracah(p);
  } catch (const leonard::ConstraintError& e) {
    return e.constraint();
  }
  return "";
}

// The swap that exchanges the roles of the two eigenvalue sequences.
QRacahParams dual_params(QRacahParams p) {
  std::swap(p.s, p.s_star);
  std::swap(p.h, p.h_star);
  std::swap(p.theta0, p.theta0_star);
  return p;
}

}  // namespace

TEST_CASE("Krawtchouk arrays") {
  const Field Q = Field::rational();
  const ParameterArray k3 = leonard::krawtchouk_array(3, Q);
  CHECK(k3.theta == seq(Q, {3, 1, -1, -3}));
  CHECK(k3.theta_star == k3.theta);
  CHECK(k3.varphi == seq(Q, {-6, -8, -6}));
  CHECK(k3.phi == seq(Q, {6, 8, 6}));

  const ParameterArray k0 = leonard::krawtchouk_array(0, Q);
  CHECK(k0.theta == seq(Q, {0}));
  CHECK(k0.varphi.empty());
  CHECK(k0.phi.empty());

  try {
    leonard::krawtchouk_array(3, Field::prime(3UL));
    FAIL("expected a constraint error");
  } catch (const leonard::ConstraintError& e) {
    CHECK(e.constraint() == "characteristic");
  }
  CHECK_NOTHROW(leonard::krawtchouk_array(3, Field::prime(5UL)));
}

TEST_CASE("Krawtchouk scalar tables for d up to 10") {
  for (const Field& field : {Field::rational(), Field::prime(101UL)}) {
    for (unsigned d = 0; d <= 10; ++d) {
      CAPTURE(d);
      const ParameterArray arr = leonard::krawtchouk_array(d, field);
      const auto sys = leonard::build_system_from_array(arr);
      const auto expected = support::krawtchouk_expected(d, field);
      CHECK(leonard::trace_scalars(sys) == expected);
      CHECK(leonard::closed_scalars(arr) == expected);
    }
  }
}

TEST_CASE("q-Racah nondegeneracy and the product constraint") {
  const QRacahParams good = rational_fixture();
  CHECK(constraint_of(good).empty());

  // r1 = q^{-1}, r2 re-solved so only the degeneracy is wrong.
  QRacahParams r1q = good;
  r1q.r1 = q("1/2");
  r1q.r2 = r1q.s * r1q.s_star * r1q.q.pow(4) / r1q.r1;
  CHECK(constraint_of(r1q) == "nondegenerate:r1q^1");

  QRacahParams product = good;
  product.r2 = q("31");
  CHECK(constraint_of(product) == "r1r2-constraint");

  QRacahParams zero_q = good;
  zero_q.q = q("0");
  CHECK(constraint_of(zero_q) == "nonzero-q");

  // s = 1/32, q = 2: s q^5 = 1, and r1 q = 1 as well.
  QRacahParams degenerate = good;
  degenerate.s = q("1/32");
  degenerate.s_star = q("1/2");
  degenerate.r1 = q("1/2");
  degenerate.r2 = q("1/2");
  CHECK(degenerate.r1 * degenerate.r2 ==
        degenerate.s * degenerate.s_star * degenerate.q.pow(4));
  CHECK(degenerate.s * degenerate.q.pow(5) == q("1"));
  CHECK(constraint_of(degenerate) == "nondegenerate:r1q^1");
  CHECK_THROWS_AS(leonard::qracah_array(degenerate), leonard::ConstraintError);

  QRacahParams only_s = degenerate;
  only_s.r1 = q("1/3");
  only_s.r2 = only_s.s * only_s.s_star * only_s.q.pow(4) / only_s.r1;
  CHECK(constraint_of(only_s) == "nondegenerate:sq^5");
}

TEST_CASE("q-Racah array values") {
  const QRacahParams p = rational_fixture();
  const ParameterArray arr = leonard::qracah_array(p);
  CHECK(arr.theta[0] == p.theta0);
  CHECK(arr.theta_star[0] == p.theta0_star);
  // h (1 - q)(1 - s q^2) / q with h = 1, q = 2, s = 3.
  CHECK(arr.theta[1] == q("11/2"));
  CHECK(arr == support::load_array_fixture("qracah_d3_q2.json"));
  CHECK(leonard::full_verification(leonard::build_system_from_array(arr))
            .passed());

  QRacahParams shifted = p;
  shifted.theta0 = q("7/3");
  CHECK(leonard::qracah_array(shifted).theta[0] == q("7/3"));
}

TEST_CASE("q-Racah closed forms on fixtures") {
  for (const char* name : {"qracah_d3_q2.json", "qracah_d3_gf101.json"}) {
    CAPTURE(name);
    const QRacahParams p = params_from_fixture(name);
    const ParameterArray arr = leonard::qracah_array(p);
    CHECK(arr == support::load_array_fixture(name));
    const auto sys = leonard::build_system_from_array(arr);
    const auto t = leonard::trace_scalars(sys);
    CHECK(leonard::qracah_b(p) == t.b);
    CHECK(leonard::qracah_c(p) == t.c);
    CHECK(leonard::qracah_nu(p) == t.nu);
    CHECK(leonard::qracah_k(p) == t.k);
    CHECK(leonard::qracah_m(p) == t.m);

    const auto triple = leonard::polynomial_triple(sys, t);
    const QRacahParams dual = dual_params(p);
    CHECK(leonard::qracah_array(dual) ==
          leonard::d4_on_array(arr, leonard::parse_d4_word("star")));
    for (std::size_t i = 0; i <= p.d; ++i) {
      for (std::size_t j = 0; j <= p.d; ++j) {
        CAPTURE(i);
        CAPTURE(j);
        const Scalar series = leonard::eval_4phi3_qracah(i, j, p);
        CHECK(series == triple.u[i](arr.theta[j]));
        CHECK(series == leonard::eval_4phi3_qracah_full(i, j, p));
        CHECK(series == leonard::eval_4phi3_qracah(j, i, dual));
      }
    }
    CHECK(leonard::eval_4phi3_qracah(0, 2, p) == Scalar::one(p.field));
    CHECK(leonard::eval_4phi3_qracah(2, 0, p) == Scalar::one(p.field));
  }
}

TEST_CASE("GF(101) fixture is reproducible from its search seed") {
  const auto found = support::find_qracah_fixture(Field::prime(101UL), 3, 2024);
  REQUIRE(found.has_value());
  CHECK(leonard::qracah_array(*found) ==
        support::load_array_fixture("qracah_d3_gf101.json"));
}

TEST_CASE("Pochhammer symbols") {
  const Field Q = Field::rational();
  CHECK(leonard::pochhammer(q("7/2"), 0) == q("1"));
  CHECK(leonard::pochhammer(q("-3"), 2) == q("6"));
  mpz_class fact = 1;
  for (long n = 1; n <= 8; ++n) {
    fact *= n;
    CHECK(leonard::pochhammer(q("1"), n) == Scalar(Q, fact));
  }
  CHECK_THROWS_AS(leonard::pochhammer(q("1"), -1), leonard::ConstraintError);

  CHECK(leonard::q_pochhammer(q("5"), q("3"), 0) == q("1"));
  CHECK(leonard::q_pochhammer(q("2"), q("2"), 2) == q("3"));
  for (long n = 1; n <= 4; ++n) {
    CHECK(leonard::q_pochhammer(q("1"), q("2"), n).is_zero());
  }
  CHECK_THROWS_AS(leonard::q_pochhammer(q("1"), q("2"), -1),
                  leonard::ConstraintError);
}

TEST_CASE("terminating 2F1") {
  const Field Q = Field::rational();
  for (std::size_t j = 0; j <= 3; ++j) {
    CHECK(leonard::eval_2F1_terminating(0, j, 3, q("2"), Q) == q("1"));
  }
  CHECK(leonard::eval_2F1_terminating(1, 1, 3, q("2"), Q) == q("1/3"));
  CHECK_THROWS_AS(
      leonard::eval_2F1_terminating(1, 1, 3, Scalar(Field::prime(3UL), 2L),
                                    Field::prime(3UL)),
      leonard::ConstraintError);

  const Matrix golden = support::golden_P(Q);
  for (std::size_t i = 0; i <= 3; ++i) {
    for (std::size_t j = 0; j <= 3; ++j) {
      CHECK(Scalar(Q, support::binomial(3, j)) *
                leonard::eval_2F1_terminating(i, j, 3, q("2"), Q) ==
            golden(i, j));
    }
  }

  for (std::size_t d = 1; d <= 6; ++d) {
    const ParameterArray arr = leonard::krawtchouk_array(d, Q);
    const auto sys = leonard::build_system_from_array(arr);
    const auto triple =
        leonard::polynomial_triple(sys, leonard::trace_scalars(sys));
    for (std::size_t i = 0; i <= d; ++i) {
      for (std::size_t j = 0; j <= d; ++j) {
        CHECK(leonard::eval_2F1_terminating(i, j, d, q("2"), Q) ==
              triple.u[i](arr.theta[j]));
      }
    }
  }
}

TEST_CASE("binomial pairs") {
  for (const Field& field : {Field::rational(), Field::prime(10007UL)}) {
    for (std::size_t d = 1; d <= 6; ++d) {
      CAPTURE(d);
      const auto pair = leonard::binomial_pair(d, field);
      const Scalar two_d(field, mpz_class(mpz_class(1) << d));
      CHECK(pair.A * pair.P == pair.P * pair.Astar);
      CHECK(pair.P * pair.P == Matrix::identity(field, d + 1) * two_d);
      CHECK(leonard::is_irreducible_tridiagonal(pair.A));
      CHECK(leonard::is_diagonal(pair.Astar));
    }
  }
}

TEST_CASE("family names") {
  const auto names = leonard::family_names();
  CHECK(names == std::vector<std::string>{"krawtchouk", "qracah"});
}
