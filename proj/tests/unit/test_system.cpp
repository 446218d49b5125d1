#include "leonard/array_ops.hpp"
#include "leonard/errors.hpp"
#include "leonard/families.hpp"
#include "leonard/system.hpp"
#include "leonard/verify.hpp"

#include "support.hpp"

#include <doctest.h>

using leonard::D4Generator;
using leonard::Field;
using leonard::LeonardSystem;
using leonard::Matrix;
using leonard::Polynomial;
using leonard::Scalar;
using leonard::Sequence;
using support::q;

namespace {

Sequence seq(const Field& field, std::vector<long> v) {
  Sequence s;
  for (long x : v) s.push_back(Scalar(field, x));
  return s;
}

LeonardSystem golden_system(const Field& field = Field::rational()) {
  return leonard::assemble_system(support::golden_A(field),
                                  support::golden_Astar(field),
                                  seq(field, {3, 1, -1, -3}),
                                  seq(field, {3, 1, -1, -3}));
}

LeonardSystem krawtchouk(std::size_t d, const Field& field = Field::rational()) {
  return leonard::build_system_from_array(leonard::krawtchouk_array(d, field));
}

Polynomial poly(const Field& field, std::vector<long> coeffs) {
  return Polynomial(field, seq(field, std::move(coeffs)));
}

std::string condition_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const leonard::ValidationError& e) {
    return e.condition();
  }
  return "";
}

}  // namespace

TEST_CASE("primitive idempotents") {
  const Field Q = Field::rational();
  Matrix c(Q, 1);
  c(0, 0) = q("5");
  const auto e0 = leonard::primitive_idempotents(c, {q("5")});
  REQUIRE(e0.size() == 1);
  CHECK(e0[0] == Matrix::identity(Q, 1));

  const auto es = leonard::primitive_idempotents(support::golden_Astar(Q),
                                                 seq(Q, {3, 1, -1, -3}));
  for (std::size_t i = 0; i < 4; ++i) {
    Matrix unit(Q, 4);
    unit(i, i) = q("1");
    CHECK(es[i] == unit);
  }

  const auto e = leonard::primitive_idempotents(support::golden_A(Q),
                                                seq(Q, {3, 1, -1, -3}));
  Matrix sum(Q, 4);
  for (const auto& m : e) {
    CHECK(m * m == m);
    std::vector<leonard::Vector> rows;
    for (std::size_t i = 0; i < 4; ++i) rows.push_back(m.row(i));
    CHECK(leonard::rank(rows) == 1);
    sum += m;
  }
  CHECK(sum == Matrix::identity(Q, 4));

  CHECK_THROWS_AS(leonard::primitive_idempotents(support::golden_A(Q),
                                                 seq(Q, {3, 3, -1, -3})),
                  leonard::DivisionByZero);
}

TEST_CASE("assembly accepts the golden pair and rejects broken inputs") {
  const Field Q = Field::rational();
  const LeonardSystem sys = golden_system();
  CHECK(sys.d() == 3);
  CHECK(sys.E().size() == 4);

  CHECK(condition_of([&] {
          leonard::assemble_system(support::golden_A(Q),
                                   support::golden_Astar(Q),
                                   seq(Q, {3, 1, -1, -3}), seq(Q, {3, 1, 1, -3}));
        }) == "distinct-theta-star");

  CHECK(condition_of([&] {
          leonard::assemble_system(support::golden_A(Q),
                                   support::golden_Astar(Q),
                                   seq(Q, {3, 1, -1, -5}), seq(Q, {3, 1, -1, -3}));
        }) == "idempotents-A");

  const Matrix dia = Matrix::diagonal(seq(Q, {1, 2, 3}));
  const std::string cond = condition_of([&] {
    leonard::assemble_system(dia, dia, seq(Q, {1, 2, 3}), seq(Q, {1, 2, 3}));
  });
  CHECK((cond == "tridiagonal-E-Astar-E" || cond == "tridiagonal-Estar-A-Estar"));

  const std::string shape = condition_of([&] {
    leonard::assemble_system(support::golden_A(Q), Matrix::identity(Q, 3),
                             seq(Q, {3, 1, -1, -3}), seq(Q, {1, 2, 3}));
  });
  CHECK(shape == "shape");
}

TEST_CASE("trace scalars of the Krawtchouk d = 3 system") {
  const Field Q = Field::rational();
  for (const LeonardSystem& sys : {krawtchouk(3), golden_system()}) {
    const auto t = leonard::trace_scalars(sys);
    CHECK(t.a == seq(Q, {0, 0, 0, 0}));
    CHECK(t.b == seq(Q, {3, 2, 1, 0}));
    CHECK(t.c == seq(Q, {0, 1, 2, 3}));
    CHECK(t.x == seq(Q, {0, 3, 4, 3}));
    CHECK(t.k == seq(Q, {1, 3, 3, 1}));
    CHECK(t.nu == q("8"));
    CHECK(t == support::krawtchouk_expected(3, Q));
  }
  // a_0 as a trace of E*_0 A.
  const LeonardSystem g = golden_system();
  CHECK((g.Estar()[0] * g.A()).trace().is_zero());
}

TEST_CASE("d = 0 system") {
  const Field Q = Field::rational();
  Matrix a(Q, 1);
  a(0, 0) = q("5");
  Matrix as(Q, 1);
  as(0, 0) = q("7");
  const LeonardSystem sys = leonard::assemble_system(a, as, {q("5")}, {q("7")});
  const auto t = leonard::trace_scalars(sys);
  CHECK(t.nu == q("1"));
  CHECK(t.k == seq(Q, {1}));
  CHECK(t.m == seq(Q, {1}));
  const auto triple = leonard::polynomial_triple(sys, t);
  CHECK(triple.p.size() == 2);
  CHECK(triple.p[1] == Polynomial::linear(q("5")));
  CHECK(leonard::dagger_gram(sys).gram == Matrix::identity(Q, 1));
  CHECK(leonard::extract_parameter_array(sys).varphi.empty());
  CHECK(leonard::extract_parameter_array(sys).phi.empty());
  CHECK(leonard::full_verification(sys).passed());
  const auto gram = leonard::bilinear_gram_check(sys, t);
  CHECK(gram.passed());
}

TEST_CASE("polynomial triple for Krawtchouk d = 3") {
  const Field Q = Field::rational();
  const LeonardSystem sys = krawtchouk(3);
  const auto t = leonard::trace_scalars(sys);
  const auto tr = leonard::polynomial_triple(sys, t);
  CHECK(tr.p[0] == poly(Q, {1}));
  CHECK(tr.p[1] == poly(Q, {0, 1}));
  CHECK(tr.p[2] == poly(Q, {-3, 0, 1}));
  CHECK(tr.p[3] == poly(Q, {0, -7, 0, 1}));
  CHECK(tr.p[4] == poly(Q, {9, 0, -10, 0, 1}));
  CHECK(tr.p[4] == leonard::tau(sys.theta(), 4));
  CHECK(tr.u[0] == poly(Q, {1}));
  CHECK(tr.v[0] == poly(Q, {1}));
  CHECK(tr.u[1] == poly(Q, {0, 1}) / q("3"));
  for (const auto& th : sys.theta()) CHECK(tr.p[4](th).is_zero());
  CHECK(tr.p[4](sys.A()).is_zero());
}

TEST_CASE("P matrix of Krawtchouk d = 3 is the golden P") {
  const Field Q = Field::rational();
  const LeonardSystem sys = krawtchouk(3);
  const auto t = leonard::trace_scalars(sys);
  const Matrix p = leonard::p_matrix(sys, leonard::polynomial_triple(sys, t), t);
  CHECK(p == support::golden_P(Q));
  for (std::size_t j = 0; j < 4; ++j) {
    CHECK(p(j, 0) == q("1"));
    CHECK(p(0, j) == t.k[j]);
  }
}

TEST_CASE("dagger diagonal") {
  const Field Q = Field::rational();
  CHECK(leonard::dagger_diagonal(support::golden_A(Q)) ==
        Matrix::diagonal(seq(Q, {1, 3, 3, 1})));
  Matrix sym(Q, 3);
  sym(0, 1) = sym(1, 0) = q("2");
  sym(1, 2) = sym(2, 1) = q("-5");
  CHECK(leonard::dagger_diagonal(sym) == Matrix::identity(Q, 3));
  Matrix broken = sym;
  broken(2, 1) = q("0");
  CHECK_THROWS_AS(leonard::dagger_diagonal(broken), leonard::ValidationError);

  const auto form = leonard::dagger_gram(golden_system());
  CHECK(form.gram.inverse() * form.tridiagonal.transpose() * form.gram ==
        form.tridiagonal);
}

TEST_CASE("bilinear form on the standard basis") {
  const Field Q = Field::rational();
  const LeonardSystem sys = golden_system();
  const auto t = leonard::trace_scalars(sys);
  const auto r = leonard::bilinear_gram_check(sys, t);
  CHECK(r.passed());
  const auto* gram = r.find("standard-basis-gram");
  REQUIRE(gram != nullptr);
  CHECK(gram->evaluated == 16);
  // Diagonal ratios k_i / nu = (1, 3, 3, 1) / 8.
  for (std::size_t i = 0; i < 4; ++i) CHECK(t.k[i] / t.nu == seq(Q, {1, 3, 3, 1})[i] / q("8"));
}

TEST_CASE("Askey-Wilson duality on Krawtchouk d = 3") {
  const LeonardSystem sys = krawtchouk(3);
  const auto r = leonard::duality_check(sys);
  CHECK(r.passed());
  CHECK(r.find("askey-wilson-duality")->evaluated == 16);
  const auto t = leonard::trace_scalars(sys);
  const auto tr = leonard::polynomial_triple(sys, t);
  // 2F1(-1,-1;-3|2) = 1 - 2/3
  CHECK(tr.u[1](sys.theta()[1]) == q("1/3"));
  for (std::size_t j = 0; j < 4; ++j) {
    CHECK(tr.u[0](sys.theta()[j]) == q("1"));
    CHECK(tr.u[j](sys.theta()[0]) == q("1"));
  }
}

TEST_CASE("orthogonality relations") {
  const LeonardSystem sys = krawtchouk(3);
  const auto t = leonard::trace_scalars(sys);
  const auto tr = leonard::polynomial_triple(sys, t);
  const auto r = leonard::orthogonality_check(sys, tr, t);
  CHECK(r.passed());
  for (const char* name : {"v-orthogonality", "u-orthogonality", "p-orthogonality",
                           "v-orthogonality-dual", "u-orthogonality-dual",
                           "p-orthogonality-dual"}) {
    REQUIRE(r.find(name) != nullptr);
    CHECK(r.find(name)->evaluated == 16);
  }
  Scalar k_star_sum = Scalar::zero(Field::rational());
  for (const auto& k : t.k_star) k_star_sum += k;
  CHECK(k_star_sum == q("8"));
}

TEST_CASE("difference equation") {
  const auto r = leonard::difference_equation_check(krawtchouk(3));
  CHECK(r.passed());
  const LeonardSystem sys = krawtchouk(3);
  const auto t = leonard::trace_scalars(sys);
  const auto tr = leonard::polynomial_triple(sys, t);
  const auto dual = leonard::trace_scalars(sys.dual());
  // i = 1, j = 1 written out.
  const auto& th = sys.theta();
  CHECK(sys.theta_star()[1] * tr.u[1](th[1]) ==
        dual.b[1] * tr.u[1](th[2]) + dual.a[1] * tr.u[1](th[1]) +
            dual.c[1] * tr.u[1](th[0]));
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(t.c[i] + t.a[i] + t.b[i] == th[0]);
  }

  const Field gf5 = Field::prime(5UL);
  const auto small = leonard::difference_equation_check(krawtchouk(1, gf5));
  CHECK(small.passed());
  CHECK(small.find("difference-equation")->evaluated == 4);
}

TEST_CASE("D4 action on systems") {
  const LeonardSystem sys = krawtchouk(3);
  const auto arr = leonard::extract_parameter_array(sys);
  auto extract = [&](const char* word) {
    return leonard::extract_parameter_array(
        leonard::d4_transform_system(sys, leonard::parse_d4_word(word)));
  };
  CHECK(extract("star star") == arr);
  CHECK(extract("DN star") == extract("star dn"));
  CHECK(extract("⇓*") == extract("*↓"));
  const LeonardSystem swapped =
      leonard::d4_transform_system(sys, {D4Generator::Star});
  CHECK(swapped.theta() == sys.theta_star());
  CHECK(swapped.A() == sys.Astar());
  CHECK(leonard::trace_scalars(swapped) == leonard::trace_scalars(sys));
}

TEST_CASE("parameter array extraction") {
  const Field Q = Field::rational();
  const auto arr = leonard::extract_parameter_array(golden_system());
  CHECK(arr.varphi == seq(Q, {-6, -8, -6}));
  CHECK(arr.phi == seq(Q, {6, 8, 6}));
  CHECK(arr == leonard::krawtchouk_array(3, Q));
}

TEST_CASE("structure identities hold on the fixtures") {
  for (const char* name : {"krawtchouk_d3.json", "krawtchouk_d5.json",
                           "qracah_d3_q2.json", "qracah_d3_gf101.json"}) {
    CAPTURE(name);
    const auto arr = support::load_array_fixture(name);
    const auto sys = leonard::build_system_from_array(arr);
    const auto r = leonard::identity_suite(sys);
    for (const auto& f : r.failures()) {
      CAPTURE(f.identity);
      CAPTURE(f.lhs);
      CAPTURE(f.rhs);
      CHECK(false);
    }
    for (const char* id : {"eispoly", "pimon", "xrec", "p-matrix-inverse",
                           "frame", "aisum", "flat-vs-sharp", "flat-shape",
                           "flat-u-independence", "flat-entry-trace",
                           "idempotent-relations", "k-sum", "m-sum"}) {
      CAPTURE(id);
      REQUIRE(r.find(id) != nullptr);
      CHECK(r.find(id)->evaluated > 0);
    }
    CHECK(leonard::matrix_basis_check(sys).passed());
  }
}

TEST_CASE("golden system passes the full suite") {
  CHECK(leonard::full_verification(golden_system()).passed());
  CHECK(leonard::full_verification(golden_system(Field::prime(7UL))).passed());
}
