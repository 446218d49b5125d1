#pragma once

#include "leonard/matrix.hpp"
#include "leonard/parameter_array.hpp"
#include "leonard/scalar.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace leonard {

/// Krawtchouk array: theta_i = theta*_i = d - 2i, varphi_i = -2i(d-i+1),
/// phi_i = 2i(d-i+1). Requires characteristic zero or an odd prime > d.
ParameterArray krawtchouk_array(std::size_t d, const Field& field);

/// Free parameters of the q-Racah family. All scalars live in the base field.
struct QRacahParams {
  std::size_t d = 0;
  Field field;
  Scalar q, h, h_star, s, s_star, r1, r2;
  Scalar theta0, theta0_star;
};

/// Throws ConstraintError naming the first violated requirement: a zero
/// parameter, r1 r2 != s s* q^{d+1}, or one of the listed scalars equal to 1.
void validate_qracah(const QRacahParams& params);

ParameterArray qracah_array(const QRacahParams& params);

/// Closed forms for the q-Racah family, checked against the trace path.
Sequence qracah_b(const QRacahParams& params);
Sequence qracah_c(const QRacahParams& params);
Scalar qracah_nu(const QRacahParams& params);
Sequence qracah_k(const QRacahParams& params);
Sequence qracah_m(const QRacahParams& params);

/// (a)_n = a (a+1) ... (a+n-1).
Scalar pochhammer(const Scalar& a, long n);
/// (a; q)_n = (1-a)(1-aq) ... (1-aq^{n-1}).
Scalar q_pochhammer(const Scalar& a, const Scalar& q, long n);

/// Terminating series sum_{n=0}^{min(i,j)} (-i)_n (-j)_n z^n / ((-d)_n n!).
Scalar eval_2F1_terminating(std::size_t i, std::size_t j, std::size_t d,
                            const Scalar& z, const Field& field);

/// The terminating 4phi3 with numerator q^{-i}, s* q^{i+1}, q^{-j}, s q^{j+1},
/// denominator r1 q, r2 q, q^{-d}, base q and argument q.
Scalar eval_4phi3_qracah(std::size_t i, std::size_t j,
                         const QRacahParams& params);

/// The same series summed over n = 0..d, as written before truncation.
Scalar eval_4phi3_qracah_full(std::size_t i, std::size_t j,
                              const QRacahParams& params);

/// The tridiagonal/diagonal pair with superdiagonal (d, d-1, ..., 1),
/// subdiagonal (1, 2, ..., d), A* = diag(d, d-2, ..., -d), and the matrix
/// P with P_ij = C(d, j) 2F1(-i, -j; -d | 2).
struct BinomialPair {
  Matrix A;
  Matrix Astar;
  Matrix P;
};

BinomialPair binomial_pair(std::size_t d, const Field& field);

/// The d = 3 member of the family above; needs characteristic not 2 or 3.
BinomialPair golden_pair(const Field& field);

/// Known family names for the CLI.
std::vector<std::string> family_names();

}  // namespace leonard
