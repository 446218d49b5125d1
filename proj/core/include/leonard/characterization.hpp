#pragma once

#include "leonard/matrix.hpp"
#include "leonard/polynomial.hpp"
#include "leonard/report.hpp"
#include "leonard/system.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace leonard {

/// Two monic sequences p_0..p_{d+1}, p*_0..p*_{d+1} with eigenvalue data.
struct PolynomialSystemData {
  std::size_t d = 0;
  Field field;
  std::vector<Polynomial> p;
  std::vector<Polynomial> p_star;
  Sequence theta;
  Sequence theta_star;
};

/// a_0..a_d and x_0..x_d (x_0 = 0) read off lambda p_i - p_{i+1}.
struct RecurrenceScalars {
  Sequence a;
  Sequence x;
};

/// Peels a_i and x_i off lambda p_i - p_{i+1} = a_i p_i + x_i p_{i-1}.
/// Returns nullopt when some remainder is not of that form.
std::optional<RecurrenceScalars> recurrence_scalars(
    const Field& field, const std::vector<Polynomial>& p);

/// Checks, by name: "shape", "initial-polynomial", "recurrence",
/// "dual-recurrence", "nonzero-x", "nonzero-x-star", "distinct-theta",
/// "distinct-theta-star", "vanishing-at-eigenvalues",
/// "dual-vanishing-at-eigenvalues", "nonzero-at-theta0",
/// "dual-nonzero-at-theta0", "duality".
Report verify_conditions(const PolynomialSystemData& data);

/// X_ij = p_i(theta_j) p*_j(theta*_0) / (x_1 ... x_i).
Matrix characterization_matrix(const PolynomialSystemData& data,
                               const RecurrenceScalars& rec);

struct CharacterizationResult {
  LeonardSystem system;
  Matrix X;
  /// "x-two-forms", "AX=XH", "AstarX=XHstar".
  Report report;
};

/// Builds A monic tridiagonal (a_i, x_i, 1) and A* = diag(theta*), checks
/// the intertwining relations through X and assembles the system. Throws
/// ValidationError naming the first failed condition.
CharacterizationResult build_from_polynomial_data(
    const PolynomialSystemData& data);

PolynomialSystemData extract_polynomial_data(const LeonardSystem& sys);

}  // namespace leonard
