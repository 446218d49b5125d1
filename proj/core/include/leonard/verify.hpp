#pragma once

#include "leonard/parameter_array.hpp"
#include "leonard/report.hpp"
#include "leonard/system.hpp"

namespace leonard {

/// Structural identities of a validated system: idempotent relations,
/// scalar-table invariants, the matrix identities relating p_i(A), E*_i and
/// the x_i, P* P = nu I, the frame identity, the flat/sharp intertwining and
/// the flat-entry trace formula. Includes the Gram, duality, orthogonality
/// and difference-equation reports.
Report identity_suite(const LeonardSystem& sys);

/// {A^r E*_0 A^s} spans the full matrix algebra. Cost grows like d^6, so
/// callers gate it on small d.
Report matrix_basis_check(const LeonardSystem& sys);

/// Closed forms of an array against the system built from it: the
/// scalar table, u_i, p_i, p_i(theta_0), and the extraction round trip.
Report array_consistency(const ParameterArray& arr, const LeonardSystem& sys);

/// identity_suite plus array_consistency on the extracted array; the
/// matrix-basis check runs when d <= 4.
Report full_verification(const LeonardSystem& sys);

}  // namespace leonard
