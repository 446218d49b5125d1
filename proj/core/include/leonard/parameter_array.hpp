#pragma once

#include "leonard/report.hpp"
#include "leonard/scalar.hpp"

#include <cstddef>
#include <vector>

namespace leonard {

using Sequence = std::vector<Scalar>;

/// (theta_i, theta*_i, i = 0..d; varphi_j, phi_j, j = 1..d).
///
/// `varphi` is the FIRST split sequence and `phi` the SECOND. Both are stored
/// zero-based, so varphi[j-1] holds varphi_j; the boundary values
/// varphi_0 = varphi_{d+1} = phi_0 = phi_{d+1} = 0 are never stored.
struct ParameterArray {
  std::size_t d = 0;
  Field field;
  Sequence theta;
  Sequence theta_star;
  Sequence varphi;
  Sequence phi;

  /// varphi_j with the boundary convention (j in 0..d+1).
  Scalar varphi_at(std::size_t j) const;
  /// phi_j with the boundary convention (j in 0..d+1).
  Scalar phi_at(std::size_t j) const;

  friend bool operator==(const ParameterArray& a, const ParameterArray& b) {
    return a.d == b.d && a.field == b.field && a.theta == b.theta &&
           a.theta_star == b.theta_star && a.varphi == b.varphi &&
           a.phi == b.phi;
  }
  friend bool operator!=(const ParameterArray& a, const ParameterArray& b) {
    return !(a == b);
  }
};

/// Structural checks: sequence lengths, shared field, distinct eigenvalues,
/// nonzero split entries. Realizability is decided by building a system.
Report validate_array(const ParameterArray& arr);

}  // namespace leonard
