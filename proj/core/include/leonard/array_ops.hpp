#pragma once

#include "leonard/d4.hpp"
#include "leonard/parameter_array.hpp"
#include "leonard/polynomial.hpp"
#include "leonard/system.hpp"

#include <cstddef>

namespace leonard {

/// Realizes an array in the split basis: A lower bidiagonal with diagonal
/// theta and subdiagonal 1, A* upper bidiagonal with diagonal theta* and
/// superdiagonal varphi. The system is fully validated, and the second split
/// sequence it induces must equal `arr.phi`; otherwise ValidationError names
/// the failed condition.
LeonardSystem build_system_from_array(const ParameterArray& arr);

/// The D4 action on parameter arrays, word applied left to right:
///   *  : (theta*, theta; varphi_j, phi_{d-j+1})
///   dn : (theta, theta*_{d-i}; phi_{d-j+1}, varphi_{d-j+1})
///   DN : (theta_{d-i}, theta*; phi_j, varphi_j)
ParameterArray d4_on_array(const ParameterArray& arr, const D4Word& word);

/// The full scalar table from closed forms in the array alone.
ScalarTable closed_scalars(const ParameterArray& arr);

/// u_i = sum_h tau*_h(theta*_i) / (varphi_1 ... varphi_h) tau_h.
Polynomial u_closed_form(const ParameterArray& arr, std::size_t i);

/// p_i = sum_h (varphi_1..varphi_i)/(varphi_1..varphi_h)
///             * tau*_h(theta*_i)/tau*_i(theta*_i) * tau_h.
Polynomial p_closed_form(const ParameterArray& arr, std::size_t i);

/// p_i(theta_0) = varphi_1 ... varphi_i / tau*_i(theta*_i), i = 0..d.
Sequence p0_values(const ParameterArray& arr);

}  // namespace leonard
