#pragma once

#include "leonard/families.hpp"
#include "leonard/parameter_array.hpp"
#include "leonard/system.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace support {

using leonard::Field;
using leonard::Scalar;

std::string fixture_path(const std::string& name);
leonard::ParameterArray load_array_fixture(const std::string& name);
std::string read_file(const std::string& path);

Scalar q(const std::string& text, const Field& field = Field::rational());

// ---- oracles: computed without the library's formulas ----

/// Pascal's triangle in big integers.
mpz_class binomial(unsigned n, unsigned k);

/// Extended Euclid on machine integers.
long inverse_mod(long a, long p);

/// Schoolbook product on raw rows.
std::vector<std::vector<Scalar>> naive_product(
    const std::vector<std::vector<Scalar>>& a,
    const std::vector<std::vector<Scalar>>& b);

/// Expected Krawtchouk table from binomials alone.
leonard::ScalarTable krawtchouk_expected(unsigned d, const Field& field);

/// The d = 3 binomial pair, entered by hand.
leonard::Matrix golden_P(const Field& field);
leonard::Matrix golden_A(const Field& field);
leonard::Matrix golden_Astar(const Field& field);

// ---- generators ----

using Rng = std::mt19937_64;

/// Rationals with numerator/denominator in [-bound, bound]; uniform residues
/// over GF(p).
Scalar random_scalar(Rng& rng, const Field& field, bool nonzero,
                     long bound = 9);

/// theta -> alpha theta + beta, theta* -> alpha* theta* + beta*, both split
/// sequences scaled by alpha alpha*: the array of alpha A + beta I,
/// alpha* A* + beta* I.
leonard::ParameterArray random_affine(Rng& rng,
                                      const leonard::ParameterArray& arr);

/// Distinct eigenvalues, nonzero splits, no further structure.
leonard::ParameterArray random_raw_array(Rng& rng, const Field& field,
                                         std::size_t d);

/// Rejection-samples q-Racah parameters until every constraint holds.
leonard::QRacahParams random_qracah_params(Rng& rng, const Field& field,
                                           std::size_t d);

/// Fixture search: the first parameter set from `seed` whose array also
/// builds into a system.
std::optional<leonard::QRacahParams> find_qracah_fixture(const Field& field,
                                                         std::size_t d,
                                                         std::uint64_t seed,
                                                         int attempts = 1000);

}  // namespace support
