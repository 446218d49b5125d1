#pragma once

#include "leonard/characterization.hpp"
#include "leonard/families.hpp"
#include "leonard/parameter_array.hpp"
#include "leonard/report.hpp"
#include "leonard/system.hpp"

#include <nlohmann/json.hpp>

#include <optional>

namespace leonard {

using Json = nlohmann::ordered_json;

// Every from_json throws ParseError on schema violations. Scalars are
// strings ("num/den" or a residue); bare JSON integers are also accepted.

Json field_to_json(const Field& field);
Field field_from_json(const Json& j);

Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j, const Field& field);

Json sequence_to_json(const Sequence& s);
Sequence sequence_from_json(const Json& j, const Field& field);

/// Row-major array of rows.
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, const Field& field);

/// Coefficients lowest degree first.
Json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j, const Field& field);

/// "varphi" holds the first split sequence, "phi" the second.
Json array_to_json(const ParameterArray& arr);
ParameterArray array_from_json(const Json& j);

Json qracah_params_to_json(const QRacahParams& p);
QRacahParams qracah_params_from_json(const Json& j, std::size_t d,
                                     const Field& field);

/// {d, field, A, Astar, theta, theta_star}; idempotents are recomputed.
Json system_to_json(const LeonardSystem& sys);
LeonardSystem system_from_json(const Json& j);

Json polydata_to_json(const PolynomialSystemData& data);
PolynomialSystemData polydata_from_json(const Json& j);

Json table_to_json(const ScalarTable& t);

/// {"passed", "checks": [{identity, evaluated, failed}], "failures": [...]}.
Json report_to_json(const Report& r);

/// Parses text, mapping syntax errors to ParseError.
Json parse_json(const std::string& text);

}  // namespace leonard
