#include "leonard/json_io.hpp"

#include "leonard/errors.hpp"

#include <string>

namespace leonard {

namespace {

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string("missing key \"") + key + "\"");
  }
  return j.at(key);
}

std::size_t size_from_json(const Json& j, const char* key) {
  const Json& v = member(j, key);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw ParseError(std::string("\"") + key +
                     "\" must be a nonnegative integer");
  }
  return v.get<std::size_t>();
}

void require_length(const Json& j, std::size_t n, const char* what) {
  if (!j.is_array() || j.size() != n) {
    throw ParseError(std::string(what) + " must be an array of length " +
                     std::to_string(n));
  }
}

}  // namespace

Json field_to_json(const Field& field) {
  Json j;
  if (field.is_rational()) {
    j["kind"] = "rational";
  } else {
    j["kind"] = "prime";
    j["p"] = Json::parse(field.modulus().get_str());
  }
  return j;
}

Field field_from_json(const Json& j) {
  const Json& kind = member(j, "kind");
  if (kind == "rational") return Field::rational();
  if (kind == "prime") {
    const Json& p = member(j, "p");
    if (p.is_number_unsigned()) return Field::prime(p.get<unsigned long>());
    if (p.is_string()) {
      mpz_class m;
      if (m.set_str(p.get<std::string>(), 10) != 0) {
        throw ParseError("field modulus is not an integer");
      }
      return Field::prime(m);
    }
    throw ParseError("field modulus must be a positive integer");
  }
  throw ParseError("unknown field kind");
}

Json scalar_to_json(const Scalar& s) { return s.to_string(); }

Scalar scalar_from_json(const Json& j, const Field& field) {
  if (j.is_string()) {
    try {
      return Scalar::parse(j.get<std::string>(), field);
    } catch (const DivisionByZero&) {
      throw ParseError("scalar \"" + j.get<std::string>() +
                       "\" has a denominator that vanishes in " + field.name());
    }
  }
  if (j.is_number_integer()) return Scalar(field, j.get<long>());
  throw ParseError("scalar must be a string or an integer");
}

Json sequence_to_json(const Sequence& s) {
  Json j = Json::array();
  for (const auto& x : s) j.push_back(scalar_to_json(x));
  return j;
}

Sequence sequence_from_json(const Json& j, const Field& field) {
  if (!j.is_array()) throw ParseError("expected an array of scalars");
  Sequence s;
  for (const auto& x : j) s.push_back(scalar_from_json(x, field));
  return s;
}

Json matrix_to_json(const Matrix& m) {
  Json j = Json::array();
  for (std::size_t i = 0; i < m.order(); ++i) j.push_back(sequence_to_json(m.row(i)));
  return j;
}

Matrix matrix_from_json(const Json& j, const Field& field) {
  if (!j.is_array()) throw ParseError("matrix must be an array of rows");
  std::vector<Vector> rows;
  for (const auto& row : j) {
    require_length(row, j.size(), "matrix row");
    rows.push_back(sequence_from_json(row, field));
  }
  return Matrix::from_rows(field, rows);
}

Json polynomial_to_json(const Polynomial& p) {
  return sequence_to_json(p.coefficients());
}

Polynomial polynomial_from_json(const Json& j, const Field& field) {
  return Polynomial(field, sequence_from_json(j, field));
}

Json array_to_json(const ParameterArray& arr) {
  Json j;
  j["d"] = arr.d;
  j["field"] = field_to_json(arr.field);
  j["theta"] = sequence_to_json(arr.theta);
  j["theta_star"] = sequence_to_json(arr.theta_star);
  j["varphi"] = sequence_to_json(arr.varphi);
  j["phi"] = sequence_to_json(arr.phi);
  return j;
}

ParameterArray array_from_json(const Json& j) {
  ParameterArray arr;
  arr.d = size_from_json(j, "d");
  arr.field = field_from_json(member(j, "field"));
  require_length(member(j, "theta"), arr.d + 1, "theta");
  require_length(member(j, "theta_star"), arr.d + 1, "theta_star");
  require_length(member(j, "varphi"), arr.d, "varphi");
  require_length(member(j, "phi"), arr.d, "phi");
  arr.theta = sequence_from_json(j.at("theta"), arr.field);
  arr.theta_star = sequence_from_json(j.at("theta_star"), arr.field);
  arr.varphi = sequence_from_json(j.at("varphi"), arr.field);
  arr.phi = sequence_from_json(j.at("phi"), arr.field);
  return arr;
}

Json qracah_params_to_json(const QRacahParams& p) {
  Json j;
  j["q"] = scalar_to_json(p.q);
  j["h"] = scalar_to_json(p.h);
  j["hstar"] = scalar_to_json(p.h_star);
  j["s"] = scalar_to_json(p.s);
  j["sstar"] = scalar_to_json(p.s_star);
  j["r1"] = scalar_to_json(p.r1);
  j["r2"] = scalar_to_json(p.r2);
  j["theta0"] = scalar_to_json(p.theta0);
  j["theta0star"] = scalar_to_json(p.theta0_star);
  return j;
}

QRacahParams qracah_params_from_json(const Json& j, std::size_t d,
                                     const Field& field) {
  QRacahParams p;
  p.d = d;
  p.field = field;
  p.q = scalar_from_json(member(j, "q"), field);
  p.h = scalar_from_json(member(j, "h"), field);
  p.h_star = scalar_from_json(member(j, "hstar"), field);
  p.s = scalar_from_json(member(j, "s"), field);
  p.s_star = scalar_from_json(member(j, "sstar"), field);
  p.r1 = scalar_from_json(member(j, "r1"), field);
  p.r2 = scalar_from_json(member(j, "r2"), field);
  p.theta0 = scalar_from_json(member(j, "theta0"), field);
  p.theta0_star = scalar_from_json(member(j, "theta0star"), field);
  return p;
}

Json system_to_json(const LeonardSystem& sys) {
  Json j;
  j["d"] = sys.d();
  j["field"] = field_to_json(sys.field());
  j["A"] = matrix_to_json(sys.A());
  j["Astar"] = matrix_to_json(sys.Astar());
  j["theta"] = sequence_to_json(sys.theta());
  j["theta_star"] = sequence_to_json(sys.theta_star());
  return j;
}

LeonardSystem system_from_json(const Json& j) {
  const std::size_t d = size_from_json(j, "d");
  const Field field = field_from_json(member(j, "field"));
  require_length(member(j, "A"), d + 1, "A");
  require_length(member(j, "Astar"), d + 1, "Astar");
  require_length(member(j, "theta"), d + 1, "theta");
  require_length(member(j, "theta_star"), d + 1, "theta_star");
  return LeonardSystem::assemble(matrix_from_json(j.at("A"), field),
                                 matrix_from_json(j.at("Astar"), field),
                                 sequence_from_json(j.at("theta"), field),
                                 sequence_from_json(j.at("theta_star"), field));
}

Json polydata_to_json(const PolynomialSystemData& data) {
  Json j;
  j["d"] = data.d;
  j["field"] = field_to_json(data.field);
  Json p = Json::array();
  for (const auto& x : data.p) p.push_back(polynomial_to_json(x));
  Json ps = Json::array();
  for (const auto& x : data.p_star) ps.push_back(polynomial_to_json(x));
  j["p"] = std::move(p);
  j["p_star"] = std::move(ps);
  j["theta"] = sequence_to_json(data.theta);
  j["theta_star"] = sequence_to_json(data.theta_star);
  return j;
}

PolynomialSystemData polydata_from_json(const Json& j) {
  PolynomialSystemData data;
  data.d = size_from_json(j, "d");
  data.field = field_from_json(member(j, "field"));
  const Json& p = member(j, "p");
  const Json& ps = member(j, "p_star");
  if (!p.is_array() || !ps.is_array()) {
    throw ParseError("p and p_star must be arrays of coefficient arrays");
  }
  for (const auto& x : p) data.p.push_back(polynomial_from_json(x, data.field));
  for (const auto& x : ps) {
    data.p_star.push_back(polynomial_from_json(x, data.field));
  }
  data.theta = sequence_from_json(member(j, "theta"), data.field);
  data.theta_star = sequence_from_json(member(j, "theta_star"), data.field);
  return data;
}

Json table_to_json(const ScalarTable& t) {
  Json j;
  j["a"] = sequence_to_json(t.a);
  j["x"] = sequence_to_json(t.x);
  j["b"] = sequence_to_json(t.b);
  j["c"] = sequence_to_json(t.c);
  j["m"] = sequence_to_json(t.m);
  j["m_star"] = sequence_to_json(t.m_star);
  j["k"] = sequence_to_json(t.k);
  j["k_star"] = sequence_to_json(t.k_star);
  j["nu"] = scalar_to_json(t.nu);
  return j;
}

Json report_to_json(const Report& r) {
  Json j;
  j["passed"] = r.passed();
  Json checks = Json::array();
  Json failures = Json::array();
  for (const auto& c : r.checks()) {
    Json entry;
    entry["identity"] = c.identity;
    entry["evaluated"] = c.evaluated;
    entry["failed"] = c.failures.size();
    checks.push_back(std::move(entry));
    for (const auto& f : c.failures) {
      Json fj;
      fj["identity"] = f.identity;
      fj["indices"] = f.indices;
      fj["lhs"] = f.lhs;
      fj["rhs"] = f.rhs;
      failures.push_back(std::move(fj));
    }
  }
  j["checks"] = std::move(checks);
  j["failures"] = std::move(failures);
  return j;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace leonard
