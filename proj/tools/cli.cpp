#include "cli.hpp"

#include "leonard/array_ops.hpp"
#include "leonard/characterization.hpp"
#include "leonard/d4.hpp"
#include "leonard/errors.hpp"
#include "leonard/families.hpp"
#include "leonard/json_io.hpp"
#include "leonard/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>

namespace leonard::cli {

namespace {

const std::vector<std::string> kSelectors = {"u", "v", "p", "k",
                                             "m", "P", "scalars"};

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open input file " + path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

class Sink {
 public:
  Sink(std::ostream& fallback, std::string path)
      : fallback_(fallback), path_(std::move(path)) {}

  void write(const std::string& text) {
    if (path_.empty()) {
      fallback_ << text;
      return;
    }
    std::ofstream file(path_, std::ios::binary);
    if (!file) throw ParseError("cannot write output file " + path_);
    file << text;
  }

 private:
  std::ostream& fallback_;
  std::string path_;
};

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Field field_from_flags(const std::string& kind, unsigned long p) {
  if (kind == "rational" || kind == "Q") {
    if (p != 0) return Field::prime(p);
    return Field::rational();
  }
  if (kind == "prime") {
    if (p == 0) throw ParseError("--field prime needs --p");
    return Field::prime(p);
  }
  throw ParseError("unknown field kind \"" + kind + "\"");
}

// An input file holds either a parameter array or a system.
struct LoadedInput {
  std::optional<ParameterArray> array;
  std::optional<LeonardSystem> system;
};

LoadedInput load_input(const Json& j) {
  LoadedInput in;
  if (j.is_object() && j.contains("varphi")) {
    in.array = array_from_json(j);
  } else if (j.is_object() && j.contains("A")) {
    in.system = system_from_json(j);
  } else {
    throw ParseError("input is neither a parameter array nor a system");
  }
  return in;
}

LeonardSystem system_of(const LoadedInput& in) {
  if (in.system) return *in.system;
  return build_system_from_array(*in.array);
}

Report failure_report(const ValidationError& e) {
  Report r;
  std::vector<long> indices;
  if (e.first() >= 0) indices.push_back(e.first());
  if (e.second() >= 0) indices.push_back(e.second());
  r.expect(e.condition(), indices, false, e.what(), "condition holds");
  return r;
}

Json grid_json(const std::vector<Polynomial>& polys, const Sequence& theta) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < theta.size(); ++i) {
    Json row = Json::array();
    for (const auto& t : theta) row.push_back(scalar_to_json(polys[i](t)));
    rows.push_back(std::move(row));
  }
  return rows;
}

void csv_rows(std::ostringstream& os, const Json& rows) {
  for (const auto& row : rows) {
    bool first = true;
    for (const auto& cell : row) {
      if (!first) os << ',';
      os << cell.get<std::string>();
      first = false;
    }
    os << '\n';
  }
}

void csv_labelled(std::ostringstream& os, const std::string& label,
                  const Json& values) {
  os << label;
  if (values.is_array()) {
    for (const auto& v : values) os << ',' << v.get<std::string>();
  } else {
    os << ',' << values.get<std::string>();
  }
  os << '\n';
}

int cmd_family(const std::string& name, std::size_t d, const Field& field,
               const std::map<std::string, std::string>& extra, Sink& sink) {
  if (name == "krawtchouk") {
    sink.write(dump(array_to_json(krawtchouk_array(d, field))));
    return kPass;
  }
  if (name == "qracah") {
    Json params;
    for (const char* key : {"q", "h", "hstar", "s", "sstar", "r1", "r2",
                            "theta0", "theta0star"}) {
      const auto it = extra.find(key);
      if (it == extra.end() || it->second.empty()) {
        throw ParseError(std::string("qracah needs --") + key);
      }
      params[key] = it->second;
    }
    const QRacahParams p = qracah_params_from_json(params, d, field);
    Json j = array_to_json(qracah_array(p));
    j["params"] = qracah_params_to_json(p);
    sink.write(dump(j));
    return kPass;
  }
  throw ParseError("unknown family \"" + name + "\"; known: krawtchouk, qracah");
}

int cmd_build(const Json& input, bool polydata, Sink& sink) {
  const LeonardSystem sys = system_of(load_input(input));
  sink.write(dump(polydata ? polydata_to_json(extract_polynomial_data(sys))
                           : system_to_json(sys)));
  return kPass;
}

int cmd_verify(const Json& input, Sink& sink) {
  const LoadedInput in = load_input(input);
  Report report;
  if (in.array) {
    report = validate_array(*in.array);
    if (!report.passed()) {
      sink.write(dump(report_to_json(report)));
      return kMathFailure;
    }
  }
  try {
    const LeonardSystem sys = system_of(in);
    report.merge(identity_suite(sys));
    if (in.array) {
      report.merge(array_consistency(*in.array, sys));
    } else {
      report.merge(array_consistency(extract_parameter_array(sys), sys));
    }
    if (sys.d() <= 4) report.merge(matrix_basis_check(sys));
  } catch (const ValidationError& e) {
    report.merge(failure_report(e));
  }
  sink.write(dump(report_to_json(report)));
  return report.passed() ? kPass : kMathFailure;
}

int cmd_tables(const Json& input, const std::vector<std::string>& selectors,
               const std::string& format, Sink& sink) {
  for (const auto& s : selectors) {
    if (std::find(kSelectors.begin(), kSelectors.end(), s) == kSelectors.end()) {
      throw ParseError("unknown table selector \"" + s + "\"");
    }
  }
  if (format != "json" && format != "csv") {
    throw ParseError("unknown format \"" + format + "\"");
  }
  const LeonardSystem sys = system_of(load_input(input));
  const ScalarTable table = trace_scalars(sys);
  const PolynomialTriple triple = polynomial_triple(sys, table);

  Json out;
  for (const auto& s : selectors) {
    if (s == "u") out["u"] = grid_json(triple.u, sys.theta());
    if (s == "v") out["v"] = grid_json(triple.v, sys.theta());
    if (s == "p") out["p"] = grid_json(triple.p, sys.theta());
    if (s == "k") out["k"] = sequence_to_json(table.k);
    if (s == "m") out["m"] = sequence_to_json(table.m);
    if (s == "P") out["P"] = matrix_to_json(p_matrix(sys, triple, table));
    if (s == "scalars") out["scalars"] = table_to_json(table);
  }
  if (format == "json") {
    sink.write(dump(out));
    return kPass;
  }
  std::ostringstream os;
  for (const auto& [name, value] : out.items()) {
    os << "# " << name << '\n';
    if (name == "k" || name == "m") {
      csv_labelled(os, name, value);
    } else if (name == "scalars") {
      for (const auto& [row, values] : value.items()) {
        csv_labelled(os, row, values);
      }
    } else {
      csv_rows(os, value);
    }
  }
  sink.write(os.str());
  return kPass;
}

int cmd_d4(const Json& input, const std::string& word, Sink& sink) {
  const D4Word w = parse_d4_word(word);
  const LoadedInput in = load_input(input);
  if (in.array) {
    const Report structural = validate_array(*in.array);
    if (!structural.passed()) {
      throw ValidationError(structural.failures().front().identity, -1, -1,
                            "input array fails " +
                                structural.failures().front().identity);
    }
    sink.write(dump(array_to_json(d4_on_array(*in.array, w))));
  } else {
    sink.write(dump(system_to_json(d4_transform_system(*in.system, w))));
  }
  return kPass;
}

int cmd_characterize(const Json& input, Sink& sink) {
  const PolynomialSystemData data = polydata_from_json(input);
  Report report = verify_conditions(data);
  Json out;
  if (!report.passed()) {
    out["report"] = report_to_json(report);
    sink.write(dump(out));
    return kMathFailure;
  }
  try {
    CharacterizationResult result = build_from_polynomial_data(data);
    report.merge(result.report);
    out["system"] = system_to_json(result.system);
    out["parameter_array"] = array_to_json(extract_parameter_array(result.system));
  } catch (const ValidationError& e) {
    report.merge(failure_report(e));
  }
  out["report"] = report_to_json(report);
  sink.write(dump(out));
  return report.passed() ? kPass : kMathFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact construction and verification of Leonard systems",
               "leonard"};
  app.require_subcommand(1, 1);

  std::string output;
  app.add_option("-o,--output", output, "Write data here instead of stdout");

  std::string family_name;
  std::size_t d = 0;
  std::string field_kind = "rational";
  unsigned long modulus = 0;
  std::map<std::string, std::string> extra;
  auto* family = app.add_subcommand("family", "Emit a family parameter array");
  family->set_help_flag("--help", "Print this help message and exit");
  family->add_option("name", family_name, "krawtchouk | qracah")->required();
  family->add_option("--d", d, "Diameter")->required();
  family->add_option("--field", field_kind, "rational | prime");
  family->add_option("--p", modulus, "Odd prime modulus (implies GF(p))");
  for (const char* key : {"q", "h", "hstar", "s", "sstar", "r1", "r2",
                          "theta0", "theta0star"}) {
    family->add_option(std::string("--") + key, extra[key]);
  }

  std::string input;
  bool polydata = false;
  auto* build = app.add_subcommand("build", "Build a system from an array");
  build->add_option("input", input, "Array or system JSON ('-' for stdin)")
      ->required();
  build->add_flag("--polydata", polydata,
                  "Emit the polynomial data of the system instead");

  auto* verify = app.add_subcommand("verify", "Run the full identity suite");
  verify->add_option("input", input, "Array or system JSON")->required();

  std::vector<std::string> selectors;
  std::string format = "json";
  auto* tables = app.add_subcommand("tables", "Emit polynomial and scalar tables");
  tables->add_option("input", input, "Array or system JSON")->required();
  tables->add_option("--select", selectors, "u v p k m P scalars")
      ->delimiter(',')
      ->required();
  tables->add_option("--format", format, "json | csv");

  std::string word;
  auto* d4 = app.add_subcommand("d4", "Apply a D4 word to an array or system");
  d4->add_option("input", input, "Array or system JSON")->required();
  d4->add_option("--word,-g", word, "Word over star, dn, DN")->required();

  auto* characterize = app.add_subcommand(
      "characterize", "Build a system from polynomial data");
  characterize->add_option("input", input, "Polynomial data JSON")->required();

  for (auto* sub : {family, build, verify, tables, d4, characterize}) {
    sub->add_option("-o,--output", output, "Write data here instead of stdout");
  }

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  Sink sink(out, output);
  try {
    if (family->parsed()) {
      const Field field = field_from_flags(field_kind, modulus);
      return cmd_family(family_name, d, field, extra, sink);
    }
    if (characterize->parsed()) {
      return cmd_characterize(parse_json(read_input(input)), sink);
    }
    const Json j = parse_json(read_input(input));
    if (build->parsed()) return cmd_build(j, polydata, sink);
    if (verify->parsed()) return cmd_verify(j, sink);
    if (tables->parsed()) return cmd_tables(j, selectors, format, sink);
    if (d4->parsed()) return cmd_d4(j, word, sink);
  } catch (const ConstraintError& e) {
    err << "constraint violated [" << e.constraint() << "]: " << e.what()
        << '\n';
    return kConstraintViolation;
  } catch (const ValidationError& e) {
    err << "validation failed [" << e.condition() << "]: " << e.what() << '\n';
    return kMathFailure;
  } catch (const DivisionByZero& e) {
    err << "division by zero: " << e.what() << '\n';
    return kMathFailure;
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const MismatchError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const nlohmann::json::exception& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace leonard::cli
