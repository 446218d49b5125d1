#include "leonard/report.hpp"

namespace leonard {

CheckSummary& Report::entry(const std::string& identity) {
  for (auto& c : checks_) {
    if (c.identity == identity) return c;
  }
  checks_.push_back(CheckSummary{identity, 0, {}});
  return checks_.back();
}

void Report::expect_equal(const std::string& identity,
                          std::vector<long> indices, const Scalar& lhs,
                          const Scalar& rhs) {
  auto& e = entry(identity);
  ++e.evaluated;
  if (lhs != rhs) {
    e.failures.push_back(
        Failure{identity, std::move(indices), lhs.to_string(), rhs.to_string()});
  }
}

void Report::expect_equal(const std::string& identity,
                          std::vector<long> indices, const Matrix& lhs,
                          const Matrix& rhs) {
  auto& e = entry(identity);
  ++e.evaluated;
  if (lhs != rhs) {
    e.failures.push_back(Failure{identity, std::move(indices),
                                 matrix_to_string(lhs), matrix_to_string(rhs)});
  }
}

void Report::expect(const std::string& identity, std::vector<long> indices,
                    bool holds, const std::string& lhs,
                    const std::string& rhs) {
  auto& e = entry(identity);
  ++e.evaluated;
  if (!holds) e.failures.push_back(Failure{identity, std::move(indices), lhs, rhs});
}

void Report::touch(const std::string& identity) { entry(identity); }

void Report::merge(const Report& other) {
  for (const auto& c : other.checks_) {
    auto& e = entry(c.identity);
    e.evaluated += c.evaluated;
    e.failures.insert(e.failures.end(), c.failures.begin(), c.failures.end());
  }
}

bool Report::passed() const {
  for (const auto& c : checks_) {
    if (!c.passed()) return false;
  }
  return true;
}

std::vector<Failure> Report::failures() const {
  std::vector<Failure> out;
  for (const auto& c : checks_) {
    out.insert(out.end(), c.failures.begin(), c.failures.end());
  }
  return out;
}

const CheckSummary* Report::find(const std::string& identity) const {
  for (const auto& c : checks_) {
    if (c.identity == identity) return &c;
  }
  return nullptr;
}

std::string matrix_to_string(const Matrix& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.order(); ++i) {
    if (i) s += ",";
    s += "[";
    for (std::size_t j = 0; j < m.order(); ++j) {
      if (j) s += ",";
      s += m(i, j).to_string();
    }
    s += "]";
  }
  return s + "]";
}

}  // namespace leonard
