#pragma once

#include "leonard/matrix.hpp"
#include "leonard/scalar.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace leonard {

/// One failed instance of an identity.
struct Failure {
  std::string identity;
  std::vector<long> indices;
  std::string lhs;
  std::string rhs;
};

/// Tally for one named identity.
struct CheckSummary {
  std::string identity;
  std::size_t evaluated = 0;
  std::vector<Failure> failures;

  bool passed() const noexcept { return failures.empty(); }
};

/// Structured verification outcome: each identity records how many index
/// instances were evaluated and which ones failed, with exact lhs/rhs.
class Report {
 public:
  void expect_equal(const std::string& identity, std::vector<long> indices,
                    const Scalar& lhs, const Scalar& rhs);
  void expect_equal(const std::string& identity, std::vector<long> indices,
                    const Matrix& lhs, const Matrix& rhs);
  /// Records a pass/fail fact with free-form lhs/rhs descriptions.
  void expect(const std::string& identity, std::vector<long> indices,
              bool holds, const std::string& lhs = "false",
              const std::string& rhs = "true");
  /// Registers an identity with zero evaluations (e.g. vacuous at d = 0).
  void touch(const std::string& identity);

  void merge(const Report& other);

  bool passed() const;
  const std::vector<CheckSummary>& checks() const noexcept { return checks_; }
  std::vector<Failure> failures() const;
  const CheckSummary* find(const std::string& identity) const;

 private:
  CheckSummary& entry(const std::string& identity);

  std::vector<CheckSummary> checks_;
};

std::string matrix_to_string(const Matrix& m);

}  // namespace leonard
