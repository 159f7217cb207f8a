#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ydlcat/matrix.hpp"

namespace ydlcat {

/// Where two sides of an identity first differ: the input basis multi-index,
/// the output multi-index and the two entries found there.
struct Witness {
  std::vector<std::size_t> input;
  std::vector<std::size_t> output;
  std::string lhs;
  std::string rhs;
};

struct CheckResult {
  std::string name;
  bool passed = true;
  /// Informational entries are reported but never fail a report.
  bool informational = false;
  std::optional<Witness> witness;
  std::string note;
};

class ValidationReport {
 public:
  void add(CheckResult r) { results_.push_back(std::move(r)); }
  void add_flag(std::string name, bool passed, std::string note = {});
  void add_info(std::string name, bool passed, std::string note = {});
  /// Appends all entries of other, prefixing their names.
  void merge(const ValidationReport& other, const std::string& prefix = {});

  const std::vector<CheckResult>& results() const { return results_; }
  bool all_passed() const;
  /// Throws std::out_of_range for unknown names.
  const CheckResult& at(const std::string& name) const;
  bool passed(const std::string& name) const { return at(name).passed; }
  std::vector<std::string> failures() const;

  std::string to_text() const;

 private:
  std::vector<CheckResult> results_;
};

/// Compares two realizations of the same linear map entrywise. The legs
/// describe how row/column indices decompose into basis multi-indices for
/// the witness.
CheckResult compare_maps(std::string name, const Matrix& lhs, const Matrix& rhs,
                         const std::vector<std::size_t>& in_legs,
                         const std::vector<std::size_t>& out_legs);

std::vector<std::size_t> unflatten(std::size_t index, const std::vector<std::size_t>& legs);

}  // namespace ydlcat
