#include "ydlcat/report.hpp"

#include <sstream>
#include <stdexcept>

#include "ydlcat/errors.hpp"

namespace ydlcat {

std::vector<std::size_t> unflatten(std::size_t index, const std::vector<std::size_t>& legs) {
  std::vector<std::size_t> out(legs.size());
  for (std::size_t i = legs.size(); i-- > 0;) {
    out[i] = index % legs[i];
    index /= legs[i];
  }
  return out;
}

void ValidationReport::add_flag(std::string name, bool passed, std::string note) {
  CheckResult r;
  r.name = std::move(name);
  r.passed = passed;
  r.note = std::move(note);
  add(std::move(r));
}

void ValidationReport::add_info(std::string name, bool passed, std::string note) {
  CheckResult r;
  r.name = std::move(name);
  r.passed = passed;
  r.informational = true;
  r.note = std::move(note);
  add(std::move(r));
}

void ValidationReport::merge(const ValidationReport& other, const std::string& prefix) {
  for (auto r : other.results_) {
    r.name = prefix + r.name;
    results_.push_back(std::move(r));
  }
}

bool ValidationReport::all_passed() const {
  for (const auto& r : results_)
    if (!r.informational && !r.passed) return false;
  return true;
}

const CheckResult& ValidationReport::at(const std::string& name) const {
  for (const auto& r : results_)
    if (r.name == name) return r;
  throw std::out_of_range("no check named '" + name + "'");
}

std::vector<std::string> ValidationReport::failures() const {
  std::vector<std::string> out;
  for (const auto& r : results_)
    if (!r.informational && !r.passed) out.push_back(r.name);
  return out;
}

namespace {

std::string join(const std::vector<std::size_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

}  // namespace

std::string ValidationReport::to_text() const {
  std::ostringstream out;
  for (const auto& r : results_) {
    out << (r.passed ? "PASS " : (r.informational ? "INFO " : "FAIL ")) << r.name;
    if (r.informational && r.passed) out << " (info)";
    if (!r.note.empty()) out << "  -- " << r.note;
    if (r.witness) {
      out << "  at input " << join(r.witness->input) << " output "
          << join(r.witness->output) << ": lhs=" << r.witness->lhs
          << " rhs=" << r.witness->rhs;
    }
    out << "\n";
  }
  return out.str();
}

CheckResult compare_maps(std::string name, const Matrix& lhs, const Matrix& rhs,
                         const std::vector<std::size_t>& in_legs,
                         const std::vector<std::size_t>& out_legs) {
  CheckResult r;
  r.name = std::move(name);
  auto miss = first_mismatch(lhs, rhs);
  if (miss) {
    r.passed = false;
    r.witness = Witness{unflatten(miss->second, in_legs), unflatten(miss->first, out_legs),
                        lhs(miss->first, miss->second).to_string(),
                        rhs(miss->first, miss->second).to_string()};
  }
  return r;
}

}  // namespace ydlcat
