#include "operadkit/common.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "operadkit/errors.hpp"

namespace operadkit {

std::string Violation::to_string() const {
  std::ostringstream os;
  os << axiom << " (";
  for (std::size_t k = 0; k < grades.size(); ++k) {
    if (k) os << ',';
    os << grades[k];
  }
  os << ')';
  if (slot) os << " slot " << slot;
  if (!detail.empty()) os << ": " << detail;
  return os.str();
}

void sort_violations(std::vector<Violation>& v) {
  std::stable_sort(v.begin(), v.end(), [](const Violation& a, const Violation& b) {
    return std::tie(a.axiom, a.grades, a.slot) < std::tie(b.axiom, b.grades, b.slot);
  });
}

std::vector<std::size_t> GradedSubset::dims() const {
  std::vector<std::size_t> out;
  out.reserve(parts.size());
  for (const auto& p : parts) out.push_back(p.dim());
  return out;
}

bool GradedSubset::is_zero() const {
  return std::all_of(parts.begin(), parts.end(), [](const Subspace& s) { return s.dim() == 0; });
}

bool GradedSubset::contained_in(const GradedSubset& other) const {
  if (parts.size() != other.parts.size()) throw DimensionMismatch("graded subsets of different length");
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (!other.parts[k].contains(parts[k])) return false;
  }
  return true;
}

}  // namespace operadkit
