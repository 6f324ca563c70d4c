#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "operadkit/linalg.hpp"

namespace operadkit {

/// A homogeneous element: its grade (arity for operads, degree for
/// algebras) and its coordinates in the stored basis of that component.
struct Homogeneous {
  std::size_t grade = 0;
  Vector coords;
};

/// One failed axiom instance. `grades` lists the arities or degrees of the
/// inputs in the order they appear in the axiom; `slot` is the first slot
/// index involved (0 when the axiom has none).
struct Violation {
  std::string axiom;
  std::vector<std::size_t> grades;
  std::size_t slot = 0;
  std::string detail;

  std::string to_string() const;
};

/// Orders violations lexicographically by (axiom, grades, slot).
void sort_violations(std::vector<Violation>& v);

/// One subspace per grade 0..max. Grade 0 of an operad is always zero.
struct GradedSubset {
  std::vector<Subspace> parts;

  std::vector<std::size_t> dims() const;
  bool is_zero() const;
  /// Component-wise inclusion.
  bool contained_in(const GradedSubset& other) const;
  friend bool operator==(const GradedSubset&, const GradedSubset&) = default;
};

}  // namespace operadkit
