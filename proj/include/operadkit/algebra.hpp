#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "operadkit/common.hpp"
#include "operadkit/linalg.hpp"
#include "operadkit/operad_ideals.hpp"

namespace operadkit {

/// (i, j): the multiplication A_i (x) A_j -> A_{i+j}.
using ProductKey = std::pair<std::size_t, std::size_t>;

/// Even/odd flags per basis vector: odd[i][a] is true when basis vector a of
/// A_i has odd type. odd[0] is empty; degree-0 elements have type 0.
using Typing = std::vector<std::vector<bool>>;

/// Raw structure constants of an N-graded associative algebra truncated at
/// max_degree. products[(i,j)] has shape dims[i+j] x (dims[i]*dims[j]) and
/// column a*dims[j]+b holds e_a * e_b. Missing keys mean zero maps.
struct AlgebraData {
  Field field;
  std::size_t max_degree = 0;
  std::vector<std::size_t> dims;
  Vector unit;
  std::map<ProductKey, Matrix> products;
  std::optional<Typing> typing;
};

class GradedAlgebra {
 public:
  /// Validates shapes and typing; fills in absent products with zeros.
  explicit GradedAlgebra(AlgebraData data);

  const AlgebraData& data() const { return data_; }
  const Field& field() const { return data_.field; }
  std::size_t max_degree() const { return data_.max_degree; }
  const std::vector<std::size_t>& dims() const { return data_.dims; }
  std::size_t dim(std::size_t i) const;
  const Vector& unit() const { return data_.unit; }
  const Matrix& product(std::size_t i, std::size_t j) const;

  bool typed() const { return data_.typing.has_value(); }
  /// t(e_a) for basis vector a of A_i; 0 in degree 0. Throws MissingTyping.
  int type_of(std::size_t i, std::size_t a) const;
  /// x * Xi on A_1: +x on even basis vectors, -x on odd ones.
  Vector xi(const Vector& x) const;

  /// Throws TruncationExceeded when i+j > max_degree.
  Vector multiply(std::size_t i, const Vector& x, std::size_t j, const Vector& y) const;
  Homogeneous multiply(const Homogeneous& x, const Homogeneous& y) const;
  Vector multiply_basis(std::size_t i, std::size_t a, std::size_t j, std::size_t b) const;

 private:
  AlgebraData data_;
};

/// Unit law and (xy)z = x(yz) on basis triples within the truncation.
std::vector<Violation> check_associativity(const GradedAlgebra& a);
/// a(bc) = a(cb) for basis a of positive degree.
std::vector<Violation> check_gperm(const GradedAlgebra& a);
/// Typing axioms and signed Perm identities on basis elements. Throws
/// MissingTyping. (vb) and its primed form are checked independently.
std::vector<Violation> check_pgperm(const GradedAlgebra& a);
/// Typed parts are two-sided ideals and yz = (-1)^{deg y deg z t(y) t(z)} zy.
/// When these hold but check_pgperm fails, a "pgc-not-pgperm" finding is
/// appended. Throws MissingTyping.
std::vector<Violation> check_pgc(const GradedAlgebra& a);
/// yz = (-1)^{deg y deg z} zy on basis elements.
std::vector<Violation> check_graded_commutative(const GradedAlgebra& a);
/// yz = zy on basis elements.
std::vector<Violation> check_commutative(const GradedAlgebra& a);

GradedAlgebra with_typing(const GradedAlgebra& a, Typing typing);
GradedAlgebra erase_typing(const GradedAlgebra& a);
/// Every basis vector of positive degree odd (resp. even).
GradedAlgebra all_odd_typing(const GradedAlgebra& a);
GradedAlgebra all_even_typing(const GradedAlgebra& a);

/// Connected free GPerm algebra on generators of the given positive degrees.
/// Degree-d basis: pairs (g, m) with g a generator and m a sorted multiset
/// of generators, ordered by g then lexicographically by m. The product is
/// (g1, m1)(g2, m2) = (g1, m1 + {g2} + m2).
GradedAlgebra free_gperm(const std::vector<std::size_t>& generator_degrees, std::size_t max_degree,
                         const Field& field = Field::rationals());

/// Degree k is A_{2k}; typing dropped.
GradedAlgebra veronese_2(const GradedAlgebra& a);
/// A_{w}: unit in degree 0, zero in degrees 1..w-1, A_i for i >= w.
GradedAlgebra subring_truncation(const GradedAlgebra& a, std::size_t w);
/// Columns of bases[i] are the new basis of A_i in old coordinates. The
/// typing is replaced by new_typing (nullopt drops it).
GradedAlgebra change_basis(const GradedAlgebra& a, const std::vector<Matrix>& bases,
                           std::optional<Typing> new_typing);
GradedAlgebra restrict_degree(const GradedAlgebra& a, std::size_t d);

std::vector<std::size_t> hilbert(const GradedAlgebra& a);

GradedSubset zero_subset(const GradedAlgebra& a);
GradedSubset full_subset(const GradedAlgebra& a);
GradedSubset element_subset(const GradedAlgebra& a, const Homogeneous& x);
/// Two-sided ideal generated by s within the truncation.
GradedSubset generated_ideal(const GradedAlgebra& a, const GradedSubset& s);
/// Span of all products x y, x in I, y in J.
GradedSubset ideal_product(const GradedAlgebra& a, const GradedSubset& i, const GradedSubset& j);
/// Two-sided ideal generated by all commutators xy - yx.
GradedSubset commutator_ideal(const GradedAlgebra& a);
/// z in A_k with y z = 0 for every y of degree >= w (1 <= w <= max_degree).
TorsionReport left_torsion(const GradedAlgebra& a, std::size_t w);
/// z in A_k with z y = 0 for every y of degree >= w.
TorsionReport right_torsion(const GradedAlgebra& a, std::size_t w);

}  // namespace operadkit
