#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "operadkit/common.hpp"
#include "operadkit/operad.hpp"

namespace operadkit {

GradedSubset zero_subset(const TruncatedOperad& p);
GradedSubset full_subset(const TruncatedOperad& p);
/// Subset spanned by a single homogeneous element.
GradedSubset element_subset(const TruncatedOperad& p, const Homogeneous& x);

/// Smallest Sigma_n-stable subspace of P(n) containing s.
Subspace sigma_closure(const TruncatedOperad& p, std::size_t n, const Subspace& s);
bool is_sigma_stable(const TruncatedOperad& p, const GradedSubset& s);

/// I o J: Sigma-closure of the span of all x o_i y, x in I, y in J, within
/// the truncation.
GradedSubset ideal_product(const TruncatedOperad& p, const GradedSubset& i, const GradedSubset& j);
/// I . J: Sigma-closure of the span of all full compositions
/// x o (y_1, ..., y_m) = (((x o_m y_m) o_{m-1} y_{m-1}) ... o_1 y_1), x in
/// I(m), y_k in J, result arity within the truncation.
GradedSubset bullet_product(const TruncatedOperad& p, const GradedSubset& i, const GradedSubset& j);

/// Two-sided operad ideal generated by s within the truncation: closed under
/// the Sigma-action and under x o_i y, y o_i x for x in the ideal, y in P.
GradedSubset generated_ideal(const TruncatedOperad& p, const GradedSubset& s);

/// Nonzero ideals I, J with I o J = 0 within the truncation.
struct NonPrimeWitness {
  Homogeneous generator_i;
  Homogeneous generator_j;
  GradedSubset ideal_i;
  GradedSubset ideal_j;
};

/// Searches principal ideals generated by basis vectors. Returns nullopt when
/// no witness exists among them; that does not prove primeness.
std::optional<NonPrimeWitness> find_nonprime_witness(const TruncatedOperad& p);

/// Torsion computed from the compositions visible inside the truncation.
///
/// An arity with no visible constraint is reported as the whole component
/// and marked undetermined; determined components are over-approximations
/// of the true torsion because compositions above max_arity are invisible.
struct TorsionReport {
  std::size_t window = 0;
  std::size_t max_grade = 0;
  GradedSubset subsets;
  /// determined[k] is false when grade k had no checkable constraint.
  std::vector<bool> determined;
};

/// x in P(k) with y o_i x = 0 for all y in P(m), m >= w, all i.
TorsionReport left_torsion(const TruncatedOperad& p, std::size_t w);
/// x in P(k) with x o_i y = 0 for all y in P(n), n >= w, all i.
TorsionReport right_torsion(const TruncatedOperad& p, std::size_t w);
/// x in P(k) with x o (y_1..y_k) = 0 for all y_j of arity >= w.
TorsionReport bullet_right_torsion(const TruncatedOperad& p, std::size_t w);

struct CentralityResult {
  bool central = true;
  /// First failing (nu arity, basis index, i, j) when not central.
  std::string witness;
};

/// mu o_i nu = nu o_j mu for every basis nu and all slots, within the
/// truncation.
CentralityResult is_central(const TruncatedOperad& p, const Homogeneous& mu);

struct CentralSubspace {
  Subspace space;
  /// False when arity a admits no composition partner of arity >= 2.
  bool determined = false;
};
CentralSubspace central_subspace(const TruncatedOperad& p, std::size_t a);

/// defect[n] = dim P(n) - dim of the Sigma-closed span of x o_i y with
/// x, y of arity >= 2. Index 0 is 0; defect[1] = dim P(1).
std::vector<std::size_t> generator_defect(const TruncatedOperad& p);

}  // namespace operadkit
