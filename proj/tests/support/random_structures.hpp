#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "operadkit/algebra.hpp"
#include "operadkit/operad.hpp"

namespace operadkit::testing {

using Rng = std::mt19937_64;

/// Monomial quotient of a commutative polynomial ring on 1..3 generators of
/// degrees 1..3. With `graded` set, odd-degree generators square to zero and
/// anticommute; otherwise every generator commutes. Monomials are killed
/// greedily until each degree has dimension <= max_dim. Untyped.
GradedAlgebra random_commutative(Rng& rng, const Field& field, std::size_t max_degree, bool graded,
                                 std::size_t max_dim = 3);

/// free_gperm on 1..3 generators modulo the span of words whose content is
/// divisible by a killed content monomial; dimension <= max_dim per degree.
GradedAlgebra random_gperm(Rng& rng, const Field& field, std::size_t max_degree, std::size_t max_dim = 3);

/// k + G_+ + O_+ with G a GPerm algebra typed even, O graded-commutative
/// typed odd and G_+ O_+ = O_+ G_+ = 0, followed by a random type-preserving
/// basis change.
GradedAlgebra random_pgperm(Rng& rng, const Field& field, std::size_t max_degree, std::size_t max_dim = 3);

/// As random_pgperm with G commutative, so the result is PGC.
GradedAlgebra random_pgc(Rng& rng, const Field& field, std::size_t max_degree, std::size_t max_dim = 3);

/// Random invertible matrix with entries in -2..2 whose nonzero entries
/// only join indices with equal `klass`.
Matrix random_block_invertible(Rng& rng, const Field& field, const std::vector<int>& klass);

/// Random basis change of every positive degree respecting the typing.
GradedAlgebra random_typed_basis_change(Rng& rng, const GradedAlgebra& a);

/// g_sigma_triv of a random GPerm algebra or g_a_triv of a random PGPerm
/// algebra, then an arbitrary random basis change in every arity.
TruncatedOperad random_operad(Rng& rng, const Field& field, std::size_t max_arity);

/// Ope at max_arity with one entry (identity, an action matrix entry or a
/// composition entry) replaced by a different value in -2..2.
struct Mutation {
  OperadData data;
  std::string where;
};
std::vector<Mutation> ope_mutations(Rng& rng, std::size_t max_arity, std::size_t count);

/// P(n) = k Sigma_n with basis in all_permutations order, e_s * p = e_{s p}
/// and e_s o_i e_t = e_{sigma_prime(m, s(i), t) phi''(s, i, n)}.
TruncatedOperad associative_operad(std::size_t max_arity, const Field& field = Field::rationals());

}  // namespace operadkit::testing
