#pragma once

#include <cstddef>
#include <vector>

#include "operadkit/algebra.hpp"
#include "operadkit/operad.hpp"

namespace operadkit {

/// Commutative operad: P(n) = k for n >= 1, trivial action, every
/// composition sends basis (x) basis to basis.
TruncatedOperad build_com(std::size_t max_arity, const Field& field = Field::rationals());

/// P(n) = k mu_n for odd n and 0 for even n; sign action;
/// mu_n o_i mu_m = mu_{n+m-1}.
TruncatedOperad build_ope(std::size_t max_arity, const Field& field = Field::rationals());

/// Graded-commutative algebra on a exterior generators x_1..x_a of degree 1
/// and b polynomial generators y_1..y_b of degree 2, all-odd typing.
/// Degree-k basis: pairs (S, alpha), S a sorted subset of {1..a}, alpha an
/// exponent vector, |S| + 2|alpha| = k, ordered lexicographically by
/// (S, alpha). x_S x_T = 0 when S and T meet, else the sign of the merge.
GradedAlgebra build_massey_algebra(std::size_t a, std::size_t b, std::size_t max_degree,
                                   const Field& field = Field::rationals());
/// g_sigma_sign of the algebra above, at max_arity = max_degree + 1.
TruncatedOperad build_massey_operad(std::size_t a, std::size_t b, std::size_t max_arity,
                                    const Field& field = Field::rationals());

/// Degree-i basis x_{i,1..i+1} (i >= 1), unit in degree 0,
/// x_{i,s} x_{j,t} = x_{i+j,t} if s = 1 and 0 otherwise. Untyped.
GradedAlgebra build_ex63_algebra(std::size_t max_degree, const Field& field = Field::rationals());
/// Element x_{i,s} of the algebra above (s is 1-based).
Homogeneous ex63_element(const GradedAlgebra& a, std::size_t i, std::size_t s);

/// k<x,y>/(xy, y^2), deg x = deg y = 1. Degree-k basis (x^k, y x^{k-1}).
GradedAlgebra build_ex64_algebra(std::size_t max_degree, const Field& field = Field::rationals());
/// g_sigma_triv of the algebra above at max_arity = max_degree + 1.
TruncatedOperad build_ex64_operad(std::size_t max_arity, const Field& field = Field::rationals());

enum class PolyTyping { none, even, odd };

/// k[x] with deg x = generator_degree >= 1; basis x^k in degree k*deg x.
GradedAlgebra build_polynomial(std::size_t generator_degree, std::size_t max_degree, PolyTyping typing,
                               const Field& field = Field::rationals());

}  // namespace operadkit
