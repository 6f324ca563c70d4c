#pragma once

#include <string>
#include <vector>

#include "operadkit/algebra.hpp"
#include "operadkit/common.hpp"
#include "operadkit/operad.hpp"

namespace operadkit {

// Every functor validates its input when `validate` is set and throws the
// matching error on failure. Outputs are not re-checked here.

/// A_i = P(i+1), x . y = x o_1 y, unit = identity. Untyped.
/// Throws InvalidStructure.
GradedAlgebra forget_F(const TruncatedOperad& p, bool validate = true);

/// P(n) = A_{n-1}, trivial action, x o_i y = xy for every slot.
/// Throws InvalidStructure or NotGPerm.
TruncatedOperad g_sigma_triv(const GradedAlgebra& a, bool validate = true);

/// P(n) = A_{n-1} with s_k acting by +1 on even and -1 on odd basis vectors
/// and the signed slot-dependent compositions. Throws MissingTyping,
/// CharTwo, InvalidStructure or NotPGPerm.
TruncatedOperad g_a_triv(const GradedAlgebra& a, bool validate = true);

/// Basis change that makes rho(s_1) diagonal on every arity >= 2: the
/// columns are the canonical basis of the +1 eigenspace followed by that of
/// the -1 eigenspace. Arities whose rho(s_1) is already diagonal keep the
/// identity. Throws CharTwo or NotATrivial.
std::vector<Matrix> adapted_bases(const TruncatedOperad& p);

/// forget_F of p in adapted bases, typed by the eigenvalue of rho(s_1).
/// Throws InvalidStructure, NotATrivial or CharTwo.
GradedAlgebra f_a_triv(const TruncatedOperad& p, bool validate = true);

/// g_a_triv of a graded-commutative algebra with all-odd typing.
/// Throws NotCommutative.
TruncatedOperad g_sigma_sign(const GradedAlgebra& a, bool validate = true);

/// Human-readable differences of all structure constants; empty iff equal.
std::vector<std::string> diff(const TruncatedOperad& p, const TruncatedOperad& q);
/// Compares typings too: a typed and an untyped algebra differ.
std::vector<std::string> diff(const GradedAlgebra& a, const GradedAlgebra& b);

enum class FunctorPair { sigma_trivial, a_trivial };

struct RoundtripReport {
  /// Which composite was compared against the input.
  std::string composite;
  std::vector<std::string> differences;

  bool identical() const { return differences.empty(); }
};

/// sigma_trivial: A vs forget_F(g_sigma_triv(A)) with A's typing erased.
/// a_trivial: A vs f_a_triv(g_a_triv(A)).
RoundtripReport roundtrip(const GradedAlgebra& a, FunctorPair pair);
/// sigma_trivial: P vs g_sigma_triv(forget_F(P)).
/// a_trivial: P in adapted bases vs g_a_triv(f_a_triv(P)).
RoundtripReport roundtrip(const TruncatedOperad& p, FunctorPair pair);

/// Commutation identities of A-trivial operads on adapted basis pairs:
///   mu o_1 nu = (-1)^{(Ar mu - 1)(Ar nu - 1) t(mu) t(nu)} nu o_1 mu
///   mu o_i nu = (-1)^{(Ar nu - 1)(i - 1) t(mu) t(nu)} mu o_1 nu
/// with t the type from the eigenvalue of rho(s_1) (0 in arity 1).
/// Axiom names "swap" and "slot".
std::vector<Violation> check_a_trivial_commutation(const TruncatedOperad& p);

}  // namespace operadkit
