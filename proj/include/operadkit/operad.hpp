#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "operadkit/common.hpp"
#include "operadkit/linalg.hpp"
#include "operadkit/permutation.hpp"

namespace operadkit {

/// (m, n, i): the partial composition P(m) (x) P(n) -> P(m+n-1) into slot i.
using CompositionKey = std::tuple<std::size_t, std::size_t, std::size_t>;

/// Raw structure constants of a reduced operad truncated at max_arity.
///
/// dims[0] is always 0. actions[n][k-1] is the matrix of the right action of
/// s_k = (k, k+1) on P(n), acting on column vectors (v * s_k = rho(s_k) v).
/// compositions[(m,n,i)] has shape dims[m+n-1] x (dims[m]*dims[n]); its
/// column a*dims[n]+b holds e_a o_i e_b. Missing keys mean zero maps.
struct OperadData {
  Field field;
  std::size_t max_arity = 1;
  std::vector<std::size_t> dims;
  std::vector<std::vector<Matrix>> actions;
  Vector identity;
  std::map<CompositionKey, Matrix> compositions;
};

/// A truncated operad with validated shapes. Axioms are not enforced on
/// construction; use check_axioms.
class TruncatedOperad {
 public:
  /// Validates every shape; fills in absent composition tensors with zeros.
  explicit TruncatedOperad(OperadData data);

  const OperadData& data() const { return data_; }
  const Field& field() const { return data_.field; }
  std::size_t max_arity() const { return data_.max_arity; }
  const std::vector<std::size_t>& dims() const { return data_.dims; }
  std::size_t dim(std::size_t n) const;
  const Vector& identity() const { return data_.identity; }

  /// rho(s_k) on P(n), 1 <= k < n.
  const Matrix& action(std::size_t n, int k) const;
  const Matrix& composition(std::size_t m, std::size_t n, std::size_t i) const;

  /// Matrix of v -> v * p on P(n).
  Matrix action_matrix(std::size_t n, const Permutation& p) const;
  Vector act(std::size_t n, const Vector& v, const Permutation& p) const;

  /// x o_i y for x in P(m), y in P(n). Throws TruncationExceeded when
  /// m+n-1 exceeds max_arity.
  Vector compose(std::size_t m, const Vector& x, std::size_t i, std::size_t n, const Vector& y) const;
  Homogeneous compose_partial(const Homogeneous& x, std::size_t i, const Homogeneous& y) const;
  /// e_a o_i y.
  Vector compose_basis_left(std::size_t m, std::size_t a, std::size_t i, std::size_t n, const Vector& y) const;
  /// x o_i e_b.
  Vector compose_basis_right(std::size_t m, const Vector& x, std::size_t i, std::size_t n, std::size_t b) const;

 private:
  void check_composable(std::size_t m, std::size_t i, std::size_t n) const;
  OperadData data_;
};

/// Every violated axiom instance, one record per (axiom, arities, slots)
/// with the first failing basis witness. Iterates basis elements and
/// adjacent transpositions only.
std::vector<Violation> check_axioms(const TruncatedOperad& p);

enum class ArityClass { zero, sigma_trivial, sigma_sign, a_trivial_mixed, not_a_trivial };
std::string to_string(ArityClass c);

struct SymmetryReport {
  /// Index 1..N; index 0 is unused and set to zero.
  std::vector<ArityClass> per_arity;
  bool sigma_trivial = false;
  bool sigma_sign = false;
  bool a_trivial = false;
  /// Minimal window w in 2..N such that every arity >= w has the property.
  std::optional<std::size_t> almost_sigma_trivial;
  std::optional<std::size_t> almost_sigma_sign;
  std::optional<std::size_t> almost_a_trivial;
};

bool arity_is_sigma_trivial(const TruncatedOperad& p, std::size_t n);
bool arity_is_sigma_sign(const TruncatedOperad& p, std::size_t n);
/// Every even permutation acts trivially, i.e. all rho(s_k) coincide.
bool arity_is_a_trivial(const TruncatedOperad& p, std::size_t n);
SymmetryReport classify_symmetry(const TruncatedOperad& p);

/// P(n) = P(n)_triv (+) P(n)_sign via the projectors (1 +- rho(s_1))/2.
/// Throws CharTwo, NotATrivial, or DimensionMismatch when n < 2.
std::pair<Subspace, Subspace> triv_sign_split(const TruncatedOperad& p, std::size_t n);

/// P_{w}: identity in arity 1, zero in arities 2..w-1, P(n) for n >= w.
TruncatedOperad truncation_suboperad(const TruncatedOperad& p, std::size_t w);

/// Same operad in new bases: the columns of bases[n] are the new basis of
/// P(n) in old coordinates. bases has max_arity+1 entries (entry 0 ignored).
TruncatedOperad change_basis(const TruncatedOperad& p, const std::vector<Matrix>& bases);

/// Same operad with max_arity lowered to n.
TruncatedOperad restrict_arity(const TruncatedOperad& p, std::size_t n);

/// Dimension of every component, index 0 included (always 0).
std::vector<std::size_t> hilbert(const TruncatedOperad& p);

}  // namespace operadkit
