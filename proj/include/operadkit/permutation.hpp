#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace operadkit {

/// An element of the symmetric group on n letters in one-line notation:
/// images()[k] is the image of the letter k+1 (letters are 1-based).
///
/// Composition follows (p * q)(x) = p(q(x)). The right action of Sigma_n on
/// operad components is realised so that (v * p) * q == v * (p * q).
class Permutation {
 public:
  /// Identity on n letters.
  explicit Permutation(std::size_t n = 1);
  /// Throws DimensionMismatch unless `images` is a bijection of {1..n}.
  explicit Permutation(std::vector<int> images);
  Permutation(std::initializer_list<int> images);

  static Permutation identity(std::size_t n) { return Permutation(n); }
  /// The transposition exchanging letters a and b.
  static Permutation transposition(std::size_t n, int a, int b);
  /// Adjacent transposition s_k = (k, k+1), 1 <= k < n.
  static Permutation adjacent(std::size_t n, int k);
  /// Cycle a_1 -> a_2 -> ... -> a_r -> a_1.
  static Permutation cycle(std::size_t n, std::initializer_list<int> letters);

  std::size_t size() const { return images_.size(); }
  int operator()(int letter) const { return images_[letter - 1]; }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  bool is_identity() const;
  std::size_t inversions() const;
  int sign() const { return inversions() % 2 == 0 ? 1 : -1; }
  bool is_alternating() const { return sign() == 1; }

  /// Reduced word k_1 ... k_r with *this == s_{k_1} * s_{k_2} * ... * s_{k_r}.
  std::vector<int> adjacent_word() const;

  /// "[2,1,3]"
  std::string to_string() const;

  friend Permutation operator*(const Permutation& p, const Permutation& q);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

std::ostream& operator<<(std::ostream& os, const Permutation& p);

/// All n! permutations of n letters in lexicographic order of image tables.
std::vector<Permutation> all_permutations(std::size_t n);

/// Block substitution theta_{k; b_1..b_k}(outer; inner_1..inner_k).
///
/// Letters are split into consecutive blocks of sizes b_1..b_k. Inside block
/// j the letters are permuted by inners[j]; block j is then moved to block
/// position outer(j). The result is the resulting map on letters.
Permutation block_substitution(const Permutation& outer,
                               std::span<const std::size_t> block_sizes,
                               std::span<const Permutation> inners);

/// sigma' of the equivariance axiom mu o_i (nu * sigma) = (mu o_i nu) * sigma'.
Permutation sigma_prime(std::size_t m, int i, const Permutation& sigma);

/// phi'' of the equivariance axiom (mu * phi) o_i nu = (mu o_{phi(i)} nu) * phi''.
Permutation phi_doubleprime(const Permutation& phi, int i, std::size_t n);

struct SignLemmaCase {
  std::string name;
  std::string statement;
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::string first_failure;

  bool passed() const { return failed == 0; }
};

struct SignLemmaReport {
  std::size_t m_max = 0;
  std::size_t n_max = 0;
  std::vector<SignLemmaCase> cases;

  bool all_passed() const;
  /// True when the four consequences (2a)-(2d) all hold.
  bool family_2_passed() const;
};

/// Exhaustive check of the sign identities for sigma' and phi'' over all
/// phi in Sigma_m (m <= m_max), sigma in Sigma_n and inner arities n <= n_max.
SignLemmaReport verify_sign_lemma(std::size_t m_max, std::size_t n_max);

}  // namespace operadkit
