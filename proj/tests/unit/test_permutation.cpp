#include <gtest/gtest.h>

#include <random>

#include "operadkit/errors.hpp"
#include "operadkit/permutation.hpp"

namespace operadkit {
namespace {

// Independent oracle: sign by counting cycles of even length.
int sign_by_cycles(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  int s = 1;
  for (std::size_t k = 1; k <= p.size(); ++k) {
    if (seen[k - 1]) continue;
    std::size_t len = 0;
    for (int x = static_cast<int>(k); !seen[x - 1]; x = p(x)) {
      seen[x - 1] = true;
      ++len;
    }
    if (len % 2 == 0) s = -s;
  }
  return s;
}

Permutation random_permutation(std::mt19937_64& rng, std::size_t n) {
  std::vector<int> v(n);
  for (std::size_t k = 0; k < n; ++k) v[k] = static_cast<int>(k + 1);
  std::shuffle(v.begin(), v.end(), rng);
  return Permutation(v);
}

TEST(Permutation, CompositionAppliesRightFactorFirst) {
  const Permutation p{2, 3, 1};
  const Permutation q{2, 1, 3};
  const Permutation pq = p * q;
  for (int x = 1; x <= 3; ++x) EXPECT_EQ(pq(x), p(q(x)));
}

TEST(Permutation, SignExamples) {
  EXPECT_EQ(Permutation::identity(5).sign(), 1);
  EXPECT_EQ((Permutation{2, 1}).sign(), -1);
  EXPECT_EQ((Permutation{2, 3, 1}).sign(), 1);
  EXPECT_TRUE((Permutation{2, 1, 4, 3}).is_alternating());
  EXPECT_FALSE((Permutation{2, 1}).is_alternating());
}

TEST(Permutation, SignMatchesCycleOracle) {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const auto& p : all_permutations(n)) EXPECT_EQ(p.sign(), sign_by_cycles(p)) << p;
  }
}

TEST(Permutation, RejectsNonBijections) {
  EXPECT_THROW(Permutation({1, 1}), DimensionMismatch);
  EXPECT_THROW(Permutation({0, 1}), DimensionMismatch);
}

TEST(Permutation, AdjacentWordReconstructs) {
  for (const auto& p : all_permutations(5)) {
    Permutation r = Permutation::identity(5);
    for (int k : p.adjacent_word()) r = r * Permutation::adjacent(5, k);
    EXPECT_EQ(r, p);
    EXPECT_EQ(p.adjacent_word().size(), p.inversions());
  }
}

TEST(BlockSubstitution, Examples) {
  const Permutation id1 = Permutation::identity(1);
  const Permutation id2 = Permutation::identity(2);
  std::vector<std::size_t> ones{1, 1};
  std::vector<Permutation> idinners{id1, id1};
  EXPECT_EQ(block_substitution(id2, ones, idinners), id2);

  // Block {1,2} is carried to the last two positions, letter 3 to the first:
  // 1 -> 2, 2 -> 3, 3 -> 1.
  std::vector<std::size_t> sizes{2, 1};
  std::vector<Permutation> inners{id2, id1};
  EXPECT_EQ(block_substitution(Permutation{2, 1}, sizes, inners), (Permutation{2, 3, 1}));

  std::vector<std::size_t> sizes2{1, 2};
  std::vector<Permutation> inners2{id1, Permutation{2, 1}};
  EXPECT_EQ(block_substitution(id2, sizes2, inners2), (Permutation{1, 3, 2}));
}

TEST(BlockSubstitution, SignIsOuterBlockSignTimesInnerSigns) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t k = 1 + rng() % 4;
    std::vector<std::size_t> sizes(k);
    std::vector<Permutation> inners;
    for (auto& s : sizes) {
      s = 1 + rng() % 3;
      inners.push_back(random_permutation(rng, s));
    }
    const Permutation outer = random_permutation(rng, k);
    const Permutation r = block_substitution(outer, sizes, inners);
    // Oracle: the block permutation crosses blocks a<b with outer(a)>outer(b),
    // contributing sizes[a]*sizes[b] inversions.
    long crossing = 0;
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = a + 1; b < k; ++b) {
        if (outer(static_cast<int>(a + 1)) > outer(static_cast<int>(b + 1))) crossing += sizes[a] * sizes[b];
      }
    }
    int expected = crossing % 2 == 0 ? 1 : -1;
    for (const auto& q : inners) expected *= q.sign();
    EXPECT_EQ(r.sign(), expected);
  }
}

TEST(SigmaPrime, Examples) {
  EXPECT_EQ(sigma_prime(3, 2, Permutation{2, 1}), (Permutation{1, 3, 2, 4}));
  for (std::size_t m = 1; m <= 4; ++m) {
    for (int i = 1; i <= static_cast<int>(m); ++i) {
      EXPECT_TRUE(sigma_prime(m, i, Permutation::identity(3)).is_identity());
    }
  }
  EXPECT_THROW(sigma_prime(3, 4, Permutation{2, 1}), DimensionMismatch);
}

TEST(SigmaPrime, IsHomomorphismAndFixesOutsideBlock) {
  for (std::size_t m = 1; m <= 4; ++m) {
    for (int i = 1; i <= static_cast<int>(m); ++i) {
      const auto perms = all_permutations(3);
      for (const auto& a : perms) {
        for (const auto& b : perms) EXPECT_EQ(sigma_prime(m, i, a * b), sigma_prime(m, i, a) * sigma_prime(m, i, b));
        const Permutation s = sigma_prime(m, i, a);
        for (int x = 1; x <= static_cast<int>(m + 2); ++x) {
          if (x < i || x > i + 2) EXPECT_EQ(s(x), x);
        }
      }
    }
  }
}

TEST(PhiDoublePrime, CocycleRule) {
  for (std::size_t m = 1; m <= 4; ++m) {
    const auto perms = all_permutations(m);
    for (std::size_t n = 1; n <= 3; ++n) {
      for (int i = 1; i <= static_cast<int>(m); ++i) {
        EXPECT_TRUE(phi_doubleprime(Permutation::identity(m), i, n).is_identity());
        for (const auto& phi : perms) {
          for (const auto& psi : perms) {
            EXPECT_EQ(phi_doubleprime(phi * psi, i, n), phi_doubleprime(phi, psi(i), n) * phi_doubleprime(psi, i, n));
          }
        }
      }
    }
  }
}

TEST(SignLemma, SmallAndFullRange) {
  EXPECT_TRUE(verify_sign_lemma(3, 2).all_passed());
  const auto r = verify_sign_lemma(5, 4);
  EXPECT_TRUE(r.all_passed());
  EXPECT_TRUE(r.family_2_passed());
  for (const auto& c : r.cases) EXPECT_GT(c.checked, 0u) << c.name;
  EXPECT_THROW(verify_sign_lemma(1, 2), DimensionMismatch);
}

TEST(SignLemma, ThreeCycleCaseDirectly) {
  // phi = (a, a+1, a+2), i = a+2, n even: phi'' is even.
  for (std::size_t m = 3; m <= 5; ++m) {
    for (int a = 1; a + 2 <= static_cast<int>(m); ++a) {
      const Permutation phi = Permutation::cycle(m, {a, a + 1, a + 2});
      EXPECT_EQ(phi_doubleprime(phi, a + 2, 2).sign(), 1);
      EXPECT_EQ(phi_doubleprime(phi, a, 2).sign(), -1);
    }
  }
}

}  // namespace
}  // namespace operadkit
