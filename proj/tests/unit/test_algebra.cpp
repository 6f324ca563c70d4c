#include <gtest/gtest.h>

#include "operadkit/algebra.hpp"
#include "operadkit/catalog.hpp"
#include "operadkit/errors.hpp"
#include "random_structures.hpp"

namespace operadkit {
namespace {

using testing::Rng;

const Field Q = Field::rationals();

bool has_axiom(const std::vector<Violation>& v, const std::string& name) {
  for (const auto& x : v) {
    if (x.axiom == name) return true;
  }
  return false;
}

// Coefficients of (sum_g t^{d_g}) * prod_g 1/(1 - t^{d_g}) up to t^D.
std::vector<std::size_t> free_gperm_series(const std::vector<std::size_t>& degs, std::size_t D) {
  std::vector<std::size_t> s(D + 1, 0);
  s[0] = 1;
  for (std::size_t d : degs) {
    for (std::size_t k = d; k <= D; ++k) s[k] += s[k - d];
  }
  std::vector<std::size_t> out(D + 1, 0);
  out[0] = 1;
  for (std::size_t d : degs) {
    for (std::size_t k = d; k <= D; ++k) out[k] += s[k - d];
  }
  return out;
}

// Free associative algebra on two degree-1 letters: words of length d,
// basis index = the word read in binary.
GradedAlgebra free_associative(std::size_t D) {
  AlgebraData d;
  d.field = Q;
  d.max_degree = D;
  for (std::size_t i = 0; i <= D; ++i) d.dims.push_back(std::size_t{1} << i);
  d.unit = {Scalar::one(Q)};
  for (std::size_t i = 0; i <= D; ++i) {
    for (std::size_t j = 0; i + j <= D; ++j) d.products[{i, j}] = Matrix::identity(Q, d.dims[i + j]);
  }
  return GradedAlgebra(d);
}

TEST(Algebra, FreeGPermDimensionsMatchGeneratingFunction) {
  for (const auto& degs : std::vector<std::vector<std::size_t>>{{1}, {1, 1}, {1, 2}, {2, 3}, {1, 1, 1}}) {
    const GradedAlgebra a = free_gperm(degs, 7);
    EXPECT_EQ(hilbert(a), free_gperm_series(degs, 7));
    EXPECT_TRUE(check_associativity(a).empty());
    EXPECT_TRUE(check_gperm(a).empty());
  }
  EXPECT_EQ(hilbert(free_gperm({1, 1}, 6)), (std::vector<std::size_t>{1, 2, 4, 6, 8, 10, 12}));
}

TEST(Algebra, FreeAssociativeIsNotGPerm) {
  const GradedAlgebra a = free_associative(4);
  EXPECT_TRUE(check_associativity(a).empty());
  EXPECT_TRUE(has_axiom(check_gperm(a), "gperm"));
  EXPECT_FALSE(check_commutative(a).empty());
}

TEST(Algebra, Ex64Products) {
  const GradedAlgebra a = build_ex64_algebra(6);
  EXPECT_EQ(hilbert(a), (std::vector<std::size_t>{1, 2, 2, 2, 2, 2, 2}));
  const Vector x = unit_vector(Q, 2, 0), y = unit_vector(Q, 2, 1);
  EXPECT_TRUE(is_zero(a.multiply(1, x, 1, y)));
  EXPECT_TRUE(is_zero(a.multiply(1, y, 1, y)));
  EXPECT_EQ(a.multiply(1, y, 1, x), unit_vector(Q, 2, 1));
  EXPECT_EQ(a.multiply(1, x, 1, x), unit_vector(Q, 2, 0));
  EXPECT_TRUE(check_associativity(a).empty());
  EXPECT_TRUE(check_gperm(a).empty());
  EXPECT_FALSE(check_commutative(a).empty());
  EXPECT_THROW(a.multiply(4, unit_vector(Q, 2, 0), 3, x), TruncationExceeded);
}

TEST(Algebra, MutatedAssociativityIsCaught) {
  AlgebraData d = build_ex64_algebra(4).data();
  d.products.at({1, 1})(0, 3) = Scalar::one(Q);  // y*y = x^2
  EXPECT_TRUE(has_axiom(check_associativity(GradedAlgebra(d)), "associativity"));
  d = build_ex64_algebra(4).data();
  d.unit = {Scalar(Q, 2L)};
  EXPECT_TRUE(has_axiom(check_associativity(GradedAlgebra(d)), "unit"));
}

TEST(Algebra, ConstructorRejectsBadShapes) {
  AlgebraData d = build_ex64_algebra(3).data();
  d.dims[0] = 2;
  EXPECT_THROW(GradedAlgebra{d}, DimensionMismatch);
  d = build_ex64_algebra(3).data();
  d.typing = Typing{{}, {false}, {false, false}, {false, false}};
  EXPECT_THROW(GradedAlgebra{d}, DimensionMismatch);
  EXPECT_THROW(check_pgperm(build_ex64_algebra(3)), MissingTyping);
  EXPECT_THROW(check_pgc(build_ex64_algebra(3)), MissingTyping);
}

TEST(Algebra, VeroneseAndTruncation) {
  const GradedAlgebra a = free_gperm({1, 1}, 8);
  const GradedAlgebra v = veronese_2(a);
  EXPECT_EQ(hilbert(v), (std::vector<std::size_t>{1, 4, 8, 12, 16}));
  EXPECT_TRUE(check_associativity(v).empty());
  EXPECT_TRUE(check_gperm(v).empty());
  const GradedAlgebra t = subring_truncation(free_gperm({1, 1}, 6), 2);
  EXPECT_EQ(hilbert(t), (std::vector<std::size_t>{1, 0, 4, 6, 8, 10, 12}));
  EXPECT_TRUE(check_associativity(t).empty());
  EXPECT_EQ(hilbert(restrict_degree(a, 3)), (std::vector<std::size_t>{1, 2, 4, 6}));
}

TEST(Algebra, TypingHelpers) {
  const GradedAlgebra m = build_massey_algebra(2, 1, 4);
  EXPECT_TRUE(m.typed());
  EXPECT_FALSE(erase_typing(m).typed());
  const GradedAlgebra e = all_even_typing(m);
  for (std::size_t i = 1; i <= 4; ++i) {
    for (std::size_t k = 0; k < e.dim(i); ++k) EXPECT_EQ(e.type_of(i, k), 0);
  }
  const Vector x = unit_vector(Q, 2, 1);
  EXPECT_EQ(m.xi(x), scaled(Scalar(Q, -1L), x));
  EXPECT_EQ(e.xi(x), x);
}

TEST(Algebra, CheckerHierarchyOnCatalog) {
  // Massey algebras are graded-commutative and PGC under all-odd typing.
  for (auto [a, b] : std::vector<std::pair<std::size_t, std::size_t>>{{1, 0}, {1, 1}, {2, 1}, {3, 0}}) {
    const GradedAlgebra m = build_massey_algebra(a, b, 5);
    EXPECT_TRUE(check_associativity(m).empty());
    EXPECT_TRUE(check_graded_commutative(m).empty());
    EXPECT_TRUE(check_pgc(m).empty());
    EXPECT_TRUE(check_pgperm(m).empty());
  }
  // Two anticommuting degree-1 generators typed even break PGC.
  const auto v = check_pgc(all_even_typing(build_massey_algebra(2, 1, 4)));
  EXPECT_TRUE(has_axiom(v, "pgc-commutation"));
  EXPECT_FALSE(check_commutative(build_massey_algebra(2, 0, 2)).empty());
  const GradedAlgebra poly = build_polynomial(1, 5, PolyTyping::none);
  EXPECT_TRUE(check_commutative(poly).empty());
  EXPECT_FALSE(check_graded_commutative(poly).empty());
  EXPECT_TRUE(check_graded_commutative(build_polynomial(2, 6, PolyTyping::none)).empty());
}

TEST(Algebra, RandomPgcIsPGPerm) {
  Rng rng(5);
  for (int t = 0; t < 15; ++t) {
    const GradedAlgebra a = testing::random_pgc(rng, t % 3 ? Q : Field::prime(5), 5);
    ASSERT_TRUE(check_associativity(a).empty());
    ASSERT_TRUE(check_pgc(a).empty());
    EXPECT_TRUE(check_pgperm(a).empty());
  }
  for (int t = 0; t < 15; ++t) {
    const GradedAlgebra a = testing::random_pgperm(rng, t % 2 ? Q : Field::prime(5), 5);
    ASSERT_TRUE(check_associativity(a).empty());
    EXPECT_TRUE(check_pgperm(a).empty());
  }
}

TEST(Algebra, RandomCommutativeHierarchy) {
  Rng rng(17);
  for (int t = 0; t < 20; ++t) {
    const bool graded = t % 2;
    const GradedAlgebra a = testing::random_commutative(rng, Q, 5, graded);
    ASSERT_TRUE(check_associativity(a).empty());
    if (graded) {
      EXPECT_TRUE(check_graded_commutative(a).empty());
      EXPECT_TRUE(check_pgc(all_odd_typing(a)).empty());
    } else {
      EXPECT_TRUE(check_commutative(a).empty());
      EXPECT_TRUE(check_gperm(a).empty());
      EXPECT_TRUE(check_pgc(all_even_typing(a)).empty());
    }
  }
}

TEST(Algebra, ChangeBasisRoundTrip) {
  Rng rng(3);
  const GradedAlgebra a = testing::random_pgperm(rng, Q, 4);
  const GradedAlgebra b = testing::random_typed_basis_change(rng, a);
  EXPECT_TRUE(check_associativity(b).empty());
  EXPECT_TRUE(check_pgperm(b).empty());
  EXPECT_EQ(hilbert(a), hilbert(b));
}

TEST(Algebra, Ideals) {
  const GradedAlgebra ex63 = build_ex63_algebra(6);
  EXPECT_EQ(hilbert(ex63), (std::vector<std::size_t>{1, 2, 3, 4, 5, 6, 7}));
  EXPECT_TRUE(check_associativity(ex63).empty());
  const GradedSubset i = generated_ideal(ex63, element_subset(ex63, ex63_element(ex63, 1, 2)));
  EXPECT_FALSE(i.is_zero());
  EXPECT_TRUE(ideal_product(ex63, i, i).is_zero());
  const GradedSubset whole = generated_ideal(ex63, element_subset(ex63, ex63_element(ex63, 1, 1)));
  EXPECT_FALSE(ideal_product(ex63, whole, whole).is_zero());

  const GradedAlgebra ex64 = build_ex64_algebra(5);
  EXPECT_EQ(commutator_ideal(ex64).dims(), (std::vector<std::size_t>{0, 0, 1, 1, 1, 1}));
  EXPECT_TRUE(commutator_ideal(build_polynomial(1, 5, PolyTyping::none)).is_zero());
  EXPECT_EQ(generated_ideal(ex64, zero_subset(ex64)), zero_subset(ex64));
  EXPECT_TRUE(generated_ideal(ex64, full_subset(ex64)) == full_subset(ex64));
}

TEST(Algebra, Torsion) {
  const GradedAlgebra ex64 = build_ex64_algebra(6);
  const TorsionReport l = left_torsion(ex64, 1);
  for (std::size_t k = 1; k <= 5; ++k) {
    ASSERT_TRUE(l.determined[k]);
    EXPECT_EQ(l.subsets.parts[k].dim(), 1u) << k;
    EXPECT_TRUE(l.subsets.parts[k].contains(unit_vector(Q, 2, 1)));
  }
  EXPECT_FALSE(l.determined[6]);
  const TorsionReport r = right_torsion(ex64, 1);
  for (std::size_t k = 0; k <= 5; ++k) EXPECT_EQ(r.subsets.parts[k].dim(), 0u) << k;
  EXPECT_TRUE(left_torsion(build_polynomial(1, 5, PolyTyping::none), 2).subsets.parts[2].dim() == 0);
}

}  // namespace
}  // namespace operadkit
