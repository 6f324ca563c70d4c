#include <gtest/gtest.h>

#include "operadkit/catalog.hpp"
#include "operadkit/errors.hpp"
#include "operadkit/functors.hpp"
#include "random_structures.hpp"

namespace operadkit {
namespace {

using testing::Rng;

const Field Q = Field::rationals();

std::vector<std::size_t> shifted(const std::vector<std::size_t>& h) {
  std::vector<std::size_t> out{0};
  out.insert(out.end(), h.begin(), h.end());
  return out;
}

TEST(Functors, ForgetOfComIsPolynomialRing) {
  EXPECT_TRUE(diff(forget_F(build_com(6)), build_polynomial(1, 5, PolyTyping::none)).empty());
}

TEST(Functors, SigmaTrivialRoundTrips) {
  Rng rng(1);
  std::vector<GradedAlgebra> as{free_gperm({1, 1}, 6), build_ex64_algebra(6), build_polynomial(1, 6, PolyTyping::none)};
  for (int t = 0; t < 8; ++t) as.push_back(testing::random_gperm(rng, t % 2 ? Q : Field::prime(5), 5));
  for (const auto& a : as) {
    const TruncatedOperad p = g_sigma_triv(a);
    EXPECT_TRUE(check_axioms(p).empty());
    EXPECT_EQ(hilbert(p), shifted(hilbert(a)));
    EXPECT_TRUE(classify_symmetry(p).sigma_trivial);
    EXPECT_TRUE(diff(forget_F(p), a).empty());
    EXPECT_TRUE(roundtrip(a, FunctorPair::sigma_trivial).identical());
    EXPECT_TRUE(roundtrip(p, FunctorPair::sigma_trivial).identical());
  }
  EXPECT_TRUE(roundtrip(build_com(6), FunctorPair::sigma_trivial).identical());
}

TEST(Functors, ATrivialOnRandomPGPerm) {
  Rng rng(2);
  for (int t = 0; t < 12; ++t) {
    const GradedAlgebra a = testing::random_pgperm(rng, t % 2 ? Q : Field::prime(5), 5);
    const TruncatedOperad p = g_a_triv(a);
    ASSERT_TRUE(check_axioms(p).empty()) << check_axioms(p).front().to_string();
    EXPECT_EQ(hilbert(p), shifted(hilbert(a)));
    EXPECT_TRUE(classify_symmetry(p).a_trivial);
    EXPECT_TRUE(roundtrip(a, FunctorPair::a_trivial).identical());
  }
}

TEST(Functors, ATrivialRoundTripOnRandomBases) {
  Rng rng(12);
  for (int t = 0; t < 8; ++t) {
    const TruncatedOperad p = testing::random_operad(rng, Q, 5);
    const auto r = roundtrip(p, FunctorPair::a_trivial);
    EXPECT_TRUE(r.identical()) << (r.differences.empty() ? "" : r.differences.front());
  }
}

TEST(Functors, OddPolynomialGivesOpe) {
  const TruncatedOperad p = g_a_triv(build_polynomial(2, 6, PolyTyping::odd));
  EXPECT_TRUE(diff(p, build_ope(7)).empty());
  EXPECT_TRUE(roundtrip(build_ope(7), FunctorPair::a_trivial).identical());
  EXPECT_TRUE(check_a_trivial_commutation(build_ope(7)).empty());
  // The commutation identities need left torsion-freeness: x o_1 y = xy = 0
  // but y o_1 x = yx != 0 in the Sigma-trivial operad of k<x,y>/(xy, y^2).
  const auto v = check_a_trivial_commutation(build_ex64_operad(5));
  ASSERT_FALSE(v.empty());
  EXPECT_EQ(v.front().axiom, "swap");
}

TEST(Functors, SigmaSign) {
  const TruncatedOperad m10 = build_massey_operad(1, 0, 5);
  EXPECT_EQ(hilbert(m10), (std::vector<std::size_t>{0, 1, 1, 0, 0, 0}));
  const TruncatedOperad m11 = build_massey_operad(1, 1, 7);
  EXPECT_TRUE(classify_symmetry(m11).sigma_sign);
  EXPECT_TRUE(check_a_trivial_commutation(m11).empty());
  EXPECT_TRUE(roundtrip(build_massey_algebra(1, 1, 6), FunctorPair::a_trivial).identical());
  Rng rng(7);
  for (int t = 0; t < 6; ++t) {
    const GradedAlgebra a = testing::random_commutative(rng, Q, 5, true);
    const TruncatedOperad p = g_sigma_sign(a);
    EXPECT_TRUE(check_axioms(p).empty());
    EXPECT_TRUE(classify_symmetry(p).sigma_sign);
  }
}

TEST(Functors, InputValidation) {
  AlgebraData words;
  words.field = Q;
  words.max_degree = 3;
  for (std::size_t i = 0; i <= 3; ++i) words.dims.push_back(std::size_t{1} << i);
  words.unit = {Scalar::one(Q)};
  for (std::size_t i = 0; i <= 3; ++i) {
    for (std::size_t j = 0; i + j <= 3; ++j) words.products[{i, j}] = Matrix::identity(Q, words.dims[i + j]);
  }
  EXPECT_THROW(g_sigma_triv(GradedAlgebra(words)), NotGPerm);
  EXPECT_THROW(g_a_triv(build_ex64_algebra(3)), MissingTyping);
  EXPECT_THROW(g_a_triv(build_polynomial(2, 4, PolyTyping::odd, Field::prime(2))), CharTwo);
  EXPECT_THROW(g_a_triv(with_typing(build_ex64_algebra(3), Typing{{}, {false, true}, {false, true}, {false, true}})),
               NotPGPerm);
  EXPECT_THROW(g_sigma_sign(build_polynomial(1, 4, PolyTyping::none)), NotCommutative);
  EXPECT_THROW(f_a_triv(testing::associative_operad(4)), NotATrivial);

  OperadData d = build_com(4).data();
  d.compositions.at({2, 2, 1})(0, 0) = Scalar(Q, 2L);
  EXPECT_THROW(forget_F(TruncatedOperad(d)), InvalidStructure);
  EXPECT_NO_THROW(forget_F(TruncatedOperad(d), false));

  AlgebraData bad = build_ex64_algebra(3).data();
  bad.unit = {Scalar(Q, 3L)};
  EXPECT_THROW(g_sigma_triv(GradedAlgebra(bad)), InvalidStructure);
}

TEST(Functors, DiffReportsMutations) {
  Rng rng(9);
  const TruncatedOperad ope = build_ope(7);
  for (const auto& m : testing::ope_mutations(rng, 7, 20)) EXPECT_FALSE(diff(TruncatedOperad(m.data), ope).empty());
  EXPECT_TRUE(diff(ope, ope).empty());
  EXPECT_FALSE(diff(ope, build_ope(6)).empty());
  const GradedAlgebra m = build_massey_algebra(1, 1, 3);
  EXPECT_FALSE(diff(m, erase_typing(m)).empty());
}

}  // namespace
}  // namespace operadkit
