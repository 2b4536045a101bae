#include <gtest/gtest.h>

#include "amitsur/crossed_product.hpp"
#include "amitsur/errors.hpp"

using namespace amitsur;

TEST(Cocycle, StandardTable) {
  const FieldTower f9 = builtin_finite(3, 2, 1);
  const FieldElement b = f9.scalar(2);
  const Cocycle c = standard_cyclic_cocycle(f9, b);
  EXPECT_EQ(c[0][0], f9.one());
  EXPECT_EQ(c[0][1], f9.one());
  EXPECT_EQ(c[1][0], f9.one());
  EXPECT_EQ(c[1][1], b);
  EXPECT_TRUE(cocycle_checks(f9, c).empty());
  EXPECT_THROW(standard_cyclic_cocycle(f9, f9.basis_element(1)), CocycleError);
  EXPECT_THROW(standard_cyclic_cocycle(f9, f9.zero()), CocycleError);
}

TEST(CrossedProduct, Relations) {
  const FieldTower f27 = builtin_finite(3, 3, 1);
  const FieldElement b = f27.scalar(2);
  const CrossedProduct a(f27, standard_cyclic_cocycle(f27, b));
  const FieldElement x = f27.normalize({1, 2, 1});
  EXPECT_EQ(a.mul(a.u(), a.embed(x)), a.mul(a.embed(f27.sigma(x)), a.u()));
  EXPECT_EQ(a.pow(a.u(), 3), a.embed(b));
  EXPECT_EQ(a.unflatten(a.flatten(a.term(x, 2))), a.term(x, 2));
  EXPECT_EQ(a.basis().size(), a.dim());
}

TEST(CrossedProduct, CorruptedCocycleRejected) {
  const FieldTower f9 = builtin_finite(3, 2, 1);
  Cocycle c = standard_cyclic_cocycle(f9, f9.scalar(2));
  c[1][1] = f9.basis_element(1);
  EXPECT_THROW(CrossedProduct(f9, c), CocycleError);
  const CrossedProduct broken = CrossedProduct::unchecked(f9, c);
  const CrossedElement u = broken.u();
  EXPECT_NE(broken.mul(broken.mul(u, u), u), broken.mul(u, broken.mul(u, u)));
}

TEST(Splitting, RoundTrips) {
  for (std::uint64_t seed = 0; seed < 20; ++seed)
    for (std::uint64_t q : {3u, 5u})
      for (std::size_t n : {2u, 3u}) {
        const RandomInstance inst = random_cyclic_instance(q, n, seed);
        const CrossedProduct& a = inst.algebra;
        ASSERT_TRUE(is_splitting(a, inst.chain));
        const LeftIdeal ideal = lambda_inv(a, inst.chain);
        EXPECT_EQ(ideal.basis.rank(), n * n - n);
        for (const auto& c : left_ideal_checks(a, ideal)) EXPECT_TRUE(c.passed) << c.name;
        const SplittingChain back = lambda(a, ideal);
        EXPECT_EQ(back, inst.chain);
        EXPECT_EQ(lambda_inv(a, back), ideal);
      }
}

TEST(Splitting, SmallExample) {
  // n = 2 over F_3: a 2-dimensional ideal in the 4-dimensional algebra
  const RandomInstance inst = random_cyclic_instance(3, 2, 4);
  EXPECT_EQ(inst.algebra.dim(), 4u);
  const LeftIdeal ideal = lambda_inv(inst.algebra, inst.chain);
  EXPECT_EQ(ideal.basis.rank(), 2u);
}

TEST(Splitting, NegativeControls) {
  const RandomInstance inst = random_cyclic_instance(5, 3, 9);
  const CrossedProduct& a = inst.algebra;
  const FieldTower& tw = a.tower();
  SplittingChain scaled = inst.chain;
  for (auto& z : scaled.z) z = tw.scale(Rational(3), z);
  EXPECT_FALSE(is_splitting(a, scaled));
  EXPECT_THROW(lambda_inv(a, scaled), NonSplittingChain);

  const LeftIdeal ideal = lambda_inv(a, inst.chain);
  Matrix rows = ideal.basis.rows;
  for (std::size_t j = 0; j < tw.dim(); ++j) rows.push_back(a.flatten(a.embed(tw.basis_element(j))));
  EXPECT_THROW(lambda(a, LeftIdeal{row_reduce(tw.base(), rows, a.dim())}), NotInOpenSubset);
}

TEST(Splitting, TwistedChainStillSplits) {
  const RandomInstance inst = random_cyclic_instance(5, 2, 2);
  const FieldTower& tw = inst.algebra.tower();
  const SplittingChain z = chain_from_partial_norms(tw, inst.y);
  EXPECT_TRUE(is_splitting(inst.algebra, z));
  EXPECT_TRUE(is_splitting(inst.algebra, twist_chain(tw, z, tw.normalize({1, 1}))));
}

TEST(NormElement, FiniteAndS3) {
  const RandomInstance inst = random_cyclic_instance(3, 3, 1);
  const FieldTower& tw = inst.algebra.tower();
  EXPECT_TRUE(norm_element_check(inst.algebra, tw.one(), 1).passed);
  for (std::uint64_t i = 1; i <= 6; ++i) EXPECT_TRUE(norm_element_check(inst.algebra, inst.w, i).passed) << i;
  EXPECT_FALSE(norm_element_check(inst.algebra, inst.w, 0).passed);

  const FieldTower s3 = builtin_s3();
  const CrossedProduct a(s3, standard_cyclic_cocycle(s3, s3.b()));
  EXPECT_TRUE(norm_element_check(a, s3.basis_element(2), 2).passed);
}

TEST(TauAction, S3Model) {
  const FieldTower s3 = builtin_s3();
  const CrossedProduct a(s3, standard_cyclic_cocycle(s3, s3.b()));
  for (const auto& c : tau_action_check(a)) EXPECT_TRUE(c.passed) << c.name;
  // u^3 = b = -1
  EXPECT_EQ(a.pow(a.u(), 3), a.embed(s3.scalar(-1)));
}

TEST(TensorPower, SquareAndIdentity) {
  const RandomInstance inst = random_cyclic_instance(3, 2, 5);
  for (unsigned l : {1u, 2u})
    for (const auto& c : tensor_power_check(inst.algebra, l)) EXPECT_TRUE(c.passed) << "l=" << l << ": " << c.name;
  EXPECT_THROW(tensor_power_check(inst.algebra, 3), InvalidArgument);
  const FieldTower s3 = builtin_s3();
  const CrossedProduct a(s3, standard_cyclic_cocycle(s3, s3.b()));
  EXPECT_THROW(tensor_power_check(a, 2), InvalidArgument);
}

TEST(RandomInstance, Deterministic) {
  const RandomInstance a = random_cyclic_instance(5, 3, 42);
  const RandomInstance b = random_cyclic_instance(5, 3, 42);
  EXPECT_EQ(a.y, b.y);
  EXPECT_EQ(a.chain, b.chain);
}
