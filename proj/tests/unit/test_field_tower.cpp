#include <gtest/gtest.h>

#include <sstream>

#include "amitsur/errors.hpp"
#include "amitsur/field_tower.hpp"
#include "amitsur/fixture.hpp"
#include "amitsur/monomial.hpp"

using namespace amitsur;

class S3Tower : public ::testing::Test {
 protected:
  const FieldTower tw = builtin_s3();
  FieldElement zeta() const { return tw.basis_element(1); }
  FieldElement c() const { return tw.basis_element(2); }
};

TEST_F(S3Tower, SelfChecksPass) {
  for (const auto& chk : FieldTower::self_check(tw.data())) EXPECT_TRUE(chk.passed) << chk.name;
  EXPECT_EQ(tw.dim(), 6u);
  EXPECT_EQ(tw.n(), 3u);
  EXPECT_EQ(tw.m(), 2u);
  EXPECT_EQ(tw.r(), 2u);
  EXPECT_EQ(tw.data().t, 2u);
  EXPECT_EQ(tw.data().s, Integer(1));
}

TEST_F(S3Tower, Arithmetic) {
  // zeta^2 + zeta + 1 = 0 and c^3 = 2
  EXPECT_TRUE(tw.is_zero(tw.add(tw.add(tw.mul(zeta(), zeta()), zeta()), tw.one())));
  EXPECT_EQ(tw.pow(c(), 3), tw.scalar(2));
  const FieldElement x = tw.add(c(), tw.mul(zeta(), tw.scalar(3)));
  EXPECT_EQ(tw.mul(x, tw.inverse(x)), tw.one());
  EXPECT_THROW(tw.inverse(tw.zero()), NotInvertible);
}

TEST_F(S3Tower, Automorphisms) {
  EXPECT_EQ(tw.sigma(c()), tw.mul(zeta(), c()));
  EXPECT_EQ(tw.sigma(zeta()), zeta());
  EXPECT_EQ(tw.tau(c()), c());
  EXPECT_EQ(tw.tau(zeta()), tw.mul(zeta(), zeta()));
  for (std::size_t i = 0; i < tw.dim(); ++i) {
    const FieldElement e = tw.basis_element(i);
    EXPECT_EQ(tw.tau(tw.sigma(e), -1), tw.sigma(tw.tau(e, -1), 2));
  }
  EXPECT_EQ(tw.l_dimension(), 2u);
  EXPECT_EQ(tw.fixed_dimension(tw.data().tau), 3u);
}

TEST_F(S3Tower, Norms) {
  EXPECT_EQ(tw.norm(tw.scalar(-1)), tw.b());
  EXPECT_EQ(tw.norm(c()), tw.scalar(2));
  const FieldElement x = tw.add(c(), zeta());
  const FieldElement y = tw.sub(tw.one(), tw.mul(c(), c()));
  EXPECT_EQ(tw.norm(tw.mul(x, y)), tw.mul(tw.norm(x), tw.norm(y)));
}

TEST_F(S3Tower, MonomialsAndTauHat) {
  const FieldElement m1 = tw.scalar(-1);
  const GroupRingElement p(3, {0, 1, 1});
  EXPECT_EQ(apply_monomial(tw, p, m1), tw.one());
  EXPECT_EQ(apply_monomial(tw, GroupRingElement::one(3), c()), c());
  EXPECT_EQ(apply_monomial(tw, GroupRingElement::full_norm(3), c()), tw.norm(c()));

  const NormSetPoint pt = make_point(tw, m1, 1);
  const NormSetPoint th = tau_hat(tw, pt);
  EXPECT_EQ(th.x, m1);
  EXPECT_EQ(th.k, Integer(1));
  EXPECT_THROW(make_point(tw, c(), 1), InvalidArgument);

  const NormSetPoint shifted = phi_k_apply(tw, pt, 1);
  EXPECT_EQ(shifted.x, tw.one());
  EXPECT_EQ(shifted.k, Integer(4));
  EXPECT_TRUE(on_norm_set(tw, shifted.x, shifted.k));
  const NormSetPoint back = phi_k_apply(tw, shifted, -1);
  EXPECT_EQ(back.x, pt.x);
  EXPECT_EQ(back.k, pt.k);
}

TEST_F(S3Tower, TauHatProperties) {
  for (const auto& pt : sample_points(tw, 1, 10, 3)) {
    const NormSetPoint th = tau_hat(tw, pt);
    EXPECT_TRUE(on_norm_set(tw, th.x, th.k));
    EXPECT_EQ(tau_hat(tw, th).x, pt.x);
    const GroupRingElement p(3, {1, -1, -1});
    const NormSetPoint img{apply_monomial(tw, p, pt.x), pt.k * augmentation(p)};
    EXPECT_EQ(tau_hat(tw, img).x, apply_monomial(tw, p, th.x));
    const NormSetMap f(GroupRingElement(3, {2, 0, 1}), 1, pt.k);
    EXPECT_TRUE(on_norm_set(tw, apply_map(tw, f, pt).x, f.target_exp()));
    EXPECT_THROW(apply_map(tw, NormSetMap::identity(3, pt.k + 1), pt), ExponentMismatch);
  }
}

TEST(FiniteTower, ModulusIsSmallestIrreducible) {
  // x^2 + 1 over F_3 (tests/oracle/derive.py); x^2 = -1
  const FieldTower f9 = builtin_finite(3, 2, 1);
  const FieldElement x = f9.basis_element(1);
  EXPECT_EQ(f9.mul(x, x), f9.scalar(-1));
  // x^3 + 2x + 1 over F_3
  const FieldTower f27 = builtin_finite(3, 3, 1);
  const FieldElement y = f27.basis_element(1);
  EXPECT_EQ(f27.pow(y, 3), f27.normalize({-1, -2, 0}));
  // x^4 + x + 1 over F_2 for F_16 = F_4^2
  const FieldTower f16 = builtin_finite(4, 2, 1);
  const FieldElement z = f16.basis_element(1);
  EXPECT_EQ(f16.pow(z, 4), f16.normalize({1, 1, 0, 0}));
  EXPECT_EQ(f16.l_dimension(), 2u);
}

TEST(FiniteTower, NormOneCount) {
  const FieldTower f9 = builtin_finite(3, 2, 1);
  int count = 0;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      if (on_norm_set(f9, {Rational(a), Rational(b)}, 0)) ++count;
  EXPECT_EQ(count, 4);
  // the norm x -> x^4 lands in F_3
  const FieldElement x{Rational(2), Rational(1)};
  EXPECT_EQ(f9.norm(x), f9.pow(x, 4));
  EXPECT_EQ(f9.sigma(f9.norm(x)), f9.norm(x));
}

TEST(FiniteTower, Errors) {
  EXPECT_THROW(builtin_finite(6, 2, 1), InvalidArgument);
  EXPECT_THROW(builtin_finite(3, 1, 1), InvalidArgument);
  EXPECT_THROW(builtin_finite(5, 2, 10), InvalidArgument);
}

TEST(Fixture, RoundTrip) {
  const FieldTower s3 = builtin_s3();
  std::stringstream buf;
  write_tower(buf, s3);
  const FieldTower back = load_tower(buf);
  EXPECT_EQ(back.data().mul, s3.data().mul);
  EXPECT_EQ(back.data().sigma, s3.data().sigma);
  EXPECT_EQ(back.data().tau, s3.data().tau);
  EXPECT_EQ(back.b(), s3.b());
  EXPECT_EQ(back.lambda(), s3.lambda());
}

TEST(Fixture, FileMatchesBuiltin) {
  const FieldTower f = load_tower_file(AMITSUR_FIXTURE_DIR "/s3.tower");
  EXPECT_EQ(f.data().mul, builtin_s3().data().mul);
}

TEST(Fixture, Errors) {
  std::stringstream missing("n 3\n");
  EXPECT_THROW(load_tower(missing), FixtureError);
  std::stringstream bad("basis 1 x\nn 2\nm 1\nr 1\nt 1\ns 0\nbogus 1 2\n");
  EXPECT_THROW(load_tower(bad), FixtureError);
  // well-formed but not a field tower: sigma is not an automorphism
  std::stringstream wrong(
      "characteristic 0\nbasis 1 x\nn 2\nm 1\nr 1\nt 1\ns 0\n"
      "mul 0 0 0 1\nmul 0 1 1 1\nmul 1 0 1 1\nmul 1 1 0 2\n"
      "sigma 0 0 1\nsigma 1 1 2\ntau 0 0 1\ntau 1 1 1\nb 0 1\nlambda 0 1\n");
  EXPECT_THROW(load_tower(wrong), InvalidArgument);
  EXPECT_THROW(load_tower_file("/nonexistent/tower"), FixtureError);
}
