#include <gtest/gtest.h>

#include "printers.hpp"
#include "amitsur/coverage.hpp"
#include "amitsur/errors.hpp"
#include "amitsur/monomial.hpp"

using namespace amitsur;

namespace {

GroupRingElement gr(std::initializer_list<long> c) {
  std::vector<Integer> v;
  for (long x : c) v.emplace_back(x);
  return GroupRingElement(v.size(), v);
}

const CheckResult& find(const VerificationRecord& v, const std::string& name) {
  for (const auto& c : v.checks)
    if (c.name == name) return c;
  throw std::runtime_error("no check named " + name);
}

}  // namespace

TEST(NormSetMap, CanonicalForm) {
  // 1 + N = 2 + sigma + sigma^2 on [N = b] is phi_1
  const NormSetMap f(gr({2, 1, 1}), 0, 1);
  EXPECT_EQ(f.monomial(), GroupRingElement::one(3));
  EXPECT_EQ(f.shift(), Integer(1));
  EXPECT_EQ(f.target_exp(), Integer(4));
  EXPECT_EQ(f, NormSetMap::phi(3, 1, 1));
}

TEST(NormSetMap, PhiComposition) {
  EXPECT_EQ(compose(NormSetMap::phi(5, 2, 1 + 5 * 3), NormSetMap::phi(5, 3, 1)), NormSetMap::phi(5, 5, 1));
  const NormSetMap f(gr({0, 1, 0, 0, 2}), 1, 2);
  EXPECT_EQ(compose(NormSetMap::identity(5, f.target_exp()), f), f);
  EXPECT_EQ(compose(f, NormSetMap::identity(5, 2)), f);
}

TEST(NormSetMap, MonomialCommutesWithPhi) {
  const GroupRingElement p = gr({1, 2, 0, -1});
  const Integer k = 2, src = 1;
  const auto lhs = compose(NormSetMap::monomial_map(p, src + 4 * k), NormSetMap::phi(4, k, src));
  const auto pm = NormSetMap::monomial_map(p, src);
  const auto rhs = compose(NormSetMap::phi(4, augmentation(p) * k, pm.target_exp()), pm);
  EXPECT_EQ(lhs, rhs);
}

TEST(NormSetMap, CompositionErrors) {
  EXPECT_THROW(compose(NormSetMap::phi(3, 1, 7), NormSetMap::phi(3, 1, 1)), ExponentMismatch);
  EXPECT_THROW(compose(NormSetMap::phi(3, 1, 4), NormSetMap::phi(5, 1, 1)), OrderMismatch);
}

TEST(NormSetMap, TauConjugate) {
  const TauData t = TauData::make(3, 2);
  const auto f = NormSetMap::monomial_map(GroupRingElement::sigma_power(3, 1), 1);
  EXPECT_EQ(tau_conjugate(f, t).monomial(), NormSetMap::monomial_map(GroupRingElement::sigma_power(3, 2), 1).monomial());
  const auto fixed = NormSetMap::monomial_map(gr({0, 1, 1}), 1);
  EXPECT_EQ(tau_conjugate(fixed, t), fixed);
  const TauData t7 = TauData::make(7, 2);
  const NormSetMap g(gr({1, 2, 0, 3, 0, 0, 0}), 1, 1);
  EXPECT_EQ(tau_conjugate(tau_conjugate(tau_conjugate(g, t7), t7), t7), g);
}

TEST(NormSetMap, IsIdentity) {
  EXPECT_TRUE(is_identity(NormSetMap::identity(4, 1)));
  EXPECT_TRUE(is_identity(compose(NormSetMap::phi(6, -1, 7), NormSetMap(GroupRingElement::one(6) + GroupRingElement::full_norm(6), 0, 1))));
  EXPECT_FALSE(is_identity(NormSetMap::monomial_map(GroupRingElement::sigma_power(4, 1), 1)));
}

TEST(Certificate, ThreeTwoTwo) {
  const Certificate c = make_certificate(3, 2, 2);
  EXPECT_EQ(c.alpha_tilde, gr({0, 1, 1}));
  EXPECT_EQ(c.k, Integer(0));
  EXPECT_EQ(c.beta_tilde, gr({0, 1, 1}));
  EXPECT_EQ(c.s, Integer(1));
  const VerificationRecord v = verify_certificate(c);
  EXPECT_TRUE(v.passed());
  EXPECT_EQ(v.r_prime, Integer(1));
  EXPECT_EQ(v.final_shift, Integer(0));
}

TEST(Certificate, Identity) {
  for (std::size_t n : {3, 5, 7}) {
    const Certificate c = make_certificate(n, n - 1, 1);
    EXPECT_EQ(c.alpha_tilde, GroupRingElement::one(n));
    EXPECT_EQ(c.beta_tilde, GroupRingElement::one(n));
    EXPECT_EQ(c.k, Integer(0));
    EXPECT_EQ(c.s, Integer(0));
    const VerificationRecord v = verify_certificate(c);
    EXPECT_TRUE(v.passed());
    EXPECT_EQ(v.r_prime, Integer(0));
  }
}

TEST(Certificate, FiveFourTwo) {
  const Certificate c = make_certificate(5, 4, 2);
  EXPECT_EQ(augmentation(c.alpha_tilde), Integer(2) + 5 * c.k);
  EXPECT_EQ(mod_residue(augmentation(c.beta_tilde) * 2, 5), 1u);
  EXPECT_TRUE(is_tau_fixed(c.alpha_tilde, TauData::make(5, 4)));
  EXPECT_TRUE(verify_certificate(c).passed());
}

TEST(Certificate, NotCoveredAndBadExponent) {
  EXPECT_THROW(make_certificate(7, 2, 3), NotCovered);
  EXPECT_THROW(make_certificate(9, 8, 3), InvalidArgument);
}

TEST(Certificate, NegativeIntegerExponent) {
  const Certificate c = make_certificate(5, 4, -3);
  EXPECT_TRUE(verify_certificate(c).passed());
}

TEST(Certificate, CorruptedKIsCaught) {
  Certificate c = make_certificate(3, 2, 2);
  c.k += 1;
  const VerificationRecord v = verify_certificate(c);
  EXPECT_FALSE(v.passed());
  EXPECT_FALSE(find(v, "exponent bookkeeping: eps(alpha~) = l + k n").passed);
}

TEST(Certificate, SweepSmallOrders) {
  for (std::size_t n : {3, 5, 7})
    for (auto r : units_mod(n))
      for (auto l : coverage_subgroup(n, r).subgroup) {
        const auto v = verify_certificate(make_certificate(n, r, Integer(static_cast<unsigned long>(l))));
        EXPECT_TRUE(v.passed()) << n << "," << r << "," << l;
        EXPECT_EQ(v.final_shift, Integer(0));
      }
}
