#include <gtest/gtest.h>

#include <random>

#include "printers.hpp"
#include "amitsur/errors.hpp"
#include "amitsur/group_ring.hpp"

using namespace amitsur;

namespace {

GroupRingElement gr(std::initializer_list<long> c) {
  std::vector<Integer> v;
  for (long x : c) v.emplace_back(x);
  return GroupRingElement(v.size(), v);
}

}  // namespace

TEST(GroupRing, Construction) {
  EXPECT_EQ(GroupRingElement::sigma_power(5, -1), gr({0, 0, 0, 0, 1}));
  EXPECT_EQ(GroupRingElement::sigma_power(5, 7), gr({0, 0, 1, 0, 0}));
  EXPECT_THROW(GroupRingElement(3, {Integer(1)}), InvalidArgument);
  EXPECT_THROW(GroupRingElement::zero(0), InvalidArgument);
}

// reference products from tests/oracle/derive.py
TEST(GroupRing, ConvolutionMatchesOracle) {
  EXPECT_EQ(gr({0, 1, 1}) * gr({0, 1, 1}), gr({2, 1, 1}));
  EXPECT_EQ(gr({1, -2, 0, 3}) * gr({2, 0, 1, -1}), gr({4, -1, -2, 3}));
  EXPECT_EQ(gr({3, 0, -1, 2, 5}) * gr({-1, 4, 0, 0, 2}), gr({17, 10, 5, 4, 9}));
}

TEST(GroupRing, OrderMismatch) {
  EXPECT_THROW(gr({1, 2}) + gr({1, 2, 3}), OrderMismatch);
  EXPECT_THROW(gr({1, 2}) * gr({1, 2, 3}), OrderMismatch);
}

TEST(GroupRing, PartialNormsMatchOracle) {
  EXPECT_EQ(partial_norm(5, 2, 3), gr({1, 0, 1, 0, 1}));
  EXPECT_EQ(partial_norm(6, 4, 4), gr({2, 0, 1, 0, 1, 0}));
  EXPECT_EQ(partial_norm(7, 3, 9), gr({2, 1, 1, 2, 1, 1, 1}));
  EXPECT_EQ(partial_norm(4, 1, 0), GroupRingElement::zero(4));
  EXPECT_EQ(partial_norm(4, 1, 4), GroupRingElement::full_norm(4));
}

TEST(GroupRing, Augmentation) {
  EXPECT_EQ(augmentation(gr({3, -1, 4})), Integer(6));
  EXPECT_EQ(augmentation(GroupRingElement::full_norm(9)), Integer(9));
}

TEST(GroupRing, TauAction) {
  const TauData t = TauData::make(7, 2);
  EXPECT_EQ(t.m, 3u);
  // coefficient at i moves to 2i mod 7
  EXPECT_EQ(tau_apply(gr({5, 1, 0, 3, 0, 0, 0}), t), gr({5, 0, 1, 0, 0, 0, 3}));
  const TauData d = TauData::make(5, 4);
  EXPECT_TRUE(is_tau_fixed(gr({0, 1, 0, 0, 1}), d));
  EXPECT_FALSE(is_tau_fixed(gr({0, 1, 0, 0, 0}), d));
  EXPECT_THROW(TauData::make(4, 2), InvalidArgument);
  EXPECT_THROW(TauData::make(5, 5), InvalidArgument);
  EXPECT_THROW(tau_apply(gr({1, 2}), d), OrderMismatch);
}

TEST(GroupRing, Formatting) {
  EXPECT_EQ(gr({2, 1, 1}).to_string(), "2 + sigma + sigma^2");
  EXPECT_EQ(gr({0, -3, 0, 1}).to_string(), "-3*sigma + sigma^3");
  EXPECT_EQ(GroupRingElement::zero(3).to_string(), "0");
}

TEST(GroupRing, RandomizedLaws) {
  std::mt19937_64 rng(11);
  auto rand_el = [&](std::size_t n) {
    std::vector<Integer> c(n);
    for (auto& x : c) x = static_cast<long>(rng() % 9) - 4;
    return GroupRingElement(n, c);
  };
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = 1 + rng() % 24;
    const auto a = rand_el(n), b = rand_el(n), c = rand_el(n);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(augmentation(a * b), augmentation(a) * augmentation(b));
    const auto g = static_cast<std::int64_t>(rng() % n);
    const std::uint64_t ii = 1 + rng() % (2 * n), jj = 1 + rng() % (2 * n);
    ASSERT_EQ(partial_norm(n, g, jj) * partial_norm(n, g * static_cast<std::int64_t>(jj), ii),
              partial_norm(n, g, ii * jj))
        << "n=" << n << " g=" << g << " i=" << ii << " j=" << jj;
  }
}
