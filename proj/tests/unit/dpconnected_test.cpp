#include "disclosure/dpconnected.hpp"

#include <gtest/gtest.h>

#include <random>

#include "disclosure/catalog.hpp"
#include "disclosure/errors.hpp"
#include "disclosure/game.hpp"
#include "disclosure/lpmech.hpp"
#include "test_util.hpp"

using namespace disclosure;
using namespace disclosure::dp;
using disclosure::testing::R;

namespace {

SingleBuyerInstance gap(const char* delta) {
  return SingleBuyerInstance::from(catalog::gap_instance(R(delta)));
}

SingleBuyerInstance random_single(std::mt19937_64& rng, std::size_t n) {
  return SingleBuyerInstance(disclosure::testing::random_values(rng, n),
                             disclosure::testing::random_probabilities(rng, n));
}

}  // namespace

TEST(BuyerUtility, GapInstance) {
  const auto inst = gap("1/2");
  auto bv = buyer_utility(inst, {0, 1});
  EXPECT_EQ(bv.price, R("2"));
  EXPECT_EQ(bv.utility, R("0"));
  bv = buyer_utility(inst, {0, 2});
  EXPECT_EQ(bv.price, R("1"));
  EXPECT_EQ(bv.utility, R("1/6"));
  bv = buyer_utility(inst, {1});
  EXPECT_EQ(bv.price, R("2"));
  EXPECT_EQ(bv.utility, R("0"));
  EXPECT_THROW(buyer_utility(inst, {}), ValidationError);
  EXPECT_THROW(buyer_utility(inst, {3}), ValidationError);
}

TEST(BuyerUtility, UpperBoundAtLowestPrice) {
  std::mt19937_64 rng(47);
  for (int it = 0; it < 100; ++it) {
    const auto inst = random_single(rng, 5);
    Block msg;
    for (std::size_t i = 0; i < 5; ++i) {
      if (rng() & 1U) msg.push_back(i);
    }
    if (msg.empty()) continue;
    Rational bound;
    for (auto i : msg) bound += inst.prob(i) * (inst.value(i) - inst.value(msg.front()));
    EXPECT_LE(buyer_utility(inst, msg).utility, bound);
  }
}

TEST(SingleBuyerInstance, Validation) {
  EXPECT_THROW(SingleBuyerInstance({R("2"), R("1")}, {R("1/2"), R("1/2")}), ValidationError);
  EXPECT_THROW(SingleBuyerInstance({R("1"), R("2")}, {R("1/2"), R("1/3")}), ValidationError);
  EXPECT_THROW(SingleBuyerInstance({R("0"), R("2")}, {R("1/2"), R("1/2")}), ValidationError);
}

TEST(OptimalConnected, Examples) {
  const auto g = optimal_connected(gap("1/2"));
  EXPECT_EQ(g.utility, R("1/18"));
  EXPECT_EQ(g.partition, (SetPartition{{0, 1, 2}}));

  const auto one = optimal_connected(SingleBuyerInstance({R("3")}, {R("1")}));
  EXPECT_EQ(one.partition, (SetPartition{{0}}));
  EXPECT_EQ(one.utility, R("0"));

  const auto two = optimal_connected(SingleBuyerInstance({R("1"), R("2")}, {R("1/2"), R("1/2")}));
  EXPECT_EQ(two.partition, (SetPartition{{0, 1}}));
  EXPECT_EQ(two.utility, R("1/2"));
}

TEST(BruteForceConnected, Examples) {
  EXPECT_EQ(enumerate_connected_partitions({0, 1, 2}).size(), 4U);
  EXPECT_EQ(brute_force_connected(gap("1/2")).utility, R("1/18"));
  std::vector<Rational> v, p;
  for (int i = 1; i <= 21; ++i) {
    v.emplace_back(i);
    p.emplace_back(1, 21);
  }
  EXPECT_THROW(brute_force_connected(SingleBuyerInstance(v, p)), GuardExceeded);
}

TEST(OptimalConnected, MatchesBruteForce) {
  std::mt19937_64 rng(53);
  for (int it = 0; it < 60; ++it) {
    const auto inst = random_single(rng, 1 + it % 10);
    const auto dp = optimal_connected(inst);
    EXPECT_EQ(dp.utility, brute_force_connected(inst).utility);
    EXPECT_EQ(partition_utility(inst, dp.partition), dp.utility);
    for (std::size_t i = 1; i < dp.table.size(); ++i) {
      EXPECT_GE(dp.table[i].utility, dp.table[i - 1].utility);
    }
  }
}

TEST(OptimalConnected, NeverBeatsUnconstrainedSearch) {
  std::mt19937_64 rng(59);
  for (int it = 0; it < 10; ++it) {
    const auto inst = random_single(rng, 3 + it % 3);
    const auto best = game::search_profiles(inst.to_discrete()).front().outcome.total_surplus;
    EXPECT_LE(optimal_connected(inst).utility, best);
  }
}

TEST(PostedPrice, AgreesWithLp) {
  std::mt19937_64 rng(61);
  for (int it = 0; it < 20; ++it) {
    const auto inst = random_single(rng, 2 + it % 4);
    Block all(inst.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    const auto sol = solve_mechanism(inst.to_discrete());
    EXPECT_EQ(sol.buyer_surplus, buyer_utility(inst, all).utility);
  }
}
