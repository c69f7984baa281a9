#include "disclosure/game.hpp"

#include <gtest/gtest.h>

#include <random>

#include "disclosure/catalog.hpp"
#include "disclosure/errors.hpp"
#include "test_util.hpp"

using namespace disclosure;
using namespace disclosure::game;
using disclosure::testing::R;

TEST(EvaluateProfile, ThreeTypePairNoDisclosure) {
  const auto inst = catalog::three_type_pair();
  const auto out = evaluate_profile(inst, no_disclosure_profile(inst));
  EXPECT_EQ(out.total_surplus, R("3/8"));
  EXPECT_EQ(out.unsold_probability[0], R("1/16"));
  EXPECT_FALSE(out.efficient);
  EXPECT_FALSE(out.always_all_sold);
}

TEST(EvaluateProfile, ThreeTypePairSeparatingLowType) {
  const auto inst = catalog::three_type_pair();
  const SetPartition sep{{0}, {1, 2}};
  const auto out = evaluate_profile(inst, {sep, sep});
  // (3/4)^2 * 2/9
  EXPECT_EQ(out.total_surplus, R("1/8"));
  EXPECT_FALSE(out.efficient);
  const auto& both_high = out.per_message[3];
  ASSERT_EQ(both_high.blocks, (std::vector<std::size_t>{1, 1}));
  EXPECT_EQ(both_high.probability, R("9/16"));
  EXPECT_EQ(both_high.solution->buyer_surplus, R("2/9"));
  const auto& post = both_high.conditioned->instance;
  const auto& mech = both_high.solution->mechanism;
  EXPECT_EQ((interim_payment(post, mech, 0, 1) + interim_payment(post, mech, 1, 1)) /
                (interim_allocation(post, mech, 0, 1, 0) + interim_allocation(post, mech, 1, 1, 0)),
            R("11/4"));
}

TEST(EvaluateProfile, FullDisclosureExtractsEverything) {
  std::mt19937_64 rng(41);
  for (int it = 0; it < 10; ++it) {
    const auto inst = disclosure::testing::random_instance(rng, 1 + it % 2, 3, 1 + it % 2);
    const auto out = evaluate_profile(inst, full_disclosure_profile(inst));
    EXPECT_EQ(out.total_surplus, R("0"));
  }
}

TEST(EvaluateProfile, MessageDecompositionIsExact) {
  std::mt19937_64 rng(43);
  for (int it = 0; it < 10; ++it) {
    const auto inst = disclosure::testing::random_instance(rng, 2, 3, 1);
    const auto parts = enumerate_set_partitions(3);
    const PartitionProfile prof{parts[rng() % parts.size()], parts[rng() % parts.size()]};
    const auto out = evaluate_profile(inst, prof);
    Rational prob, surplus, revenue;
    for (const auto& m : out.per_message) {
      prob += m.probability;
      surplus += m.probability * m.solution->buyer_surplus;
      revenue += m.probability * m.solution->revenue;
    }
    EXPECT_EQ(prob, R("1"));
    EXPECT_EQ(surplus, out.total_surplus);
    EXPECT_EQ(revenue, out.expected_revenue);
    EXPECT_EQ(out.buyer_utility[0] + out.buyer_utility[1], out.total_surplus);
  }
}

TEST(EvaluateProfile, MergingBlocksWithSameMenuKeepsOutcome) {
  const DiscreteInstance inst(2, {{{R("1/4"), {R("10"), R("12")}},
                                   {R("1/4"), {R("12"), R("10")}},
                                   {R("1/2"), {R("1"), R("1")}}}});
  SolveCache cache;
  const auto split = evaluate_profile(inst, {{{0}, {1}, {2}}}, cache);
  const auto menu0 = menu_entries(split.per_message[0].conditioned->instance, split.per_message[0].solution->mechanism);
  const auto menu1 = menu_entries(split.per_message[1].conditioned->instance, split.per_message[1].solution->mechanism);
  ASSERT_EQ(menu0.size(), 1U);
  ASSERT_EQ(menu1.size(), 1U);
  ASSERT_EQ(menu0[0].bundle, menu1[0].bundle);
  ASSERT_EQ(menu0[0].price, menu1[0].price);
  const auto merged = evaluate_profile(inst, {{{0, 1}, {2}}}, cache);
  EXPECT_EQ(merged.total_surplus, split.total_surplus);
  EXPECT_EQ(merged.expected_revenue, split.expected_revenue);
}

TEST(EvaluateProfile, RejectsBadProfiles) {
  const auto inst = catalog::three_type_pair();
  EXPECT_THROW(evaluate_profile(inst, {{{0, 1, 2}}}), ValidationError);
  EXPECT_THROW(evaluate_profile(inst, {{{0, 1}}, {{0, 1, 2}}}), ValidationError);
}

TEST(SearchProfiles, ThreeTypePairNoDisclosureStrictlyFirst) {
  const auto inst = catalog::three_type_pair();
  const auto ranked = search_profiles(inst);
  ASSERT_EQ(ranked.size(), 25U);
  EXPECT_EQ(ranked[0].profile, no_disclosure_profile(inst));
  EXPECT_GT(ranked[0].outcome.total_surplus, ranked[1].outcome.total_surplus);
  const auto csv = ranking_csv(inst, ranked);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "profile,revenue,u1,u2,total,always_all_sold,efficient");
}

TEST(SearchProfiles, IndependentTwoGoodsAllSoldIsWorse) {
  const auto inst = catalog::independent_two_goods();
  const auto ranked = search_profiles(inst);
  ASSERT_EQ(ranked.size(), 15U);
  const auto none = evaluate_profile(inst, no_disclosure_profile(inst));
  // Only the top type keeps 91 + 69 - 129.
  EXPECT_EQ(none.total_surplus, R("0.51") * R("31"));
  EXPECT_FALSE(none.always_all_sold);
  std::size_t all_sold = 0;
  for (const auto& r : ranked) {
    if (r.profile == no_disclosure_profile(inst) || !r.outcome.always_all_sold) continue;
    ++all_sold;
    EXPECT_LT(r.outcome.total_surplus, none.total_surplus);
  }
  EXPECT_GT(all_sold, 0U);
}

TEST(SearchProfiles, GapInstanceBestIsNonConnected) {
  const auto inst = catalog::gap_instance(R("1/2"));
  const auto ranked = search_profiles(inst);
  EXPECT_EQ(ranked[0].profile, (PartitionProfile{{{0, 2}, {1}}}));
  EXPECT_EQ(ranked[0].outcome.total_surplus, R("1/6"));
  const auto connected = search_profiles(inst, {true, 1000});
  EXPECT_EQ(connected.size(), 4U);
  EXPECT_EQ(connected[0].outcome.total_surplus, R("1/18"));
  EXPECT_LE(connected[0].outcome.total_surplus, ranked[0].outcome.total_surplus);
}

TEST(SearchProfiles, Guard) {
  const auto inst = catalog::three_type_pair();
  EXPECT_THROW(search_profiles(inst, {false, 24}), GuardExceeded);
}

TEST(RareLow, LowHighDisclosureHelps) {
  const auto rep = rare_low_regression();
  EXPECT_EQ(rep.no_disclosure.total_surplus, R("0"));
  EXPECT_GT(rep.low_high.total_surplus, R("0"));
  EXPECT_EQ(rep.low_low_probability, R("1/10000"));
  EXPECT_EQ(rep.low_low_conditional_surplus, R("1/4"));
  EXPECT_EQ(rep.low_high.total_surplus, R("1/40000"));
  EXPECT_TRUE(rep.low_low_always_sold);
  EXPECT_TRUE(rep.low_low_efficient);
  EXPECT_EQ(rep.low_low_high_type_utility, R("1/4"));
  EXPECT_EQ(rep.second_price_reserve_one_revenue, R("5/4"));
  EXPECT_EQ(rep.low_low.revenue, R("3/2"));
  EXPECT_TRUE(rep.holds());
}
