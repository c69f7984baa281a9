#include "disclosure/lpmech.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "disclosure/catalog.hpp"
#include "disclosure/errors.hpp"
#include "test_util.hpp"

using namespace disclosure;
using disclosure::testing::R;

namespace {

// Revenue of the optimal auction for i.i.d. single-good buyers via discrete
// virtual values (regular distributions only).
Rational discrete_myerson_revenue(const DiscreteInstance& inst) {
  const auto order = inst.value_order(0);
  std::vector<Rational> phi(inst.type_count(0));
  Rational above(1);
  for (std::size_t k = 0; k < order.size(); ++k) {
    const auto& t = inst.type(0, order[k]);
    above -= t.prob;
    const Rational next = k + 1 < order.size() ? inst.type(0, order[k + 1]).values[0] : Rational(0);
    phi[order[k]] = k + 1 < order.size() ? t.values[0] - (next - t.values[0]) * above / t.prob : t.values[0];
  }
  Rational rev;
  for (std::size_t i = 0; i < inst.joint_count(); ++i) {
    Rational best(0);
    for (auto t : inst.joint_types(i)) best = max(best, phi[t]);
    rev += inst.joint_probability(i) * best;
  }
  return rev;
}

}  // namespace

TEST(BuildLp, Counts) {
  const DiscreteInstance two(1, {{{R("1/2"), {R("1")}}, {R("1/2"), {R("2")}}}});
  auto sys = build_lp(two);
  EXPECT_EQ(sys.q_count(), 2U);
  EXPECT_EQ(sys.r_count(), 2U);
  EXPECT_EQ(sys.ir_rows, 2U);
  EXPECT_EQ(sys.ic_rows, 2U);
  EXPECT_EQ(sys.supply_rows, 2U);

  sys = build_lp(catalog::three_type_pair());
  EXPECT_EQ(sys.joints, 9U);
  EXPECT_EQ(sys.q_count(), 18U);
  EXPECT_EQ(sys.r_count(), 18U);

  sys = build_lp(catalog::correlated_two_goods());
  EXPECT_EQ(sys.q_count(), 4U);
  EXPECT_EQ(sys.r_count(), 2U);

  EXPECT_THROW(build_lp(catalog::three_type_pair(), 10), GuardExceeded);
}

TEST(SolveLexicographic, CorrelatedTwoGoods) {
  const auto inst = catalog::correlated_two_goods();
  const auto sol = solve_mechanism(inst);
  EXPECT_EQ(sol.revenue, R("15/2"));
  EXPECT_EQ(sol.buyer_surplus, R("1/2"));
  const auto menu = menu_entries(inst, sol.mechanism);
  ASSERT_EQ(menu.size(), 2U);
  EXPECT_EQ(menu[0].price, R("3"));
  EXPECT_EQ(menu[0].bundle, (std::vector<Rational>{R("1"), R("0")}));
  EXPECT_EQ(menu[1].price, R("12"));
  EXPECT_EQ(menu[1].bundle, (std::vector<Rational>{R("1"), R("1")}));
  EXPECT_NE(posted_menu_view(inst, sol).find("at price 12"), std::string::npos);
}

TEST(SolveLexicographic, SingleTypeFullExtraction) {
  const DiscreteInstance inst(1, {{{R("1"), {R("7/3")}}}});
  const auto sol = solve_mechanism(inst);
  EXPECT_EQ(sol.revenue, R("7/3"));
  EXPECT_EQ(sol.buyer_surplus, R("0"));
}

TEST(SolveLexicographic, IndependentTwoGoods) {
  const auto inst = catalog::independent_two_goods();
  const auto sol = solve_mechanism(inst);
  const auto menu = menu_entries(inst, sol.mechanism);
  ASSERT_EQ(menu.size(), 2U);
  EXPECT_EQ(menu[0].bundle, (std::vector<Rational>{R("31/35"), R("1")}));
  EXPECT_EQ(menu[0].price, R("118.6"));
  EXPECT_EQ(menu[1].bundle, (std::vector<Rational>{R("1"), R("1")}));
  EXPECT_EQ(menu[1].price, R("129"));
  for (std::size_t t = 0; t < 4; ++t) {
    const Rational u = interim_utility(inst, sol.mechanism, 0, t);
    if (t == 3) {
      EXPECT_EQ(u, R("31"));
    } else {
      EXPECT_EQ(u, R("0")) << t;
    }
  }
}

TEST(SolveLexicographic, ThreeTypePairNoDisclosure) {
  const auto inst = catalog::three_type_pair();
  const auto sol = solve_mechanism(inst);
  const auto rep = verify_mechanism(inst, sol.mechanism);
  EXPECT_TRUE(rep.valid) << rep.violation;
  EXPECT_EQ(rep.buyer_surplus, R("3/8"));
  EXPECT_EQ(sol.revenue, discrete_myerson_revenue(inst));
  // Ties between buyers may split unevenly; prices refer to the symmetrized mechanism.
  const auto unit_price = [&](std::size_t t) {
    const auto& m = sol.mechanism;
    return (interim_payment(inst, m, 0, t) + interim_payment(inst, m, 1, t)) /
           (interim_allocation(inst, m, 0, t, 0) + interim_allocation(inst, m, 1, t, 0));
  };
  EXPECT_EQ(unit_price(2), R("5/2"));
  EXPECT_EQ(unit_price(1), R("2"));
  for (std::size_t j = 0; j < 2; ++j) {
    EXPECT_EQ(interim_allocation(inst, sol.mechanism, j, 0, 0), R("0"));
  }
  EXPECT_TRUE(lp::certify_primary_optimum(build_lp(inst).program, sol.basis, [&] {
    const auto sys = build_lp(inst);
    std::vector<Rational> x(sys.q_count() + sys.r_count());
    for (std::size_t i = 0; i < sys.joints; ++i) {
      for (std::size_t j = 0; j < sys.buyers; ++j) {
        x[sys.q_var(i, j, 0)] = sol.mechanism.q(i, j, 0);
        x[sys.r_var(i, j)] = sol.mechanism.r(i, j);
      }
    }
    return x;
  }()));
}

TEST(VerifyMechanism, ZeroAndCorrupted) {
  const auto inst = catalog::three_type_pair();
  const Mechanism zero(inst.joint_count(), 2, 1);
  const auto rep = verify_mechanism(inst, zero);
  EXPECT_TRUE(rep.valid);
  EXPECT_EQ(rep.revenue, R("0"));
  EXPECT_EQ(menu_entries(catalog::correlated_two_goods(),
                         Mechanism(2, 1, 2)).size(), 0U);
  EXPECT_NE(posted_menu_view(catalog::gap_instance(R("1/2")), {Mechanism(3, 1, 1), R("0"), R("0"), {}, 0})
                .find("empty menu"), std::string::npos);

  auto bad = solve_mechanism(inst).mechanism;
  bad.r(8, 0) += R("1");
  const auto broken = verify_mechanism(inst, bad);
  EXPECT_FALSE(broken.valid);
  EXPECT_NE(broken.violation.find("IR"), std::string::npos) << broken.violation;

  EXPECT_THROW(verify_mechanism(inst, Mechanism(3, 1, 1)), ValidationError);
}

TEST(VerifyMechanism, AcceptsRandomLpOutputs) {
  std::mt19937_64 rng(29);
  for (int it = 0; it < 30; ++it) {
    const auto inst = disclosure::testing::random_instance(rng, 1 + it % 2, 2 + it % 2, 1 + (it / 2) % 2);
    const auto sol = solve_mechanism(inst);
    const auto rep = verify_mechanism(inst, sol.mechanism);
    EXPECT_TRUE(rep.valid) << rep.violation;
    EXPECT_EQ(rep.revenue, sol.revenue);
    EXPECT_EQ(rep.buyer_surplus, sol.buyer_surplus);
  }
}

TEST(SolveLexicographic, ScaleInvariance) {
  std::mt19937_64 rng(31);
  const Rational lambda(5, 3);
  for (int it = 0; it < 10; ++it) {
    const auto inst = disclosure::testing::random_instance(rng, 1 + it % 2, 3, 1 + it % 2);
    auto buyers = inst.buyers();
    for (auto& ts : buyers) {
      for (auto& t : ts) {
        for (auto& v : t.values) v *= lambda;
      }
    }
    const DiscreteInstance scaled(inst.goods_count(), buyers);
    const auto a = solve_mechanism(inst);
    const auto b = solve_mechanism(scaled);
    EXPECT_EQ(b.revenue, lambda * a.revenue);
    EXPECT_EQ(b.buyer_surplus, lambda * a.buyer_surplus);
  }
}

TEST(SolveLexicographic, SingleBuyerPostedPrice) {
  std::mt19937_64 rng(37);
  for (int it = 0; it < 20; ++it) {
    const auto inst = disclosure::testing::random_instance(rng, 1, 2 + it % 4, 1);
    Rational best;
    for (std::size_t p = 0; p < inst.type_count(0); ++p) {
      Rational mass;
      for (std::size_t t = 0; t < inst.type_count(0); ++t) {
        if (inst.type(0, t).values[0] >= inst.type(0, p).values[0]) mass += inst.type(0, t).prob;
      }
      best = max(best, mass * inst.type(0, p).values[0]);
    }
    EXPECT_EQ(solve_mechanism(inst).revenue, best);
  }
}

TEST(MechanismCsv, Header) {
  const auto inst = catalog::three_type_pair();
  const auto csv = mechanism_csv(inst, solve_mechanism(inst).mechanism);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "joint,buyer,good,q,r");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 1 + 9 * 2);
  EXPECT_NE(csv.find("\n3-3,2,1,"), std::string::npos);
}
