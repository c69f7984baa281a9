#include "disclosure/uniform2.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "disclosure/errors.hpp"
#include "test_util.hpp"

using namespace disclosure;
using namespace disclosure::uniform2;
using disclosure::testing::R;

namespace {

UniformSegment seg(const char* a, const char* b) { return {R(a), R(b)}; }

// Midpoint-grid quadrature of the auction rules in doubles, written out
// independently of the polygon code.
std::pair<double, double> grid_oracle(double a, double b, double c, double d, int n = 800) {
  double ua = 0, ub = 0;
  for (int i = 0; i < n; ++i) {
    const double va = a + (b - a) * (i + 0.5) / n;
    for (int k = 0; k < n; ++k) {
      const double vb = c + (d - c) * (k + 0.5) / n;
      const double pa = 2 * va - b, pb = 2 * vb - d;
      if (pa < 0 && pb < 0) continue;
      if (pa >= pb) {
        ua += va - std::max(a, (std::max(0.0, pb) + b) / 2);
      } else {
        ub += vb - std::max(c, (std::max(0.0, pa) + d) / 2);
      }
    }
  }
  return {ua / n / n, ub / n / n};
}

}  // namespace

TEST(VirtualValue, Examples) {
  EXPECT_EQ(virtual_value(R("3/4"), seg("1/2", "1")), R("1/2"));
  EXPECT_EQ(virtual_value(R("7/10"), seg("1/5", "7/10")), R("7/10"));
  EXPECT_EQ(virtual_value(R("1/4"), seg("0", "1/2")), R("0"));
  EXPECT_EQ(virtual_value(R("1/3"), seg("1/3", "1/3")), R("1/3"));
  EXPECT_THROW(virtual_value(R("3/4"), seg("0", "1/2")), ValidationError);
  EXPECT_THROW(seg("1/2", "1/4"), ValidationError);
}

TEST(VirtualValue, InverseRoundTrip) {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 500; ++it) {
    Rational a = disclosure::testing::random_in(rng, 0, 1);
    Rational b = disclosure::testing::random_in(rng, 0, 1);
    if (a == b) continue;
    if (b < a) std::swap(a, b);
    const UniformSegment s(a, b);
    const Rational v = disclosure::testing::random_in(rng, a, b);
    EXPECT_EQ(inverse_virtual_value(virtual_value(v, s), s), v);
  }
}

TEST(Myerson, Examples) {
  auto out = myerson_outcome(seg("0", "1/2"), seg("1/2", "1"), R("3/8"), R("9/16"));
  EXPECT_EQ(out.winner, Winner::A);
  EXPECT_EQ(out.payment, R("5/16"));

  out = myerson_outcome(seg("0", "1"), seg("0", "1"), R("1/4"), R("1/4"));
  EXPECT_EQ(out.winner, Winner::None);
  EXPECT_EQ(out.payment, R("0"));

  out = myerson_outcome(seg("0", "1/2"), seg("1/2", "1"), R("1/8"), R("3/4"));
  EXPECT_EQ(out.winner, Winner::B);
  EXPECT_EQ(out.payment, R("1/2"));

  EXPECT_THROW(myerson_outcome(seg("0", "1/2"), seg("1/2", "1"), R("3/4"), R("3/4")),
               ValidationError);
}

TEST(Myerson, PointMassConventions) {
  // Continuous buyer on [0,1] against an outside option of 1/2: wins iff 2v - 1 >= 1/2.
  auto out = myerson_outcome(seg("1/2", "1/2"), seg("0", "1"), R("1/2"), R("3/4"));
  EXPECT_EQ(out.winner, Winner::B);
  EXPECT_EQ(out.payment, R("3/4"));
  out = myerson_outcome(seg("1/2", "1/2"), seg("0", "1"), R("1/2"), R("7/10"));
  EXPECT_EQ(out.winner, Winner::A);
  EXPECT_EQ(out.payment, R("1/2"));
  // Two revealed values: the higher one pays its value; ties go to A.
  out = myerson_outcome(seg("1/3", "1/3"), seg("1/3", "1/3"), R("1/3"), R("1/3"));
  EXPECT_EQ(out.winner, Winner::A);
  EXPECT_EQ(out.payment, R("1/3"));
}

TEST(Myerson, WinnerUtilityNonnegative) {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 2000; ++it) {
    Rational a = disclosure::testing::random_in(rng, 0, 1, 6);
    Rational b = disclosure::testing::random_in(rng, 0, 1, 6);
    Rational c = disclosure::testing::random_in(rng, 0, 1, 6);
    Rational d = disclosure::testing::random_in(rng, 0, 1, 6);
    if (b < a) std::swap(a, b);
    if (d < c) std::swap(c, d);
    const UniformSegment sa(a, b), sb(c, d);
    const Rational va = disclosure::testing::random_in(rng, a, b);
    const Rational vb = disclosure::testing::random_in(rng, c, d);
    const auto out = myerson_outcome(sa, sb, va, vb);
    if (out.winner == Winner::A) EXPECT_GE(va, out.payment);
    if (out.winner == Winner::B) EXPECT_GE(vb, out.payment);
    if (out.winner == Winner::None) EXPECT_TRUE(out.payment.is_zero());
  }
}

TEST(PairSurplus, HalfHalfQuadrants) {
  const auto mixed = pair_surplus(seg("0", "1/2"), seg("1/2", "1"));
  // Conditional value; weighted by the quadrant's probability 1/4 it is 5/96.
  EXPECT_EQ(mixed.total(), R("5/24"));
  EXPECT_EQ(R("1/4") * mixed.total(), R("5/96"));
  EXPECT_EQ(pair_surplus(seg("1/2", "1"), seg("1/2", "1")).total(), R("1/6"));
  EXPECT_EQ(pair_surplus(seg("0", "1/2"), seg("0", "1/2")).total(), R("1/12"));
  const auto nd = pair_surplus(seg("0", "1"), seg("0", "1"));
  EXPECT_EQ(nd.uA, R("1/12"));
  EXPECT_EQ(nd.uB, R("1/12"));
}

TEST(PairSurplus, AgreesWithGridQuadrature) {
  const std::vector<std::array<const char*, 4>> cases{
      {"0", "1/2", "1/2", "1"}, {"1/5", "3/5", "0", "1"}, {"1/3", "1", "1/4", "1/2"},
      {"0", "1/8", "0", "1"},   {"3/4", "1", "0", "9/10"}};
  for (const auto& c : cases) {
    const auto exact = pair_surplus(seg(c[0], c[1]), seg(c[2], c[3]));
    const auto approx = grid_oracle(R(c[0]).to_double(), R(c[1]).to_double(), R(c[2]).to_double(),
                                    R(c[3]).to_double());
    EXPECT_NEAR(exact.uA.to_double(), approx.first, 2e-4) << c[0] << c[1] << c[2] << c[3];
    EXPECT_NEAR(exact.uB.to_double(), approx.second, 2e-4) << c[0] << c[1] << c[2] << c[3];
  }
}

TEST(PairSurplus, PointMassAgainstInterval) {
  // B on [0,1] facing an outside option a wins above (1+a)/2 and pays it.
  for (const char* a : {"0", "1/4", "1/2", "1"}) {
    const Rational t = (R("1") + R(a)) / Rational(2);
    const auto ps = pair_surplus(UniformSegment(R(a), R(a)), seg("0", "1"));
    EXPECT_TRUE(ps.uA.is_zero());
    EXPECT_EQ(ps.uB, (Rational(1) - t) * (Rational(1) - t) / Rational(2));
  }
}

TEST(ProfileSurplus, AsymmetricProfile) {
  const auto rep = profile_surplus(IntervalPartition::parse("0,1/2,1"), IntervalPartition::parse("0,1"));
  EXPECT_EQ(rep.uA, R("13/128"));
  EXPECT_EQ(rep.uB, R("9/128"));
  EXPECT_EQ(rep.total(), R("11/64"));
}

TEST(ProfileSurplus, NoDisclosureAndHalves) {
  EXPECT_EQ(profile_surplus(IntervalPartition::no_disclosure(), IntervalPartition::no_disclosure())
                .total(),
            R("1/6"));
  const auto half = IntervalPartition::parse("0,1/2,1");
  const auto rep = profile_surplus(half, half);
  EXPECT_EQ(rep.total(), R("1/6"));
  ASSERT_EQ(rep.rows.size(), 4U);
  EXPECT_EQ(rep.rows[0].uA + rep.rows[0].uB, R("1/48"));
  EXPECT_EQ(rep.rows[1].uA + rep.rows[1].uB, R("5/96"));
  EXPECT_EQ(rep.rows[2].uA + rep.rows[2].uB, R("5/96"));
  EXPECT_EQ(rep.rows[3].uA + rep.rows[3].uB, R("2/48"));
  EXPECT_NE(rep.csv().find("0,1/2,1/2,1,1/4,"), std::string::npos);
}

TEST(ProfileSurplus, SwapSymmetry) {
  std::mt19937_64 rng(3);
  for (int it = 0; it < 30; ++it) {
    auto make = [&rng] {
      std::vector<Rational> bp{0};
      for (int k = 0; k < 3; ++k) bp.push_back(disclosure::testing::random_in(rng, 0, 1, 5));
      bp.push_back(1);
      std::sort(bp.begin(), bp.end());
      bp.erase(std::unique(bp.begin(), bp.end()), bp.end());
      return IntervalPartition(bp);
    };
    const auto pa = make();
    const auto pb = make();
    const auto ab = profile_surplus(pa, pb);
    const auto ba = profile_surplus(pb, pa);
    EXPECT_EQ(ab.uA, ba.uB);
    EXPECT_EQ(ab.uB, ba.uA);
  }
}

TEST(Threshold, Examples) {
  EXPECT_EQ(threshold_surplus(R("1/2")).total, R("1/6"));
  const auto zero = threshold_surplus(R("0"));
  EXPECT_EQ(zero.low_low, R("0"));
  EXPECT_EQ(zero.high_high, R("1/12"));
  EXPECT_EQ(zero.high_low, R("0"));
  EXPECT_EQ(zero.low_high, R("0"));
  EXPECT_EQ(zero.total, R("1/6"));
  // (1/4)^3 / 12
  EXPECT_EQ(threshold_surplus(R("1/4")).low_low, R("1/768"));
  EXPECT_THROW(threshold_surplus(R("3/5")), ValidationError);
}

TEST(Threshold, RandomThresholdsMatchClosedForms) {
  std::mt19937_64 rng(5);
  for (int it = 0; it < 100; ++it) {
    const Rational t = disclosure::testing::random_in(rng, R("1/1000"), R("1/2"), 16);
    const auto got = threshold_surplus(t);
    const auto want = threshold_closed_form(t);
    EXPECT_EQ(got.total, R("1/6")) << t;
    EXPECT_EQ(got.low_low, want.low_low) << t;
    EXPECT_EQ(got.high_high, want.high_high) << t;
    EXPECT_EQ(got.high_low, want.high_low) << t;
    EXPECT_EQ(got.low_high, want.low_high) << t;
  }
}

TEST(Zeno, Breakpoints) {
  EXPECT_EQ(zeno_partition(1).str(), "0,1/2,1");
  EXPECT_EQ(zeno_partition(2).str(), "0,1/4,1/2,1");
  EXPECT_THROW(zeno_partition(0), ValidationError);
}

TEST(Zeno, DepthTwelveApproachesLimit) {
  const auto z = zeno_partition(12);
  const Rational total = profile_surplus(z, z).total();
  EXPECT_LE(std::abs(total.to_double() - 23.0 / 147.0), 1e-4);
  EXPECT_LT(total, R("1/6"));
}

TEST(FullVsSilent, Limit) {
  const auto lim = full_disclosure_vs_silent_limit();
  EXPECT_EQ(lim.uA, R("0"));
  EXPECT_EQ(lim.uB, R("1/24"));
}

TEST(FullVsSilent, ZenoDiscloserAgainstQuadrature) {
  Rational prev(0);
  for (unsigned k = 1; k <= 6; ++k) {
    const auto z = zeno_partition(k);
    const auto rep = profile_surplus(z, IntervalPartition::no_disclosure());
    double want = 0;
    for (std::size_t i = 0; i < z.interval_count(); ++i) {
      const double a = z.lower(i).to_double(), b = z.upper(i).to_double();
      want += (b - a) * grid_oracle(a, b, 0, 1, 400).first;
    }
    EXPECT_NEAR(rep.uA.to_double(), want, 2e-4) << k;
    // The quadrature shows the discloser gaining with depth.
    EXPECT_GT(rep.uA, prev) << k;
    prev = rep.uA;
  }
}

TEST(EfficiencyWitness, ZeroBoundaryCase) {
  const auto w = efficiency_witness(IntervalPartition::parse("0,1"), IntervalPartition::parse("0,1/3,1"));
  EXPECT_FALSE(w.fully_disclosing);
  EXPECT_EQ(w.case_index, 1);
  EXPECT_EQ(w.vA, R("1/4"));
  EXPECT_EQ(w.vB, R("0"));
  EXPECT_EQ(w.kind, Inefficiency::NoSale);
}

TEST(EfficiencyWitness, FullyDisclosing) {
  const auto full = IntervalPartition::fully_disclosing();
  EXPECT_TRUE(efficiency_witness(full, full).fully_disclosing);
}

TEST(EfficiencyWitness, AsymmetricProfileReplays) {
  const auto pa = IntervalPartition::parse("0,1/2,1");
  const auto pb = IntervalPartition::no_disclosure();
  const auto w = efficiency_witness(pa, pb);
  EXPECT_EQ(w.kind, Inefficiency::LowerValueWins);
  const auto replay = myerson_outcome(UniformSegment::of(pa.locate(w.vA)),
                                      UniformSegment::of(pb.locate(w.vB)), w.vA, w.vB);
  EXPECT_EQ(replay, w.outcome);
  EXPECT_NE(classify(replay, w.vA, w.vB), Inefficiency::None);
}

TEST(EfficiencyWitness, OneSideFullyDisclosing) {
  const auto w = efficiency_witness(IntervalPartition::fully_disclosing(), IntervalPartition::parse("0,1/2,1"));
  EXPECT_FALSE(w.fully_disclosing);
  EXPECT_NE(w.kind, Inefficiency::None);
}

TEST(AllocationRegions, TileUnitSquare) {
  const std::vector<std::pair<const char*, const char*>> cases{
      {"0,1", "0,1"}, {"0,1/2,1", "0,1/2,1"}, {"0,1/2,1", "0,1"},
      {"full", "0,1"}, {"0,1/3,1", "full"},   {"full", "full"}};
  for (const auto& [a, b] : cases) {
    Rational total;
    for (const auto& r : allocation_regions(IntervalPartition::parse(a), IntervalPartition::parse(b))) {
      total += geom::area(r.polygon);
    }
    EXPECT_EQ(total, R("1")) << a << " vs " << b;
  }
}

TEST(AllocationRegions, ReserveSquareWithoutDisclosure) {
  Rational none;
  for (const auto& r : allocation_regions(IntervalPartition::no_disclosure(), IntervalPartition::no_disclosure())) {
    if (r.kind == RegionKind::NoSale) none += geom::area(r.polygon);
  }
  EXPECT_EQ(none, R("1/4"));
}
