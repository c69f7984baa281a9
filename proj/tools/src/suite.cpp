#include "disclosure/app/suite.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <ostream>
#include <random>
#include <set>

#include "disclosure/catalog.hpp"
#include "disclosure/dpconnected.hpp"
#include "disclosure/game.hpp"
#include "disclosure/hardness.hpp"
#include "disclosure/lpmech.hpp"
#include "disclosure/uniform2.hpp"

namespace disclosure::app {

namespace {

using uniform2::UniformSegment;

Rational R(const char* s) { return Rational::parse(s); }

class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok && failure.empty()) failure = what;
  }
  void eq(const std::string& name, const Rational& got, const Rational& want) {
    numbers.push_back(name + " = " + got.str() + " (expected " + want.str() + ")");
    expect(got == want, name + " = " + got.str() + ", expected " + want.str());
  }
  void note(const std::string& line) { numbers.push_back(line); }

  std::string failure;
  std::vector<std::string> numbers;
};

struct Item {
  int id;
  const char* title;
  double budget_seconds;
  bool skipped_when_quick;
  std::function<void(Check&, const SuiteOptions&)> body;
};

// Unit price per buyer-symmetric mechanism: interim payment over interim
// allocation of good 0, pooled over both buyers.
Rational symmetric_unit_price(const DiscreteInstance& inst, const Mechanism& m, std::size_t type) {
  return (interim_payment(inst, m, 0, type) + interim_payment(inst, m, 1, type)) /
         (interim_allocation(inst, m, 0, type, 0) + interim_allocation(inst, m, 1, type, 0));
}

DiscreteInstance random_instance(std::mt19937_64& rng, std::size_t buyers, std::size_t types,
                                 std::size_t goods) {
  std::uniform_int_distribution<long long> weight(1, 12), val(0, 9);
  std::vector<std::vector<BuyerType>> all;
  for (std::size_t j = 0; j < buyers; ++j) {
    std::vector<long long> w(types);
    long long sum = 0;
    for (auto& x : w) sum += (x = weight(rng));
    std::vector<BuyerType> ts;
    for (std::size_t t = 0; t < types; ++t) {
      BuyerType bt{Rational(w[t], sum), {}};
      for (std::size_t k = 0; k < goods; ++k) bt.values.emplace_back(val(rng));
      bt.values[0] += Rational(static_cast<long long>(10 * t));
      ts.push_back(std::move(bt));
    }
    all.push_back(std::move(ts));
  }
  return DiscreteInstance(goods, std::move(all));
}

dp::SingleBuyerInstance random_single(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<long long> gap(1, 5), weight(1, 12);
  std::vector<Rational> values, probs;
  std::vector<long long> w(n);
  long long v = 0, sum = 0;
  for (auto& x : w) sum += (x = weight(rng));
  for (std::size_t i = 0; i < n; ++i) {
    values.emplace_back(v += gap(rng));
    probs.emplace_back(w[i], sum);
  }
  return dp::SingleBuyerInstance(std::move(values), std::move(probs));
}

// Plain double-precision resampling of the two-segment auction.
struct McEstimate {
  double ua, ub, se_a, se_b;
};

McEstimate monte_carlo(double a, double b, double c, double d, std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> ua01(0.0, 1.0);
  double sa = 0, sa2 = 0, sb = 0, sb2 = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double va = a + (b - a) * ua01(rng);
    const double vb = c + (d - c) * ua01(rng);
    const bool pa_point = a == b, pb_point = c == d;
    const double pa = pa_point ? a : 2 * va - b;
    const double pb = pb_point ? c : 2 * vb - d;
    double xa = 0, xb = 0;
    if (pa >= 0 || pb >= 0) {
      const bool a_wins = pa > pb || (pa == pb && !(pa_point && !pb_point));
      if (a_wins) {
        xa = pa_point ? 0.0 : va - std::max(a, (std::max(0.0, pb) + b) / 2);
      } else {
        xb = pb_point ? 0.0 : vb - std::max(c, (std::max(0.0, pa) + d) / 2);
      }
    }
    sa += xa;
    sa2 += xa * xa;
    sb += xb;
    sb2 += xb * xb;
  }
  const double m = static_cast<double>(n);
  const double ma = sa / m, mb = sb / m;
  return {ma, mb, std::sqrt(std::max(0.0, sa2 / m - ma * ma) / m),
          std::sqrt(std::max(0.0, sb2 / m - mb * mb) / m)};
}

IntervalPartition random_interval_partition(std::mt19937_64& rng) {
  if (rng() % 8 == 0) return IntervalPartition::fully_disclosing();
  std::set<Rational> cuts;
  const std::size_t count = rng() % 4;
  for (std::size_t i = 0; i < count; ++i) {
    const long long k = 1 + static_cast<long long>(rng() % 63);
    cuts.insert(Rational(k, 64));
  }
  std::vector<Rational> br{Rational(0)};
  br.insert(br.end(), cuts.begin(), cuts.end());
  br.emplace_back(1);
  std::vector<Rational> atoms;
  if (rng() % 4 == 0) atoms.emplace_back(static_cast<long long>(rng() % 129), 128);
  return IntervalPartition(std::move(br), std::move(atoms));
}

UniformSegment segment_at(const IntervalPartition& p, const Rational& v) {
  if (p.is_fully_disclosing()) return {v, v};
  return UniformSegment::of(p.locate(v));
}

std::vector<Item> items() {
  std::vector<Item> out;

  out.push_back({1, "no-disclosure surplus is 1/6", 1, false, [](Check& c, const SuiteOptions&) {
                   const auto nd = IntervalPartition::no_disclosure();
                   c.eq("total", uniform2::profile_surplus(nd, nd).total(), R("1/6"));
                 }});

  out.push_back({2, "mixed quadrant 5/96 and half/half total 1/6", 1, false, [](Check& c, const SuiteOptions&) {
                   const auto half = IntervalPartition::parse("0,1/2,1");
                   const auto rep = uniform2::profile_surplus(half, half);
                   std::size_t mixed = 0;
                   for (const auto& r : rep.rows) {
                     if (r.segA == UniformSegment(R("0"), R("1/2")) &&
                         r.segB == UniformSegment(R("1/2"), R("1"))) {
                       c.eq("quadrant [0,1/2]x[1/2,1]", r.uA + r.uB, R("5/96"));
                       ++mixed;
                     }
                     if (r.segA == UniformSegment(R("1/2"), R("1")) &&
                         r.segB == UniformSegment(R("0"), R("1/2"))) {
                       c.eq("quadrant [1/2,1]x[0,1/2]", r.uA + r.uB, R("5/96"));
                       ++mixed;
                     }
                   }
                   c.expect(mixed == 2, "mixed quadrants not found");
                   c.eq("total", rep.total(), R("1/6"));
                 }});

  out.push_back({3, "asymmetric profile 13/128 + 9/128 = 11/64", 1, false, [](Check& c, const SuiteOptions&) {
                   const auto rep = uniform2::profile_surplus(IntervalPartition::parse("0,1/2,1"),
                                                              IntervalPartition::no_disclosure());
                   c.eq("uA", rep.uA, R("13/128"));
                   c.eq("uB", rep.uB, R("9/128"));
                   c.eq("total", rep.total(), R("11/64"));
                 }});

  out.push_back({4, "threshold family total 1/6 with closed-form components", 1, false,
                 [](Check& c, const SuiteOptions&) {
                   for (const char* ts : {"1/10", "1/4", "2/5", "1/2"}) {
                     const Rational t = R(ts);
                     const auto got = uniform2::threshold_surplus(t);
                     const auto want = uniform2::threshold_closed_form(t);
                     const std::string p = std::string("t=") + ts + " ";
                     c.eq(p + "low/low", got.low_low, want.low_low);
                     c.eq(p + "low/high", got.low_high, want.low_high);
                     c.eq(p + "high/low", got.high_low, want.high_low);
                     c.eq(p + "high/high", got.high_high, want.high_high);
                     c.eq(p + "per buyer", got.per_buyer, want.per_buyer);
                     c.eq(p + "total", got.total, R("1/6"));
                   }
                 }});

  out.push_back({5, "Zeno depth 12 symmetric total within 1e-4 of 23/147", 5, true,
                 [](Check& c, const SuiteOptions&) {
                   const auto z = uniform2::zeno_partition(12);
                   const Rational total = uniform2::profile_surplus(z, z).total();
                   const Rational gap = (total - R("23/147")).abs();
                   char buf[64];
                   std::snprintf(buf, sizeof buf, "%.3g", gap.to_double());
                   c.note("total = " + total.str() + ", |total - 23/147| = " + buf);
                   c.expect(gap <= R("1/10000"), std::string("distance to 23/147 is ") + buf);
                   c.expect(total < R("1/6"), "total not below 1/6");
                 }});

  out.push_back({6, "silent vs full disclosure limit (0, 1/24)", 1, false, [](Check& c, const SuiteOptions&) {
                   const auto lim = uniform2::full_disclosure_vs_silent_limit();
                   c.eq("uA", lim.uA, R("0"));
                   c.eq("uB", lim.uB, R("1/24"));
                 }});

  out.push_back({7, "two-good correlated example: surplus 1/2, revenue 15/2, prices {3, 12}", 1, false,
                 [](Check& c, const SuiteOptions&) {
                   const auto inst = catalog::correlated_two_goods();
                   const auto sol = solve_mechanism(inst);
                   c.expect(verify_mechanism(inst, sol.mechanism).valid, "mechanism infeasible");
                   c.eq("buyer surplus", sol.buyer_surplus, R("1/2"));
                   c.eq("revenue", sol.revenue, R("15/2"));
                   std::set<Rational> prices;
                   for (const auto& e : menu_entries(inst, sol.mechanism)) prices.insert(e.price);
                   std::string listed;
                   for (const auto& p : prices) listed += (listed.empty() ? "" : ", ") + p.str();
                   c.note("menu prices {" + listed + "}");
                   c.expect(prices == std::set<Rational>{R("3"), R("12")}, "menu prices {" + listed + "}");
                 }});

  out.push_back({8, "two-good independent example: menu, utilities, 14 alternatives", 30, false,
                 [](Check& c, const SuiteOptions&) {
                   const auto inst = catalog::independent_two_goods();
                   const auto sol = solve_mechanism(inst);
                   const auto menu = menu_entries(inst, sol.mechanism);
                   c.expect(menu.size() == 2, "menu has " + std::to_string(menu.size()) + " entries");
                   bool lottery = false, bundle = false;
                   for (const auto& e : menu) {
                     c.note("entry (" + e.bundle[0].str() + ", " + e.bundle[1].str() + ") at " + e.price.str());
                     lottery |= e.bundle == std::vector<Rational>{R("31/35"), R("1")} && e.price == R("593/5");
                     bundle |= e.bundle == std::vector<Rational>{R("1"), R("1")} && e.price == R("129");
                   }
                   c.expect(lottery, "no (31/35, 1) entry at 593/5");
                   c.expect(bundle, "no bundle entry at 129");
                   for (std::size_t t = 0; t < 4; ++t) {
                     const Rational u = interim_utility(inst, sol.mechanism, 0, t);
                     c.note("type " + std::to_string(t + 1) + " utility " + u.str());
                     c.expect((u.sign() > 0) == (t == 3), "type " + std::to_string(t + 1) + " utility " + u.str());
                   }
                   const auto ranked = game::search_profiles(inst);
                   const auto nd = game::no_disclosure_profile(inst);
                   Rational nd_surplus;
                   for (const auto& r : ranked) {
                     if (r.profile == nd) nd_surplus = r.outcome.total_surplus;
                   }
                   c.eq("no-disclosure surplus", nd_surplus, sol.buyer_surplus);
                   std::size_t alternatives = 0, all_sold = 0;
                   for (const auto& r : ranked) {
                     if (r.profile == nd) continue;
                     ++alternatives;
                     if (!r.outcome.always_all_sold) continue;
                     ++all_sold;
                     c.expect(r.outcome.total_surplus < nd_surplus,
                              "all-sold profile " + std::to_string(r.enumeration_index) + " reaches " +
                                  r.outcome.total_surplus.str());
                   }
                   c.note(std::to_string(alternatives) + " alternatives, " + std::to_string(all_sold) +
                          " with both goods always sold, all strictly below " + nd_surplus.str());
                   c.expect(alternatives == 14, std::to_string(alternatives) + " alternatives");
                 }});

  out.push_back({9, "three-type pair: 3/8 at (5/2, 2), 1/8 at 11/4, no disclosure ranks first", 60, false,
                 [](Check& c, const SuiteOptions& opt) {
                   const auto inst = catalog::three_type_pair();
                   const auto sol = solve_mechanism(inst);
                   c.eq("no-disclosure surplus", sol.buyer_surplus, R("3/8"));
                   c.eq("price for bid 3", symmetric_unit_price(inst, sol.mechanism, 2), R("5/2"));
                   c.eq("price for bid 2", symmetric_unit_price(inst, sol.mechanism, 1), R("2"));
                   const SetPartition sep{{0}, {1, 2}};
                   const auto g = game::evaluate_profile(inst, {sep, sep});
                   c.eq("separating surplus", g.total_surplus, R("1/8"));
                   for (const auto& m : g.per_message) {
                     if (m.blocks != std::vector<std::size_t>{1, 1}) continue;
                     c.eq("price for bid 3 after {2,3} x {2,3}",
                          symmetric_unit_price(m.conditioned->instance, m.solution->mechanism, 1), R("11/4"));
                   }
                   if (opt.quick) {
                     c.note("25-profile search skipped");
                     return;
                   }
                   const auto ranked = game::search_profiles(inst);
                   c.expect(ranked.size() == 25, std::to_string(ranked.size()) + " profiles");
                   c.expect(ranked[0].profile == game::no_disclosure_profile(inst), "no disclosure not ranked first");
                   c.expect(ranked[0].outcome.total_surplus > ranked[1].outcome.total_surplus, "tie for first");
                   c.note("runner-up surplus " + ranked[1].outcome.total_surplus.str());
                 }});

  out.push_back({10, "gap instance: connected optimum vs unconstrained, ratio (1+d)/d", 10, false,
                 [](Check& c, const SuiteOptions&) {
                   Rational prev_ratio;
                   for (const char* ds : {"1/2", "1/10", "1/100"}) {
                     const Rational d = R(ds);
                     const auto inst = catalog::gap_instance(d);
                     const auto single = dp::SingleBuyerInstance::from(inst);
                     const Rational conn = dp::optimal_connected(single).utility;
                     const Rational unc = game::search_profiles(inst).front().outcome.total_surplus;
                     const std::string p = std::string("delta=") + ds + " ";
                     c.eq(p + "connected (brute force)", dp::brute_force_connected(single).utility, conn);
                     c.expect(conn <= d / Rational(9), p + "connected " + conn.str() + " above delta/9");
                     c.eq(p + "unconstrained", unc, (Rational(1) + d) / Rational(9));
                     c.expect(conn.sign() > 0, p + "connected optimum is zero");
                     if (conn.sign() <= 0) return;
                     const Rational ratio = unc / conn;
                     c.note(p + "connected " + conn.str() + ", ratio " + ratio.str());
                     c.expect(ratio >= (Rational(1) + d) / d, p + "ratio " + ratio.str() + " below (1+delta)/delta");
                     c.expect(prev_ratio < ratio, p + "ratio does not grow");
                     prev_ratio = ratio;
                   }
                   const auto half = catalog::gap_instance(R("1/2"));
                   c.eq("delta=1/2 connected", dp::optimal_connected(dp::SingleBuyerInstance::from(half)).utility,
                        R("1/18"));
                 }});

  out.push_back({11, "dynamic program equals brute force on 200 random instances", 60, false,
                 [](Check& c, const SuiteOptions&) {
                   std::mt19937_64 rng(2024);
                   std::size_t agree = 0;
                   for (std::size_t i = 0; i < 200; ++i) {
                     const auto inst = random_single(rng, 1 + i % 12);
                     const auto a = dp::optimal_connected(inst).utility;
                     const auto b = dp::brute_force_connected(inst).utility;
                     c.expect(a == b, "instance " + std::to_string(i) + ": " + a.str() + " vs " + b.str());
                     agree += a == b;
                   }
                   c.note(std::to_string(agree) + "/200 agree");
                 }});

  out.push_back({12, "reduction equivalence on every size list, m <= 4, entries <= 6", 120, false,
                 [](Check& c, const SuiteOptions&) {
                   std::size_t lists = 0, solvable = 0;
                   for (std::size_t m = 1; m <= 4; ++m) {
                     std::vector<unsigned long> s(m, 1);
                     while (true) {
                       unsigned long sum = 0;
                       for (auto x : s) sum += x;
                       if (sum % 2 == 0) {
                         const auto rep = hardness::verify_reduction(hardness::PartitionProblem(s));
                         ++lists;
                         solvable += rep.solvable;
                         std::string label;
                         for (auto x : s) label += (label.empty() ? "" : ",") + std::to_string(x);
                         c.expect(rep.equivalence_holds, "sizes (" + label + ")");
                       }
                       std::size_t k = 0;
                       while (k < m && s[k] == 6) s[k++] = 1;
                       if (k == m) break;
                       ++s[k];
                     }
                   }
                   c.note(std::to_string(lists) + " lists, " + std::to_string(solvable) + " solvable");
                 }});

  out.push_back({13, "efficiency witness confirmed on 100 random partition pairs", 10, false,
                 [](Check& c, const SuiteOptions&) {
                   std::mt19937_64 rng(77);
                   std::size_t done = 0, no_sale = 0;
                   while (done < 100) {
                     const auto pa = random_interval_partition(rng);
                     const auto pb = random_interval_partition(rng);
                     if (pa.is_fully_disclosing() && pb.is_fully_disclosing()) continue;
                     ++done;
                     const auto w = uniform2::efficiency_witness(pa, pb);
                     const auto outcome = uniform2::myerson_outcome(segment_at(pa, w.vA), segment_at(pb, w.vB),
                                                                    w.vA, w.vB);
                     const auto kind = uniform2::classify(outcome, w.vA, w.vB);
                     no_sale += kind == uniform2::Inefficiency::NoSale;
                     c.expect(kind != uniform2::Inefficiency::None && kind == w.kind,
                              "A " + pa.str() + " B " + pb.str() + " at (" + w.vA.str() + ", " + w.vB.str() + ")");
                   }
                   c.note(std::to_string(no_sale) + " no-sale and " + std::to_string(100 - no_sale) +
                          " lower-value-wins witnesses");
                 }});

  out.push_back({14, "rare low types: disclosure helps, low-low subgame sells efficiently", 5, false,
                 [](Check& c, const SuiteOptions&) {
                   const auto rep = game::rare_low_regression();
                   c.eq("no-disclosure surplus", rep.no_disclosure.total_surplus, R("0"));
                   c.note("low/high disclosure surplus = " + rep.low_high.total_surplus.str());
                   c.expect(rep.low_high.total_surplus.sign() > 0, "low/high disclosure surplus not positive");
                   c.note("low-low probability " + rep.low_low_probability.str() + ", conditional surplus " +
                          rep.low_low_conditional_surplus.str() + ", value-2 utility " +
                          rep.low_low_high_type_utility.str());
                   c.note("low-low revenue " + rep.low_low.revenue.str() + ", second price with reserve 1 " +
                          rep.second_price_reserve_one_revenue.str());
                   c.expect(rep.low_low_always_sold, "low-low subgame leaves the good unsold");
                   c.expect(rep.low_low_efficient, "low-low subgame is inefficient");
                   c.expect(rep.low_low_high_type_utility.sign() > 0, "value-2 buyer gets nothing");
                   c.expect(rep.holds(), "regression does not hold");
                 }});

  out.push_back({15, "property suites", 300, false, [](Check& c, const SuiteOptions&) {
                   // Monte Carlo agreement of pair_surplus.
                   std::mt19937_64 rng(99);
                   const char* pairs[][4] = {{"0", "1", "0", "1"},     {"0", "1/2", "1/2", "1"},
                                             {"0", "1/2", "0", "1"},   {"1/4", "3/4", "0", "1"},
                                             {"1/3", "1", "0", "2/3"}, {"1/2", "1/2", "0", "1"},
                                             {"1/2", "1", "1/5", "7/10"}};
                   constexpr std::size_t kSamples = 1'000'000;
                   for (const auto& p : pairs) {
                     const UniformSegment sa(R(p[0]), R(p[1])), sb(R(p[2]), R(p[3]));
                     const auto exact = uniform2::pair_surplus(sa, sb);
                     const auto mc = monte_carlo(sa.a.to_double(), sa.b.to_double(), sb.a.to_double(),
                                                 sb.b.to_double(), kSamples, rng);
                     const double da = std::abs(mc.ua - exact.uA.to_double());
                     const double db = std::abs(mc.ub - exact.uB.to_double());
                     const std::string label = std::string("[") + p[0] + "," + p[1] + "]x[" + p[2] + "," + p[3] + "]";
                     char buf[160];
                     std::snprintf(buf, sizeof buf, " uA %s mc %.6f+-%.1e, uB %s mc %.6f+-%.1e", exact.uA.str().c_str(),
                                   mc.ua, mc.se_a, exact.uB.str().c_str(), mc.ub, mc.se_b);
                     c.note("monte carlo " + label + buf);
                     c.expect(da <= 3 * mc.se_a + 1e-12 && db <= 3 * mc.se_b + 1e-12, "monte carlo " + label + buf);
                   }

                   // Scale invariance.
                   std::mt19937_64 rng2(101);
                   for (std::size_t i = 0; i < 20; ++i) {
                     const auto inst = random_instance(rng2, 1 + i % 2, 2 + i % 2, 1 + (i / 2) % 2);
                     const Rational lambda(static_cast<long long>(1 + i % 5), 3);
                     std::vector<std::vector<BuyerType>> scaled;
                     for (std::size_t j = 0; j < inst.buyer_count(); ++j) {
                       std::vector<BuyerType> ts;
                       for (std::size_t t = 0; t < inst.type_count(j); ++t) {
                         BuyerType bt = inst.type(j, t);
                         for (auto& v : bt.values) v *= lambda;
                         ts.push_back(std::move(bt));
                       }
                       scaled.push_back(std::move(ts));
                     }
                     const auto base = solve_mechanism(inst);
                     const auto big = solve_mechanism(DiscreteInstance(inst.goods_count(), std::move(scaled)));
                     c.expect(big.revenue == lambda * base.revenue && big.buyer_surplus == lambda * base.buyer_surplus,
                              "scale invariance fails on instance " + std::to_string(i));
                   }
                   c.note("scale invariance on 20 instances");

                   // Self-consistency of the solver against direct verification.
                   std::mt19937_64 rng3(103);
                   for (std::size_t i = 0; i < 100; ++i) {
                     const auto inst = random_instance(rng3, 1 + i % 2, 2 + i % 2, 1 + (i / 3) % 2);
                     const auto sol = solve_mechanism(inst);
                     const auto rep = verify_mechanism(inst, sol.mechanism);
                     c.expect(rep.valid && rep.revenue == sol.revenue && rep.buyer_surplus == sol.buyer_surplus,
                              "verification fails on instance " + std::to_string(i) + ": " + rep.violation);
                   }
                   c.note("verify_mechanism on 100 instances");

                   // Discretized uniform pair against the closed-form auction.
                   constexpr long long kGrid = 20;
                   std::vector<BuyerType> grid;
                   for (long long k = 1; k <= kGrid; ++k) grid.push_back({Rational(1, kGrid), {Rational(2 * k - 1, 2 * kGrid)}});
                   const DiscreteInstance inst(1, {grid, grid});
                   const auto sol = solve_mechanism(inst);
                   std::size_t agree = 0;
                   for (std::size_t x = 0; x < inst.joint_count(); ++x) {
                     const auto types = inst.joint_types(x);
                     const Rational va = grid[types[0]].values[0], vb = grid[types[1]].values[0];
                     const Rational qa = sol.mechanism.q(x, 0, 0), qb = sol.mechanism.q(x, 1, 0);
                     bool match;
                     if (max(va, vb) < R("1/2")) {
                       match = qa.is_zero() && qb.is_zero();
                     } else if (va == vb) {
                       match = qa + qb == Rational(1);
                     } else {
                       match = va > vb ? qa == Rational(1) : qb == Rational(1);
                     }
                     agree += match;
                   }
                   const Rational share(static_cast<long long>(agree), static_cast<long long>(inst.joint_count()));
                   c.note("grid 20 winner agreement " + std::to_string(agree) + "/" + std::to_string(inst.joint_count()));
                   c.expect(share >= R("95/100"), "grid agreement " + share.str());
                 }});
  return out;
}

std::string seconds_str(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f s", s);
  return buf;
}

}  // namespace

std::vector<ItemResult> run_suite(const SuiteOptions& options, std::ostream& out) {
  std::vector<ItemResult> results;
  for (const auto& item : items()) {
    if (options.only != 0 && item.id != options.only) continue;
    ItemResult r;
    r.id = item.id;
    r.title = item.title;
    r.budget_seconds = item.budget_seconds;
    if (options.quick && item.skipped_when_quick) {
      r.skipped = true;
      r.passed = true;
      out << "SKIP  " << (r.id < 10 ? " " : "") << r.id << "  " << r.title << "\n" << std::flush;
      results.push_back(std::move(r));
      continue;
    }
    Check c;
    const auto start = std::chrono::steady_clock::now();
    try {
      item.body(c, options);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.failure.empty() && r.seconds > r.budget_seconds) {
      c.failure = "took " + seconds_str(r.seconds) + ", budget " + seconds_str(r.budget_seconds);
    }
    r.passed = c.failure.empty();
    r.failure = c.failure;
    r.numbers = std::move(c.numbers);
    out << (r.passed ? "PASS  " : "FAIL  ") << (r.id < 10 ? " " : "") << r.id << "  " << r.title << "  ("
        << seconds_str(r.seconds) << ")\n";
    if (!r.passed) out << "        failed: " << r.failure << "\n";
    if (options.show_numbers) {
      for (const auto& n : r.numbers) out << "        " << n << "\n";
    }
    out << std::flush;
    results.push_back(std::move(r));
  }
  std::size_t passed = 0, skipped = 0;
  for (const auto& r : results) {
    passed += r.passed && !r.skipped;
    skipped += r.skipped;
  }
  out << passed << " passed, " << results.size() - passed - skipped << " failed, " << skipped << " skipped\n";
  return results;
}

int first_failure(const std::vector<ItemResult>& results) {
  for (const auto& r : results) {
    if (!r.passed) return r.id;
  }
  return 0;
}

}  // namespace disclosure::app
