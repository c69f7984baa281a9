#include "disclosure/game.hpp"

#include <algorithm>
#include <sstream>

#include "disclosure/catalog.hpp"
#include "disclosure/errors.hpp"
#include "disclosure/io.hpp"

namespace disclosure::game {

namespace {

struct SaleFlags {
  bool all_sold = true;
  bool efficient = true;
  std::vector<Rational> unsold;
};

SaleFlags sale_flags(const DiscreteInstance& inst, const Mechanism& mech) {
  SaleFlags f;
  f.unsold.assign(inst.goods_count(), Rational(0));
  const Rational one(1);
  for (std::size_t i = 0; i < inst.joint_count(); ++i) {
    const Rational p = inst.joint_probability(i);
    for (std::size_t k = 0; k < inst.goods_count(); ++k) {
      Rational sold, to_best;
      Rational best = inst.value(i, 0, k);
      for (std::size_t j = 1; j < inst.buyer_count(); ++j) best = max(best, inst.value(i, j, k));
      for (std::size_t j = 0; j < inst.buyer_count(); ++j) {
        sold += mech.q(i, j, k);
        if (inst.value(i, j, k) == best) to_best += mech.q(i, j, k);
      }
      if (sold != one) f.all_sold = false;
      if (to_best != one) f.efficient = false;
      f.unsold[k] += p * (one - sold);
    }
  }
  return f;
}

std::vector<std::vector<std::size_t>> block_index(const DiscreteInstance& inst,
                                                  const PartitionProfile& profile) {
  if (profile.size() != inst.buyer_count()) {
    throw ValidationError("profile needs one partition per buyer");
  }
  std::vector<std::vector<std::size_t>> out(profile.size());
  for (std::size_t j = 0; j < profile.size(); ++j) {
    if (!is_partition_of(profile[j], inst.type_count(j))) {
      throw ValidationError("profile entry " + std::to_string(j + 1) +
                            " is not a partition of that buyer's types");
    }
    out[j].resize(inst.type_count(j));
    for (std::size_t b = 0; b < profile[j].size(); ++b) {
      for (auto t : profile[j][b]) out[j][t] = b;
    }
  }
  return out;
}

}  // namespace

const SolveCache::Entry& SolveCache::get(const DiscreteInstance& inst,
                                         const std::vector<const Block*>& message) {
  Key key;
  std::vector<std::vector<std::size_t>> subsets;
  for (const Block* b : message) {
    std::uint64_t mask = 0;
    for (auto t : *b) mask |= std::uint64_t{1} << t;
    key.push_back(mask);
    subsets.push_back(*b);
  }
  auto it = entries_.find(key);
  if (it != entries_.end()) return it->second;
  auto cond = std::make_shared<const ConditionedInstance>(condition_on_messages(inst, subsets));
  auto sol = std::make_shared<const LpSolution>(solve_mechanism(cond->instance));
  return entries_.emplace(std::move(key), Entry{std::move(cond), std::move(sol)}).first->second;
}

GameOutcome evaluate_profile(const DiscreteInstance& inst, const PartitionProfile& profile) {
  SolveCache cache;
  return evaluate_profile(inst, profile, cache);
}

GameOutcome evaluate_profile(const DiscreteInstance& inst, const PartitionProfile& profile,
                             SolveCache& cache) {
  const auto block_of = block_index(inst, profile);
  const std::size_t buyers = inst.buyer_count();
  GameOutcome out;

  std::size_t tuples = 1;
  for (const auto& p : profile) tuples *= p.size();
  std::vector<std::size_t> blocks(buyers, 0);
  for (std::size_t m = 0; m < tuples; ++m) {
    std::size_t rest = m;
    for (std::size_t j = buyers; j-- > 0;) {
      blocks[j] = rest % profile[j].size();
      rest /= profile[j].size();
    }
    std::vector<const Block*> message;
    for (std::size_t j = 0; j < buyers; ++j) message.push_back(&profile[j][blocks[j]]);
    const auto& entry = cache.get(inst, message);
    Rational prob(1);
    for (const auto& p : entry.conditioned->message_probability) prob *= p;
    out.per_message.push_back({blocks, prob, entry.conditioned, entry.solution});
  }

  out.mechanism = Mechanism(inst.joint_count(), buyers, inst.goods_count());
  std::vector<std::size_t> local(buyers);
  for (std::size_t i = 0; i < inst.joint_count(); ++i) {
    const auto types = inst.joint_types(i);
    std::size_t m = 0;
    for (std::size_t j = 0; j < buyers; ++j) {
      const Block& b = profile[j][block_of[j][types[j]]];
      m = m * profile[j].size() + block_of[j][types[j]];
      local[j] = static_cast<std::size_t>(std::lower_bound(b.begin(), b.end(), types[j]) - b.begin());
    }
    const auto& msg = out.per_message[m];
    const std::size_t ci = msg.conditioned->instance.joint_index(local);
    for (std::size_t j = 0; j < buyers; ++j) {
      for (std::size_t k = 0; k < inst.goods_count(); ++k) {
        out.mechanism.q(i, j, k) = msg.solution->mechanism.q(ci, j, k);
      }
      out.mechanism.r(i, j) = msg.solution->mechanism.r(ci, j);
    }
  }

  out.expected_revenue = expected_revenue(inst, out.mechanism);
  out.buyer_utility.assign(buyers, Rational(0));
  for (std::size_t i = 0; i < inst.joint_count(); ++i) {
    const Rational p = inst.joint_probability(i);
    for (std::size_t j = 0; j < buyers; ++j) {
      out.buyer_utility[j] += p * ex_post_utility(inst, out.mechanism, i, j);
    }
  }
  for (const auto& u : out.buyer_utility) out.total_surplus += u;
  auto flags = sale_flags(inst, out.mechanism);
  out.always_all_sold = flags.all_sold;
  out.efficient = flags.efficient;
  out.unsold_probability = std::move(flags.unsold);
  return out;
}

PartitionProfile no_disclosure_profile(const DiscreteInstance& inst) {
  PartitionProfile p;
  for (std::size_t j = 0; j < inst.buyer_count(); ++j) p.push_back(single_block(inst.type_count(j)));
  return p;
}

PartitionProfile full_disclosure_profile(const DiscreteInstance& inst) {
  PartitionProfile p;
  for (std::size_t j = 0; j < inst.buyer_count(); ++j) p.push_back(singletons(inst.type_count(j)));
  return p;
}

std::vector<RankedProfile> search_profiles(const DiscreteInstance& inst,
                                           const SearchOptions& options) {
  const std::size_t buyers = inst.buyer_count();
  std::uint64_t count = 1;
  for (std::size_t j = 0; j < buyers; ++j) {
    const std::size_t n = inst.type_count(j);
    const std::uint64_t per = options.connected_only ? (n > 63 ? 0 : std::uint64_t{1} << (n - 1))
                                                     : (n > kMaxEnumeratedTypes ? 0 : bell_number(n));
    if (per == 0 || count > options.max_profiles / per) {
      throw GuardExceeded("profile search exceeds the limit of " +
                          std::to_string(options.max_profiles) + " profiles");
    }
    count *= per;
  }

  std::vector<std::vector<SetPartition>> choices;
  for (std::size_t j = 0; j < buyers; ++j) {
    choices.push_back(options.connected_only
                          ? enumerate_connected_partitions(inst.value_order(j))
                          : enumerate_set_partitions(inst.type_count(j)));
  }

  SolveCache cache;
  std::vector<RankedProfile> ranked;
  ranked.reserve(count);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    PartitionProfile prof(buyers);
    std::uint64_t rest = idx;
    for (std::size_t j = buyers; j-- > 0;) {
      prof[j] = choices[j][rest % choices[j].size()];
      rest /= choices[j].size();
    }
    GameOutcome outcome = evaluate_profile(inst, prof, cache);
    ranked.push_back({static_cast<std::size_t>(idx), std::move(prof), std::move(outcome)});
  }
  std::stable_sort(ranked.begin(), ranked.end(), [](const RankedProfile& a, const RankedProfile& b) {
    return a.outcome.total_surplus > b.outcome.total_surplus;
  });
  return ranked;
}

std::string ranking_csv(const DiscreteInstance& inst, const std::vector<RankedProfile>& ranked) {
  std::ostringstream os;
  os << "profile,revenue";
  for (std::size_t j = 0; j < inst.buyer_count(); ++j) os << ",u" << (j + 1);
  os << ",total,always_all_sold,efficient\n";
  for (const auto& r : ranked) {
    os << '"' << profile_label(r.profile) << '"' << ',' << r.outcome.expected_revenue;
    for (const auto& u : r.outcome.buyer_utility) os << ',' << u;
    os << ',' << r.outcome.total_surplus << ',' << (r.outcome.always_all_sold ? "true" : "false")
       << ',' << (r.outcome.efficient ? "true" : "false") << '\n';
  }
  return os.str();
}

bool RareLowReport::holds() const {
  return no_disclosure.total_surplus.is_zero() && low_high.total_surplus.sign() > 0 &&
         low_low_always_sold && low_low_efficient && low_low_high_type_utility.sign() > 0;
}

RareLowReport rare_low_regression() {
  const DiscreteInstance inst = catalog::rare_low_pair();
  RareLowReport rep;
  SolveCache cache;
  rep.no_disclosure = evaluate_profile(inst, no_disclosure_profile(inst), cache);
  const SetPartition low_high{{0, 1}, {2}};
  rep.low_high = evaluate_profile(inst, {low_high, low_high}, cache);

  const auto& low_low = *std::find_if(rep.low_high.per_message.begin(), rep.low_high.per_message.end(),
                                      [](const MessageOutcome& m) {
                                        return m.blocks == std::vector<std::size_t>{0, 0};
                                      });
  const DiscreteInstance& post = low_low.conditioned->instance;
  rep.low_low = *low_low.solution;
  rep.low_low_probability = low_low.probability;
  rep.low_low_conditional_surplus = rep.low_low.buyer_surplus;

  const Rational reserve(1);
  for (std::size_t i = 0; i < post.joint_count(); ++i) {
    const Rational& v0 = post.value(i, 0, 0);
    const Rational& v1 = post.value(i, 1, 0);
    if (max(v0, v1) >= reserve) {
      rep.second_price_reserve_one_revenue += post.joint_probability(i) * max(reserve, min(v0, v1));
    }
  }
  const auto flags = sale_flags(post, rep.low_low.mechanism);
  rep.low_low_always_sold = flags.all_sold;
  rep.low_low_efficient = flags.efficient;
  rep.low_low_high_type_utility = (interim_utility(post, rep.low_low.mechanism, 0, 1) +
                                   interim_utility(post, rep.low_low.mechanism, 1, 1)) /
                                  Rational(2);
  return rep;
}

}  // namespace disclosure::game
