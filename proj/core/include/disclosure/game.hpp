#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "disclosure/instance.hpp"
#include "disclosure/lpmech.hpp"
#include "disclosure/partition.hpp"

namespace disclosure::game {

/// One joint message: block index per buyer, its probability and the
/// seller's lexicographic optimum on the conditioned instance.
struct MessageOutcome {
  std::vector<std::size_t> blocks;
  Rational probability;
  std::shared_ptr<const ConditionedInstance> conditioned;
  std::shared_ptr<const LpSolution> solution;
};

struct GameOutcome {
  Rational expected_revenue;
  std::vector<Rational> buyer_utility;
  Rational total_surplus;
  std::vector<MessageOutcome> per_message;
  /// q and r over the original joint types, as played in equilibrium.
  Mechanism mechanism;
  bool always_all_sold = false;
  bool efficient = false;
  /// Probability that good k stays with the seller.
  std::vector<Rational> unsold_probability;
};

/// Memoizes seller optima by joint message (one type bitmask per buyer);
/// reusable across profiles of the same instance.
class SolveCache {
 public:
  using Key = std::vector<std::uint64_t>;
  struct Entry {
    std::shared_ptr<const ConditionedInstance> conditioned;
    std::shared_ptr<const LpSolution> solution;
  };
  const Entry& get(const DiscreteInstance& inst, const std::vector<const Block*>& message);
  std::size_t size() const { return entries_.size(); }

 private:
  std::map<Key, Entry> entries_;
};

/// Throws ValidationError if the profile does not partition each buyer's types.
GameOutcome evaluate_profile(const DiscreteInstance& inst, const PartitionProfile& profile);
GameOutcome evaluate_profile(const DiscreteInstance& inst, const PartitionProfile& profile,
                             SolveCache& cache);

PartitionProfile no_disclosure_profile(const DiscreteInstance& inst);
PartitionProfile full_disclosure_profile(const DiscreteInstance& inst);

struct SearchOptions {
  /// Restrict each buyer to blocks contiguous in value order.
  bool connected_only = false;
  std::uint64_t max_profiles = 1'000'000;
};

struct RankedProfile {
  std::size_t enumeration_index = 0;
  PartitionProfile profile;
  GameOutcome outcome;
};

/// Every profile, sorted by total surplus descending; equal surpluses keep
/// enumeration order (per-buyer restricted-growth order, buyer 0 outermost).
/// Throws GuardExceeded when the profile count exceeds max_profiles.
std::vector<RankedProfile> search_profiles(const DiscreteInstance& inst,
                                           const SearchOptions& options = {});

/// CSV: profile,revenue,u1..un,total,always_all_sold,efficient.
std::string ranking_csv(const DiscreteInstance& inst, const std::vector<RankedProfile>& ranked);

struct RareLowReport {
  GameOutcome no_disclosure;
  GameOutcome low_high;
  /// Both buyers report the low block {1, 2}.
  LpSolution low_low;
  Rational low_low_probability;
  Rational low_low_conditional_surplus;
  /// Revenue of a second-price auction with reserve 1 on the low-low posterior.
  Rational second_price_reserve_one_revenue;
  bool low_low_always_sold = false;
  bool low_low_efficient = false;
  /// Interim utility of a value-2 buyer in the low-low subgame, averaged
  /// over the two buyers.
  Rational low_low_high_type_utility;
  bool holds() const;
};

RareLowReport rare_low_regression();

}  // namespace disclosure::game
