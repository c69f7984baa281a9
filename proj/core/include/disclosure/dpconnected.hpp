#pragma once

#include <vector>

#include "disclosure/instance.hpp"
#include "disclosure/partition.hpp"
#include "disclosure/rational.hpp"

/// One buyer, one good, posted prices.
namespace disclosure::dp {

class SingleBuyerInstance {
 public:
  /// Values strictly increasing and positive; probabilities positive and
  /// summing to one. Throws ValidationError.
  SingleBuyerInstance(std::vector<Rational> values, std::vector<Rational> probs);
  /// From a one-buyer, one-good DiscreteInstance; types are re-sorted by value.
  static SingleBuyerInstance from(const DiscreteInstance& inst);
  DiscreteInstance to_discrete() const;

  std::size_t size() const { return values_.size(); }
  const Rational& value(std::size_t i) const { return values_[i]; }
  const Rational& prob(std::size_t i) const { return probs_[i]; }
  const std::vector<Rational>& values() const { return values_; }
  const std::vector<Rational>& probs() const { return probs_; }

 private:
  std::vector<Rational> values_, probs_;
};

struct BlockValue {
  Rational utility;  // unconditional probability mass
  Rational price;
};

/// Seller's best posted price on the message (revenue-maximal, ties toward
/// the lower price) and the buyer's resulting surplus. Throws
/// ValidationError on an empty or out-of-range message.
BlockValue buyer_utility(const SingleBuyerInstance& inst, const Block& msg);

struct DpEntry {
  Rational utility;
  SetPartition partition;  // connected partition of types 0..i-1
};

struct ConnectedOptimum {
  SetPartition partition;
  Rational utility;
  std::vector<DpEntry> table;  // Q[0..n]; empty for brute force
};

/// O(n^3) table over prefixes; ties in the split point go to the smaller one.
ConnectedOptimum optimal_connected(const SingleBuyerInstance& inst);

inline constexpr std::size_t kMaxBruteForceTypes = 20;

/// Max over all 2^(n-1) compositions; first maximum in enumeration order.
/// Throws GuardExceeded for n > kMaxBruteForceTypes.
ConnectedOptimum brute_force_connected(const SingleBuyerInstance& inst);

/// Sum of buyer_utility over the blocks of an arbitrary partition.
Rational partition_utility(const SingleBuyerInstance& inst, const SetPartition& p);

}  // namespace disclosure::dp
