#include "disclosure/dpconnected.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "disclosure/errors.hpp"

namespace disclosure::dp {

SingleBuyerInstance::SingleBuyerInstance(std::vector<Rational> values, std::vector<Rational> probs)
    : values_(std::move(values)), probs_(std::move(probs)) {
  if (values_.empty() || values_.size() != probs_.size()) {
    throw ValidationError("need one probability per value and at least one type");
  }
  Rational sum;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i].sign() <= 0) throw ValidationError("values must be positive");
    if (i > 0 && !(values_[i - 1] < values_[i])) {
      throw ValidationError("values must strictly increase");
    }
    if (probs_[i].sign() <= 0) throw ValidationError("probabilities must be positive");
    sum += probs_[i];
  }
  if (sum != Rational(1)) throw ValidationError("probabilities sum to " + sum.str() + ", not 1");
}

SingleBuyerInstance SingleBuyerInstance::from(const DiscreteInstance& inst) {
  if (inst.buyer_count() != 1 || inst.goods_count() != 1) {
    throw ValidationError("expected a one-buyer, one-good instance");
  }
  std::vector<Rational> values, probs;
  for (auto t : inst.value_order(0)) {
    values.push_back(inst.type(0, t).values[0]);
    probs.push_back(inst.type(0, t).prob);
  }
  return SingleBuyerInstance(std::move(values), std::move(probs));
}

DiscreteInstance SingleBuyerInstance::to_discrete() const {
  std::vector<BuyerType> types;
  for (std::size_t i = 0; i < size(); ++i) types.push_back({probs_[i], {values_[i]}});
  return DiscreteInstance(1, {std::move(types)});
}

BlockValue buyer_utility(const SingleBuyerInstance& inst, const Block& msg) {
  if (msg.empty()) throw ValidationError("empty message");
  for (auto i : msg) {
    if (i >= inst.size()) throw ValidationError("type index out of range");
  }
  Block sorted = msg;
  std::sort(sorted.begin(), sorted.end());
  // Walk prices from the top so the mass at or above each price accumulates.
  Rational mass_above, best_revenue;
  std::size_t best = sorted.back();
  for (std::size_t k = sorted.size(); k-- > 0;) {
    const std::size_t j = sorted[k];
    mass_above += inst.prob(j);
    const Rational revenue = inst.value(j) * mass_above;
    if (revenue >= best_revenue) {
      best_revenue = revenue;
      best = j;
    }
  }
  BlockValue out{Rational(0), inst.value(best)};
  for (auto i : sorted) {
    if (inst.value(i) > out.price) out.utility += inst.prob(i) * (inst.value(i) - out.price);
  }
  return out;
}

ConnectedOptimum optimal_connected(const SingleBuyerInstance& inst) {
  const std::size_t n = inst.size();
  std::vector<DpEntry> q(n + 1);
  std::vector<std::size_t> split(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    bool have = false;
    for (std::size_t j = 0; j < i; ++j) {
      Block tail(i - j);
      std::iota(tail.begin(), tail.end(), j);
      const Rational cand = q[j].utility + buyer_utility(inst, tail).utility;
      if (!have || cand > q[i].utility) {
        q[i].utility = cand;
        split[i] = j;
        have = true;
      }
    }
    q[i].partition = q[split[i]].partition;
    Block tail(i - split[i]);
    std::iota(tail.begin(), tail.end(), split[i]);
    q[i].partition.push_back(std::move(tail));
  }
  ConnectedOptimum out{q[n].partition, q[n].utility, {}};
  out.table = std::move(q);
  return out;
}

ConnectedOptimum brute_force_connected(const SingleBuyerInstance& inst) {
  const std::size_t n = inst.size();
  if (n > kMaxBruteForceTypes) {
    throw GuardExceeded("brute force limited to " + std::to_string(kMaxBruteForceTypes) +
                        " types, got " + std::to_string(n));
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  ConnectedOptimum best;
  bool have = false;
  for (auto& p : enumerate_connected_partitions(order)) {
    const Rational u = partition_utility(inst, p);
    if (!have || u > best.utility) {
      best.utility = u;
      best.partition = std::move(p);
      have = true;
    }
  }
  return best;
}

Rational partition_utility(const SingleBuyerInstance& inst, const SetPartition& p) {
  Rational total;
  for (const auto& b : p) total += buyer_utility(inst, b).utility;
  return total;
}

}  // namespace disclosure::dp
