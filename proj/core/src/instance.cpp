#include "disclosure/instance.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "disclosure/errors.hpp"

namespace disclosure {

DiscreteInstance::DiscreteInstance(std::size_t goods, std::vector<std::vector<BuyerType>> buyers)
    : goods_(goods), buyers_(std::move(buyers)) {
  if (goods_ == 0) throw ValidationError("instance needs at least one good");
  if (buyers_.empty()) throw ValidationError("instance needs at least one buyer");
  for (std::size_t j = 0; j < buyers_.size(); ++j) {
    const auto& types = buyers_[j];
    const std::string who = "buyer " + std::to_string(j + 1);
    if (types.empty()) throw ValidationError(who + " has no types");
    Rational total;
    for (std::size_t t = 0; t < types.size(); ++t) {
      const auto& ty = types[t];
      if (ty.prob.sign() <= 0 || ty.prob > Rational(1)) {
        throw ValidationError(who + " type " + std::to_string(t + 1) +
                              " probability must lie in (0, 1]");
      }
      if (ty.values.size() != goods_) {
        throw ValidationError(who + " type " + std::to_string(t + 1) + " needs " +
                              std::to_string(goods_) + " values");
      }
      for (const auto& v : ty.values) {
        if (v.sign() < 0) throw ValidationError(who + " has a negative value");
      }
      for (std::size_t u = 0; u < t; ++u) {
        if (types[u].values == ty.values) {
          throw ValidationError(who + " types " + std::to_string(u + 1) + " and " +
                                std::to_string(t + 1) + " have identical values");
        }
      }
      total += ty.prob;
    }
    if (total != Rational(1)) {
      throw ValidationError(who + " probabilities sum to " + total.str() + ", not 1");
    }
  }
  stride_.assign(buyers_.size(), 1);
  for (std::size_t j = buyers_.size(); j-- > 0;) {
    stride_[j] = joint_count_;
    joint_count_ *= buyers_[j].size();
  }
}

std::size_t DiscreteInstance::joint_index(const std::vector<std::size_t>& types) const {
  std::size_t idx = 0;
  for (std::size_t j = 0; j < buyers_.size(); ++j) idx += types[j] * stride_[j];
  return idx;
}

std::vector<std::size_t> DiscreteInstance::joint_types(std::size_t joint) const {
  std::vector<std::size_t> out(buyers_.size());
  for (std::size_t j = 0; j < buyers_.size(); ++j) {
    out[j] = joint / stride_[j];
    joint %= stride_[j];
  }
  return out;
}

Rational DiscreteInstance::joint_probability(std::size_t joint) const {
  Rational p(1);
  const auto types = joint_types(joint);
  for (std::size_t j = 0; j < buyers_.size(); ++j) p *= buyers_[j][types[j]].prob;
  return p;
}

const Rational& DiscreteInstance::value(std::size_t joint, std::size_t buyer,
                                        std::size_t good) const {
  const std::size_t t = (joint / stride_[buyer]) % buyers_[buyer].size();
  return buyers_[buyer][t].values[good];
}

std::vector<std::size_t> DiscreteInstance::value_order(std::size_t buyer) const {
  std::vector<std::size_t> order(buyers_[buyer].size());
  std::iota(order.begin(), order.end(), 0);
  const auto& types = buyers_[buyer];
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::lexicographical_compare(types[a].values.begin(), types[a].values.end(),
                                        types[b].values.begin(), types[b].values.end());
  });
  return order;
}

ConditionedInstance condition_on_messages(const DiscreteInstance& inst,
                                          const std::vector<std::vector<std::size_t>>& messages) {
  if (messages.size() != inst.buyer_count()) {
    throw ValidationError("need one message per buyer");
  }
  std::vector<std::vector<BuyerType>> buyers;
  std::vector<std::vector<std::size_t>> index;
  std::vector<Rational> mass;
  for (std::size_t j = 0; j < messages.size(); ++j) {
    auto msg = messages[j];
    if (msg.empty()) throw ValidationError("empty message for buyer " + std::to_string(j + 1));
    std::sort(msg.begin(), msg.end());
    if (std::adjacent_find(msg.begin(), msg.end()) != msg.end()) {
      throw ValidationError("duplicate type in message");
    }
    if (msg.back() >= inst.type_count(j)) {
      throw ValidationError("message refers to unknown type of buyer " + std::to_string(j + 1));
    }
    Rational total;
    for (auto t : msg) total += inst.type(j, t).prob;
    std::vector<BuyerType> restricted;
    for (auto t : msg) {
      restricted.push_back({inst.type(j, t).prob / total, inst.type(j, t).values});
    }
    buyers.push_back(std::move(restricted));
    index.push_back(std::move(msg));
    mass.push_back(std::move(total));
  }
  return {DiscreteInstance(inst.goods_count(), std::move(buyers)), std::move(index),
          std::move(mass)};
}

}  // namespace disclosure
