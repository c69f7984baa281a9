#pragma once

#include <cstddef>
#include <vector>

#include "disclosure/rational.hpp"

namespace disclosure {

struct BuyerType {
  Rational prob;
  std::vector<Rational> values;  // one additive value per good
  friend bool operator==(const BuyerType&, const BuyerType&) = default;
};

/// Independent buyers, each with a finite list of types over `goods` goods.
/// Type and buyer indices are zero-based throughout the library; documents
/// use one-based indices.
class DiscreteInstance {
 public:
  /// Validates: at least one buyer, each with >= 1 type; probabilities in
  /// (0, 1] summing to exactly 1; values nonnegative with one entry per good;
  /// value vectors pairwise distinct within a buyer. Throws ValidationError.
  DiscreteInstance(std::size_t goods, std::vector<std::vector<BuyerType>> buyers);

  std::size_t goods_count() const { return goods_; }
  std::size_t buyer_count() const { return buyers_.size(); }
  std::size_t type_count(std::size_t buyer) const { return buyers_[buyer].size(); }
  const BuyerType& type(std::size_t buyer, std::size_t t) const { return buyers_[buyer][t]; }
  const std::vector<std::vector<BuyerType>>& buyers() const { return buyers_; }

  /// Number of joint type vectors |T|.
  std::size_t joint_count() const { return joint_count_; }
  /// Mixed-radix index with buyer 0 most significant.
  std::size_t joint_index(const std::vector<std::size_t>& types) const;
  std::vector<std::size_t> joint_types(std::size_t joint) const;
  Rational joint_probability(std::size_t joint) const;
  const Rational& value(std::size_t joint, std::size_t buyer, std::size_t good) const;

  /// Type indices of `buyer` ordered by value (lexicographic over goods).
  std::vector<std::size_t> value_order(std::size_t buyer) const;

  friend bool operator==(const DiscreteInstance&, const DiscreteInstance&) = default;

 private:
  std::size_t goods_;
  std::vector<std::vector<BuyerType>> buyers_;
  std::vector<std::size_t> stride_;
  std::size_t joint_count_ = 1;
};

/// Instance restricted to one message per buyer, probabilities renormalized.
struct ConditionedInstance {
  DiscreteInstance instance;
  /// original_index[j][t] is the original type index of restricted type t.
  std::vector<std::vector<std::size_t>> original_index;
  /// Unconditional probability of each buyer's message.
  std::vector<Rational> message_probability;
};

/// messages[j] lists type indices of buyer j (any order, no duplicates).
ConditionedInstance condition_on_messages(const DiscreteInstance& inst,
                                          const std::vector<std::vector<std::size_t>>& messages);

}  // namespace disclosure
