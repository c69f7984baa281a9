#pragma once

#include <optional>
#include <vector>

#include "disclosure/dpconnected.hpp"
#include "disclosure/partition.hpp"

/// PARTITION instances and their reduction to the buyer-optimal disclosure
/// decision problem.
namespace disclosure::hardness {

struct PartitionProblem {
  std::vector<unsigned long> sizes;
  /// Throws ValidationError unless nonempty, all positive, with even sum.
  explicit PartitionProblem(std::vector<unsigned long> s);
  unsigned long total() const;
};

struct BuyerOptInstance {
  dp::SingleBuyerInstance instance;
  Rational target;
};

/// n = m + 1 types: p_i = 2 s_i / (3S), v_i = S - 1/(4+i) for i = 1..m,
/// then p_n = 1/3, v_n = S/2; target S/6 - 1/12. Type order in the result
/// is by value, so the last original type comes first.
struct Reduction {
  BuyerOptInstance reduced;
  /// position[i] is where original type i (zero-based, m is the low type)
  /// sits in the value-sorted instance.
  std::vector<std::size_t> position;
};

Reduction reduce(const PartitionProblem& pp);

inline constexpr std::size_t kMaxSubsetSearch = 24;
/// Zero-based indices of a subset summing to S/2, the first in increasing
/// bitmask order. Throws GuardExceeded for more than kMaxSubsetSearch sizes.
std::optional<std::vector<std::size_t>> solve_partition_bruteforce(const PartitionProblem& pp);

inline constexpr std::size_t kMaxVerifiedSizes = 8;

struct ReductionReport {
  bool solvable = false;
  std::optional<std::vector<std::size_t>> subset;
  Rational target;
  Rational best_surplus;
  SetPartition best_partition;  // over the value-sorted reduced types
  /// Witness partition {I + low type, rest} and its outcome, when solvable.
  std::optional<SetPartition> witness;
  Rational witness_surplus;
  Rational pooled_price;
  bool equivalence_holds = false;
};

/// Full profile search on the reduced instance against the subset search.
/// Throws GuardExceeded for more than kMaxVerifiedSizes sizes.
ReductionReport verify_reduction(const PartitionProblem& pp);

}  // namespace disclosure::hardness
