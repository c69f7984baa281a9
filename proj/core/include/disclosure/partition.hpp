#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "disclosure/rational.hpp"

namespace disclosure {

/// Sorted zero-based type indices.
using Block = std::vector<std::size_t>;
/// Canonical form: indices ascending within blocks, blocks ordered by their
/// minimum element.
using SetPartition = std::vector<Block>;
/// One set partition per buyer.
using PartitionProfile = std::vector<SetPartition>;

inline constexpr std::size_t kMaxEnumeratedTypes = 12;

std::uint64_t bell_number(std::size_t n);

/// All Bell(n) set partitions of {0..n-1} in restricted-growth-string order
/// (the first is the single block, the last all singletons). Throws
/// GuardExceeded for n > kMaxEnumeratedTypes, ValidationError for n == 0.
std::vector<SetPartition> enumerate_set_partitions(std::size_t n);

/// Partitions into consecutive runs of `order` (2^(n-1) of them), each
/// returned in canonical form.
std::vector<SetPartition> enumerate_connected_partitions(const std::vector<std::size_t>& order);

SetPartition canonicalize(SetPartition p);
bool is_partition_of(const SetPartition& p, std::size_t n);
SetPartition singletons(std::size_t n);
SetPartition single_block(std::size_t n);

/// Breakpoints 0 = t_0 < t_1 < ... < t_K = 1 splitting [0, 1] into K
/// intervals. The k-th message is (t_{k-1}, t_k] (the first is [0, t_1]).
/// Optional atoms are points disclosed as singleton messages, carved out of
/// whichever interval contains them. A fully disclosing partition reveals
/// every value exactly.
class IntervalPartition {
 public:
  /// Throws ValidationError unless breakpoints start at 0, end at 1 and
  /// strictly increase, and atoms lie in [0, 1].
  explicit IntervalPartition(std::vector<Rational> breakpoints, std::vector<Rational> atoms = {});

  static IntervalPartition no_disclosure();
  static IntervalPartition fully_disclosing();

  bool is_fully_disclosing() const { return full_; }
  const std::vector<Rational>& breakpoints() const { return breakpoints_; }
  const std::vector<Rational>& atoms() const { return atoms_; }
  /// Number of nondegenerate intervals (0 when fully disclosing).
  std::size_t interval_count() const { return full_ ? 0 : breakpoints_.size() - 1; }
  const Rational& lower(std::size_t k) const { return breakpoints_[k]; }
  const Rational& upper(std::size_t k) const { return breakpoints_[k + 1]; }

  struct Message {
    Rational lo, hi;  // closure [lo, hi]; lo == hi for a revealed point
    bool lo_closed = true;
    bool hi_closed = true;
    bool degenerate() const { return lo == hi; }
    friend bool operator==(const Message&, const Message&) = default;
  };

  /// The message sent by a buyer of value v in [0, 1].
  Message locate(const Rational& v) const;
  bool is_atom(const Rational& v) const;
  /// Whether a buyer of value v sends exactly `msg`.
  bool sends(const Rational& v, const Message& msg) const { return locate(v) == msg; }

  /// Comma-separated breakpoints, e.g. "0,1/2,1"; "full" for full disclosure.
  static IntervalPartition parse(std::string_view text);
  std::string str() const;

 private:
  IntervalPartition() = default;
  std::vector<Rational> breakpoints_;
  std::vector<Rational> atoms_;  // sorted, unique
  bool full_ = false;
};

}  // namespace disclosure
