#pragma once

#include <string>
#include <vector>

#include "disclosure/partition.hpp"
#include "disclosure/polygon.hpp"
#include "disclosure/rational.hpp"

/// One good, two independent U[0,1] buyers A and B disclosing intervals.
namespace disclosure::uniform2 {

/// Posterior U[a, b]; a == b is a point mass.
struct UniformSegment {
  Rational a, b;

  /// Throws ValidationError unless 0 <= a <= b <= 1.
  UniformSegment(Rational lo, Rational hi);
  static UniformSegment of(const IntervalPartition::Message& m) { return {m.lo, m.hi}; }

  bool point_mass() const { return a == b; }
  Rational length() const { return b - a; }
  bool contains(const Rational& v) const { return a <= v && v <= b; }
  friend bool operator==(const UniformSegment&, const UniformSegment&) = default;
};

/// 2v - b on a continuous segment; a point mass has virtual value a.
/// Throws ValidationError if v is outside the segment.
Rational virtual_value(const Rational& v, const UniformSegment& seg);
/// x/2 + b/2.
Rational inverse_virtual_value(const Rational& x, const UniformSegment& seg);

enum class Winner { A, B, None };
std::string to_string(Winner w);

struct AuctionOutcome {
  Winner winner = Winner::None;
  Rational payment;
  friend bool operator==(const AuctionOutcome&, const AuctionOutcome&) = default;
};

/// Myerson auction on the two posteriors. The higher nonnegative virtual
/// value wins; ties go to A, except that a continuous buyer beats a point
/// mass at equality. The winner pays the lowest value in their segment that
/// would still win.
AuctionOutcome myerson_outcome(const UniformSegment& segA, const UniformSegment& segB,
                               const Rational& vA, const Rational& vB);

enum class Inefficiency { None, NoSale, LowerValueWins };
std::string to_string(Inefficiency k);
Inefficiency classify(const AuctionOutcome& out, const Rational& vA, const Rational& vB);

/// Region of [a,b]x[c,d] where A wins: vA >= b/2 and vA >= vB + (b-d)/2.
geom::Polygon region_r(const UniformSegment& segA, const UniformSegment& segB);

struct PairSurplus {
  Rational uA, uB;
  Rational total() const { return uA + uB; }
};

/// Conditional expected utilities given vA ~ U[segA], vB ~ U[segB]. A point
/// mass earns nothing and acts as an outside option for the other buyer.
PairSurplus pair_surplus(const UniformSegment& segA, const UniformSegment& segB);

struct PairRow {
  /// [0,1] with the flag set stands for a fully disclosing buyer.
  UniformSegment segA, segB;
  bool a_full = false, b_full = false;
  Rational prob;    // probability of this message pair
  Rational uA, uB;  // contributions: prob times conditional utility
};

struct SurplusReport {
  Rational uA, uB;
  std::vector<PairRow> rows;  // A's messages outer, B's inner, both ascending
  Rational total() const { return uA + uB; }
  /// Columns a,b,c,d,prob,uA,uB with exact rationals.
  std::string csv() const;
};

/// Atoms of non-full partitions carry no probability and are ignored here.
SurplusReport profile_surplus(const IntervalPartition& pa, const IntervalPartition& pb);

/// Buyer A's contributions under the symmetric threshold profile
/// {[0,t],[t,1]}: low_high means A low and B high.
struct ThresholdBreakdown {
  Rational low_low, high_high, high_low, low_high;
  Rational per_buyer, total;
};

/// Throws ValidationError unless 0 <= t <= 1/2; t == 0 is no disclosure.
ThresholdBreakdown threshold_surplus(const Rational& t);
/// t^3/12, 1/12 - t/8, t/8 - t^2/16 + t^3/48, t^2/16 - 5t^3/48.
ThresholdBreakdown threshold_closed_form(const Rational& t);

/// Breakpoints 0, 2^-depth, ..., 1/4, 1/2, 1. Throws ValidationError for 0.
IntervalPartition zeno_partition(unsigned depth);

/// A fully disclosing and B silent.
PairSurplus full_disclosure_vs_silent_limit();

struct EfficiencyWitness {
  bool fully_disclosing = false;
  Rational vA, vB;
  Inefficiency kind = Inefficiency::None;
  AuctionOutcome outcome;
  int case_index = 0;  // branch of the construction, 1..5
  Rational epsilon;
};

/// A value pair at which the equilibrium misallocates, or fully_disclosing
/// when neither partition has an interval of positive length. The reported
/// point is always confirmed by replaying myerson_outcome.
EfficiencyWitness efficiency_witness(const IntervalPartition& pa, const IntervalPartition& pb);

enum class RegionKind { AWins, BWins, NoSale };

struct AllocationRegion {
  RegionKind kind;
  geom::Polygon polygon;
};

/// Winner regions per message pair; their areas sum to 1.
std::vector<AllocationRegion> allocation_regions(const IntervalPartition& pa,
                                                 const IntervalPartition& pb);

}  // namespace disclosure::uniform2
