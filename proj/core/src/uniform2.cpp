#include "disclosure/uniform2.hpp"

#include <optional>
#include <sstream>
#include <stdexcept>

#include "disclosure/errors.hpp"

namespace disclosure::uniform2 {

using geom::Linear;
using geom::Polygon;

namespace {

const Rational kZero(0);
const Rational kOne(1);
const Rational kHalf(1, 2);

struct Segments {
  std::vector<UniformSegment> segs;
  bool full = false;
};

Segments segments_of(const IntervalPartition& p) {
  Segments out;
  out.full = p.is_fully_disclosing();
  for (std::size_t k = 0; k < p.interval_count(); ++k) out.segs.emplace_back(p.lower(k), p.upper(k));
  return out;
}

// Integral of (d - vB) over w in [0,1], vB in [c,d], 2vB - d >= w: B's
// unnormalized surplus against a fully disclosing opponent of value w.
Rational silent_against_full(const UniformSegment& seg) {
  const Polygon region =
      geom::clip(geom::rectangle(kZero, kOne, seg.a, seg.b), Linear{Rational(-1), Rational(2), -seg.b});
  return geom::integrate(region, Linear{kZero, Rational(-1), seg.b});
}

}  // namespace

UniformSegment::UniformSegment(Rational lo, Rational hi) : a(std::move(lo)), b(std::move(hi)) {
  if (a.sign() < 0 || b < a || b > kOne) {
    throw ValidationError("segment must satisfy 0 <= a <= b <= 1, got [" + a.str() + ", " +
                          b.str() + "]");
  }
}

Rational virtual_value(const Rational& v, const UniformSegment& seg) {
  if (!seg.contains(v)) {
    throw ValidationError("value " + v.str() + " outside segment [" + seg.a.str() + ", " +
                          seg.b.str() + "]");
  }
  if (seg.point_mass()) return seg.a;
  return Rational(2) * v - seg.b;
}

Rational inverse_virtual_value(const Rational& x, const UniformSegment& seg) {
  return (x + seg.b) / Rational(2);
}

std::string to_string(Winner w) {
  switch (w) {
    case Winner::A: return "A";
    case Winner::B: return "B";
    case Winner::None: return "none";
  }
  return "?";
}

std::string to_string(Inefficiency k) {
  switch (k) {
    case Inefficiency::None: return "efficient";
    case Inefficiency::NoSale: return "no sale";
    case Inefficiency::LowerValueWins: return "lower value wins";
  }
  return "?";
}

AuctionOutcome myerson_outcome(const UniformSegment& segA, const UniformSegment& segB,
                               const Rational& vA, const Rational& vB) {
  const Rational phiA = virtual_value(vA, segA);
  const Rational phiB = virtual_value(vB, segB);
  if (phiA.sign() < 0 && phiB.sign() < 0) return {};

  bool a_wins;
  if (phiA != phiB) {
    a_wins = phiA > phiB;
  } else {
    a_wins = !(segA.point_mass() && !segB.point_mass());
  }
  const UniformSegment& seg = a_wins ? segA : segB;
  const Rational& rival = a_wins ? phiB : phiA;
  AuctionOutcome out;
  out.winner = a_wins ? Winner::A : Winner::B;
  if (seg.point_mass()) {
    out.payment = seg.a;
  } else {
    out.payment = max(seg.a, inverse_virtual_value(max(kZero, rival), seg));
  }
  return out;
}

Inefficiency classify(const AuctionOutcome& out, const Rational& vA, const Rational& vB) {
  switch (out.winner) {
    case Winner::None: return max(vA, vB).sign() > 0 ? Inefficiency::NoSale : Inefficiency::None;
    case Winner::A: return vA < vB ? Inefficiency::LowerValueWins : Inefficiency::None;
    case Winner::B: return vB < vA ? Inefficiency::LowerValueWins : Inefficiency::None;
  }
  return Inefficiency::None;
}

Polygon region_r(const UniformSegment& segA, const UniformSegment& segB) {
  Polygon p = geom::rectangle(segA.a, segA.b, segB.a, segB.b);
  p = geom::clip(p, Linear{kOne, kZero, -segA.b / Rational(2)});
  return geom::clip(p, Linear{Rational(2), Rational(-2), segB.b - segA.b});
}

PairSurplus pair_surplus(const UniformSegment& segA, const UniformSegment& segB) {
  if (segA.point_mass() && segB.point_mass()) return {};
  if (segA.point_mass() || segB.point_mass()) {
    const UniformSegment& atom = segA.point_mass() ? segA : segB;
    const UniformSegment& cont = segA.point_mass() ? segB : segA;
    const Rational t = max(cont.a, inverse_virtual_value(atom.a, cont));
    Rational u;
    if (t < cont.b) u = (cont.b - t) * (cont.b - t) / (Rational(2) * cont.length());
    return segA.point_mass() ? PairSurplus{kZero, u} : PairSurplus{u, kZero};
  }
  const Rational mass = segA.length() * segB.length();
  const Polygon ra = region_r(segA, segB);
  const Polygon rb = region_r(segB, segA);
  // rb lives in (vB, vA) coordinates; the integrand only depends on vB.
  return {geom::integrate(ra, Linear{Rational(-1), kZero, segA.b}) / mass,
          geom::integrate(rb, Linear{Rational(-1), kZero, segB.b}) / mass};
}

std::string SurplusReport::csv() const {
  std::ostringstream os;
  os << "a,b,c,d,prob,uA,uB\n";
  for (const auto& r : rows) {
    os << r.segA.a << ',' << r.segA.b << ',' << r.segB.a << ',' << r.segB.b << ',' << r.prob
       << ',' << r.uA << ',' << r.uB << '\n';
  }
  return os.str();
}

SurplusReport profile_surplus(const IntervalPartition& pa, const IntervalPartition& pb) {
  const Segments sa = segments_of(pa);
  const Segments sb = segments_of(pb);
  const UniformSegment unit(kZero, kOne);
  SurplusReport rep;

  if (sa.full && sb.full) {
    rep.rows.push_back({unit, unit, true, true, kOne, kZero, kZero});
  } else if (sa.full || sb.full) {
    const auto& silent = sa.full ? sb.segs : sa.segs;
    for (const auto& seg : silent) {
      const Rational u = silent_against_full(seg);
      if (sa.full) {
        rep.rows.push_back({unit, seg, true, false, seg.length(), kZero, u});
      } else {
        rep.rows.push_back({seg, unit, false, true, seg.length(), u, kZero});
      }
    }
  } else {
    for (const auto& a : sa.segs) {
      for (const auto& b : sb.segs) {
        const Rational prob = a.length() * b.length();
        const PairSurplus ps = pair_surplus(a, b);
        rep.rows.push_back({a, b, false, false, prob, prob * ps.uA, prob * ps.uB});
      }
    }
  }
  for (const auto& r : rep.rows) {
    rep.uA += r.uA;
    rep.uB += r.uB;
  }
  return rep;
}

ThresholdBreakdown threshold_surplus(const Rational& t) {
  if (t.sign() < 0 || t > kHalf) throw ValidationError("threshold must lie in [0, 1/2]");
  ThresholdBreakdown out;
  if (t.is_zero()) {
    out.high_high = profile_surplus(IntervalPartition::no_disclosure(),
                                    IntervalPartition::no_disclosure()).uA;
  } else {
    const IntervalPartition p({kZero, t, kOne});
    const SurplusReport rep = profile_surplus(p, p);
    out.low_low = rep.rows[0].uA;
    out.low_high = rep.rows[1].uA;
    out.high_low = rep.rows[2].uA;
    out.high_high = rep.rows[3].uA;
  }
  out.per_buyer = out.low_low + out.high_high + out.high_low + out.low_high;
  out.total = Rational(2) * out.per_buyer;
  return out;
}

ThresholdBreakdown threshold_closed_form(const Rational& t) {
  const Rational t2 = t * t;
  const Rational t3 = t2 * t;
  ThresholdBreakdown out;
  out.low_low = t3 / Rational(12);
  out.high_high = Rational(1, 12) - t / Rational(8);
  out.high_low = t / Rational(8) - t2 / Rational(16) + t3 / Rational(48);
  out.low_high = t2 / Rational(16) - Rational(5) * t3 / Rational(48);
  out.per_buyer = out.low_low + out.high_high + out.high_low + out.low_high;
  out.total = Rational(2) * out.per_buyer;
  return out;
}

IntervalPartition zeno_partition(unsigned depth) {
  if (depth == 0) throw ValidationError("zeno depth must be positive");
  std::vector<Rational> bp{kZero};
  for (unsigned k = depth; k >= 1; --k) bp.push_back(pow2_inverse(k));
  bp.push_back(kOne);
  return IntervalPartition(std::move(bp));
}

PairSurplus full_disclosure_vs_silent_limit() {
  const SurplusReport rep =
      profile_surplus(IntervalPartition::fully_disclosing(), IntervalPartition::no_disclosure());
  return {rep.uA, rep.uB};
}

// ---------------------------------------------------------------------------

namespace {

struct Candidate {
  Rational vp, vq;  // primary and other buyer
  int case_index;
};

// The buyer with the chosen interval is "p"; the other is "q".
std::optional<Candidate> construct(const IntervalPartition& p, const IntervalPartition& q,
                                   const Rational& eps) {
  const std::size_t k = p.interval_count() - 1;
  const Rational a = p.lower(k);
  const Rational b = p.upper(k);
  const Rational x = (max(kZero, Rational(2) * a - b) + a) / Rational(2);
  const auto mq = q.locate(x);
  const Rational& d = mq.hi;

  // Point just below `top` inside message m, or top itself when it belongs.
  auto below = [&eps](const IntervalPartition& part, const IntervalPartition::Message& m,
                      const Rational& top) { return part.sends(top, m) ? top : top - eps; };

  if (x.is_zero()) return Candidate{b / Rational(4), kZero, 1};
  if (d <= a) return Candidate{a + eps, (x + d) / Rational(2), 2};
  if (a < d && d < b) return Candidate{d + (b - d) / Rational(4), below(q, mq, d), 3};
  if (d > b) {
    const auto mp = p.locate(b);
    return Candidate{below(p, mp, b), b + (d - b) / Rational(4), 4};
  }
  // d == b: move to the interval of p containing a point strictly between x and a.
  const auto mp = p.locate((x + a) / Rational(2));
  const Rational& b2 = mp.hi;
  return Candidate{below(p, mp, b2), b2 + (d - b2) / Rational(4), 5};
}

}  // namespace

EfficiencyWitness efficiency_witness(const IntervalPartition& pa, const IntervalPartition& pb) {
  EfficiencyWitness w;
  if (pa.is_fully_disclosing() && pb.is_fully_disclosing()) {
    w.fully_disclosing = true;
    return w;
  }
  const bool swapped = pa.is_fully_disclosing();
  const IntervalPartition& p = swapped ? pb : pa;
  const IntervalPartition& q = swapped ? pa : pb;

  // A tiny dyadic nudge moves the constructed point off any atom.
  std::vector<Rational> nudges{kZero};
  for (unsigned j = 40; j <= 60; j += 10) {
    nudges.push_back(pow2_inverse(j));
    nudges.push_back(-pow2_inverse(j));
  }
  for (const auto& nudge : nudges) {
    for (unsigned e = 3; e <= 120; ++e) {
      const Rational eps = pow2_inverse(e);
      auto cand = construct(p, q, eps);
      if (!cand) continue;
      cand->vp += nudge;
      if (cand->vp.sign() < 0 || cand->vp > kOne || cand->vq.sign() < 0 || cand->vq > kOne) {
        continue;
      }
      const Rational& vA = swapped ? cand->vq : cand->vp;
      const Rational& vB = swapped ? cand->vp : cand->vq;
      const auto out = myerson_outcome(UniformSegment::of(pa.locate(vA)),
                                       UniformSegment::of(pb.locate(vB)), vA, vB);
      const auto kind = classify(out, vA, vB);
      if (kind != Inefficiency::None) {
        w.vA = vA;
        w.vB = vB;
        w.kind = kind;
        w.outcome = out;
        w.case_index = cand->case_index;
        w.epsilon = eps;
        return w;
      }
    }
  }
  throw std::logic_error("efficiency witness construction failed for " + pa.str() + " vs " +
                         pb.str());
}

std::vector<AllocationRegion> allocation_regions(const IntervalPartition& pa,
                                                 const IntervalPartition& pb) {
  const Segments sa = segments_of(pa);
  const Segments sb = segments_of(pb);
  const UniformSegment unit(kZero, kOne);
  const Rational one(1), neg(-1), two(2), ntwo(-2);
  std::vector<AllocationRegion> out;
  auto add = [&out](RegionKind kind, Polygon poly) {
    if (!poly.empty()) out.push_back({kind, std::move(poly)});
  };
  const auto as = sa.full ? std::vector<UniformSegment>{unit} : sa.segs;
  const auto bs = sb.full ? std::vector<UniformSegment>{unit} : sb.segs;
  for (const auto& a : as) {
    for (const auto& b : bs) {
      const Polygon rect = geom::rectangle(a.a, a.b, b.a, b.b);
      Linear a_beats_b;
      std::optional<Linear> a_reserve, b_reserve;
      if (sa.full && sb.full) {
        a_beats_b = {one, neg, kZero};
      } else if (sa.full) {
        a_beats_b = {one, ntwo, b.b};
      } else if (sb.full) {
        a_beats_b = {two, neg, -a.b};
      } else {
        a_beats_b = {two, ntwo, b.b - a.b};
        a_reserve = Linear{one, kZero, -a.b / two};
        b_reserve = Linear{kZero, one, -b.b / two};
      }
      const Linear b_beats_a{-a_beats_b.alpha, -a_beats_b.beta, -a_beats_b.gamma};
      Polygon ra = geom::clip(rect, a_beats_b);
      Polygon rb = geom::clip(rect, b_beats_a);
      if (a_reserve) {
        ra = geom::clip(ra, *a_reserve);
        rb = geom::clip(rb, *b_reserve);
        Polygon none =
            geom::clip(rect, Linear{-a_reserve->alpha, kZero, -a_reserve->gamma});
        none = geom::clip(none, Linear{kZero, -b_reserve->beta, -b_reserve->gamma});
        add(RegionKind::NoSale, std::move(none));
      }
      add(RegionKind::AWins, std::move(ra));
      add(RegionKind::BWins, std::move(rb));
    }
  }
  return out;
}

}  // namespace disclosure::uniform2
