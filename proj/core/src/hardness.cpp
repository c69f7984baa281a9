#include "disclosure/hardness.hpp"

#include <numeric>
#include <string>

#include "disclosure/errors.hpp"
#include "disclosure/game.hpp"

namespace disclosure::hardness {

PartitionProblem::PartitionProblem(std::vector<unsigned long> s) : sizes(std::move(s)) {
  if (sizes.empty()) throw ValidationError("need at least one size");
  for (auto v : sizes) {
    if (v == 0) throw ValidationError("sizes must be positive");
  }
  if (total() % 2 != 0) {
    throw ValidationError("sizes sum to " + std::to_string(total()) + ", which is odd");
  }
}

unsigned long PartitionProblem::total() const {
  return std::accumulate(sizes.begin(), sizes.end(), 0UL);
}

Reduction reduce(const PartitionProblem& pp) {
  const std::size_t m = pp.sizes.size();
  const Rational S(pp.total());
  std::vector<Rational> values{S / Rational(2)};
  std::vector<Rational> probs{Rational(1, 3)};
  for (std::size_t i = 0; i < m; ++i) {
    values.push_back(S - Rational(1, static_cast<long long>(i) + 5));
    probs.push_back(Rational(2) * Rational(pp.sizes[i]) / (Rational(3) * S));
  }
  Reduction out{{dp::SingleBuyerInstance(std::move(values), std::move(probs)),
                 S / Rational(6) - Rational(1, 12)},
                std::vector<std::size_t>(m + 1)};
  for (std::size_t i = 0; i < m; ++i) out.position[i] = i + 1;
  out.position[m] = 0;
  return out;
}

std::optional<std::vector<std::size_t>> solve_partition_bruteforce(const PartitionProblem& pp) {
  const std::size_t m = pp.sizes.size();
  if (m > kMaxSubsetSearch) {
    throw GuardExceeded("subset search limited to " + std::to_string(kMaxSubsetSearch) + " sizes");
  }
  const unsigned long half = pp.total() / 2;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    unsigned long sum = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if ((mask >> i) & 1U) sum += pp.sizes[i];
    }
    if (sum != half) continue;
    std::vector<std::size_t> subset;
    for (std::size_t i = 0; i < m; ++i) {
      if ((mask >> i) & 1U) subset.push_back(i);
    }
    return subset;
  }
  return std::nullopt;
}

ReductionReport verify_reduction(const PartitionProblem& pp) {
  const std::size_t m = pp.sizes.size();
  if (m > kMaxVerifiedSizes) {
    throw GuardExceeded("reduction verification limited to " + std::to_string(kMaxVerifiedSizes) +
                        " sizes");
  }
  const Reduction red = reduce(pp);
  const DiscreteInstance inst = red.reduced.instance.to_discrete();
  ReductionReport rep;
  rep.target = red.reduced.target;
  rep.subset = solve_partition_bruteforce(pp);
  rep.solvable = rep.subset.has_value();

  const auto ranked = game::search_profiles(inst);
  rep.best_surplus = ranked.front().outcome.total_surplus;
  rep.best_partition = ranked.front().profile[0];
  rep.equivalence_holds = (rep.best_surplus >= rep.target) == rep.solvable;

  if (rep.solvable) {
    Block pooled{red.position[m]};
    std::vector<bool> in_pool(m + 1, false);
    in_pool[red.position[m]] = true;
    for (auto i : *rep.subset) {
      pooled.push_back(red.position[i]);
      in_pool[red.position[i]] = true;
    }
    Block rest;
    for (std::size_t t = 0; t <= m; ++t) {
      if (!in_pool[t]) rest.push_back(t);
    }
    SetPartition w = canonicalize({pooled, rest});
    rep.witness_surplus = game::evaluate_profile(inst, {w}).total_surplus;
    rep.pooled_price = dp::buyer_utility(red.reduced.instance, pooled).price;
    rep.witness = std::move(w);
    rep.equivalence_holds = rep.equivalence_holds && rep.witness_surplus >= rep.target;
  }
  return rep;
}

}  // namespace disclosure::hardness
