#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "disclosure/instance.hpp"
#include "disclosure/rational.hpp"

namespace disclosure::testing {

inline Rational R(const char* s) { return Rational::parse(s); }

/// Uniform dyadic rational k / 2^bits in [lo, hi].
inline Rational random_in(std::mt19937_64& rng, const Rational& lo, const Rational& hi,
                          unsigned bits = 20) {
  const std::uint64_t k = rng() & ((std::uint64_t{1} << bits) - 1);
  return lo + (hi - lo) * Rational(static_cast<long long>(k)) * pow2_inverse(bits);
}

/// Probabilities with denominators up to `den`, all positive, summing to 1.
inline std::vector<Rational> random_probabilities(std::mt19937_64& rng, std::size_t n,
                                                  long long den = 12) {
  std::vector<long long> w(n);
  long long sum = 0;
  std::uniform_int_distribution<long long> pick(1, den);
  for (auto& x : w) sum += (x = pick(rng));
  std::vector<Rational> out;
  for (auto x : w) out.emplace_back(x, sum);
  return out;
}

/// Strictly increasing positive integer values.
inline std::vector<Rational> random_values(std::mt19937_64& rng, std::size_t n, long long step = 5) {
  std::uniform_int_distribution<long long> gap(1, step);
  std::vector<Rational> out;
  long long v = 0;
  for (std::size_t i = 0; i < n; ++i) out.emplace_back(v += gap(rng));
  return out;
}

inline DiscreteInstance random_instance(std::mt19937_64& rng, std::size_t buyers,
                                        std::size_t types, std::size_t goods) {
  std::vector<std::vector<BuyerType>> all;
  std::uniform_int_distribution<long long> val(0, 9);
  for (std::size_t j = 0; j < buyers; ++j) {
    std::vector<BuyerType> ts;
    const auto probs = random_probabilities(rng, types);
    for (std::size_t t = 0; t < types; ++t) {
      BuyerType bt{probs[t], {}};
      for (std::size_t k = 0; k < goods; ++k) bt.values.emplace_back(val(rng));
      // Distinctness: shift the first good by the type index.
      bt.values[0] += Rational(static_cast<long long>(10 * t));
      ts.push_back(std::move(bt));
    }
    all.push_back(std::move(ts));
  }
  return DiscreteInstance(goods, std::move(all));
}

}  // namespace disclosure::testing
