#include "disclosure/catalog.hpp"

#include "disclosure/errors.hpp"

namespace disclosure::catalog {

namespace {

BuyerType ty(const char* prob, std::initializer_list<const char*> values) {
  BuyerType t{Rational::parse(prob), {}};
  for (const char* v : values) t.values.push_back(Rational::parse(v));
  return t;
}

}  // namespace

DiscreteInstance correlated_two_goods() {
  return DiscreteInstance(2, {{ty("1/2", {"3", "4"}), ty("1/2", {"4", "9"})}});
}

DiscreteInstance independent_two_goods() {
  return DiscreteInstance(2, {{ty("0.06", {"56", "38"}), ty("0.09", {"56", "69"}),
                               ty("0.34", {"91", "38"}), ty("0.51", {"91", "69"})}});
}

DiscreteInstance three_type_pair() {
  const std::vector<BuyerType> types{ty("1/4", {"1"}), ty("1/4", {"2"}), ty("1/2", {"3"})};
  return DiscreteInstance(1, {types, types});
}

DiscreteInstance gap_instance(const Rational& delta) {
  if (delta.sign() <= 0 || delta >= Rational(1)) throw ValidationError("delta must lie in (0, 1)");
  return DiscreteInstance(1, {{{Rational(1, 3), {Rational(1)}},
                               {Rational(5, 9), {Rational(2)}},
                               {Rational(1, 9), {Rational(2) + delta}}}});
}

DiscreteInstance rare_low_pair() {
  const std::vector<BuyerType> types{ty("1/200", {"1"}), ty("1/200", {"2"}),
                                     ty("99/100", {"1000"})};
  return DiscreteInstance(1, {types, types});
}

}  // namespace disclosure::catalog
