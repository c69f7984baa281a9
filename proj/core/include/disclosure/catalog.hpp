#pragma once

#include "disclosure/instance.hpp"
#include "disclosure/rational.hpp"

/// Small instances with known answers, shared by the tests, the suite and
/// the command-line tool.
namespace disclosure::catalog {

/// One buyer, two goods, values (3,4) and (4,9), each w.p. 1/2.
DiscreteInstance correlated_two_goods();

/// One buyer, two goods with independent values: good 1 is 56 w.p. 0.15 or
/// 91 w.p. 0.85, good 2 is 38 w.p. 0.4 or 69 w.p. 0.6.
DiscreteInstance independent_two_goods();

/// Two i.i.d. buyers, one good, values 1, 2, 3 w.p. 1/4, 1/4, 1/2.
DiscreteInstance three_type_pair();

/// One buyer, one good, values 1, 2, 2 + delta w.p. 1/3, 5/9, 1/9.
DiscreteInstance gap_instance(const Rational& delta);

/// Two i.i.d. buyers, one good, values 1, 2, 1000 w.p. 1/200, 1/200, 99/100.
DiscreteInstance rare_low_pair();

}  // namespace disclosure::catalog
