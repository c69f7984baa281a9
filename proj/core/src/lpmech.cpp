#include "disclosure/lpmech.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "disclosure/errors.hpp"

namespace disclosure {

namespace {

std::string joint_label(const DiscreteInstance& inst, std::size_t joint) {
  std::string out;
  for (auto t : inst.joint_types(joint)) {
    if (!out.empty()) out += '-';
    out += std::to_string(t + 1);
  }
  return out;
}

std::string with_decimal(const Rational& r) {
  if (r.is_integer()) return r.str();
  std::ostringstream os;
  os << r.str() << " (" << r.to_double() << ")";
  return os.str();
}

// Joint index with buyer j's type replaced by t.
std::size_t with_type(const DiscreteInstance& inst, std::size_t joint, std::size_t j,
                      std::size_t t) {
  auto types = inst.joint_types(joint);
  types[j] = t;
  return inst.joint_index(types);
}

}  // namespace

Mechanism::Mechanism(std::size_t joints, std::size_t buyers, std::size_t goods)
    : joints_(joints),
      buyers_(buyers),
      goods_(goods),
      alloc_(joints * buyers * goods),
      pay_(joints * buyers) {}

Rational ex_post_utility(const DiscreteInstance& inst, const Mechanism& mech, std::size_t joint,
                         std::size_t buyer) {
  Rational u = -mech.r(joint, buyer);
  for (std::size_t k = 0; k < inst.goods_count(); ++k) {
    u += inst.value(joint, buyer, k) * mech.q(joint, buyer, k);
  }
  return u;
}

Rational expected_revenue(const DiscreteInstance& inst, const Mechanism& mech) {
  Rational total;
  for (std::size_t i = 0; i < inst.joint_count(); ++i) {
    Rational paid;
    for (std::size_t j = 0; j < inst.buyer_count(); ++j) paid += mech.r(i, j);
    total += inst.joint_probability(i) * paid;
  }
  return total;
}

Rational expected_buyer_surplus(const DiscreteInstance& inst, const Mechanism& mech) {
  Rational total;
  for (std::size_t i = 0; i < inst.joint_count(); ++i) {
    Rational u;
    for (std::size_t j = 0; j < inst.buyer_count(); ++j) u += ex_post_utility(inst, mech, i, j);
    total += inst.joint_probability(i) * u;
  }
  return total;
}

namespace {

// Sums f(joint) * p(joint) over joints where `buyer` has `type`, divided by
// that type's probability.
template <class F>
Rational interim(const DiscreteInstance& inst, std::size_t buyer, std::size_t type, F&& f) {
  Rational total;
  for (std::size_t i = 0; i < inst.joint_count(); ++i) {
    if (inst.joint_types(i)[buyer] != type) continue;
    total += inst.joint_probability(i) * f(i);
  }
  return total / inst.type(buyer, type).prob;
}

}  // namespace

Rational interim_allocation(const DiscreteInstance& inst, const Mechanism& mech, std::size_t buyer,
                            std::size_t type, std::size_t good) {
  return interim(inst, buyer, type, [&](std::size_t i) { return mech.q(i, buyer, good); });
}

Rational interim_payment(const DiscreteInstance& inst, const Mechanism& mech, std::size_t buyer,
                         std::size_t type) {
  return interim(inst, buyer, type, [&](std::size_t i) { return mech.r(i, buyer); });
}

Rational interim_utility(const DiscreteInstance& inst, const Mechanism& mech, std::size_t buyer,
                         std::size_t type) {
  return interim(inst, buyer, type,
                 [&](std::size_t i) { return ex_post_utility(inst, mech, i, buyer); });
}

MechanismLp build_lp(const DiscreteInstance& inst, std::size_t variable_budget) {
  MechanismLp sys;
  sys.joints = inst.joint_count();
  sys.buyers = inst.buyer_count();
  sys.goods = inst.goods_count();
  const std::size_t vars = sys.q_count() + sys.r_count();
  if (vars > variable_budget) {
    throw GuardExceeded("mechanism LP needs " + std::to_string(vars) +
                        " variables, budget is " + std::to_string(variable_budget));
  }
  sys.program = lp::LinearProgram(vars);
  auto& prog = sys.program;
  auto col = [](std::size_t c) { return static_cast<std::uint32_t>(c); };

  std::vector<Rational> prob(sys.joints);
  for (std::size_t i = 0; i < sys.joints; ++i) prob[i] = inst.joint_probability(i);

  for (std::size_t i = 0; i < sys.joints; ++i) {
    for (std::size_t k = 0; k < sys.goods; ++k) {
      lp::SparseVector row;
      for (std::size_t j = 0; j < sys.buyers; ++j) row.emplace_back(col(sys.q_var(i, j, k)), 1);
      prog.add_row(std::move(row), Rational(1));
      ++sys.supply_rows;
    }
  }

  // r - sum_k v q <= 0
  for (std::size_t i = 0; i < sys.joints; ++i) {
    for (std::size_t j = 0; j < sys.buyers; ++j) {
      lp::SparseVector row;
      row.emplace_back(col(sys.r_var(i, j)), 1);
      for (std::size_t k = 0; k < sys.goods; ++k) {
        row.emplace_back(col(sys.q_var(i, j, k)), -inst.value(i, j, k));
      }
      prog.add_row(std::move(row), Rational(0));
      ++sys.ir_rows;
    }
  }

  // sum_{-i} p_(i,-i) [u(i reports i') - u(i truthful)] <= 0
  for (std::size_t j = 0; j < sys.buyers; ++j) {
    const std::size_t n = inst.type_count(j);
    for (std::size_t truth = 0; truth < n; ++truth) {
      const auto& v = inst.type(j, truth).values;
      for (std::size_t lie = 0; lie < n; ++lie) {
        if (lie == truth) continue;
        lp::SparseVector row;
        for (std::size_t i = 0; i < sys.joints; ++i) {
          if (inst.joint_types(i)[j] != truth) continue;
          const std::size_t dev = with_type(inst, i, j, lie);
          const Rational& w = prob[i];
          for (std::size_t k = 0; k < sys.goods; ++k) {
            row.emplace_back(col(sys.q_var(dev, j, k)), w * v[k]);
            row.emplace_back(col(sys.q_var(i, j, k)), -(w * v[k]));
          }
          row.emplace_back(col(sys.r_var(dev, j)), -w);
          row.emplace_back(col(sys.r_var(i, j)), w);
        }
        prog.add_row(std::move(row), Rational(0));
        ++sys.ic_rows;
      }
    }
  }

  lp::SparseVector revenue, surplus;
  for (std::size_t i = 0; i < sys.joints; ++i) {
    for (std::size_t j = 0; j < sys.buyers; ++j) {
      revenue.emplace_back(col(sys.r_var(i, j)), prob[i]);
      surplus.emplace_back(col(sys.r_var(i, j)), -prob[i]);
      for (std::size_t k = 0; k < sys.goods; ++k) {
        surplus.emplace_back(col(sys.q_var(i, j, k)), prob[i] * inst.value(i, j, k));
      }
    }
  }
  prog.add_objective(std::move(revenue));
  prog.add_objective(std::move(surplus));
  return sys;
}

LpSolution solve_lexicographic(const MechanismLp& system) {
  const auto res = lp::solve(system.program);
  LpSolution sol;
  sol.mechanism = Mechanism(system.joints, system.buyers, system.goods);
  for (std::size_t i = 0; i < system.joints; ++i) {
    for (std::size_t j = 0; j < system.buyers; ++j) {
      sol.mechanism.r(i, j) = res.x[system.r_var(i, j)];
      for (std::size_t k = 0; k < system.goods; ++k) {
        sol.mechanism.q(i, j, k) = res.x[system.q_var(i, j, k)];
      }
    }
  }
  sol.revenue = res.objective_values.at(0);
  sol.buyer_surplus = res.objective_values.at(1);
  sol.basis = res.basis;
  sol.pivots = res.pivots;
  return sol;
}

LpSolution solve_mechanism(const DiscreteInstance& inst, std::size_t variable_budget) {
  return solve_lexicographic(build_lp(inst, variable_budget));
}

VerificationReport verify_mechanism(const DiscreteInstance& inst, const Mechanism& mech) {
  if (mech.joint_count() != inst.joint_count() || mech.buyer_count() != inst.buyer_count() ||
      mech.goods_count() != inst.goods_count()) {
    throw ValidationError("mechanism dimensions do not match the instance");
  }
  VerificationReport rep;
  auto fail = [&](std::string what) {
    rep.valid = false;
    rep.violation = std::move(what);
    return rep;
  };
  const std::size_t goods = inst.goods_count();
  for (std::size_t i = 0; i < inst.joint_count(); ++i) {
    for (std::size_t k = 0; k < goods; ++k) {
      Rational used;
      for (std::size_t j = 0; j < inst.buyer_count(); ++j) {
        if (mech.q(i, j, k).sign() < 0) {
          return fail("negative allocation at joint " + joint_label(inst, i));
        }
        used += mech.q(i, j, k);
      }
      if (used > Rational(1)) {
        return fail("supply of good " + std::to_string(k + 1) + " exceeded at joint " +
                    joint_label(inst, i));
      }
    }
    for (std::size_t j = 0; j < inst.buyer_count(); ++j) {
      if (mech.r(i, j).sign() < 0) return fail("negative payment at joint " + joint_label(inst, i));
      if (ex_post_utility(inst, mech, i, j).sign() < 0) {
        return fail("IR violated for buyer " + std::to_string(j + 1) + " at joint " +
                    joint_label(inst, i));
      }
    }
  }
  for (std::size_t j = 0; j < inst.buyer_count(); ++j) {
    for (std::size_t truth = 0; truth < inst.type_count(j); ++truth) {
      const auto& v = inst.type(j, truth).values;
      for (std::size_t lie = 0; lie < inst.type_count(j); ++lie) {
        if (lie == truth) continue;
        Rational honest, deviate;
        for (std::size_t i = 0; i < inst.joint_count(); ++i) {
          if (inst.joint_types(i)[j] != truth) continue;
          const Rational p = inst.joint_probability(i);
          const std::size_t dev = with_type(inst, i, j, lie);
          Rational uh = -mech.r(i, j), ud = -mech.r(dev, j);
          for (std::size_t k = 0; k < goods; ++k) {
            uh += v[k] * mech.q(i, j, k);
            ud += v[k] * mech.q(dev, j, k);
          }
          honest += p * uh;
          deviate += p * ud;
        }
        if (deviate > honest) {
          return fail("IC violated: buyer " + std::to_string(j + 1) + " type " +
                      std::to_string(truth + 1) + " prefers reporting " +
                      std::to_string(lie + 1));
        }
      }
    }
  }
  rep.valid = true;
  rep.revenue = expected_revenue(inst, mech);
  rep.buyer_surplus = expected_buyer_surplus(inst, mech);
  return rep;
}

std::vector<MenuEntry> menu_entries(const DiscreteInstance& inst, const Mechanism& mech) {
  std::vector<MenuEntry> menu;
  if (inst.buyer_count() != 1) return menu;
  for (std::size_t t = 0; t < inst.type_count(0); ++t) {
    std::vector<Rational> bundle;
    bool anything = false;
    for (std::size_t k = 0; k < inst.goods_count(); ++k) {
      bundle.push_back(mech.q(t, 0, k));
      anything = anything || !bundle.back().is_zero();
    }
    if (!anything && mech.r(t, 0).is_zero()) continue;
    auto it = std::find_if(menu.begin(), menu.end(), [&](const MenuEntry& e) {
      return e.bundle == bundle && e.price == mech.r(t, 0);
    });
    if (it == menu.end()) {
      menu.push_back({std::move(bundle), mech.r(t, 0), {t}});
    } else {
      it->types.push_back(t);
    }
  }
  std::sort(menu.begin(), menu.end(),
            [](const MenuEntry& a, const MenuEntry& b) { return a.price < b.price; });
  return menu;
}

std::string posted_menu_view(const DiscreteInstance& inst, const LpSolution& sol) {
  std::ostringstream os;
  const auto& mech = sol.mechanism;
  if (inst.buyer_count() == 1) {
    const auto menu = menu_entries(inst, mech);
    if (menu.empty()) os << "empty menu (no sale)\n";
    for (const auto& e : menu) {
      os << "bundle";
      for (std::size_t k = 0; k < e.bundle.size(); ++k) {
        if (e.bundle[k].is_zero()) continue;
        os << " good " << (k + 1);
        if (e.bundle[k] != Rational(1)) os << " w.p. " << e.bundle[k];
      }
      os << " at price " << with_decimal(e.price) << "  [types";
      for (auto t : e.types) os << ' ' << (t + 1);
      os << "]\n";
    }
  } else {
    // key: per-buyer (allocation..., payment) row
    std::map<std::vector<std::string>, std::vector<std::size_t>> groups;
    std::vector<std::vector<std::string>> order;
    for (std::size_t i = 0; i < inst.joint_count(); ++i) {
      std::vector<std::string> key;
      for (std::size_t j = 0; j < inst.buyer_count(); ++j) {
        std::string cell;
        bool wins = false;
        for (std::size_t k = 0; k < inst.goods_count(); ++k) {
          cell += mech.q(i, j, k).str() + ",";
          wins = wins || !mech.q(i, j, k).is_zero();
        }
        cell += mech.r(i, j).str();
        if (wins && inst.goods_count() == 1) {
          cell += " unit price " + with_decimal(mech.r(i, j) / mech.q(i, j, 0));
        }
        key.push_back(cell);
      }
      auto [it, fresh] = groups.try_emplace(key);
      if (fresh) order.push_back(key);
      it->second.push_back(i);
    }
    for (const auto& key : order) {
      os << "types";
      for (auto i : groups[key]) os << ' ' << joint_label(inst, i);
      os << " =>";
      for (std::size_t j = 0; j < key.size(); ++j) os << "  buyer " << (j + 1) << ": q,r=" << key[j];
      os << '\n';
    }
  }
  os << "revenue " << with_decimal(sol.revenue) << ", buyer surplus "
     << with_decimal(sol.buyer_surplus) << '\n';
  return os.str();
}

std::string mechanism_csv(const DiscreteInstance& inst, const Mechanism& mech) {
  std::ostringstream os;
  os << "joint,buyer,good,q,r\n";
  for (std::size_t i = 0; i < inst.joint_count(); ++i) {
    for (std::size_t j = 0; j < inst.buyer_count(); ++j) {
      for (std::size_t k = 0; k < inst.goods_count(); ++k) {
        os << joint_label(inst, i) << ',' << (j + 1) << ',' << (k + 1) << ','
           << mech.q(i, j, k) << ',' << mech.r(i, j) << '\n';
      }
    }
  }
  return os.str();
}

}  // namespace disclosure
