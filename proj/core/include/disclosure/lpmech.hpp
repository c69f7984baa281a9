#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "disclosure/instance.hpp"
#include "disclosure/rational.hpp"
#include "disclosure/simplex.hpp"

namespace disclosure {

/// Direct-revelation mechanism over the joint type space: allocation
/// probabilities q[joint][buyer][good] and payments r[joint][buyer].
class Mechanism {
 public:
  Mechanism() = default;
  Mechanism(std::size_t joints, std::size_t buyers, std::size_t goods);

  std::size_t joint_count() const { return joints_; }
  std::size_t buyer_count() const { return buyers_; }
  std::size_t goods_count() const { return goods_; }

  Rational& q(std::size_t joint, std::size_t buyer, std::size_t good) {
    return alloc_[(joint * buyers_ + buyer) * goods_ + good];
  }
  const Rational& q(std::size_t joint, std::size_t buyer, std::size_t good) const {
    return alloc_[(joint * buyers_ + buyer) * goods_ + good];
  }
  Rational& r(std::size_t joint, std::size_t buyer) { return pay_[joint * buyers_ + buyer]; }
  const Rational& r(std::size_t joint, std::size_t buyer) const {
    return pay_[joint * buyers_ + buyer];
  }

  friend bool operator==(const Mechanism&, const Mechanism&) = default;

 private:
  std::size_t joints_ = 0, buyers_ = 0, goods_ = 0;
  std::vector<Rational> alloc_;
  std::vector<Rational> pay_;
};

/// Ex-post utility of `buyer` at joint type `joint` when reporting truthfully.
Rational ex_post_utility(const DiscreteInstance& inst, const Mechanism& mech, std::size_t joint,
                         std::size_t buyer);
Rational expected_revenue(const DiscreteInstance& inst, const Mechanism& mech);
Rational expected_buyer_surplus(const DiscreteInstance& inst, const Mechanism& mech);

/// Expectations over the other buyers' types, conditional on `buyer` having
/// type `type` and reporting it.
Rational interim_allocation(const DiscreteInstance& inst, const Mechanism& mech, std::size_t buyer,
                            std::size_t type, std::size_t good);
Rational interim_payment(const DiscreteInstance& inst, const Mechanism& mech, std::size_t buyer,
                         std::size_t type);
Rational interim_utility(const DiscreteInstance& inst, const Mechanism& mech, std::size_t buyer,
                         std::size_t type);

struct MechanismLp {
  lp::LinearProgram program{0};
  std::size_t joints = 0, buyers = 0, goods = 0;
  std::size_t supply_rows = 0, ir_rows = 0, ic_rows = 0;

  std::size_t q_var(std::size_t joint, std::size_t buyer, std::size_t good) const {
    return (joint * buyers + buyer) * goods + good;
  }
  std::size_t r_var(std::size_t joint, std::size_t buyer) const {
    return joints * buyers * goods + joint * buyers + buyer;
  }
  std::size_t q_count() const { return joints * buyers * goods; }
  std::size_t r_count() const { return joints * buyers; }
};

inline constexpr std::size_t kDefaultVariableBudget = 20000;

/// Revenue LP with supply, ex-post IR and interim IC rows; objective 0 is
/// expected revenue, objective 1 expected buyer surplus. Throws
/// GuardExceeded when the variable count exceeds `variable_budget`.
MechanismLp build_lp(const DiscreteInstance& inst,
                     std::size_t variable_budget = kDefaultVariableBudget);

struct LpSolution {
  Mechanism mechanism;
  Rational revenue;
  Rational buyer_surplus;
  /// Final simplex basis (column indices, slacks after structurals).
  std::vector<std::uint32_t> basis;
  std::size_t pivots = 0;
};

/// Maximizes revenue, then buyer surplus with revenue held at its optimum.
LpSolution solve_lexicographic(const MechanismLp& system);
LpSolution solve_mechanism(const DiscreteInstance& inst,
                           std::size_t variable_budget = kDefaultVariableBudget);

struct VerificationReport {
  bool valid = false;
  std::string violation;  // first violated constraint, empty when valid
  Rational revenue;
  Rational buyer_surplus;
};

/// Direct evaluation of nonnegativity, supply, ex-post IR and every interim
/// IC pair. Throws ValidationError on dimension mismatch.
VerificationReport verify_mechanism(const DiscreteInstance& inst, const Mechanism& mech);

struct MenuEntry {
  std::vector<Rational> bundle;  // probability of receiving each good
  Rational price;
  std::vector<std::size_t> types;  // types choosing this entry
};

/// Single-buyer mechanisms as a menu: rows grouped by identical (q, r),
/// nothing-for-free rows omitted.
std::vector<MenuEntry> menu_entries(const DiscreteInstance& inst, const Mechanism& mech);

/// Menu text for single-buyer instances; allocation/payment table grouped by
/// identical rows otherwise.
std::string posted_menu_view(const DiscreteInstance& inst, const LpSolution& sol);

/// CSV: joint,buyer,good,q,r with joint as a '-'-joined one-based type vector.
std::string mechanism_csv(const DiscreteInstance& inst, const Mechanism& mech);

}  // namespace disclosure
