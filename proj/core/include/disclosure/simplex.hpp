#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "disclosure/rational.hpp"

namespace disclosure::lp {

/// (column, coefficient) pairs; columns need not be sorted on input.
using SparseVector = std::vector<std::pair<std::uint32_t, Rational>>;

class UnboundedProgram : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// maximize c_1 x, then c_2 x over the c_1-optimal face, ...
/// subject to A x <= b, x >= 0, with b >= 0.
class LinearProgram {
 public:
  explicit LinearProgram(std::size_t variables) : variables_(variables) {}

  std::size_t variable_count() const { return variables_; }
  std::size_t row_count() const { return rows_.size(); }

  /// Adds sum(coeffs) <= rhs. Throws std::invalid_argument if rhs < 0 or a
  /// column is out of range. Returns the row index.
  std::size_t add_row(SparseVector coeffs, Rational rhs);

  /// Appends an objective at the next priority level.
  void add_objective(SparseVector coeffs);

  const std::vector<SparseVector>& rows() const { return rows_; }
  const std::vector<Rational>& rhs() const { return rhs_; }
  const std::vector<SparseVector>& objectives() const { return objectives_; }

 private:
  SparseVector normalized(SparseVector v) const;

  std::size_t variables_;
  std::vector<SparseVector> rows_;
  std::vector<Rational> rhs_;
  std::vector<SparseVector> objectives_;
};

struct SimplexOptions {
  /// Consecutive degenerate pivots tolerated under the largest-coefficient
  /// rule before switching to Bland's rule until progress resumes.
  std::size_t degenerate_switch = 32;
  /// Use Bland's rule for every pivot.
  bool bland_only = false;
};

struct SimplexResult {
  std::vector<Rational> x;                 // structural variables
  std::vector<Rational> objective_values;  // one per priority level
  /// basis[i] is the column basic in row i; columns >= variable_count() are
  /// slacks (slack of row c - variable_count()).
  std::vector<std::uint32_t> basis;
  std::size_t pivots = 0;
};

/// Exact primal simplex over the rationals. Each later objective is
/// optimized with every column whose reduced cost for an earlier objective is
/// nonzero held at zero.
SimplexResult solve(const LinearProgram& program, const SimplexOptions& options = {});

/// Independent check of a reported basis by dense Gaussian elimination:
/// the basic solution must be primal feasible and optimal for objective 0.
bool certify_primary_optimum(const LinearProgram& program,
                             const std::vector<std::uint32_t>& basis,
                             const std::vector<Rational>& x);

}  // namespace disclosure::lp
