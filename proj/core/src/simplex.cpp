#include "disclosure/simplex.hpp"

#include <algorithm>
#include <optional>
#include <string>

namespace disclosure::lp {

namespace {

using Entry = std::pair<std::uint32_t, Rational>;

const Rational* find_entry(const SparseVector& row, std::uint32_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const Entry& e, std::uint32_t c) { return e.first < c; });
  if (it == row.end() || it->first != col) return nullptr;
  return &it->second;
}

// a - f * b, both sorted by column; exact zeros are dropped. Entries of a
// are moved into the result.
SparseVector axpy(SparseVector&& a, const Rational& f, const SparseVector& b) {
  SparseVector out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(std::move(a[i++]));
    } else if (i == a.size() || b[j].first < a[i].first) {
      auto& e = out.emplace_back(b[j].first, Rational());
      e.second.sub_product(f, b[j].second);
      ++j;
    } else {
      a[i].second.sub_product(f, b[j].second);
      if (!a[i].second.is_zero()) out.push_back(std::move(a[i]));
      ++i;
      ++j;
    }
  }
  return out;
}

class Tableau {
 public:
  explicit Tableau(const LinearProgram& p)
      : structural_(p.variable_count()), columns_(p.variable_count() + p.row_count()) {
    const std::size_t m = p.row_count();
    rows_.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
      SparseVector row = p.rows()[i];
      row.emplace_back(static_cast<std::uint32_t>(structural_ + i), Rational(1));
      rows_.push_back(std::move(row));
      rhs_.push_back(p.rhs()[i]);
      basis_.push_back(static_cast<std::uint32_t>(structural_ + i));
    }
    for (const auto& c : p.objectives()) {
      reduced_.push_back(c);
      value_.emplace_back(0);
    }
    frozen_.assign(columns_, false);
  }

  void optimize(std::size_t level, const SimplexOptions& opt) {
    std::size_t degenerate_run = 0;
    bool bland = opt.bland_only;
    for (;;) {
      const auto s = entering(level, bland);
      if (!s) break;
      const auto r = leaving(*s);
      if (!r) throw UnboundedProgram("objective " + std::to_string(level) + " is unbounded");
      const bool degenerate = rhs_[*r].is_zero();
      pivot(*r, *s);
      if (degenerate) {
        if (++degenerate_run > opt.degenerate_switch) bland = true;
      } else {
        degenerate_run = 0;
        bland = opt.bland_only;
      }
    }
    for (const auto& [col, d] : reduced_[level]) {
      if (!d.is_zero()) frozen_[col] = true;
    }
  }

  SimplexResult result() const {
    SimplexResult out;
    out.x.assign(structural_, Rational(0));
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      if (basis_[i] < structural_) out.x[basis_[i]] = rhs_[i];
    }
    out.objective_values = value_;
    out.basis = basis_;
    out.pivots = pivots_;
    return out;
  }

 private:
  std::optional<std::uint32_t> entering(std::size_t level, bool bland) const {
    std::optional<std::uint32_t> best;
    const Rational* best_d = nullptr;
    for (const auto& [col, d] : reduced_[level]) {
      if (frozen_[col] || d.sign() <= 0) continue;
      if (bland) return col;
      if (!best_d || *best_d < d) {
        best = col;
        best_d = &d;
      }
    }
    return best;
  }

  std::optional<std::size_t> leaving(std::uint32_t s) const {
    std::optional<std::size_t> best;
    Rational best_ratio;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Rational* a = find_entry(rows_[i], s);
      if (!a || a->sign() <= 0) continue;
      if (best && best_ratio.is_zero() && !rhs_[i].is_zero()) continue;
      Rational ratio = rhs_[i].is_zero() ? Rational(0) : rhs_[i] / *a;
      if (!best || ratio < best_ratio || (ratio == best_ratio && basis_[i] < basis_[*best])) {
        best = i;
        best_ratio = std::move(ratio);
      }
    }
    return best;
  }

  void pivot(std::size_t r, std::uint32_t s) {
    const Rational inv = Rational(1) / *find_entry(rows_[r], s);
    for (auto& [col, v] : rows_[r]) v *= inv;
    rhs_[r] *= inv;
    const SparseVector& prow = rows_[r];
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i == r) continue;
      const Rational* f = find_entry(rows_[i], s);
      if (!f) continue;
      const Rational factor = *f;
      rhs_[i].sub_product(factor, rhs_[r]);
      rows_[i] = axpy(std::move(rows_[i]), factor, prow);
    }
    for (std::size_t l = 0; l < reduced_.size(); ++l) {
      const Rational* f = find_entry(reduced_[l], s);
      if (!f) continue;
      const Rational factor = *f;
      value_[l].sub_product(-factor, rhs_[r]);
      reduced_[l] = axpy(std::move(reduced_[l]), factor, prow);
    }
    basis_[r] = s;
    ++pivots_;
  }

  std::size_t structural_;
  std::size_t columns_;
  std::vector<SparseVector> rows_;
  std::vector<Rational> rhs_;
  std::vector<std::uint32_t> basis_;
  std::vector<SparseVector> reduced_;
  std::vector<Rational> value_;
  std::vector<bool> frozen_;
  std::size_t pivots_ = 0;
};

// Dense exact solve of M z = rhs (M square). Returns false if singular.
bool dense_solve(std::vector<std::vector<Rational>> m, std::vector<Rational> rhs,
                 std::vector<Rational>& z) {
  const std::size_t n = m.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c].is_zero()) ++p;
    if (p == n) return false;
    std::swap(m[p], m[c]);
    std::swap(rhs[p], rhs[c]);
    const Rational inv = Rational(1) / m[c][c];
    for (std::size_t k = c; k < n; ++k) m[c][k] *= inv;
    rhs[c] *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m[i][c].is_zero()) continue;
      const Rational f = m[i][c];
      for (std::size_t k = c; k < n; ++k) m[i][k] -= f * m[c][k];
      rhs[i] -= f * rhs[c];
    }
  }
  z = std::move(rhs);
  return true;
}

}  // namespace

SparseVector LinearProgram::normalized(SparseVector v) const {
  std::sort(v.begin(), v.end(), [](const Entry& a, const Entry& b) { return a.first < b.first; });
  SparseVector out;
  for (auto& e : v) {
    if (e.first >= variables_) throw std::invalid_argument("column out of range");
    if (!out.empty() && out.back().first == e.first) {
      out.back().second += e.second;
    } else {
      out.push_back(std::move(e));
    }
  }
  std::erase_if(out, [](const Entry& e) { return e.second.is_zero(); });
  return out;
}

std::size_t LinearProgram::add_row(SparseVector coeffs, Rational rhs) {
  if (rhs.sign() < 0) throw std::invalid_argument("row right-hand side must be nonnegative");
  rows_.push_back(normalized(std::move(coeffs)));
  rhs_.push_back(std::move(rhs));
  return rows_.size() - 1;
}

void LinearProgram::add_objective(SparseVector coeffs) {
  objectives_.push_back(normalized(std::move(coeffs)));
}

SimplexResult solve(const LinearProgram& program, const SimplexOptions& options) {
  Tableau t(program);
  for (std::size_t level = 0; level < program.objectives().size(); ++level) {
    t.optimize(level, options);
  }
  return t.result();
}

bool certify_primary_optimum(const LinearProgram& program,
                             const std::vector<std::uint32_t>& basis,
                             const std::vector<Rational>& x) {
  const std::size_t n = program.variable_count();
  const std::size_t m = program.row_count();
  if (basis.size() != m || x.size() != n) return false;

  // Dense column j of [A | I].
  std::vector<std::vector<Rational>> a(m, std::vector<Rational>(n + m));
  for (std::size_t i = 0; i < m; ++i) {
    for (const auto& [col, v] : program.rows()[i]) a[i][col] = v;
    a[i][n + i] = Rational(1);
  }
  std::vector<std::vector<Rational>> b(m, std::vector<Rational>(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k < m; ++k) b[i][k] = a[i][basis[k]];
  }
  std::vector<Rational> xb;
  if (!dense_solve(b, program.rhs(), xb)) return false;

  std::vector<Rational> full(n + m);
  for (std::size_t k = 0; k < m; ++k) {
    if (xb[k].sign() < 0) return false;
    full[basis[k]] = xb[k];
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (full[j] != x[j]) return false;
  }

  std::vector<Rational> c(n + m);
  if (!program.objectives().empty()) {
    for (const auto& [col, v] : program.objectives()[0]) c[col] = v;
  }
  std::vector<std::vector<Rational>> bt(m, std::vector<Rational>(m));
  std::vector<Rational> cb(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k < m; ++k) bt[i][k] = b[k][i];
    cb[i] = c[basis[i]];
  }
  std::vector<Rational> y;
  if (!dense_solve(bt, cb, y)) return false;
  for (std::size_t j = 0; j < n + m; ++j) {
    Rational d = c[j];
    for (std::size_t i = 0; i < m; ++i) {
      if (!a[i][j].is_zero()) d -= y[i] * a[i][j];
    }
    if (d.sign() > 0) return false;
  }
  return true;
}

}  // namespace disclosure::lp
