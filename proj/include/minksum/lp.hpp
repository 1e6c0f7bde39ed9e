#pragma once

#include "minksum/types.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <utility>
#include <vector>

namespace minksum {

enum class SolveStatus { Optimal, Infeasible, Unbounded };

inline const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Optimal: return "optimal";
    case SolveStatus::Infeasible: return "infeasible";
    case SolveStatus::Unbounded: return "unbounded";
  }
  return "unknown";
}

/// maximize objective_constant + c.x  subject to  A x = b, x >= 0.
struct StandardFormLP {
  Matrix A;
  Vector b;
  Vector c;
  Rational objective_constant{0};
};

/// Solved result. value/solution/basis/duals are meaningful only when
/// status is Optimal. `duals` holds one multiplier per constraint row;
/// rows dropped as redundant during phase I carry 0.
struct LPOutcome {
  SolveStatus status = SolveStatus::Infeasible;
  Rational value{0};
  Vector solution;
  std::vector<Index> basis;
  Vector duals;
};

namespace detail {

inline void validate_shapes(const StandardFormLP& lp) {
  const Index m = lp.A.rows();
  const Index q = lp.A.cols();
  if (m < 1 || q < 1) throw InvalidInput("LP must have at least one row and one column");
  if (lp.b.size() != m) {
    std::ostringstream msg;
    msg << "rhs length " << lp.b.size() << " does not match row count " << m;
    throw InvalidInput(msg.str());
  }
  if (lp.c.size() != q) {
    std::ostringstream msg;
    msg << "objective length " << lp.c.size() << " does not match column count " << q;
    throw InvalidInput(msg.str());
  }
}

inline Integer binomial(Index n, Index k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Integer result = 1;
  for (Index i = 0; i < k; ++i) {
    result *= Integer(n - i);
    result /= Integer(i + 1);
  }
  return result;
}

/// Solves M x = rhs for square nonsingular M by exact Gauss-Jordan.
inline Vector solve_linear(Matrix M, Vector rhs) {
  const Index n = M.rows();
  if (M.cols() != n || rhs.size() != n) throw InternalError("solve_linear: shape mismatch");
  std::vector<Index> perm(static_cast<std::size_t>(n));
  for (Index col = 0; col < n; ++col) {
    Index pivot = -1;
    for (Index r = col; r < n; ++r) {
      if (M(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) throw InternalError("solve_linear: singular matrix");
    if (pivot != col) {
      M.row(pivot).swap(M.row(col));
      std::swap(rhs(pivot), rhs(col));
    }
    const Rational inv = M(col, col);
    M.row(col) /= inv;
    rhs(col) /= inv;
    for (Index r = 0; r < n; ++r) {
      if (r == col || M(r, col) == 0) continue;
      const Rational f = M(r, col);
      M.row(r) -= f * M.row(col);
      rhs(r) -= f * rhs(col);
    }
  }
  return rhs;
}

// Dense tableau simplex over exact rationals. Pivot selection is Bland's
// least-index rule in both phases, so the iteration count is bounded by the
// number of bases and cycling cannot occur.
class SimplexSolver {
 public:
  explicit SimplexSolver(const StandardFormLP& lp) : lp_(lp), m0_(lp.A.rows()), q_(lp.A.cols()) {
    validate_shapes(lp);
  }

  LPOutcome run(const std::vector<Index>* basis_hint) {
    if (basis_hint == nullptr || !start_from_hint(*basis_hint)) {
      start_two_phase();
      if (!phase_one()) {
        LPOutcome out;
        out.status = SolveStatus::Infeasible;
        return out;
      }
    }
    return phase_two();
  }

 private:
  const StandardFormLP& lp_;
  Index m0_;                   // original row count
  Index q_;                    // structural column count
  Index art_ = 0;              // artificial column count (0 when started from a hint)
  Index width_ = 0;            // q_ + art_ + 1, rhs last
  std::vector<Vector> rows_;   // kept tableau rows
  std::vector<Index> basis_;   // basic column per kept row
  std::vector<Index> origin_;  // kept row -> original row
  std::vector<int> sign_;      // per original row: +1 kept as-is, -1 negated
  Vector z_;                   // reduced-cost row; z_(width_-1) = -objective

  Index rhs_col() const { return width_ - 1; }

  // Tries to start phase II directly from the caller's basis. Returns false
  // (leaving no state behind) if the basis is singular or its basic solution
  // is not feasible.
  bool start_from_hint(const std::vector<Index>& hint) {
    if (static_cast<Index>(hint.size()) != m0_) {
      throw InvalidInput("basis hint size does not match row count");
    }
    for (Index col : hint) {
      if (col < 0 || col >= q_) throw InvalidInput("basis hint column out of range");
    }

    art_ = 0;
    width_ = q_ + 1;
    rows_.assign(static_cast<std::size_t>(m0_), Vector());
    for (Index i = 0; i < m0_; ++i) {
      Vector row(width_);
      for (Index j = 0; j < q_; ++j) row(j) = lp_.A(i, j);
      row(rhs_col()) = lp_.b(i);
      rows_[static_cast<std::size_t>(i)] = std::move(row);
    }
    basis_.assign(static_cast<std::size_t>(m0_), -1);
    origin_.resize(static_cast<std::size_t>(m0_));
    std::iota(origin_.begin(), origin_.end(), Index{0});
    sign_.assign(static_cast<std::size_t>(m0_), 1);

    // Reduce the hinted columns to an identity, assigning rows greedily.
    std::vector<bool> row_used(static_cast<std::size_t>(m0_), false);
    for (Index col : hint) {
      Index pivot = -1;
      for (Index r = 0; r < m0_; ++r) {
        if (!row_used[static_cast<std::size_t>(r)] && rows_[static_cast<std::size_t>(r)](col) != 0) {
          pivot = r;
          break;
        }
      }
      if (pivot < 0) {
        reset();
        return false;  // singular basis
      }
      row_used[static_cast<std::size_t>(pivot)] = true;
      basis_[static_cast<std::size_t>(pivot)] = col;
      eliminate(pivot, col);
    }
    for (const auto& row : rows_) {
      if (row(rhs_col()) < 0) {
        reset();
        return false;  // hinted basic solution infeasible
      }
    }
    return true;
  }

  void reset() {
    rows_.clear();
    basis_.clear();
    origin_.clear();
    sign_.clear();
    art_ = 0;
    width_ = 0;
  }

  void start_two_phase() {
    art_ = m0_;
    width_ = q_ + art_ + 1;
    rows_.assign(static_cast<std::size_t>(m0_), Vector());
    basis_.resize(static_cast<std::size_t>(m0_));
    origin_.resize(static_cast<std::size_t>(m0_));
    sign_.assign(static_cast<std::size_t>(m0_), 1);
    for (Index i = 0; i < m0_; ++i) {
      const int s = lp_.b(i) < 0 ? -1 : 1;
      sign_[static_cast<std::size_t>(i)] = s;
      Vector row = Vector::Zero(width_);
      for (Index j = 0; j < q_; ++j) row(j) = s * lp_.A(i, j);
      row(q_ + i) = 1;
      row(rhs_col()) = s * lp_.b(i);
      rows_[static_cast<std::size_t>(i)] = std::move(row);
      basis_[static_cast<std::size_t>(i)] = q_ + i;
      origin_[static_cast<std::size_t>(i)] = i;
    }
  }

  // Divides row r by its pivot entry and clears column `col` everywhere else,
  // including the reduced-cost row. Tableaus here carry many structural
  // zeros, so the update walks entries and skips them instead of using
  // whole-row expressions.
  void eliminate(Index r, Index col) {
    auto& pivot_row = rows_[static_cast<std::size_t>(r)];
    const Rational pivot = pivot_row(col);
    if (pivot == 0) throw InternalError("simplex: zero pivot");
    if (pivot != 1) {
      for (Index j = 0; j < width_; ++j) {
        if (pivot_row(j) != 0) pivot_row(j) /= pivot;
      }
    }
    auto subtract_multiple = [&](Vector& row) {
      const Rational f = row(col);
      if (f == 0) return;
      for (Index j = 0; j < width_; ++j) {
        if (pivot_row(j) != 0) row(j) -= f * pivot_row(j);
      }
    };
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (static_cast<Index>(i) != r) subtract_multiple(rows_[i]);
    }
    if (z_.size() == width_) subtract_multiple(z_);
  }

  // Bland's rule: entering column is the least structural index with a
  // positive reduced cost; the leaving row minimizes the ratio, ties broken
  // by the least basic column. Returns false when no entering column exists.
  enum class StepResult { Optimal, Pivoted, Unbounded };

  StepResult step() {
    Index enter = -1;
    for (Index j = 0; j < q_; ++j) {
      if (z_(j) > 0) {
        enter = j;
        break;
      }
    }
    if (enter < 0) return StepResult::Optimal;

    Index leave = -1;
    Rational best_ratio{0};
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Rational& coef = rows_[i](enter);
      if (coef <= 0) continue;
      const Rational ratio = rows_[i](rhs_col()) / coef;
      if (leave < 0 || ratio < best_ratio ||
          (ratio == best_ratio && basis_[i] < basis_[static_cast<std::size_t>(leave)])) {
        leave = static_cast<Index>(i);
        best_ratio = ratio;
      }
    }
    if (leave < 0) return StepResult::Unbounded;

    eliminate(leave, enter);
    basis_[static_cast<std::size_t>(leave)] = enter;
    return StepResult::Pivoted;
  }

  // Runs pivots until optimal or unbounded, with a hard cap at the number of
  // possible bases. Exceeding the cap means the anti-cycling rule is broken.
  StepResult iterate(Index column_pool) {
    const Integer cap = binomial(column_pool, static_cast<Index>(rows_.size())) + 1;
    Integer used = 0;
    while (true) {
      const StepResult r = step();
      if (r != StepResult::Pivoted) return r;
      if (++used > cap) throw InternalError("simplex: pivot cap exceeded");
    }
  }

  bool phase_one() {
    // maximize -(sum of artificials); feasible iff the optimum is exactly 0.
    z_ = Vector::Zero(width_);
    for (Index i = 0; i < art_; ++i) z_(q_ + i) = -1;
    for (const auto& row : rows_) z_ += row;

    const StepResult r = iterate(q_ + art_);
    if (r == StepResult::Unbounded) throw InternalError("simplex: phase I unbounded");
    if (z_(rhs_col()) != 0) return false;

    // Pivot leftover artificials out; a row with no structural entry left is
    // a dependent constraint and gets dropped.
    for (std::size_t i = rows_.size(); i-- > 0;) {
      if (basis_[i] < q_) continue;
      Index col = -1;
      for (Index j = 0; j < q_; ++j) {
        if (rows_[i](j) != 0) {
          col = j;
          break;
        }
      }
      if (col >= 0) {
        eliminate(static_cast<Index>(i), col);
        basis_[i] = col;
      } else {
        rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
        origin_.erase(origin_.begin() + static_cast<std::ptrdiff_t>(i));
      }
    }
    return true;
  }

  LPOutcome phase_two() {
    z_ = Vector::Zero(width_);
    for (Index j = 0; j < q_; ++j) z_(j) = lp_.c(j);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Rational f = z_(basis_[i]);
      if (f != 0) z_ -= f * rows_[i];
    }

    const StepResult r = iterate(q_);
    LPOutcome out;
    if (r == StepResult::Unbounded) {
      out.status = SolveStatus::Unbounded;
      return out;
    }

    out.status = SolveStatus::Optimal;
    out.value = lp_.objective_constant - z_(rhs_col());
    out.solution = Vector::Zero(q_);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      out.solution(basis_[i]) = rows_[i](rhs_col());
    }
    out.basis.assign(basis_.begin(), basis_.end());
    std::sort(out.basis.begin(), out.basis.end());
    out.duals = compute_duals();
    return out;
  }

  // Multipliers for the original rows: solve B^T y = c_B over the kept rows,
  // undo any row negation, and pad dropped rows with 0.
  Vector compute_duals() const {
    const Index kept = static_cast<Index>(rows_.size());
    Vector duals = Vector::Zero(m0_);
    if (kept == 0) return duals;
    Matrix bt(kept, kept);
    Vector cb(kept);
    for (Index r = 0; r < kept; ++r) {
      const Index col = basis_[static_cast<std::size_t>(r)];
      cb(r) = lp_.c(col);
      for (Index i = 0; i < kept; ++i) {
        const Index orig = origin_[static_cast<std::size_t>(i)];
        bt(r, i) = sign_[static_cast<std::size_t>(orig)] * lp_.A(orig, col);
      }
    }
    const Vector y = solve_linear(std::move(bt), std::move(cb));
    for (Index i = 0; i < kept; ++i) {
      const Index orig = origin_[static_cast<std::size_t>(i)];
      duals(orig) = sign_[static_cast<std::size_t>(orig)] * y(i);
    }
    return duals;
  }
};

}  // namespace detail

/// Two-phase primal simplex with Bland's anti-cycling rule, exact throughout.
inline LPOutcome solve(const StandardFormLP& lp) {
  return detail::SimplexSolver(lp).run(nullptr);
}

/// Variant that starts from a known basis. Falls back to the ordinary
/// two-phase run when the basis is singular or its basic solution infeasible.
inline LPOutcome solve(const StandardFormLP& lp, const std::vector<Index>& starting_basis) {
  return detail::SimplexSolver(lp).run(&starting_basis);
}

/// Exact arithmetic re-check of an Optimal outcome: A x = b, x >= 0, and the
/// reported value, verified independently of the pivoting path.
inline bool check_certificate(const StandardFormLP& lp, const LPOutcome& out) {
  if (out.status != SolveStatus::Optimal) return false;
  const Index m = lp.A.rows();
  const Index q = lp.A.cols();
  if (out.solution.size() != q) return false;
  for (Index j = 0; j < q; ++j) {
    if (out.solution(j) < 0) return false;
  }
  for (Index i = 0; i < m; ++i) {
    Rational lhs{0};
    for (Index j = 0; j < q; ++j) lhs += lp.A(i, j) * out.solution(j);
    if (lhs != lp.b(i)) return false;
  }
  Rational value = lp.objective_constant;
  for (Index j = 0; j < q; ++j) value += lp.c(j) * out.solution(j);
  return value == out.value;
}

/// maximize objective.y  subject to  G y <= h, with y free.
struct InequalitySystem {
  Matrix G;
  Vector h;
  Vector objective;
};

/// An inequality system rewritten in standard form: each free variable is
/// split into a nonnegative pair and each row gains a slack. Keeps the map
/// back to the free variables and the all-slack starting basis.
class StandardizedLP {
 public:
  explicit StandardizedLP(const InequalitySystem& sys) {
    const Index rows = sys.G.rows();
    const Index d = sys.G.cols();
    if (rows < 1 || d < 1) throw InvalidInput("inequality system must have rows and columns");
    if (sys.h.size() != rows) throw InvalidInput("inequality rhs length mismatch");
    if (sys.objective.size() != d) throw InvalidInput("inequality objective length mismatch");

    free_count_ = d;
    lp_.A = Matrix::Zero(rows, 2 * d + rows);
    lp_.A.block(0, 0, rows, d) = sys.G;
    lp_.A.block(0, d, rows, d) = -sys.G;
    for (Index r = 0; r < rows; ++r) lp_.A(r, 2 * d + r) = 1;
    lp_.b = sys.h;
    lp_.c = Vector::Zero(2 * d + rows);
    lp_.c.head(d) = sys.objective;
    lp_.c.segment(d, d) = -sys.objective;

    slack_basis_.resize(static_cast<std::size_t>(rows));
    std::iota(slack_basis_.begin(), slack_basis_.end(), 2 * d);
    slack_start_feasible_ = true;
    for (Index r = 0; r < rows; ++r) {
      if (sys.h(r) < 0) {
        slack_start_feasible_ = false;
        break;
      }
    }
  }

  const StandardFormLP& lp() const { return lp_; }
  Index free_count() const { return free_count_; }
  const std::vector<Index>& slack_basis() const { return slack_basis_; }
  bool slack_basis_feasible() const { return slack_start_feasible_; }

  /// Recovers the free variables from a standard-form solution.
  Vector recover(const Vector& x) const {
    if (x.size() != lp_.c.size()) throw InvalidInput("solution length mismatch");
    return x.head(free_count_) - x.segment(free_count_, free_count_);
  }

 private:
  StandardFormLP lp_;
  Index free_count_ = 0;
  std::vector<Index> slack_basis_;
  bool slack_start_feasible_ = false;
};

inline StandardizedLP from_inequalities(const InequalitySystem& sys) { return StandardizedLP(sys); }

/// Solves an inequality system, skipping phase I whenever the all-slack
/// basis is already feasible.
inline LPOutcome solve(const StandardizedLP& s) {
  if (s.slack_basis_feasible()) return solve(s.lp(), s.slack_basis());
  return solve(s.lp());
}

}  // namespace minksum
