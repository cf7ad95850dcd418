#include "summ/simplex.hpp"

#include <cmath>

namespace summ {
namespace {

constexpr double kEps = 1e-9;

struct Tableau {
  Matrix rows;             // m x (cols + 1); last column is the rhs
  Vector cost;             // cols + 1; last entry is -objective
  std::vector<int> basis;  // basic variable (column) per row

  int m() const { return static_cast<int>(rows.rows()); }
  int cols() const { return static_cast<int>(rows.cols()) - 1; }

  void pivot(int row, int col) {
    rows.row(row) /= rows(row, col);
    for (int i = 0; i < m(); ++i)
      if (i != row && std::abs(rows(i, col)) > 0.0) rows.row(i) -= rows(i, col) * rows.row(row);
    if (std::abs(cost(col)) > 0.0) cost -= cost(col) * rows.row(row).transpose();
    basis[row] = col;
  }

  // Prices out the basic variables of `objective` (length cols).
  void set_cost(const Vector& objective) {
    cost = Vector::Zero(cols() + 1);
    cost.head(objective.size()) = objective;
    for (int i = 0; i < m(); ++i)
      if (std::abs(cost(basis[i])) > 0.0) cost -= cost(basis[i]) * rows.row(i).transpose();
  }

  // Bland's rule iteration until optimal or unbounded. `limit` restricts
  // entering columns (used to bar artificials in phase 2).
  LpStatus iterate(int limit) {
    while (true) {
      int enter = -1;
      for (int j = 0; j < limit; ++j)
        if (cost(j) < -kEps) {
          enter = j;
          break;
        }
      if (enter < 0) return LpStatus::optimal;
      int leave = -1;
      double best_ratio = 0.0;
      for (int i = 0; i < m(); ++i) {
        if (rows(i, enter) <= kEps) continue;
        double ratio = rows(i, cols()) / rows(i, enter);
        if (leave < 0 || ratio < best_ratio - kEps ||
            (ratio < best_ratio + kEps && basis[i] < basis[leave]))
          leave = i, best_ratio = ratio;
      }
      if (leave < 0) return LpStatus::unbounded;
      pivot(leave, enter);
    }
  }
};

}  // namespace

LpResult simplex_solve(const Matrix& A, const std::vector<Relation>& relations,
                       const Vector& b, const Vector& c) {
  const int m = static_cast<int>(A.rows());
  const int n = static_cast<int>(A.cols());
  LpResult result;

  if (m == 0) {
    for (int j = 0; j < n; ++j)
      if (c(j) < -kEps) {
        result.status = LpStatus::unbounded;
        return result;
      }
    result.status = LpStatus::optimal;
    result.x = Vector::Zero(n);
    result.objective = 0.0;
    return result;
  }

  // Normalize rhs >= 0, then append one slack/surplus column per
  // inequality and one artificial per >=/= row.
  Matrix rows_A = A;
  Vector rhs = b;
  std::vector<Relation> rels = relations;
  for (int i = 0; i < m; ++i) {
    if (rhs(i) < 0.0) {
      rows_A.row(i) = -rows_A.row(i);
      rhs(i) = -rhs(i);
      if (rels[i] == Relation::le)
        rels[i] = Relation::ge;
      else if (rels[i] == Relation::ge)
        rels[i] = Relation::le;
    }
  }
  int n_slack = 0, n_art = 0;
  for (Relation rel : rels) {
    if (rel != Relation::eq) ++n_slack;
    if (rel != Relation::le) ++n_art;
  }
  const int total = n + n_slack + n_art;
  const int art_begin = n + n_slack;

  Tableau t;
  t.rows = Matrix::Zero(m, total + 1);
  t.rows.block(0, 0, m, n) = rows_A;
  t.rows.col(total) = rhs;
  t.basis.assign(m, -1);
  int slack = n, art = art_begin;
  for (int i = 0; i < m; ++i) {
    switch (rels[i]) {
      case Relation::le:
        t.rows(i, slack) = 1.0;
        t.basis[i] = slack++;
        break;
      case Relation::ge:
        t.rows(i, slack) = -1.0;
        ++slack;
        t.rows(i, art) = 1.0;
        t.basis[i] = art++;
        break;
      case Relation::eq:
        t.rows(i, art) = 1.0;
        t.basis[i] = art++;
        break;
    }
  }

  if (n_art > 0) {
    Vector phase1 = Vector::Zero(total);
    phase1.segment(art_begin, n_art).setOnes();
    t.set_cost(phase1);
    if (t.iterate(total) != LpStatus::optimal || -t.cost(total) > 1e-7) {
      result.status = LpStatus::infeasible;
      return result;
    }
    // Drive any lingering zero-value artificials out of the basis.
    for (int i = 0; i < t.m(); ++i) {
      if (t.basis[i] < art_begin) continue;
      int col = -1;
      for (int j = 0; j < art_begin; ++j)
        if (std::abs(t.rows(i, j)) > kEps) {
          col = j;
          break;
        }
      if (col >= 0) t.pivot(i, col);
    }
    // Remaining artificial rows are redundant constraints; drop them.
    std::vector<int> keep;
    for (int i = 0; i < t.m(); ++i)
      if (t.basis[i] < art_begin) keep.push_back(i);
    if (static_cast<int>(keep.size()) != t.m()) {
      Matrix pruned(keep.size(), t.rows.cols());
      std::vector<int> basis;
      for (size_t k = 0; k < keep.size(); ++k) {
        pruned.row(k) = t.rows.row(keep[k]);
        basis.push_back(t.basis[keep[k]]);
      }
      t.rows = std::move(pruned);
      t.basis = std::move(basis);
    }
  }

  Vector phase2 = Vector::Zero(total);
  phase2.head(n) = c;
  t.set_cost(phase2);
  LpStatus status = t.iterate(art_begin);
  if (status != LpStatus::optimal) {
    result.status = status;
    return result;
  }
  result.status = LpStatus::optimal;
  result.x = Vector::Zero(n);
  for (int i = 0; i < t.m(); ++i)
    if (t.basis[i] < n) result.x(t.basis[i]) = t.rows(i, t.rows.cols() - 1);
  result.objective = result.x.dot(c);
  return result;
}

}  // namespace summ
