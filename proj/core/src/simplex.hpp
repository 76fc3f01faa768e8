#pragma once

// Internal dense two-phase simplex over {w : a w <= b} with free variables,
// shared by the public LP front end and the parametric fiber engine.

#include <vector>

#include "milef/linalg.hpp"
#include "milef/lp.hpp"

namespace milef::detail {

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : m_(rows), n_(cols), t_(rows + 1, QVector(cols + 1)) {}

  Rational& at(std::size_t i, std::size_t j) { return t_[i][j]; }
  Rational& rhs(std::size_t i) { return t_[i][n_]; }
  Rational& cost(std::size_t j) { return t_[m_][j]; }
  Rational& neg_value() { return t_[m_][n_]; }

  std::vector<int> basis;

  void pivot(std::size_t row, std::size_t col) {
    Rational inv = 1 / t_[row][col];
    for (std::size_t j = 0; j <= n_; ++j) t_[row][j] *= inv;
    for (std::size_t i = 0; i <= m_; ++i) {
      if (i == row || t_[i][col] == 0) continue;
      Rational factor = t_[i][col];
      for (std::size_t j = 0; j <= n_; ++j) t_[i][j] -= factor * t_[row][j];
    }
    basis[row] = static_cast<int>(col);
  }

  // Bland's rule: entering column is the lowest index with negative reduced
  // cost, leaving row breaks ratio ties by lowest basic index.
  enum class Outcome { optimal, unbounded };
  Outcome run(std::size_t num_real_cols, std::size_t* unbounded_col) {
    for (;;) {
      std::size_t enter = n_;
      for (std::size_t j = 0; j < num_real_cols; ++j) {
        if (t_[m_][j] < 0) {
          enter = j;
          break;
        }
      }
      if (enter == n_) return Outcome::optimal;
      std::size_t leave = m_;
      Rational best_ratio;
      for (std::size_t i = 0; i < m_; ++i) {
        if (t_[i][enter] <= 0) continue;
        Rational ratio = t_[i][n_] / t_[i][enter];
        if (leave == m_ || ratio < best_ratio ||
            (ratio == best_ratio && basis[i] < basis[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave == m_) {
        if (unbounded_col) *unbounded_col = enter;
        return Outcome::unbounded;
      }
      pivot(leave, enter);
    }
  }

  std::size_t rows() const { return m_; }

  void drop_row(std::size_t row) {
    t_.erase(t_.begin() + static_cast<std::ptrdiff_t>(row));
    basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(row));
    --m_;
  }

 private:
  std::size_t m_, n_;
  std::vector<QVector> t_;
};

struct DenseLpResult {
  LpStatus status;
  Rational value;
  QVector point;  // optimum, or improving ray when unbounded
};

// max c^T w over {w : rows[i] . w <= b[i]} with w free. `rows` may be a
// subset view selected by `use`; columns are addressed through `cols`.
inline DenseLpResult solve_dense(const QMatrix& a, const std::vector<Rational>& b,
                                 const std::vector<std::size_t>& row_ids,
                                 const std::vector<std::size_t>& col_ids,
                                 const QVector& objective) {
  std::size_t m = row_ids.size();
  std::size_t d = col_ids.size();
  if (m == 0) {
    for (std::size_t j = 0; j < d; ++j)
      if (objective[j] != 0) {
        QVector ray(d);
        ray[j] = objective[j] > 0 ? Rational(1) : Rational(-1);
        return {LpStatus::unbounded, Rational(0), ray};
      }
    return {LpStatus::optimal, Rational(0), QVector(d)};
  }

  std::size_t real_cols = 2 * d + m;
  std::size_t total_cols = real_cols + m;  // + artificials
  Tableau t(m, total_cols);
  t.basis.assign(m, -1);
  for (std::size_t i = 0; i < m; ++i) {
    const Rational& bi = b[row_ids[i]];
    Rational sign = bi < 0 ? Rational(-1) : Rational(1);
    for (std::size_t j = 0; j < d; ++j) {
      const Rational& coef = a(row_ids[i], col_ids[j]);
      if (coef == 0) continue;
      t.at(i, j) = sign * coef;
      t.at(i, d + j) = -sign * coef;
    }
    t.at(i, 2 * d + i) = sign;
    t.rhs(i) = sign * bi;
  }

  // Phase 1: minimize the sum of artificials.
  for (std::size_t i = 0; i < m; ++i) {
    t.at(i, real_cols + i) = 1;
    t.basis[i] = static_cast<int>(real_cols + i);
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j <= total_cols; ++j) t.cost(j) -= t.at(i, j);
  for (std::size_t i = 0; i < m; ++i) t.cost(real_cols + i) = 0;

  t.run(real_cols, nullptr);
  if (t.neg_value() != 0) return {LpStatus::infeasible, Rational(0), QVector(d)};

  for (std::size_t i = 0; i < t.rows();) {
    if (t.basis[i] < static_cast<int>(real_cols)) {
      ++i;
      continue;
    }
    std::size_t col = real_cols;
    for (std::size_t j = 0; j < real_cols; ++j)
      if (t.at(i, j) != 0) {
        col = j;
        break;
      }
    if (col == real_cols) {
      t.drop_row(i);  // redundant constraint
    } else {
      t.pivot(i, col);
      ++i;
    }
  }

  // Phase 2: maximize c^T (u - v)  ==  minimize -c^T u + c^T v.
  for (std::size_t j = 0; j <= total_cols; ++j) t.cost(j) = 0;
  for (std::size_t j = 0; j < d; ++j) {
    t.cost(j) = -objective[j];
    t.cost(d + j) = objective[j];
  }
  for (std::size_t i = 0; i < t.rows(); ++i) {
    std::size_t bj = static_cast<std::size_t>(t.basis[i]);
    if (t.cost(bj) == 0) continue;
    Rational factor = t.cost(bj);
    for (std::size_t j = 0; j <= total_cols; ++j) t.cost(j) -= factor * t.at(i, j);
  }

  std::size_t unbounded_col = 0;
  if (t.run(real_cols, &unbounded_col) == Tableau::Outcome::unbounded) {
    QVector ray(d);
    auto add_dir = [&](std::size_t col, const Rational& coef) {
      if (col < d)
        ray[col] += coef;
      else if (col < 2 * d)
        ray[col - d] -= coef;
    };
    add_dir(unbounded_col, Rational(1));
    for (std::size_t i = 0; i < t.rows(); ++i)
      add_dir(static_cast<std::size_t>(t.basis[i]), -t.at(i, unbounded_col));
    return {LpStatus::unbounded, Rational(0), ray};
  }

  QVector point(d);
  for (std::size_t i = 0; i < t.rows(); ++i) {
    std::size_t col = static_cast<std::size_t>(t.basis[i]);
    if (col < d)
      point[col] += t.rhs(i);
    else if (col < 2 * d)
      point[col - d] -= t.rhs(i);
  }
  Rational value(0);
  for (std::size_t j = 0; j < d; ++j) value += objective[j] * point[j];
  return {LpStatus::optimal, value, point};
}

}  // namespace milef::detail
