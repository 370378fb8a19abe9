#include "polydag/lp.hpp"

#include <stdexcept>

namespace polydag {

namespace {

class Tableau {
 public:
  Tableau(int rows, int cols) : t_(rows, std::vector<Rational>(cols + 1, Rational(0))), basis_(rows, -1), cols_(cols) {}

  Rational& at(int r, int c) { return t_[r][c]; }
  Rational& rhs(int r) { return t_[r][cols_]; }
  int rows() const { return static_cast<int>(t_.size()); }
  int cols() const { return cols_; }
  int& basis(int r) { return basis_[r]; }

  void remove_row(int r) {
    t_.erase(t_.begin() + r);
    basis_.erase(basis_.begin() + r);
  }

  void pivot(int r, int c, std::vector<Rational>& obj) {
    Rational inv = 1 / t_[r][c];
    auto& pr = t_[r];
    for (auto& x : pr) {
      if (sgn(x) != 0) x *= inv;
    }
    auto eliminate = [&](std::vector<Rational>& row) {
      if (sgn(row[c]) == 0) return;
      Rational f = row[c];
      for (int k = 0; k <= cols_; ++k) {
        if (sgn(pr[k]) != 0) row[k] -= f * pr[k];
      }
    };
    for (int i = 0; i < rows(); ++i) {
      if (i != r) eliminate(t_[i]);
    }
    eliminate(obj);
    basis_[r] = c;
  }

  /// Bland's rule; `allowed[c]` marks columns that may enter.
  LpStatus run(std::vector<Rational>& obj, const std::vector<bool>& allowed) {
    while (true) {
      int enter = -1;
      for (int c = 0; c < cols_; ++c) {
        if (allowed[c] && sgn(obj[c]) < 0) {
          enter = c;
          break;
        }
      }
      if (enter < 0) return LpStatus::Optimal;
      int leave = -1;
      Rational best;
      for (int i = 0; i < rows(); ++i) {
        if (sgn(t_[i][enter]) <= 0) continue;
        Rational ratio = t_[i][cols_] / t_[i][enter];
        if (leave < 0 || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) return LpStatus::Unbounded;
      pivot(leave, enter, obj);
    }
  }

  /// Objective row for maximizing cost . columns, reduced against the basis.
  std::vector<Rational> objective_row(const std::vector<Rational>& cost) {
    std::vector<Rational> obj(cols_ + 1, Rational(0));
    for (int c = 0; c < cols_; ++c) obj[c] = -cost[c];
    for (int i = 0; i < rows(); ++i) {
      Rational f = obj[basis_[i]];
      if (sgn(f) == 0) continue;
      for (int k = 0; k <= cols_; ++k) {
        if (sgn(t_[i][k]) != 0) obj[k] -= f * t_[i][k];
      }
    }
    return obj;
  }

 private:
  std::vector<std::vector<Rational>> t_;
  std::vector<int> basis_;
  int cols_;
};

}  // namespace

int LinearProgram::add_variable(bool nonnegative) {
  nonnegative_.push_back(nonnegative);
  return variable_count() - 1;
}

void LinearProgram::add_constraint(Terms terms, Relation rel, Rational rhs) {
  for (const auto& [v, coef] : terms) {
    if (v < 0 || v >= variable_count()) throw std::out_of_range("constraint references unknown variable");
  }
  rows_.push_back({std::move(terms), rel, std::move(rhs)});
}

void LinearProgram::set_objective(Terms terms) {
  for (const auto& [v, coef] : terms) {
    if (v < 0 || v >= variable_count()) throw std::out_of_range("objective references unknown variable");
  }
  objective_ = std::move(terms);
}

LpResult LinearProgram::maximize() const {
  // Column layout: variable parts, then slack/surplus, then artificials.
  std::vector<int> plus(variable_count()), minus(variable_count(), -1);
  int cols = 0;
  for (int v = 0; v < variable_count(); ++v) {
    plus[v] = cols++;
    if (!nonnegative_[v]) minus[v] = cols++;
  }
  const int m = static_cast<int>(rows_.size());
  std::vector<int> sign(m, 1);
  std::vector<Relation> rel(m);
  std::vector<int> slack(m, -1), artificial(m, -1);
  for (int i = 0; i < m; ++i) {
    rel[i] = rows_[i].rel;
    if (sgn(rows_[i].rhs) < 0) {
      sign[i] = -1;
      if (rel[i] == Relation::LessEq) {
        rel[i] = Relation::GreaterEq;
      } else if (rel[i] == Relation::GreaterEq) {
        rel[i] = Relation::LessEq;
      }
    }
    if (rel[i] != Relation::Equal) slack[i] = cols++;
  }
  const int first_artificial = cols;
  for (int i = 0; i < m; ++i) {
    if (rel[i] != Relation::LessEq) artificial[i] = cols++;
  }

  Tableau tab(m, cols);
  for (int i = 0; i < m; ++i) {
    for (const auto& [v, coef] : rows_[i].terms) {
      tab.at(i, plus[v]) += sign[i] * coef;
      if (minus[v] >= 0) tab.at(i, minus[v]) -= sign[i] * coef;
    }
    tab.rhs(i) = sign[i] * rows_[i].rhs;
    if (slack[i] >= 0) tab.at(i, slack[i]) = rel[i] == Relation::LessEq ? 1 : -1;
    if (artificial[i] >= 0) {
      tab.at(i, artificial[i]) = 1;
      tab.basis(i) = artificial[i];
    } else {
      tab.basis(i) = slack[i];
    }
  }

  std::vector<bool> all(cols, true);
  if (first_artificial < cols) {
    std::vector<Rational> phase1_cost(cols, Rational(0));
    for (int c = first_artificial; c < cols; ++c) phase1_cost[c] = -1;
    auto obj = tab.objective_row(phase1_cost);
    tab.run(obj, all);
    if (sgn(obj[cols]) < 0) return {LpStatus::Infeasible, 0, {}};
    // Drive zero-valued artificials out of the basis or drop their redundant rows.
    for (int i = tab.rows() - 1; i >= 0; --i) {
      if (tab.basis(i) < first_artificial) continue;
      int col = -1;
      for (int c = 0; c < first_artificial; ++c) {
        if (sgn(tab.at(i, c)) != 0) {
          col = c;
          break;
        }
      }
      if (col >= 0) {
        tab.pivot(i, col, obj);
      } else {
        tab.remove_row(i);
      }
    }
  }

  std::vector<bool> allowed(cols, true);
  for (int c = first_artificial; c < cols; ++c) allowed[c] = false;
  std::vector<Rational> cost(cols, Rational(0));
  for (const auto& [v, coef] : objective_) {
    cost[plus[v]] += coef;
    if (minus[v] >= 0) cost[minus[v]] -= coef;
  }
  auto obj = tab.objective_row(cost);
  if (tab.run(obj, allowed) == LpStatus::Unbounded) return {LpStatus::Unbounded, 0, {}};

  std::vector<Rational> value(cols, Rational(0));
  for (int i = 0; i < tab.rows(); ++i) value[tab.basis(i)] = tab.rhs(i);
  LpResult result{LpStatus::Optimal, obj[cols], std::vector<Rational>(variable_count())};
  for (int v = 0; v < variable_count(); ++v) {
    result.x[v] = value[plus[v]];
    if (minus[v] >= 0) result.x[v] -= value[minus[v]];
  }
  return result;
}

}  // namespace polydag
