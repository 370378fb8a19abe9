#pragma once

// Exact linear programming: dense two-phase simplex over the rationals with
// Bland's pivoting rule.

#include <utility>
#include <vector>

#include "polydag/rational.hpp"

namespace polydag {

enum class Relation { LessEq, Equal, GreaterEq };
enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rational objective;
  /// One value per variable; meaningful only when Optimal.
  std::vector<Rational> x;
};

class LinearProgram {
 public:
  using Terms = std::vector<std::pair<int, Rational>>;

  /// Returns the variable index. Variables are free unless nonnegative is set.
  int add_variable(bool nonnegative = false);
  int variable_count() const { return static_cast<int>(nonnegative_.size()); }

  void add_constraint(Terms terms, Relation rel, Rational rhs);
  /// Objective to maximize; defaults to 0 (pure feasibility).
  void set_objective(Terms terms);

  LpResult maximize() const;

 private:
  struct Row {
    Terms terms;
    Relation rel;
    Rational rhs;
  };
  std::vector<bool> nonnegative_;
  std::vector<Row> rows_;
  Terms objective_;
};

}  // namespace polydag
