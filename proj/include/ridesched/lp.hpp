#pragma once

#include <limits>
#include <vector>

namespace ridesched::lp {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

enum class Sense { LE, GE, EQ };

struct Row {
  std::vector<double> coeffs;  // dense, size num_vars
  Sense sense = Sense::LE;
  double rhs = 0.0;
};

struct LinearProgram {
  int num_vars = 0;
  std::vector<double> objective;  // minimized
  std::vector<double> lower, upper;
  std::vector<Row> rows;
  double objective_constant = 0.0;

  int add_var(double cost, double lo, double hi) {
    objective.push_back(cost);
    lower.push_back(lo);
    upper.push_back(hi);
    return num_vars++;
  }
  Row& add_row(Sense sense, double rhs) {
    rows.push_back(Row{std::vector<double>(num_vars, 0.0), sense, rhs});
    return rows.back();
  }
};

enum class SolveStatus { Optimal, Infeasible, Unbounded, IterationLimit };

struct Solution {
  SolveStatus status = SolveStatus::Infeasible;
  double objective = 0.0;  // includes objective_constant
  std::vector<double> values;
};

// Dense bounded-variable primal simplex, two phases, Bland's anti-cycling
// pivot rule. Deterministic: identical programs give identical solutions.
Solution solve(const LinearProgram& prob);

}  // namespace ridesched::lp
