#ifndef NODALSTAB_LP_HPP
#define NODALSTAB_LP_HPP

#include <cstddef>
#include <vector>

#include "nodalstab/rational.hpp"

/// Exact rational linear programming.
///
/// A dense two-phase tableau simplex with Bland's anti-cycling rule. Every
/// pivot is carried out in exact arithmetic, so there are no tolerances and an
/// "Optimal" answer is always a basic feasible solution (a vertex of the
/// feasible polyhedron, once free variables are fixed by the basis).
namespace nodalstab::lp {

enum class Relation { LessEq, GreaterEq, Equal };

enum class Status { Optimal, Infeasible, Unbounded };

struct Solution {
  Status status = Status::Infeasible;
  Rational value;          // objective value, meaningful when Optimal
  std::vector<Rational> x; // one entry per declared variable
};

class Problem {
 public:
  explicit Problem(std::size_t num_vars);

  std::size_t num_vars() const { return num_vars_; }

  /// Variables are nonnegative unless marked free.
  void set_free(std::size_t var);

  void add_constraint(std::vector<Rational> coeffs, Relation rel, Rational rhs);

  /// Objective to minimise. Defaults to zero (pure feasibility).
  void set_objective(std::vector<Rational> coeffs);

  Solution minimize() const;
  Solution maximize() const;

 private:
  struct Row {
    std::vector<Rational> coeffs;
    Relation rel;
    Rational rhs;
  };

  std::size_t num_vars_;
  std::vector<bool> free_;
  std::vector<Row> rows_;
  std::vector<Rational> objective_;
};

}  // namespace nodalstab::lp

#endif
