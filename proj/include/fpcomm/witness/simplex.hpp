#pragma once

#include <cstddef>
#include <vector>

#include "fpcomm/numeric.hpp"

namespace fpcomm::witness {

enum class Sense { LessEqual, GreaterEqual, Equal };
enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  Rational value = 0;
  std::vector<Rational> x;
  std::size_t pivots = 0;
};

// minimize c.x subject to the added rows and x >= 0, exact over Q.
// Dense two-phase tableau simplex with Bland's rule.
class LinearProgram {
 public:
  explicit LinearProgram(std::size_t num_vars);

  std::size_t num_vars() const noexcept { return num_vars_; }
  void set_objective(std::vector<Rational> c);
  void add_constraint(std::vector<Rational> coeffs, Sense sense, Rational rhs);

  LpSolution minimize() const;

 private:
  struct Row {
    std::vector<Rational> coeffs;
    Sense sense;
    Rational rhs;
  };
  std::size_t num_vars_;
  std::vector<Rational> objective_;
  std::vector<Row> rows_;
};

}  // namespace fpcomm::witness
