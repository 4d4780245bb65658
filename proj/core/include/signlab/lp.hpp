#pragma once

#include <cstddef>
#include <stop_token>
#include <vector>

#include "signlab/rational.hpp"

namespace signlab::lp {

enum class Relation { kLessEqual, kGreaterEqual, kEqual };
enum class Bound { kNonNegative, kFree };

/// maximize objective . x subject to the rows, with per-variable sign bounds.
class LinearProgram {
 public:
  explicit LinearProgram(std::size_t variables);

  std::size_t variables() const noexcept { return bounds_.size(); }
  std::size_t rows() const noexcept { return rows_.size(); }

  void set_bound(std::size_t variable, Bound bound);
  void set_objective(std::vector<Rational> coefficients);
  void add_row(std::vector<Rational> coefficients, Relation relation, Rational rhs);

  struct Row {
    std::vector<Rational> coefficients;
    Relation relation;
    Rational rhs;
  };

  const std::vector<Row>& row_list() const noexcept { return rows_; }
  const std::vector<Rational>& objective() const noexcept { return objective_; }
  Bound bound(std::size_t variable) const { return bounds_[variable]; }

 private:
  std::vector<Bound> bounds_;
  std::vector<Rational> objective_;
  std::vector<Row> rows_;
};

enum class Status { kOptimal, kInfeasible, kUnbounded };

struct Result {
  Status status = Status::kInfeasible;
  std::vector<Rational> values;  // primal, valid when optimal
  /// Dual multipliers y with y^T A = objective on free columns, >= on the
  /// others; one per row in the order rows were added. Valid when optimal.
  std::vector<Rational> duals;
  Rational objective;
  std::size_t pivots = 0;
};

struct Options {
  std::stop_token stop;
  std::size_t max_pivots = 10'000'000;
};

/// Dense two-phase tableau simplex in exact arithmetic with Bland's rule.
Result solve(const LinearProgram& program, const Options& options = {});

}  // namespace signlab::lp
