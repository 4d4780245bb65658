#include "signlab/lp.hpp"

#include <gmp.h>

#include "signlab/error.hpp"

namespace signlab::lp {

LinearProgram::LinearProgram(std::size_t variables)
    : bounds_(variables, Bound::kNonNegative), objective_(variables) {}

void LinearProgram::set_bound(std::size_t variable, Bound bound) { bounds_.at(variable) = bound; }

void LinearProgram::set_objective(std::vector<Rational> coefficients) {
  if (coefficients.size() != variables()) throw Error(ErrorCode::kInvalidArgument, "objective length mismatch");
  objective_ = std::move(coefficients);
}

void LinearProgram::add_row(std::vector<Rational> coefficients, Relation relation, Rational rhs) {
  if (coefficients.size() != variables()) throw Error(ErrorCode::kInvalidArgument, "row length mismatch");
  rows_.push_back(Row{std::move(coefficients), relation, std::move(rhs)});
}

namespace {

class Tableau {
 public:
  Tableau(const LinearProgram& program, const Options& options) : options_(options) {
    const std::size_t n = program.variables();
    // Structural columns: a free variable becomes (plus, minus).
    for (std::size_t j = 0; j < n; ++j) {
      plus_column_.push_back(columns_++);
      minus_column_.push_back(program.bound(j) == Bound::kFree ? static_cast<long>(columns_++) : -1L);
    }

    const auto& rows = program.row_list();
    const std::size_t m = rows.size();
    row_sign_.resize(m);
    identity_column_.resize(m);
    std::vector<int> surplus(m, -1);
    for (std::size_t i = 0; i < m; ++i) {
      Relation rel = rows[i].relation;
      row_sign_[i] = rows[i].rhs < 0 ? -1 : 1;
      if (row_sign_[i] < 0 && rel != Relation::kEqual) {
        rel = rel == Relation::kLessEqual ? Relation::kGreaterEqual : Relation::kLessEqual;
      }
      if (rel == Relation::kGreaterEqual) surplus[i] = static_cast<int>(columns_++);
      relation_.push_back(rel);
    }
    for (std::size_t i = 0; i < m; ++i) {
      identity_column_[i] = columns_++;
      if (relation_[i] != Relation::kLessEqual) artificial_rows_.push_back(i);
    }
    rhs_ = columns_;

    a_.assign(m, std::vector<Rational>(columns_ + 1));
    basis_.resize(m);
    original_row_.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
      auto& row = a_[i];
      for (std::size_t j = 0; j < n; ++j) {
        const Rational& c = rows[i].coefficients[j];
        if (c == 0) continue;
        Rational v = row_sign_[i] < 0 ? Rational(-c) : c;
        if (minus_column_[j] >= 0) row[minus_column_[j]] = -v;
        row[plus_column_[j]] = std::move(v);
      }
      if (surplus[i] >= 0) row[surplus[i]] = -1;
      row[identity_column_[i]] = 1;
      row[rhs_] = row_sign_[i] < 0 ? Rational(-rows[i].rhs) : rows[i].rhs;
      basis_[i] = identity_column_[i];
      original_row_[i] = i;
    }
    is_artificial_.assign(columns_, false);
    for (auto i : artificial_rows_) is_artificial_[identity_column_[i]] = true;
    // Slack columns of <= rows live in the identity block but are ordinary.
    costs_.assign(columns_, Rational(0));
    for (std::size_t j = 0; j < n; ++j) {
      costs_[plus_column_[j]] = program.objective()[j];
      if (minus_column_[j] >= 0) costs_[minus_column_[j]] = -program.objective()[j];
    }
  }

  Result run(const LinearProgram& program) {
    Result result;
    if (!artificial_rows_.empty()) {
      // Phase 1: maximize -sum(artificials).
      std::vector<Rational> phase1(columns_, Rational(0));
      for (auto i : artificial_rows_) phase1[identity_column_[i]] = -1;
      set_costs(phase1);
      if (!optimize(/*allow_artificial=*/false)) {
        throw Error(ErrorCode::kInternal, "phase 1 reported unbounded");
      }
      if (objective_value() < 0) {
        result.status = Status::kInfeasible;
        result.pivots = pivots_;
        return result;
      }
      evict_artificials();
    }
    set_costs(costs_);
    if (!optimize(false)) {
      result.status = Status::kUnbounded;
      result.pivots = pivots_;
      return result;
    }
    result.status = Status::kOptimal;
    result.pivots = pivots_;
    result.objective = objective_value();

    std::vector<Rational> column_value(columns_);
    for (std::size_t i = 0; i < a_.size(); ++i) column_value[basis_[i]] = a_[i][rhs_];
    result.values.resize(program.variables());
    for (std::size_t j = 0; j < program.variables(); ++j) {
      result.values[j] = column_value[plus_column_[j]];
      if (minus_column_[j] >= 0) result.values[j] -= column_value[minus_column_[j]];
    }
    result.duals.resize(row_sign_.size());
    for (std::size_t i = 0; i < row_sign_.size(); ++i) {
      if (dropped_.size() > i && dropped_[i]) continue;
      Rational y = -reduced_[identity_column_[i]];
      result.duals[i] = row_sign_[i] < 0 ? Rational(-y) : y;
    }
    return result;
  }

 private:
  // reduced_[j] = c_j - c_B B^{-1} A_j; reduced_[rhs_] = -(c_B B^{-1} b).
  void set_costs(const std::vector<Rational>& costs) {
    reduced_.assign(columns_ + 1, Rational(0));
    for (std::size_t j = 0; j < columns_; ++j) reduced_[j] = costs[j];
    for (std::size_t i = 0; i < a_.size(); ++i) {
      const Rational& cb = costs[basis_[i]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j <= columns_; ++j) {
        if (a_[i][j] != 0) reduced_[j] -= cb * a_[i][j];
      }
    }
  }

  Rational objective_value() const { return -reduced_[rhs_]; }

  bool enterable(std::size_t j, bool allow_artificial) const {
    return allow_artificial || !is_artificial_[j];
  }

  // Returns false when unbounded.
  bool optimize(bool allow_artificial) {
    Rational best_num, best_den, lhs, rhs;
    for (;;) {
      std::size_t enter = columns_;
      for (std::size_t j = 0; j < columns_; ++j) {
        if (enterable(j, allow_artificial) && reduced_[j] > 0) {
          enter = j;
          break;
        }
      }
      if (enter == columns_) return true;

      std::size_t leave = a_.size();
      for (std::size_t i = 0; i < a_.size(); ++i) {
        const Rational& coef = a_[i][enter];
        if (coef <= 0) continue;
        if (leave == a_.size()) {
          leave = i;
          continue;
        }
        // a_[i][rhs]/coef vs a_[leave][rhs]/a_[leave][enter]
        lhs = a_[i][rhs_] * a_[leave][enter];
        rhs = a_[leave][rhs_] * coef;
        if (lhs < rhs || (lhs == rhs && basis_[i] < basis_[leave])) leave = i;
      }
      if (leave == a_.size()) return false;
      pivot(leave, enter);
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    if (options_.stop.stop_requested()) throw Error(ErrorCode::kCancelled, "LP solve cancelled");
    if (++pivots_ > options_.max_pivots) throw Error(ErrorCode::kInternal, "simplex pivot limit exceeded");

    auto& prow = a_[r];
    const Rational inv = 1 / prow[c];
    nonzero_.clear();
    for (std::size_t j = 0; j <= columns_; ++j) {
      if (prow[j] != 0) {
        prow[j] *= inv;
        nonzero_.push_back(j);
      }
    }
    mpq_t tmp;
    mpq_init(tmp);
    const auto eliminate = [&](std::vector<Rational>& row) {
      if (row[c] == 0) return;
      const Rational factor = row[c];
      for (auto j : nonzero_) {
        mpq_mul(tmp, factor.backend().data(), prow[j].backend().data());
        mpq_sub(row[j].backend().data(), row[j].backend().data(), tmp);
      }
    };
    for (std::size_t i = 0; i < a_.size(); ++i) {
      if (i != r) eliminate(a_[i]);
    }
    eliminate(reduced_);
    mpq_clear(tmp);
    basis_[r] = c;
  }

  // After phase 1 every artificial sits at zero; pivot the basic ones out or
  // drop their (redundant) rows.
  void evict_artificials() {
    dropped_.assign(row_sign_.size(), false);
    for (std::size_t i = 0; i < a_.size();) {
      if (!is_artificial_[basis_[i]]) {
        ++i;
        continue;
      }
      std::size_t enter = columns_;
      for (std::size_t j = 0; j < columns_; ++j) {
        if (!is_artificial_[j] && a_[i][j] != 0) {
          enter = j;
          break;
        }
      }
      if (enter != columns_) {
        pivot(i, enter);
        ++i;
      } else {
        dropped_[original_row_[i]] = true;
        a_.erase(a_.begin() + static_cast<long>(i));
        basis_.erase(basis_.begin() + static_cast<long>(i));
        original_row_.erase(original_row_.begin() + static_cast<long>(i));
      }
    }
  }

  const Options& options_;
  std::size_t columns_ = 0;
  std::size_t rhs_ = 0;
  std::vector<std::size_t> plus_column_;
  std::vector<long> minus_column_;
  std::vector<int> row_sign_;
  std::vector<Relation> relation_;
  std::vector<std::size_t> identity_column_;
  std::vector<std::size_t> artificial_rows_;
  std::vector<bool> is_artificial_;
  std::vector<bool> dropped_;
  std::vector<std::vector<Rational>> a_;
  std::vector<std::size_t> basis_;
  std::vector<std::size_t> original_row_;
  std::vector<Rational> costs_;
  std::vector<Rational> reduced_;
  std::vector<std::size_t> nonzero_;
  std::size_t pivots_ = 0;
};

}  // namespace

Result solve(const LinearProgram& program, const Options& options) {
  Tableau tableau(program, options);
  return tableau.run(program);
}

}  // namespace signlab::lp
