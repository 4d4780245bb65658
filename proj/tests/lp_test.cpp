#include "signlab/lp.hpp"

#include "gtest/gtest.h"
#include "signlab/error.hpp"

using namespace signlab;
using namespace signlab::lp;

namespace {
std::vector<Rational> r(std::initializer_list<Rational> v) { return v; }
}  // namespace

TEST(Simplex, TwoVariableOptimumAndDuals) {
  LinearProgram p(2);
  p.set_objective(r({1, 1}));
  p.add_row(r({1, 2}), Relation::kLessEqual, 4);
  p.add_row(r({3, 1}), Relation::kLessEqual, 6);
  const auto res = solve(p);
  ASSERT_EQ(res.status, Status::kOptimal);
  EXPECT_EQ(res.objective, Rational(14, 5));
  EXPECT_EQ(res.values, r({Rational(8, 5), Rational(6, 5)}));
  EXPECT_EQ(res.duals, r({Rational(2, 5), Rational(1, 5)}));
}

TEST(Simplex, BealeCyclingExampleTerminates) {
  LinearProgram p(4);
  p.set_objective(r({Rational(3, 4), -20, Rational(1, 2), -6}));
  p.add_row(r({Rational(1, 4), -8, -1, 9}), Relation::kLessEqual, 0);
  p.add_row(r({Rational(1, 2), -12, Rational(-1, 2), 3}), Relation::kLessEqual, 0);
  p.add_row(r({0, 0, 1, 0}), Relation::kLessEqual, 1);
  const auto res = solve(p);
  ASSERT_EQ(res.status, Status::kOptimal);
  EXPECT_EQ(res.objective, Rational(5, 4));
}

TEST(Simplex, Infeasible) {
  LinearProgram p(1);
  p.add_row(r({1}), Relation::kGreaterEqual, 2);
  p.add_row(r({1}), Relation::kLessEqual, 1);
  EXPECT_EQ(solve(p).status, Status::kInfeasible);
}

TEST(Simplex, Unbounded) {
  LinearProgram p(1);
  p.set_objective(r({1}));
  p.add_row(r({1}), Relation::kGreaterEqual, 1);
  EXPECT_EQ(solve(p).status, Status::kUnbounded);
}

TEST(Simplex, FreeVariablesAndNegativeRightHandSide) {
  LinearProgram p(2);
  p.set_bound(0, Bound::kFree);
  p.set_bound(1, Bound::kFree);
  p.set_objective(r({1, 0}));
  p.add_row(r({1, 1}), Relation::kEqual, 3);
  p.add_row(r({0, -1}), Relation::kLessEqual, -1);  // y >= 1
  const auto res = solve(p);
  ASSERT_EQ(res.status, Status::kOptimal);
  EXPECT_EQ(res.values, r({2, 1}));
  // Duals: y1 * (1,1) + y2 * (0,-1) = (1,0) -> y1 = 1, y2 = 1.
  EXPECT_EQ(res.duals, r({1, 1}));

  LinearProgram q(1);
  q.set_bound(0, Bound::kFree);
  q.set_objective(r({1}));
  q.add_row(r({1}), Relation::kLessEqual, -1);
  EXPECT_EQ(solve(q).values, r({-1}));
}

TEST(Simplex, RedundantEqualityRowsAreDropped) {
  LinearProgram p(2);
  p.set_objective(r({1, 2}));
  p.add_row(r({1, 1}), Relation::kEqual, 2);
  p.add_row(r({2, 2}), Relation::kEqual, 4);
  const auto res = solve(p);
  ASSERT_EQ(res.status, Status::kOptimal);
  EXPECT_EQ(res.objective, 4);
  // Strong duality with the recorded multipliers.
  EXPECT_EQ(2 * res.duals[0] + 4 * res.duals[1], res.objective);
}

TEST(Simplex, StrongDualityOnRandomBoundedPrograms) {
  std::uint64_t state = 12345;
  const auto next = [&] {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<long>((state >> 33) % 11) - 5;
  };
  for (int trial = 0; trial < 40; ++trial) {
    LinearProgram p(4);
    std::vector<Rational> obj;
    for (int j = 0; j < 4; ++j) obj.emplace_back(next());
    p.set_objective(obj);
    for (int i = 0; i < 5; ++i) {
      std::vector<Rational> row;
      for (int j = 0; j < 4; ++j) row.emplace_back(next());
      p.add_row(row, i % 2 ? Relation::kLessEqual : Relation::kGreaterEqual, Rational(next()));
    }
    p.add_row(r({1, 1, 1, 1}), Relation::kLessEqual, 10);
    const auto res = solve(p);
    if (res.status != Status::kOptimal) continue;
    Rational dual_objective;
    for (std::size_t i = 0; i < p.rows(); ++i) dual_objective += res.duals[i] * p.row_list()[i].rhs;
    EXPECT_EQ(dual_objective, res.objective) << "trial " << trial;
    for (std::size_t i = 0; i < p.rows(); ++i) {
      const auto& row = p.row_list()[i];
      Rational lhs;
      for (int j = 0; j < 4; ++j) lhs += row.coefficients[j] * res.values[j];
      if (row.relation == Relation::kLessEqual) EXPECT_LE(lhs, row.rhs);
      else EXPECT_GE(lhs, row.rhs);
    }
  }
}

TEST(Simplex, HonoursCancellation) {
  std::stop_source source;
  source.request_stop();
  LinearProgram p(2);
  p.set_objective(r({1, 1}));
  p.add_row(r({1, 2}), Relation::kLessEqual, 4);
  Options options;
  options.stop = source.get_token();
  try {
    solve(p, options);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kCancelled);
  }
}
