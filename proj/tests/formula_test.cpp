#include "signlab/formula.hpp"

#include <map>
#include <set>

#include "gtest/gtest.h"

using namespace signlab;

namespace {

// Renames variables by first occurrence and negates each so its first
// occurrence is positive.
std::string canonical_text(const Formula& f) {
  std::map<int, std::pair<int, bool>> rename;  // old -> (new, flip)
  Formula out = f;
  std::vector<Formula> stack;
  for (const auto& node : f.nodes()) {
    if (node.kind == Formula::Node::Kind::kLeaf) {
      auto it = rename.find(node.variable);
      if (it == rename.end()) {
        it = rename.emplace(node.variable, std::pair{static_cast<int>(rename.size()) + 1, node.negated}).first;
      }
      stack.push_back(Formula::literal(it->second.first, node.negated != it->second.second));
    } else {
      auto right = stack.back();
      stack.pop_back();
      auto left = stack.back();
      stack.pop_back();
      stack.push_back(Formula::combine(node.kind == Formula::Node::Kind::kAnd ? Gate::kAnd : Gate::kOr, left, right));
    }
  }
  return stack.back().to_string();
}

Formula dual_formula(const Formula& f) {
  std::vector<Formula> stack;
  for (const auto& node : f.nodes()) {
    if (node.kind == Formula::Node::Kind::kLeaf) {
      stack.push_back(Formula::literal(node.variable, !node.negated));
    } else {
      auto right = stack.back();
      stack.pop_back();
      auto left = stack.back();
      stack.pop_back();
      stack.push_back(Formula::combine(node.kind == Formula::Node::Kind::kAnd ? Gate::kOr : Gate::kAnd, left, right));
    }
  }
  return stack.back();
}

}  // namespace

TEST(Parse, Conjunction) {
  const auto f = parse_formula("x1 & x2");
  EXPECT_EQ(f.size(), 2);
  EXPECT_EQ(f.nodes().back().kind, Formula::Node::Kind::kAnd);
  EXPECT_EQ(f, Formula::combine(Gate::kAnd, Formula::literal(1), Formula::literal(2)));
}

TEST(Parse, ParityFormula) {
  const auto f = parse_formula("(x1 & !x2) | (!x1 & x2)");
  EXPECT_EQ(f.size(), 4);
  EXPECT_EQ(to_function(f, 2), BoolFunction::parity(2));
}

TEST(Parse, Errors) {
  EXPECT_THROW(parse_formula("x1 &"), ParseError);
  EXPECT_THROW(parse_formula("x0"), ParseError);
  EXPECT_THROW(parse_formula("x1 | | x2"), ParseError);
  EXPECT_THROW(parse_formula("(x1 & x2"), ParseError);
  EXPECT_THROW(parse_formula("y1"), ParseError);
  EXPECT_THROW(parse_formula("x"), ParseError);
  EXPECT_THROW(parse_formula("!(x1)"), ParseError);
  EXPECT_THROW(parse_formula(""), ParseError);
  try {
    parse_formula("x1 & x2 )");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 8u);
  }
}

TEST(Parse, PrecedenceAndAssociativity) {
  // & binds tighter than |.
  const auto f = parse_formula("x1 | x2 & x3");
  EXPECT_EQ(f, Formula::combine(Gate::kOr, Formula::literal(1),
                                Formula::combine(Gate::kAnd, Formula::literal(2), Formula::literal(3))));
  // Chains associate to the left.
  const auto g = parse_formula("x1&x2&x3");
  EXPECT_EQ(g, Formula::combine(Gate::kAnd, Formula::combine(Gate::kAnd, Formula::literal(1), Formula::literal(2)),
                                Formula::literal(3)));
  EXPECT_EQ(parse_formula("  !x12  ").nodes().front().variable, 12);
}

TEST(Size, Examples) {
  EXPECT_EQ(parse_formula("!x3").size(), 1);
  EXPECT_EQ(build_minsky_papert(2).size(), 8);
  EXPECT_EQ(build_minsky_papert(1).size(), 1);
}

TEST(ToFunction, Examples) {
  EXPECT_EQ(to_function(parse_formula("x1 & x2"), 2)(0b11), -1);
  EXPECT_EQ(to_function(parse_formula("x1 | x2"), 2)(0b01), -1);
  EXPECT_EQ(to_function(parse_formula("x1 | x2"), 2)(0b00), 1);
  EXPECT_EQ(to_function(parse_formula("!x1"), 1)(0b1), 1);
  EXPECT_THROW(to_function(parse_formula("x3"), 2), Error);
}

TEST(ToFunction, WideArityMatchesDirectEvaluation) {
  const auto f = parse_formula("(x1 & x8) | (!x3 & x10)");
  const auto table = to_function(f, 10);
  for (InputMask x = 0; x < table.size(); ++x) {
    const bool x1 = x & 1, x3 = (x >> 2) & 1, x8 = (x >> 7) & 1, x10 = (x >> 9) & 1;
    EXPECT_EQ(table.is_true(x), (x1 && x8) || (!x3 && x10));
  }
  EXPECT_EQ(truth_bits(parse_formula("x1 & !x2"), 2), 0b0010u);
}

TEST(Builders, MinskyPapertShape) {
  const auto f = build_minsky_papert(2);
  EXPECT_EQ(f.max_variable(), 8);
  EXPECT_EQ(f.to_string(), "x1 & x2 & (x3 & x4) | x5 & x6 & (x7 & x8)");
  EXPECT_EQ(build_minsky_papert(1).to_string(), "x1");
  EXPECT_THROW(build_minsky_papert(3), Error);  // 27 variables
  const auto table = to_function(f, 8);
  for (InputMask x = 0; x < 256; ++x) {
    EXPECT_EQ(table.is_true(x), (x & 0xF) == 0xF || (x & 0xF0) == 0xF0);
  }
}

TEST(Builders, NearBalancedTrees) {
  std::vector<Formula> leaves;
  for (int i = 1; i <= 5; ++i) leaves.push_back(Formula::literal(i));
  const auto t = gate_tree(Gate::kOr, leaves);
  EXPECT_EQ(t.size(), 5);
  EXPECT_EQ(t.depth(), 3);
  EXPECT_EQ(to_function(t, 5), BoolFunction::disjunction(5));
}

TEST(Builders, BalancedAndOr) {
  EXPECT_EQ(build_balanced_and_or(0).to_string(), "x1");
  EXPECT_EQ(build_balanced_and_or(2).to_string(), "(x1 | x2) & (x3 | x4)");
  EXPECT_EQ(build_balanced_and_or(2).size(), 4);
  EXPECT_EQ(build_balanced_and_or(3).size(), 8);
  EXPECT_EQ(build_balanced_and_or(3).depth(), 3);
}

TEST(Enumerate, SmallCounts) {
  std::vector<std::string> seen;
  enumerate_formulas(1, 1, [&](const Formula& f) {
    seen.push_back(f.to_string());
    return true;
  });
  EXPECT_EQ(seen, (std::vector<std::string>{"x1", "!x1"}));

  int size_two = 0;
  enumerate_formulas(2, 1, [&](const Formula& f) {
    size_two += f.size() == 2;
    return true;
  });
  EXPECT_EQ(size_two, 8);

  size_two = 0;
  enumerate_formulas(2, 2, [&](const Formula& f) {
    size_two += f.size() == 2;
    return true;
  });
  EXPECT_EQ(size_two, 32);
}

TEST(Enumerate, CountsMatchClosedForm) {
  for (int vars = 1; vars <= 3; ++vars) {
    std::map<int, std::uint64_t> by_size;
    std::set<std::string> distinct;
    enumerate_formulas(4, vars, [&](const Formula& f) {
      ++by_size[f.size()];
      distinct.insert(f.to_string());
      return true;
    });
    std::uint64_t total = 0;
    for (int s = 1; s <= 4; ++s) {
      EXPECT_EQ(by_size[s], count_formulas(s, vars)) << "size " << s << " vars " << vars;
      total += by_size[s];
    }
    EXPECT_EQ(distinct.size(), total);
  }
  EXPECT_EQ(count_formulas(6, 6), 42ull * 32 * 2985984);
}

TEST(Enumerate, StopsEarly) {
  int calls = 0;
  enumerate_formulas(3, 3, [&](const Formula&) { return ++calls < 10; });
  EXPECT_EQ(calls, 10);
  EXPECT_THROW(enumerate_formulas(9, 1, [](const Formula&) { return true; }), Error);
}

TEST(Enumerate, CanonicalRepresentativesCoverEveryFormula) {
  std::set<std::string> canonical;
  std::map<int, std::uint64_t> by_size;
  enumerate_canonical_formulas(4, 3, [&](const Formula& f) {
    canonical.insert(f.to_string());
    ++by_size[f.size()];
    return true;
  });
  for (int s = 1; s <= 4; ++s) EXPECT_EQ(by_size[s], count_canonical_formulas(s, 3));
  std::set<std::string> reached;
  enumerate_formulas(4, 3, [&](const Formula& f) {
    const auto c = canonical_text(f);
    EXPECT_TRUE(canonical.count(c)) << f.to_string() << " -> " << c;
    reached.insert(c);
    return true;
  });
  EXPECT_EQ(reached, canonical);
  EXPECT_EQ(count_canonical_formulas(6, 6), 42ull * 32 * 1539);
}

TEST(Formula, PrintParseRoundTrip) {
  enumerate_formulas(4, 2, [&](const Formula& f) {
    const auto g = parse_formula(f.to_string());
    EXPECT_EQ(g, f) << f.to_string();
    EXPECT_EQ(g.size(), f.size());
    EXPECT_EQ(to_function(g, 2), to_function(f, 2));
    return true;
  });
}

TEST(Formula, DeMorganDualNegatesPointwise) {
  enumerate_canonical_formulas(5, 3, [&](const Formula& f) {
    EXPECT_EQ(to_function(dual_formula(f), 3), to_function(f, 3).negated()) << f.to_string();
    return true;
  });
}
