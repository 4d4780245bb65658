#include "signlab/boolfn.hpp"

#include <random>

#include "gtest/gtest.h"
#include "signlab/oracle/oracle.hpp"

using namespace signlab;

namespace {

BoolFunction random_function(int n, std::mt19937_64& rng) {
  return BoolFunction::from_predicate(n, [&](InputMask) { return (rng() & 1U) != 0; });
}

RationalTable random_table(int n, std::mt19937_64& rng) {
  RationalTable t(n);
  for (InputMask x = 0; x < t.size(); ++x) {
    t[x] = Rational(static_cast<long>(rng() % 41) - 20, static_cast<long>(rng() % 7) + 1);
  }
  return t;
}

RationalTable scaled_character(int n, SubsetMask t, Rational scale) {
  RationalTable p(n);
  for (InputMask x = 0; x < p.size(); ++x) p[x] = character(t, x) * scale;
  return p;
}

}  // namespace

TEST(BoolFunction, RejectsBadTables) {
  EXPECT_THROW(BoolFunction(2, {1, 1, 1}), Error);
  EXPECT_THROW(BoolFunction(1, {1, 0}), Error);
  EXPECT_THROW(BoolFunction(0, {1}), Error);
  EXPECT_THROW(BoolFunction(25, {}), Error);
}

TEST(BoolFunction, GateConventions) {
  const auto conj = BoolFunction::conjunction(2);
  EXPECT_EQ(conj(0b11), -1);
  EXPECT_EQ(conj(0b01), 1);
  const auto disj = BoolFunction::disjunction(2);
  EXPECT_EQ(disj(0b00), 1);
  EXPECT_EQ(disj(0b10), -1);
  EXPECT_EQ(BoolFunction::from_bits(3, BoolFunction::parity(3).true_bits()), BoolFunction::parity(3));
}

TEST(Character, Examples) {
  EXPECT_EQ(character(0, 0b11), 1);
  EXPECT_EQ(character(0b11, 0b11), 1);   // x = (-1,-1)
  EXPECT_EQ(character(0b11, 0b01), -1);  // x = (-1,+1)
}

TEST(Fourier, ParityIsTopCharacter) {
  const auto e = fourier_transform(BoolFunction::parity(2));
  for (SubsetMask t = 0; t < 4; ++t) EXPECT_EQ(e.coefficient(t), t == 3 ? 1 : 0);
}

TEST(Fourier, AndTwoMatchesOracle) {
  const auto f = BoolFunction::conjunction(2);
  const auto naive = oracle::naive_fourier(RationalTable(f));
  const auto e = fourier_transform(f);
  EXPECT_EQ(e.coefficients(), naive);
  EXPECT_EQ(e.coefficient(0b00), Rational(1, 2));
  EXPECT_EQ(e.coefficient(0b01), Rational(1, 2));
  EXPECT_EQ(e.coefficient(0b10), Rational(1, 2));
  EXPECT_EQ(e.coefficient(0b11), Rational(-1, 2));
}

TEST(Fourier, Constant) {
  const auto e = fourier_transform(BoolFunction::constant(3, 1));
  EXPECT_EQ(e.coefficient(0), 1);
  for (SubsetMask t = 1; t < 8; ++t) EXPECT_EQ(e.coefficient(t), 0);
}

TEST(Fourier, ButterflyAgreesWithNaiveTransform) {
  std::mt19937_64 rng(7);
  for (int n = 1; n <= 6; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      const auto t = random_table(n, rng);
      EXPECT_EQ(fourier_transform(t).coefficients(), oracle::naive_fourier(t));
    }
  }
}

TEST(Fourier, RoundTripOnRandomFunctions) {
  std::mt19937_64 rng(11);
  for (int n = 1; n <= 10; ++n) {
    const auto f = random_function(n, rng);
    EXPECT_EQ(inverse_fourier(fourier_transform(f)), RationalTable(f)) << "n=" << n;
  }
}

TEST(Fourier, ParsevalOnRandomTables) {
  std::mt19937_64 rng(13);
  for (int n = 1; n <= 7; ++n) {
    const auto t = random_table(n, rng);
    Rational lhs, rhs;
    const auto expansion = fourier_transform(t);
    for (const auto& c : expansion.coefficients()) lhs += c * c;
    for (const auto& v : t.entries()) rhs += v * v;
    rhs /= static_cast<long>(t.size());
    EXPECT_EQ(lhs, rhs);
  }
  const auto f = random_function(5, rng);
  Rational sum;
  const auto expansion = fourier_transform(f);
  for (const auto& c : expansion.coefficients()) sum += c * c;
  EXPECT_EQ(sum, 1);
}

TEST(Degree, Examples) {
  for (int n = 1; n <= 5; ++n) EXPECT_EQ(degree(BoolFunction::parity(n)), n);
  EXPECT_EQ(degree(BoolFunction::conjunction(2)), 2);
  EXPECT_EQ(degree(BoolFunction::constant(2, -1)), 0);
  EXPECT_EQ(degree(RationalTable(3)), std::nullopt);
}

TEST(PureHighDegree, Examples) {
  EXPECT_EQ(pure_high_degree(scaled_character(2, 0b11, Rational(1, 4))), 2);
  EXPECT_EQ(pure_high_degree(RationalTable(BoolFunction::conjunction(2))), 0);
  const RationalTable p(2, {Rational(1, 4), Rational(-1, 4), Rational(-1, 4), Rational(1, 4)});
  EXPECT_EQ(pure_high_degree(p), 2);
  try {
    pure_high_degree(RationalTable(2));
    FAIL() << "expected ZERO_FUNCTION";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kZeroFunction);
  }
}

TEST(Character, DegreeAndPureHighDegreeEqualWeight) {
  for (SubsetMask t = 0; t < 16; ++t) {
    const auto chi = scaled_character(4, t, Rational(1));
    EXPECT_EQ(degree(chi), std::popcount(t));
    EXPECT_EQ(pure_high_degree(chi), std::popcount(t));
  }
}

TEST(InnerProduct, Examples) {
  const auto chi = scaled_character(2, 0b11, Rational(1, 4));
  EXPECT_EQ(inner_product(chi, BoolFunction::parity(2)), 1);
  EXPECT_EQ(inner_product(chi, BoolFunction::constant(2, 1)), 0);
  const RationalTable conj(BoolFunction::conjunction(2));
  EXPECT_EQ(inner_product(conj, conj), 4);
  EXPECT_THROW(inner_product(RationalTable(2), RationalTable(3)), Error);
}

TEST(L1Norm, Examples) {
  EXPECT_EQ(l1_norm(scaled_character(2, 0b11, Rational(1, 4))), 1);
  EXPECT_EQ(l1_norm(RationalTable(2)), 0);
  const RationalTable t(2, {Rational(1, 2), Rational(-1, 4), Rational(1, 8), Rational(1, 8)});
  EXPECT_EQ(l1_norm(t), 1);
}

TEST(InnerProduct, BoundedByL1Mass) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 5);
    const auto f = random_function(n, rng);
    const auto p = random_table(n, rng);
    EXPECT_LE(abs(inner_product(p, f)), l1_norm(p));
  }
}

TEST(BoolFunction, InputNegationIsAnInvolution) {
  std::mt19937_64 rng(19);
  const auto f = random_function(4, rng);
  EXPECT_EQ(f.with_input_negated(3).with_input_negated(3), f);
  EXPECT_EQ(f.negated().negated(), f);
  EXPECT_THROW(f.with_input_negated(5), Error);
}
