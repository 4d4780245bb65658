#include "signlab/io.hpp"

#include <filesystem>
#include <random>

#include "gtest/gtest.h"
#include "signlab/error.hpp"

using namespace signlab;

TEST(TruthTable, Format) {
  EXPECT_EQ(io::format_truth_table(BoolFunction::conjunction(2)), "n:+++-\n");
  EXPECT_EQ(io::format_truth_table(BoolFunction::parity(2)), "n:+--+\n");
}

TEST(TruthTable, RoundTrip) {
  std::mt19937_64 rng(1);
  for (int n = 1; n <= 8; ++n) {
    const auto f = BoolFunction::from_predicate(n, [&](InputMask) { return (rng() & 1U) != 0; });
    EXPECT_EQ(io::parse_truth_table(io::format_truth_table(f)), f);
  }
}

TEST(TruthTable, AcceptsNumericArityAndComments) {
  EXPECT_EQ(io::parse_truth_table("# or\n2:+---\n"), BoolFunction::disjunction(2));
  EXPECT_THROW(io::parse_truth_table("3:+---"), Error);
  EXPECT_THROW(io::parse_truth_table("n:+--"), Error);
  EXPECT_THROW(io::parse_truth_table("+--+"), Error);
  EXPECT_THROW(io::parse_truth_table("n:+-\nn:+-"), Error);
  try {
    io::parse_truth_table("n:+x-+");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 3U);
  }
}

TEST(RationalTableFormat, RoundTripAndLayout) {
  RationalTable t(2, {Rational(1, 4), 0, Rational(-3, 8), 2});
  const auto text = io::format_rational_table(t);
  EXPECT_EQ(text, "n=2\n0 1/4\n2 -3/8\n3 2/1\n");
  EXPECT_EQ(io::parse_rational_table(text), t);
  EXPECT_EQ(io::parse_rational_table("n=2\n3 4\n"), RationalTable(2, {0, 0, 0, 4}));
}

TEST(RationalTableFormat, Errors) {
  EXPECT_THROW(io::parse_rational_table(""), Error);
  EXPECT_THROW(io::parse_rational_table("k=2\n"), Error);
  EXPECT_THROW(io::parse_rational_table("n=2\n4 1/2\n"), Error);
  EXPECT_THROW(io::parse_rational_table("n=2\n1 1/2\n1 1/3\n"), Error);
  EXPECT_THROW(io::parse_rational_table("n=2\n1 1/0\n"), Error);
  EXPECT_THROW(io::parse_rational_table("n=2\n1\n"), Error);
}

TEST(WitnessFormat, RoundTrip) {
  const auto f = BoolFunction::parity(3);
  const auto w = sign_degree(f).witness.value();
  const auto text = io::format_witness(w);
  EXPECT_EQ(text.substr(0, text.find('\n')), "claimed_degree=3 alpha=inf");
  const auto back = io::parse_witness(text, f);
  EXPECT_EQ(back.table, w.table);
  EXPECT_EQ(back.claimed_degree, 3);
  EXPECT_TRUE(back.alpha.is_infinite());
  EXPECT_EQ(back.correlation, w.correlation);

  const auto finite = approx_degree(BoolFunction::parity(2), Alpha::finite(Rational(5, 2))).witness.value();
  const auto ftext = io::format_witness(finite);
  EXPECT_EQ(ftext.substr(0, ftext.find('\n')), "claimed_degree=2 alpha=5/2");
  EXPECT_EQ(io::parse_witness(ftext, BoolFunction::parity(2)).alpha, Alpha::finite(Rational(5, 2)));
}

TEST(WitnessFormat, Errors) {
  const auto f = BoolFunction::parity(2);
  EXPECT_THROW(io::parse_witness("", f), Error);
  EXPECT_THROW(io::parse_witness("claimed_degree=2\nn=2\n", f), Error);
  EXPECT_THROW(io::parse_witness("claimed_degree=2 alpha=1/2\nn=2\n", f), Error);
  EXPECT_THROW(io::parse_witness("claimed_degree=2 alpha=inf\nn=3\n", f), Error);
}

TEST(CertificateFormat, RoundTripIsBitExact) {
  const auto c = random_certificate(3, 5);
  const auto text = io::format_certificate(c);
  EXPECT_EQ(text.substr(0, 4), "m=3\n");
  const auto back = io::parse_certificate(text);
  EXPECT_EQ(back.gamma().data(), c.gamma().data());
  EXPECT_EQ(io::format_certificate(build_or_certificate(2)), "m=2\n0 1 1\n0 2 1\n");
}

TEST(CertificateFormat, Errors) {
  EXPECT_THROW(io::parse_certificate("m=2\n1 0 1\n"), Error);
  EXPECT_THROW(io::parse_certificate("m=2\n0 4 1\n"), Error);
  EXPECT_THROW(io::parse_certificate("m=2\n0 1 one\n"), Error);
  EXPECT_THROW(io::parse_certificate("m=11\n"), Error);
}

TEST(Representation, Format) {
  SignRepresentation p{2, 1, {{0, 1}, {1, Rational(1, 2)}}};
  EXPECT_EQ(io::format_representation(p), "n=2 degree<=1\n0 1/1\n1 1/2\n");
}

TEST(Files, WriteThenRead) {
  const auto path = std::filesystem::temp_directory_path() / "signlab_io_test.txt";
  io::write_file(path, "n:+-\n");
  EXPECT_EQ(io::read_file(path), "n:+-\n");
  std::filesystem::remove(path);
  EXPECT_THROW(io::read_file(path), Error);
}
