#include <chrono>
#include <filesystem>
#include <sstream>

#include "gtest/gtest.h"
#include "signlab/cli/commands.hpp"
#include "signlab/cli/reproduce.hpp"
#include "signlab/error.hpp"
#include "signlab/io.hpp"

using namespace signlab;
using namespace signlab::cli;

namespace {

class TempDir {
 public:
  TempDir() : path_(std::filesystem::temp_directory_path() / ("signlab_cli_" + std::to_string(::getpid()))) {
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  std::filesystem::path path_;
};

FunctionSource formula(std::string text) {
  FunctionSource s;
  s.formula = std::move(text);
  return s;
}

FunctionSource table(std::string path) {
  FunctionSource s;
  s.table = std::move(path);
  return s;
}

}  // namespace

TEST(Selectors, ExactlyOne) {
  EXPECT_THROW(load_function(FunctionSource{}), Error);
  FunctionSource both = formula("x1");
  both.table = "t.txt";
  EXPECT_THROW(load_function(both), Error);
}

TEST(Selectors, FormulaArityAndFiles) {
  EXPECT_EQ(load_function(formula("x2 | x1")), BoolFunction::disjunction(2));
  auto wide = formula("x1");
  wide.arity = 3;
  EXPECT_EQ(load_function(wide), BoolFunction::dictator(3, 1));

  TempDir dir;
  io::write_file(dir.file("f.txt"), "x1 & x2\n");
  FunctionSource file;
  file.formula_file = dir.file("f.txt");
  EXPECT_EQ(load_function(file), BoolFunction::conjunction(2));
  io::write_file(dir.file("t.txt"), "n:+--+\n");
  EXPECT_EQ(load_function(table(dir.file("t.txt"))), BoolFunction::parity(2));

  EXPECT_EQ(function_from_text("n:+---"), BoolFunction::disjunction(2));
  EXPECT_EQ(function_from_text(dir.file("t.txt")), BoolFunction::parity(2));
  EXPECT_EQ(function_from_text("x1 & x2"), BoolFunction::conjunction(2));
}

TEST(Survey, Histograms) {
  EXPECT_EQ(survey(1), (std::map<int, std::uint64_t>{{0, 2}, {1, 2}}));
  EXPECT_EQ(survey(2), (std::map<int, std::uint64_t>{{0, 2}, {1, 12}, {2, 2}}));
  EXPECT_EQ(survey(3), (std::map<int, std::uint64_t>{{0, 2}, {1, 102}, {2, 150}, {3, 2}}));
  EXPECT_THROW(survey(5), Error);
}

TEST(Commands, DegreeEmitsVerifiableWitness) {
  TempDir dir;
  GlobalOptions options;
  options.out = dir.file("w.txt");
  std::ostringstream out;
  EXPECT_EQ(cmd_degree(formula("(x1 & !x2) | (!x1 & x2)"), Alpha::infinity(), options, out), kExitOk);
  EXPECT_NE(out.str().find("sign degree: 2"), std::string::npos);
  io::write_file(dir.file("t.txt"), io::format_truth_table(BoolFunction::parity(2)));

  std::ostringstream verify_out;
  EXPECT_EQ(cmd_verify(table(dir.file("t.txt")), dir.file("w.txt"), std::nullopt, verify_out), kExitOk);

  // A witness for the wrong function fails.
  io::write_file(dir.file("and.txt"), io::format_truth_table(BoolFunction::conjunction(2)));
  EXPECT_EQ(cmd_verify(table(dir.file("and.txt")), dir.file("w.txt"), std::nullopt, verify_out), kExitCheckFailed);
}

TEST(Commands, WitnessRefusesFeasibleLevels) {
  std::ostringstream out;
  EXPECT_THROW(cmd_witness(formula("x1 | x2"), 2, Alpha::infinity(), GlobalOptions{}, out), Error);
  EXPECT_EQ(cmd_witness(formula("x1 | x2"), 1, Alpha::infinity(), GlobalOptions{}, out), kExitOk);
  EXPECT_EQ(out.str().substr(0, 27), "claimed_degree=1 alpha=inf\n");
  EXPECT_THROW(cmd_witness(formula("x1 | x2"), 3, Alpha::infinity(), GlobalOptions{}, out), Error);
}

TEST(Commands, ComposeReportsAndEmits) {
  TempDir dir;
  std::ostringstream out;
  EXPECT_EQ(cmd_compose("x1 | x2", "x1 & x2 & x3 & x4", Alpha::infinity(), dir.file("h.txt"), GlobalOptions{}, out),
            kExitOk);
  const auto text = out.str();
  EXPECT_NE(text.find("d_f    d_g  product  actual  slack  verified"), std::string::npos);
  EXPECT_NE(text.find("     1      1        1       2      1       yes"), std::string::npos);
  std::ostringstream verify_out;
  EXPECT_EQ(cmd_verify(table(dir.file("h.txt.table")), dir.file("h.txt"), std::nullopt, verify_out), kExitOk);

  std::ostringstream vacuous;
  EXPECT_EQ(cmd_compose("n:+--+", "n:++++", Alpha::infinity(), "", GlobalOptions{}, vacuous), kExitOk);
  EXPECT_NE(vacuous.str().find("n/a"), std::string::npos);
}

TEST(Commands, AdversaryRoundTrip) {
  TempDir dir;
  GlobalOptions options;
  options.out = dir.file("c.txt");
  std::ostringstream out;
  EXPECT_EQ(cmd_emit_star(4, false, options, out), kExitOk);
  options.out = dir.file("r.txt");
  EXPECT_EQ(cmd_adversary(formula("x1 | x2 | x3 | x4"), dir.file("c.txt"), options, out), kExitOk);
  EXPECT_NE(out.str().find("ratio (lower bound)      2.000000000000"), std::string::npos);
  const auto saved = io::read_file(dir.file("r.txt"));
  ASSERT_EQ(saved.substr(0, 6), "ratio=");
  EXPECT_NEAR(std::stod(saved.substr(6)), 2.0, 1e-9);
}

TEST(Timeout, CancelsLongComputations) {
  const auto f = BoolFunction::from_predicate(11, [](InputMask x) { return (x * 2654435761U) >> 31; });
  const auto start = std::chrono::steady_clock::now();
  try {
    with_timeout(1, [&](std::stop_token stop) { return sign_degree(f, stop); });
    FAIL() << "expected cancellation";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kCancelled);
  }
  EXPECT_LT(std::chrono::steady_clock::now() - start, std::chrono::seconds(10));
}

TEST(Reproduce, ChecksAreUniqueAndAnchored) {
  std::set<std::string> ids;
  std::set<int> criteria;
  for (const auto& c : reproduce_checks()) {
    EXPECT_TRUE(ids.insert(c.id).second) << c.id;
    EXPECT_FALSE(c.anchor.empty());
    EXPECT_EQ(c.anchor.find(' '), std::string::npos);
    if (c.criterion > 0) criteria.insert(c.criterion);
  }
  EXPECT_EQ(criteria, (std::set<int>{1, 2, 3, 4, 5, 6, 7, 8, 9}));
}

TEST(Reproduce, OnlyFiltersByGroup) {
  SuiteOptions options;
  options.only = "composition";
  const auto results = run_suite(options);
  ASSERT_FALSE(results.empty());
  for (const auto& r : results) {
    EXPECT_EQ(r.group, "composition");
    EXPECT_TRUE(r.pass) << r.id << " " << r.computed;
  }
  options.only = "nonsense";
  EXPECT_THROW(run_suite(options), Error);
}

TEST(Reproduce, MachineReportIsDeterministic) {
  SuiteOptions options;
  options.only = "parity";
  options.seed = 11;
  const auto a = format_machine_report(run_suite(options));
  const auto b = format_machine_report(run_suite(options));
  EXPECT_EQ(a, b);
  std::istringstream lines(a);
  std::string line;
  while (std::getline(lines, line)) {
    std::istringstream fields(line);
    std::vector<std::string> parts{std::istream_iterator<std::string>(fields), {}};
    EXPECT_EQ(parts.size(), 5U) << line;
    EXPECT_EQ(parts[1], "PASS");
  }
}

TEST(Reproduce, CorruptedWitnessFails) {
  SuiteOptions options;
  options.only = "witness";
  EXPECT_TRUE(run_suite(options).front().pass);
  options.corrupt_witness = true;
  const auto r = run_suite(options).front();
  EXPECT_FALSE(r.pass);
  EXPECT_EQ(r.computed, "verify=failed");
}

TEST(Reproduce, TimeoutIsAFailureNotAHang) {
  SuiteOptions options;
  options.only = "formulas";
  options.timeout_secs = 1;
  const auto start = std::chrono::steady_clock::now();
  const auto results = run_suite(options);
  ASSERT_EQ(results.size(), 1U);
  EXPECT_FALSE(results[0].pass);
  EXPECT_TRUE(results[0].timed_out);
  EXPECT_EQ(results[0].computed, "timeout");
  EXPECT_LT(std::chrono::steady_clock::now() - start, std::chrono::seconds(10));
}
