#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <stop_token>
#include <string>

#include "signlab/boolfn.hpp"
#include "signlab/degree.hpp"

namespace signlab::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

struct GlobalOptions {
  std::uint64_t seed = 0;
  int timeout_secs = 300;
  std::string out;  // empty: no file
};

/// Exactly one of formula, formula_file, table must be set.
struct FunctionSource {
  std::optional<std::string> formula;
  std::optional<std::string> formula_file;
  std::optional<std::string> table;  // path to a truth-table file
  std::optional<int> arity;          // widens a formula beyond its largest variable
};

BoolFunction load_function(const FunctionSource& source);

/// Inline truth table (`n:+--+`), path to a truth-table file, or formula text.
BoolFunction function_from_text(const std::string& text);

/// Runs body(stop) on the calling thread; a watchdog requests stop after
/// `seconds`. Code under body must poll the token.
template <typename Body>
decltype(auto) with_timeout(int seconds, Body&& body);

int cmd_degree(const FunctionSource& source, const Alpha& alpha, const GlobalOptions& options, std::ostream& out);
int cmd_witness(const FunctionSource& source, int claimed_degree, const Alpha& alpha, const GlobalOptions& options,
                std::ostream& out);
int cmd_verify(const FunctionSource& source, const std::string& witness_path, const std::optional<Alpha>& alpha,
               std::ostream& out);
int cmd_compose(const std::string& outer, const std::string& inner, const Alpha& alpha,
                const std::string& emit_witness, const GlobalOptions& options, std::ostream& out);
int cmd_adversary(const FunctionSource& source, const std::string& certificate_path, const GlobalOptions& options,
                  std::ostream& out);
int cmd_emit_star(int k, bool and_variant, const GlobalOptions& options, std::ostream& out);

/// Sign-degree histogram over all functions of `nvars` <= 4 variables.
/// Functions are grouped into classes closed under input permutation, input
/// negation and output negation, all of which preserve sign degree.
std::map<int, std::uint64_t> survey(int nvars, std::stop_token stop = {});
int cmd_survey(int nvars, const GlobalOptions& options, std::ostream& out);

}  // namespace signlab::cli

#include "signlab/cli/timeout.ipp"
