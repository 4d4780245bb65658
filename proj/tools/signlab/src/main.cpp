#include <iostream>

#include "CLI11.hpp"
#include "signlab/cli/commands.hpp"
#include "signlab/cli/reproduce.hpp"
#include "signlab/error.hpp"
#include "signlab/io.hpp"

using namespace signlab;
using namespace signlab::cli;

namespace {

void add_selectors(CLI::App* cmd, FunctionSource& source) {
  cmd->add_option("--formula", source.formula, "formula text, e.g. \"x1 & (!x2 | x3)\"");
  cmd->add_option("--formula-file", source.formula_file, "file holding one formula");
  cmd->add_option("--table", source.table, "truth-table file (n:<+/-...>)");
  cmd->add_option("--arity", source.arity, "evaluate a formula on this many variables");
}

Alpha parse_alpha(const std::string& text) { return Alpha::parse(text); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact sign degree, dual witnesses, composition and adversary certificates"};
  app.require_subcommand(1);
  GlobalOptions global;
  app.add_option("--seed", global.seed, "seed for every random choice")->capture_default_str();
  app.add_option("--timeout-secs", global.timeout_secs, "per-computation time cap")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_option("--out", global.out, "write the machine-readable result to this path");

  FunctionSource source;
  std::string alpha_text = "inf";
  int claimed_degree = 0;
  std::string witness_path, certificate_path, emit_witness, outer, inner;
  std::optional<std::string> verify_alpha;
  std::optional<int> star_or, star_and;
  int nvars = 0;
  SuiteOptions suite;
  std::optional<std::string> only;

  auto* signdeg = app.add_subcommand("signdeg", "sign degree with both certificates");
  add_selectors(signdeg, source);

  auto* degree = app.add_subcommand("degree", "alpha-approximate degree with both certificates");
  add_selectors(degree, source);
  degree->add_option("--alpha", alpha_text, "rational >= 1 or inf")->capture_default_str();

  auto* witness = app.add_subcommand("witness", "dual witness proving degree >= d");
  add_selectors(witness, source);
  witness->add_option("--degree", claimed_degree, "claimed degree d of the witness")->required();
  witness->add_option("--alpha", alpha_text, "rational >= 1 or inf")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "check a witness file; exit 0 iff it verifies");
  add_selectors(verify, source);
  verify->add_option("--witness", witness_path, "witness file")->required();
  verify->add_option("--alpha", verify_alpha, "override the alpha in the witness header");

  auto* compose = app.add_subcommand("compose", "check deg(f o g^n) >= deg(f) deg(g) with a composed witness");
  compose->add_option("--outer", outer, "formula, inline table or table file")->required();
  compose->add_option("--inner", inner, "formula, inline table or table file")->required();
  compose->add_option("--alpha", alpha_text, "rational >= 1 or inf")->capture_default_str();
  compose->add_option("--emit-witness", emit_witness, "write the composed witness here");

  auto* adversary = app.add_subcommand("adversary", "evaluate an adversary certificate or emit a star certificate");
  add_selectors(adversary, source);
  adversary->add_option("--certificate", certificate_path, "certificate file");
  auto* or_opt = adversary->add_option("--or-certificate", star_or, "emit the OR_k star certificate");
  auto* and_opt = adversary->add_option("--and-certificate", star_and, "emit the AND_k star certificate");
  or_opt->excludes(and_opt);

  auto* survey_cmd = app.add_subcommand("survey", "sign-degree histogram over all functions");
  survey_cmd->add_option("--nvars", nvars, "number of variables, at most 4")->required();

  auto* reproduce = app.add_subcommand("reproduce", "run the reproduction suite");
  reproduce->add_option("--only", only, "run one group")->check(CLI::IsMember(reproduce_groups()));
  reproduce->add_flag("--corrupt-witness", suite.corrupt_witness, "negative control: corrupt the witness file");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (signdeg->parsed()) return cmd_degree(source, Alpha::infinity(), global, std::cout);
    if (degree->parsed()) return cmd_degree(source, parse_alpha(alpha_text), global, std::cout);
    if (witness->parsed()) return cmd_witness(source, claimed_degree, parse_alpha(alpha_text), global, std::cout);
    if (verify->parsed()) {
      std::optional<Alpha> a;
      if (verify_alpha) a = parse_alpha(*verify_alpha);
      return cmd_verify(source, witness_path, a, std::cout);
    }
    if (compose->parsed()) {
      return cmd_compose(outer, inner, parse_alpha(alpha_text), emit_witness, global, std::cout);
    }
    if (adversary->parsed()) {
      if (star_or) return cmd_emit_star(*star_or, false, global, std::cout);
      if (star_and) return cmd_emit_star(*star_and, true, global, std::cout);
      if (certificate_path.empty()) {
        std::cerr << "adversary: give --certificate, --or-certificate or --and-certificate\n";
        return kExitUsage;
      }
      return cmd_adversary(source, certificate_path, global, std::cout);
    }
    if (survey_cmd->parsed()) return cmd_survey(nvars, global, std::cout);
    if (reproduce->parsed()) {
      suite.seed = global.seed;
      suite.timeout_secs = global.timeout_secs;
      suite.only = only;
      const auto results = run_suite(suite, &std::cerr);
      std::cout << format_human_report(results);
      if (!global.out.empty()) io::write_file(global.out, format_machine_report(results));
      for (const auto& r : results) {
        if (!r.pass) return kExitCheckFailed;
      }
      return kExitOk;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::kNotALowerBound:
      case ErrorCode::kInvalidWitness:
      case ErrorCode::kCancelled:
        return kExitCheckFailed;
      default:
        return kExitUsage;
    }
  }
  return kExitUsage;
}
