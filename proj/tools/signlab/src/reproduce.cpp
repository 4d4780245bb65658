#include "signlab/cli/reproduce.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <random>
#include <sstream>
#include <unordered_map>

#include "signlab/adversary.hpp"
#include "signlab/cli/commands.hpp"
#include "signlab/composition.hpp"
#include "signlab/degree.hpp"
#include "signlab/error.hpp"
#include "signlab/formula.hpp"
#include "signlab/io.hpp"
#include "signlab/oracle/oracle.hpp"

namespace signlab::cli {
namespace {

const Alpha kInf = Alpha::infinity();

const char* source_name(Source s) {
  switch (s) {
    case Source::kStated: return "stated";
    case Source::kComputed: return "computed";
    case Source::kElementary: return "elementary";
  }
  return "?";
}

void poll(const std::stop_token& stop) {
  if (stop.stop_requested()) throw Error(ErrorCode::kCancelled, "check cancelled");
}

std::string ok(bool b) { return b ? "ok" : "bad"; }

bool certificates_hold(const BoolFunction& f, const DegreeResult& r, const Alpha& alpha) {
  const std::optional<Rational> cap = alpha.is_infinite() ? std::nullopt : std::optional<Rational>(alpha.value());
  if (!oracle::check_representation(f, r.representation.coefficients, r.degree, cap)) return false;
  if (r.degree == 0) return !r.witness.has_value();
  if (!r.witness || r.witness->claimed_degree != r.degree) return false;
  const Rational threshold = correlation_threshold(alpha);
  if (!oracle::check_witness(f, r.witness->table, r.degree, threshold)) return false;
  if (alpha.is_infinite()) return true;
  // A finite-alpha lower bound needs the correlation strictly above the threshold.
  Rational correlation;
  for (InputMask x = 0; x < f.size(); ++x) correlation += f(x) * r.witness->table[x];
  return correlation > threshold;
}

Check degree_check(std::string id, std::string group, int criterion, std::string anchor, BoolFunction f,
                   int expected) {
  return Check{std::move(id), std::move(group), criterion, std::move(anchor), Source::kStated,
               [f = std::move(f), expected](const CheckContext& ctx) {
                 const auto r = sign_degree(f, ctx.stop);
                 const bool certs = certificates_hold(f, r, kInf);
                 return CheckOutcome{r.degree == expected && certs,
                                     "deg=" + std::to_string(r.degree) + ";certs=" + ok(certs),
                                     "deg=" + std::to_string(expected), ""};
               }};
}

CheckOutcome parity_formula(const CheckContext& ctx) {
  const auto formula = parse_formula("(x1 & !x2) | (!x1 & x2)");
  const auto f = to_function(formula, 2);
  const auto r = sign_degree(f, ctx.stop);
  const int root = static_cast<int>(std::sqrt(static_cast<double>(formula.size())));
  const bool certs = certificates_hold(f, r, kInf);
  return {r.degree == 2 && root == 2 && f == BoolFunction::parity(2) && certs,
          "size=" + std::to_string(formula.size()) + ";deg=" + std::to_string(r.degree) + ";certs=" + ok(certs),
          "size=4;deg=2", ""};
}

CheckOutcome minsky_papert(const CheckContext& ctx) {
  const auto composed = compose_functions(BoolFunction::disjunction(2), BoolFunction::conjunction(4)).table;
  const auto f = to_function(build_minsky_papert(2), 8);
  const bool same = composed == f;
  const auto at1 = is_degree_at_most(f, 1, kInf, ctx.stop);
  bool witness_ok = false;
  if (!at1.feasible) {
    const auto w = extract_dual_witness(f, 1, kInf, ctx.stop);
    witness_ok = oracle::check_witness(f, w.table, 2, 1);
  }
  const auto at2 = is_degree_at_most(f, 2, kInf, ctx.stop);
  const bool rep_ok =
      at2.feasible && oracle::check_representation(f, at2.representation->coefficients, 2, std::nullopt);
  const bool pass = same && !at1.feasible && witness_ok && rep_ok;
  return {pass,
          std::string("d1=") + (at1.feasible ? "feasible" : "infeasible") + ";witness=" + ok(witness_ok) +
              ";d2=" + (at2.feasible ? "feasible" : "infeasible") + ";rep=" + ok(rep_ok) + ";table=" + ok(same),
          "d1=infeasible;d2=feasible;deg=2", ""};
}

CheckOutcome all_pairs(const CheckContext& ctx) {
  int holds = 0, applicable = 0, certified = 0;
  for (std::uint64_t fb = 0; fb < 16; ++fb) {
    for (std::uint64_t gb = 0; gb < 16; ++gb) {
      const auto f = BoolFunction::from_bits(2, fb);
      const auto g = BoolFunction::from_bits(2, gb);
      const auto r = check_supermultiplicativity(f, g, kInf, ctx.stop);
      holds += r.holds;
      if (!r.certificate_applicable) continue;
      ++applicable;
      const auto composed = compose_functions(f, g).table;
      const bool independent = oracle::check_witness(composed, r.composed_witness->table, r.product, 1);
      certified += r.certificate_verified && independent && r.composed_l1 == 1 &&
                   r.composed_correlation == r.outer_correlation;
    }
  }
  return {holds == 256 && certified == applicable && applicable == 224,
          "holds=" + std::to_string(holds) + "/256;certified=" + std::to_string(certified) + "/" +
              std::to_string(applicable),
          "holds=256/256;certified=224/224", "pairs with deg(g) >= 1: 16 x 14"};
}

CheckOutcome finite_alpha_parity(const CheckContext& ctx) {
  const Alpha two = Alpha::finite(2);
  const auto g = BoolFunction::parity(2);
  const auto p = extract_dual_witness(g, 1, two, ctx.stop);
  const auto q = extract_dual_witness(g, 1, kInf, ctx.stop);
  const auto h = compose_witnesses(g, g, p, q, two);
  const auto target = BoolFunction::parity(4);
  const bool certifies = verify_dual_witness(target, h, two).certifies_lower_bound &&
                         oracle::check_witness(target, h.table, 4, Rational(1, 3)) && h.correlation > Rational(1, 3);
  const auto lp = approx_degree(target, two, ctx.stop);
  return {certifies && h.claimed_degree == 4 && lp.degree == 4,
          "threshold=" + format_rational(correlation_threshold(two)) + ";h_claimed=" +
              std::to_string(h.claimed_degree) + ";h=" + ok(certifies) + ";lp_deg=" + std::to_string(lp.degree),
          "threshold=1/3;h_claimed=4;lp_deg=4", ""};
}

CheckOutcome iterated(const CheckContext& ctx) {
  int holds = 0;
  for (std::uint64_t bits = 0; bits < 16; ++bits) {
    const auto f = BoolFunction::from_bits(2, bits);
    const int d = sign_degree(f, ctx.stop).degree;
    holds += sign_degree(iterate_compose(f, 2).table, ctx.stop).degree >= d * d;
  }
  return {holds == 16, "holds=" + std::to_string(holds) + "/16", "holds=16/16", ""};
}

// Sign degree is invariant under renaming and negating variables, so one
// canonical formula per class suffices (the covering claim is unit-tested).
// Each distinct truth table is then checked once, at its smallest size.
CheckOutcome formula_sweep(const CheckContext& ctx) {
  constexpr int kSize = 6, kVars = 6;
  std::unordered_map<std::uint64_t, int> smallest;
  std::uint64_t canonical = 0;
  bool cancelled = false;
  enumerate_canonical_formulas(kSize, kVars, [&](const Formula& formula) {
    if ((++canonical & 0xFFFF) == 0 && ctx.stop.stop_requested()) {
      cancelled = true;
      return false;
    }
    const auto bits = truth_bits(formula, kVars);
    const int s = static_cast<int>(formula.size());
    auto [it, inserted] = smallest.emplace(bits, s);
    if (!inserted && s < it->second) it->second = s;
    return true;
  });
  if (cancelled) poll(ctx.stop);
  std::uint64_t all = 0;
  for (int s = 1; s <= kSize; ++s) all += count_formulas(s, kVars);

  int violations = 0;
  for (const auto& [bits, s] : smallest) {
    const int bound = static_cast<int>(std::sqrt(static_cast<double>(s)));
    if (!is_degree_at_most(BoolFunction::from_bits(kVars, bits), bound, kInf, ctx.stop).feasible) ++violations;
  }
  return {violations == 0 && canonical > 0,
          "formulas=" + std::to_string(all) + ";canonical=" + std::to_string(canonical) +
              ";tables=" + std::to_string(smallest.size()) + ";violations=" + std::to_string(violations),
          "violations=0", ""};
}

CheckOutcome star_certificates(bool and_variant, const CheckContext& ctx) {
  SpectralOptions spectral;
  spectral.seed = ctx.seed;
  double worst = 0;
  for (int k = 1; k <= 8; ++k) {
    poll(ctx.stop);
    const auto f = and_variant ? BoolFunction::conjunction(k) : BoolFunction::disjunction(k);
    const auto c = and_variant ? build_and_certificate(k) : build_or_certificate(k);
    worst = std::max(worst, std::abs(adv_ratio(f, c, spectral).ratio - std::sqrt(static_cast<double>(k))));
  }
  char computed[64];
  std::snprintf(computed, sizeof computed, "max_err=%.1e", worst);
  return {worst <= 1e-6, computed, "ratio=sqrt(k),k=1..8;tol=1e-6", ""};
}

CheckOutcome spectral_forms(const CheckContext& ctx) {
  SpectralOptions spectral;
  spectral.seed = ctx.seed;
  double worst = 0;
  const auto track = [&](const DenseMatrix& a, double expected) {
    worst = std::max(worst, std::abs(spectral_norm(a, spectral) - expected) / std::max(1.0, expected));
  };
  DenseMatrix id(2);
  id(0, 0) = id(1, 1) = 1;
  track(id, 1);
  for (std::size_t k = 1; k <= 16; ++k) {
    poll(ctx.stop);
    track(DenseMatrix(k, std::vector<double>(k * k, 1.0)), static_cast<double>(k));
    DenseMatrix star(k + 1);
    for (std::size_t i = 1; i <= k; ++i) star.set_symmetric(0, i, 1.0);
    track(star, std::sqrt(static_cast<double>(k)));
  }
  std::mt19937_64 rng(ctx.seed);
  std::uniform_real_distribution<double> dist(-5, 5);
  for (int trial = 0; trial < 100; ++trial) {
    const double a = dist(rng), b = dist(rng), c = dist(rng);
    const double mid = (a + c) / 2, rad = std::sqrt((a - c) * (a - c) / 4 + b * b);
    track(DenseMatrix(2, {a, b, b, c}), std::max(std::abs(mid + rad), std::abs(mid - rad)));
  }
  char computed[64];
  std::snprintf(computed, sizeof computed, "max_rel_err=%.1e", worst);
  return {worst <= 1e-7, computed, "identity,all-ones,star,2x2;tol=1e-7", ""};
}

CheckOutcome soundness(const CheckContext& ctx) {
  std::mt19937_64 rng(ctx.seed ^ 0x5EED5EEDULL);
  int cert_failures = 0, mismatches = 0, instances = 0;
  for (int i = 0; i < 500; ++i) {
    const int n = 1 + static_cast<int>(rng() % 3);
    const std::uint64_t bits = rng() & ((std::uint64_t{1} << (1U << n)) - 1);
    const auto f = BoolFunction::from_bits(n, bits);
    for (const auto& a : {kInf, Alpha::finite(2)}) {
      if (!certificates_hold(f, approx_degree(f, a, ctx.stop), a)) ++cert_failures;
    }
    for (int d = 0; d <= std::min(n, 2); ++d) {
      poll(ctx.stop);
      const bool lp = is_degree_at_most(f, d, kInf, ctx.stop).feasible;
      const bool brute = oracle::brute_force_sign_representation(f, d).has_value();
      mismatches += lp != brute;
      ++instances;
    }
  }
  return {cert_failures == 0 && mismatches == 0,
          "functions=500;cert_failures=" + std::to_string(cert_failures) + ";oracle_mismatches=" +
              std::to_string(mismatches) + "/" + std::to_string(instances),
          "cert_failures=0;oracle_mismatches=0", ""};
}

CheckOutcome witness_file(const CheckContext& ctx) {
  const auto f = BoolFunction::parity(3);
  const auto w = sign_degree(f, ctx.stop).witness.value();
  auto text = io::format_witness(w);
  if (ctx.corrupt_witness) {
    // Negative control: flip the sign of the first entry.
    const auto line = text.find("\nn=");
    const auto entry = text.find('\n', line + 1) + 1;
    const auto value = text.find(' ', entry) + 1;
    text.insert(value, "-");
    if (text.compare(value, 2, "--") == 0) text.erase(value, 2);
  }
  const auto report = verify_dual_witness(f, io::parse_witness(text, f), kInf);
  return {report.ok && report.certifies_lower_bound, report.ok ? "verify=ok" : "verify=failed",
          "verify=ok", report.ok ? "" : report.summary()};
}

std::string histogram_text(const std::map<int, std::uint64_t>& h) {
  std::string out;
  for (const auto& [d, n] : h) out += (out.empty() ? "" : ",") + std::to_string(d) + ":" + std::to_string(n);
  return out;
}

Check survey_check(int nvars, std::string expected) {
  return Check{"survey.n" + std::to_string(nvars), "survey", 0, "artifact:survey", Source::kComputed,
               [nvars, expected = std::move(expected)](const CheckContext& ctx) {
                 const auto h = histogram_text(survey(nvars, ctx.stop));
                 return CheckOutcome{h == expected, h, expected, ""};
               }};
}

CheckOutcome composition_examples(const CheckContext& ctx) {
  const auto or_and = check_supermultiplicativity(BoolFunction::disjunction(2), BoolFunction::conjunction(2), kInf,
                                                  ctx.stop);
  const auto xx = check_supermultiplicativity(BoolFunction::parity(2), BoolFunction::parity(2), kInf, ctx.stop);
  const auto mp = check_supermultiplicativity(BoolFunction::disjunction(2), BoolFunction::conjunction(4), kInf,
                                              ctx.stop);
  const auto row = [](const SupermultiplicativityReport& r) {
    return std::to_string(r.product) + "<=" + std::to_string(r.actual);
  };
  const bool pass = or_and.product == 1 && or_and.actual == 2 && xx.product == 4 && xx.actual == 4 && mp.product == 1 &&
                    mp.actual == 2 && or_and.certificate_verified && xx.certificate_verified &&
                    mp.certificate_verified;
  return {pass, "or-and=" + row(or_and) + ";xor-xor=" + row(xx) + ";minsky-papert=" + row(mp),
          "or-and=1<=2;xor-xor=4<=4;minsky-papert=1<=2", "or-and and minsky-papert show slack"};
}

CheckOutcome parity_sandwich(const CheckContext& ctx) {
  SpectralOptions spectral;
  spectral.seed = ctx.seed;
  DenseMatrix g(4);
  for (InputMask x = 0; x < 4; ++x) {
    for (InputMask y = 0; y < 4; ++y) g(x, y) = (std::popcount(x) + std::popcount(y)) % 2 ? 1.0 : 0.0;
  }
  const double lower = adv_ratio(BoolFunction::parity(2), AdversaryCertificate(2, g), spectral).ratio;
  const double upper = formula_adv_upper_bound(parse_formula("(x1 & !x2) | (!x1 & x2)"));
  char computed[64];
  std::snprintf(computed, sizeof computed, "lower=%.9f;upper=%.9f", lower, upper);
  return {std::abs(lower - 2) <= 1e-6 && upper == 2, computed, "lower=2;upper=2", ""};
}

std::vector<Check> build_checks() {
  std::vector<Check> checks;
  const std::string gates = "claim:or-and-sign-degree-one";
  for (int k = 2; k <= 4; ++k) {
    checks.push_back(degree_check("gates.and" + std::to_string(k), "gates", 1, gates, BoolFunction::conjunction(k), 1));
    checks.push_back(degree_check("gates.or" + std::to_string(k), "gates", 1, gates, BoolFunction::disjunction(k), 1));
  }
  const std::string parity = "claim:parity-formula-sign-degree-sqrt-size";
  checks.push_back({"parity.formula-size4", "parity", 2, parity, Source::kStated, parity_formula});
  for (int k = 1; k <= 4; ++k) {
    checks.push_back(degree_check("parity.xor" + std::to_string(k), "parity", 2, parity, BoolFunction::parity(k), k));
  }
  checks.push_back({"minsky-papert.n2", "minsky-papert", 3, "claim:minsky-papert-sign-degree-n", Source::kStated,
                    minsky_papert});
  checks.push_back({"composition.all-pairs", "composition", 4, "claim:composition-lemma", Source::kStated, all_pairs});
  checks.push_back({"composition.alpha2-xor", "composition", 5, "claim:composition-lemma+witness-threshold",
                    Source::kStated, finite_alpha_parity});
  checks.push_back({"composition.iterate-k2", "composition", 6, "claim:iterated-composition-chain", Source::kStated,
                    iterated});
  checks.push_back({"composition.examples", "composition", 0, "claim:composition-lemma-not-tight", Source::kComputed,
                    composition_examples});
  checks.push_back({"formulas.size6-vars6", "formulas", 7, "claim:formula-size-sign-degree-bound", Source::kStated,
                    formula_sweep});
  checks.push_back({"adversary.or-star", "adversary", 8, "claim:adversary-and-or-sqrt-n", Source::kStated,
                    [](const CheckContext& c) { return star_certificates(false, c); }});
  checks.push_back({"adversary.and-star", "adversary", 8, "claim:adversary-and-or-sqrt-n", Source::kStated,
                    [](const CheckContext& c) { return star_certificates(true, c); }});
  checks.push_back({"adversary.spectral-forms", "adversary", 8, "claim:spectral-norm-definition",
                    Source::kElementary, spectral_forms});
  checks.push_back({"adversary.parity-sandwich", "adversary", 0, "claim:formula-size-adversary-bound",
                    Source::kStated, parity_sandwich});
  checks.push_back({"soundness.random500", "soundness", 9, "claim:dual-witness-conditions", Source::kComputed,
                    soundness});
  checks.push_back({"witness.file-roundtrip", "witness", 0, "claim:dual-witness-conditions", Source::kElementary,
                    witness_file});
  checks.push_back(survey_check(1, "0:2,1:2"));
  checks.push_back(survey_check(2, "0:2,1:12,2:2"));
  checks.push_back(survey_check(3, "0:2,1:102,2:150,3:2"));
  checks.push_back(survey_check(4, "0:2,1:1880,2:55692,3:7960,4:2"));
  return checks;
}

std::string sanitize(std::string s) {
  for (auto& c : s) {
    if (c == ' ' || c == '\t' || c == '\n') c = '_';
  }
  return s.empty() ? "-" : s;
}

}  // namespace

const std::vector<Check>& reproduce_checks() {
  static const std::vector<Check> checks = build_checks();
  return checks;
}

std::vector<std::string> reproduce_groups() {
  std::vector<std::string> groups;
  for (const auto& c : reproduce_checks()) {
    if (std::find(groups.begin(), groups.end(), c.group) == groups.end()) groups.push_back(c.group);
  }
  return groups;
}

std::vector<CheckResult> run_suite(const SuiteOptions& options, std::ostream* progress) {
  if (options.only) {
    const auto groups = reproduce_groups();
    if (std::find(groups.begin(), groups.end(), *options.only) == groups.end()) {
      throw Error(ErrorCode::kInvalidArgument, "unknown group '" + *options.only + "'");
    }
  }
  std::vector<CheckResult> results;
  for (const auto& check : reproduce_checks()) {
    if (options.only && check.group != *options.only) continue;
    if (options.criterion && check.criterion != *options.criterion) continue;
    CheckResult r;
    r.id = check.id;
    r.group = check.group;
    r.criterion = check.criterion;
    r.anchor = check.anchor;
    const auto start = std::chrono::steady_clock::now();
    try {
      const auto outcome = with_timeout(options.timeout_secs, [&](std::stop_token stop) {
        return check.run(CheckContext{options.seed, options.corrupt_witness, stop});
      });
      r.pass = outcome.pass;
      r.computed = outcome.computed;
      r.expected = outcome.expected + "[" + source_name(check.source) + "]";
      r.note = outcome.note;
    } catch (const Error& e) {
      r.pass = false;
      r.timed_out = e.code() == ErrorCode::kCancelled;
      r.computed = r.timed_out ? "timeout" : "error";
      r.expected = "-";
      r.note = r.timed_out ? "exceeded " + std::to_string(options.timeout_secs) + " s" : e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (progress) {
      *progress << (r.pass ? "PASS " : "FAIL ") << r.id << " (" << std::round(r.seconds * 100) / 100 << " s)\n"
                << std::flush;
    }
    results.push_back(std::move(r));
  }
  return results;
}

std::string format_machine_report(const std::vector<CheckResult>& results) {
  std::string out;
  for (const auto& r : results) {
    out += sanitize(r.id) + " " + (r.pass ? "PASS" : "FAIL") + " " + sanitize(r.computed) + " " +
           sanitize(r.expected) + " " + sanitize(r.anchor) + "\n";
  }
  return out;
}

std::string format_human_report(const std::vector<CheckResult>& results) {
  std::ostringstream out;
  char line[512];
  std::snprintf(line, sizeof line, "%-28s %-4s %9s  %-44s %s\n", "check", "", "seconds", "computed", "expected");
  out << line;
  int passed = 0;
  for (const auto& r : results) {
    std::snprintf(line, sizeof line, "%-28s %-4s %9.2f  %-44s %s\n", r.id.c_str(), r.pass ? "PASS" : "FAIL",
                  r.seconds, r.computed.c_str(), r.expected.c_str());
    out << line;
    if (!r.note.empty()) out << std::string(30, ' ') << r.note << "\n";
    passed += r.pass;
  }
  out << passed << "/" << results.size() << " checks passed\n";
  return out.str();
}

}  // namespace signlab::cli
