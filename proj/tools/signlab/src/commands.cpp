#include "signlab/cli/commands.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <numeric>
#include <vector>

#include "signlab/adversary.hpp"
#include "signlab/composition.hpp"
#include "signlab/error.hpp"
#include "signlab/formula.hpp"
#include "signlab/io.hpp"

namespace signlab::cli {
namespace {

BoolFunction function_from_formula(const Formula& formula, std::optional<int> arity) {
  const int n = std::max(formula.max_variable(), arity.value_or(1));
  return to_function(formula, n);
}

void emit(const GlobalOptions& options, const std::string& contents, std::ostream& out, const char* what) {
  if (options.out.empty()) return;
  io::write_file(options.out, contents);
  out << what << " written to " << options.out << "\n";
}

void print_witness_summary(const DualWitness& w, std::ostream& out) {
  out << "witness: claimed degree " << w.claimed_degree << ", <f,p> = " << format_rational(w.correlation)
      << ", l1 = " << format_rational(w.l1) << ", alpha = " << w.alpha.to_string() << "\n";
}

}  // namespace

BoolFunction load_function(const FunctionSource& source) {
  const int selected = source.formula.has_value() + source.formula_file.has_value() + source.table.has_value();
  if (selected != 1) {
    throw Error(ErrorCode::kInvalidArgument, "give exactly one of --formula, --formula-file, --table");
  }
  if (source.formula) return function_from_formula(parse_formula(*source.formula), source.arity);
  if (source.formula_file) return function_from_formula(parse_formula(io::read_file(*source.formula_file)), source.arity);
  auto f = io::parse_truth_table(io::read_file(*source.table));
  if (source.arity && *source.arity != f.arity()) {
    throw Error(ErrorCode::kArityMismatch, "--arity does not match the truth table");
  }
  return f;
}

BoolFunction function_from_text(const std::string& text) {
  if (text.find(':') != std::string::npos) return io::parse_truth_table(text);
  if (std::filesystem::is_regular_file(text)) return io::parse_truth_table(io::read_file(text));
  return function_from_formula(parse_formula(text), std::nullopt);
}

int cmd_degree(const FunctionSource& source, const Alpha& alpha, const GlobalOptions& options, std::ostream& out) {
  const auto f = load_function(source);
  const auto result = with_timeout(options.timeout_secs, [&](std::stop_token stop) {
    return approx_degree(f, alpha, stop);
  });
  out << "arity: " << f.arity() << "\n";
  out << (alpha.is_infinite() ? "sign degree: " : "degree at alpha=" + alpha.to_string() + ": ") << result.degree
      << "\n";
  out << "representation (pointwise verified):\n" << io::format_representation(result.representation);
  if (!result.witness) {
    out << "witness: none needed at degree 0\n";
    return kExitOk;
  }
  print_witness_summary(*result.witness, out);
  const auto text = io::format_witness(*result.witness);
  if (options.out.empty()) out << text;
  emit(options, text, out, "witness");
  return kExitOk;
}

int cmd_witness(const FunctionSource& source, int claimed_degree, const Alpha& alpha, const GlobalOptions& options,
                std::ostream& out) {
  const auto f = load_function(source);
  if (claimed_degree < 1 || claimed_degree > f.arity()) {
    throw Error(ErrorCode::kOutOfRange, "--degree must lie in [1, " + std::to_string(f.arity()) + "]");
  }
  const auto w = with_timeout(options.timeout_secs, [&](std::stop_token stop) {
    return extract_dual_witness(f, claimed_degree - 1, alpha, stop);
  });
  const auto text = io::format_witness(w);
  if (options.out.empty()) {
    out << text;
  } else {
    print_witness_summary(w, out);
    emit(options, text, out, "witness");
  }
  return kExitOk;
}

int cmd_verify(const FunctionSource& source, const std::string& witness_path, const std::optional<Alpha>& alpha,
               std::ostream& out) {
  const auto f = load_function(source);
  const auto w = io::parse_witness(io::read_file(witness_path), f);
  const Alpha a = alpha.value_or(w.alpha);
  const auto report = verify_dual_witness(f, w, a);
  out << report.summary() << "\n";
  if (report.ok) {
    out << (report.certifies_lower_bound ? "certifies degree > " + std::to_string(w.claimed_degree - 1)
                                         : std::string("conditions hold at the boundary; not a strict lower bound"))
        << "\n";
  }
  return report.ok ? kExitOk : kExitCheckFailed;
}

int cmd_compose(const std::string& outer, const std::string& inner, const Alpha& alpha,
                const std::string& emit_witness, const GlobalOptions& options, std::ostream& out) {
  const auto f = function_from_text(outer);
  const auto g = function_from_text(inner);
  const auto r = with_timeout(options.timeout_secs, [&](std::stop_token stop) {
    return check_supermultiplicativity(f, g, alpha, stop);
  });
  char line[160];
  std::snprintf(line, sizeof line, "%6s %6s %8s %7s %6s %9s\n", "d_f", "d_g", "product", "actual", "slack",
                "verified");
  out << line;
  const char* verified = !r.certificate_applicable ? "n/a" : r.certificate_verified ? "yes" : "no";
  std::snprintf(line, sizeof line, "%6d %6d %8d %7d %6d %9s\n", r.outer_degree, r.inner_degree, r.product, r.actual,
                r.slack, verified);
  out << line;
  if (!r.certificate_applicable) out << "inner sign degree is 0: the bound is vacuous, no witness built\n";
  if (r.composed_witness) {
    out << "composed witness: <f o g^n, h> = " << format_rational(r.composed_correlation)
        << ", l1(h) = " << format_rational(r.composed_l1) << ", pure high degree = "
        << r.composed_pure_high_degree.value_or(-1) << "\n";
    if (!emit_witness.empty()) {
      io::write_file(emit_witness, io::format_witness(*r.composed_witness));
      out << "witness written to " << emit_witness << "\n";
      io::write_file(emit_witness + ".table", io::format_truth_table(compose_functions(f, g).table));
      out << "composed truth table written to " << emit_witness << ".table\n";
    }
  }
  if (!options.out.empty()) {
    io::write_file(options.out, "d_f=" + std::to_string(r.outer_degree) + " d_g=" + std::to_string(r.inner_degree) +
                                    " product=" + std::to_string(r.product) + " actual=" +
                                    std::to_string(r.actual) + " slack=" + std::to_string(r.slack) +
                                    " verified=" + verified + "\n");
  }
  const bool ok = r.holds && (!r.certificate_applicable || r.certificate_verified);
  return ok ? kExitOk : kExitCheckFailed;
}

int cmd_adversary(const FunctionSource& source, const std::string& certificate_path, const GlobalOptions& options,
                  std::ostream& out) {
  const auto f = load_function(source);
  const auto certificate = io::parse_certificate(io::read_file(certificate_path));
  SpectralOptions spectral;
  spectral.seed = options.seed;
  const auto r = adv_ratio(f, certificate, spectral);
  char line[96];
  std::snprintf(line, sizeof line, "numerator ||G o F||      %.12f\n", r.numerator);
  out << line;
  for (std::size_t i = 0; i < r.denominators.size(); ++i) {
    std::snprintf(line, sizeof line, "||G o D_%-2zu||             %.12f\n", i + 1, r.denominators[i]);
    out << line;
  }
  std::snprintf(line, sizeof line, "ratio (lower bound)      %.12f\n", r.ratio);
  out << line;
  if (!options.out.empty()) {
    std::snprintf(line, sizeof line, "ratio=%.17g\n", r.ratio);
    io::write_file(options.out, line);
  }
  return kExitOk;
}

int cmd_emit_star(int k, bool and_variant, const GlobalOptions& options, std::ostream& out) {
  const auto certificate = and_variant ? build_and_certificate(k) : build_or_certificate(k);
  const auto text = io::format_certificate(certificate);
  if (options.out.empty()) out << text;
  emit(options, text, out, "certificate");
  return kExitOk;
}

namespace {

// Image of a truth table (bit x set iff f(x) = TRUE) under an input
// permutation, an input negation mask and an optional output negation.
std::uint32_t transform(std::uint32_t bits, int n, const std::array<int, 4>& perm, InputMask flip, bool negate) {
  const std::uint32_t points = 1U << n;
  std::uint32_t out = 0;
  for (InputMask x = 0; x < points; ++x) {
    InputMask y = 0;
    for (int i = 0; i < n; ++i) {
      if ((x >> i) & 1U) y |= 1U << perm[i];
    }
    y ^= flip;
    if ((bits >> x) & 1U) out |= 1U << y;
  }
  if (negate) out = ~out & (points == 32 ? ~0U : (1U << points) - 1);
  return out;
}

}  // namespace

std::map<int, std::uint64_t> survey(int nvars, std::stop_token stop) {
  if (nvars < 1 || nvars > 4) throw Error(ErrorCode::kOutOfRange, "survey supports 1 <= nvars <= 4");
  const std::uint32_t count = 1U << (1U << nvars);
  std::vector<bool> seen(count, false);
  std::map<int, std::uint64_t> histogram;
  std::array<int, 4> perm{0, 1, 2, 3};
  for (std::uint32_t bits = 0; bits < count; ++bits) {
    if (seen[bits]) continue;
    std::uint64_t members = 0;
    std::sort(perm.begin(), perm.begin() + nvars);
    do {
      for (InputMask flip = 0; flip < (1U << nvars); ++flip) {
        for (bool negate : {false, true}) {
          const auto image = transform(bits, nvars, perm, flip, negate);
          if (!seen[image]) {
            seen[image] = true;
            ++members;
          }
        }
      }
    } while (std::next_permutation(perm.begin(), perm.begin() + nvars));
    histogram[sign_degree(BoolFunction::from_bits(nvars, bits), stop).degree] += members;
  }
  return histogram;
}

int cmd_survey(int nvars, const GlobalOptions& options, std::ostream& out) {
  const auto histogram = with_timeout(options.timeout_secs, [&](std::stop_token stop) { return survey(nvars, stop); });
  std::uint64_t total = 0;
  std::string machine;
  out << "sign degree  functions\n";
  for (const auto& [d, n] : histogram) {
    char line[64];
    std::snprintf(line, sizeof line, "%11d  %9llu\n", d, static_cast<unsigned long long>(n));
    out << line;
    machine += std::to_string(d) + " " + std::to_string(n) + "\n";
    total += n;
  }
  out << "total        " << total << "\n";
  if (!options.out.empty()) io::write_file(options.out, "nvars=" + std::to_string(nvars) + "\n" + machine);
  return kExitOk;
}

}  // namespace signlab::cli
