#include "signlab/degree.hpp"

#include <algorithm>
#include <sstream>

#include "signlab/lp.hpp"

namespace signlab {

Alpha Alpha::finite(Rational value) {
  if (value < 1) throw Error(ErrorCode::kInvalidArgument, "alpha must be >= 1, got " + format_rational(value));
  Alpha a;
  a.infinite_ = false;
  a.value_ = std::move(value);
  return a;
}

Alpha Alpha::parse(std::string_view text) {
  if (text == "inf" || text == "infinity") return infinity();
  return finite(parse_rational(text));
}

std::string Alpha::to_string() const { return infinite_ ? "inf" : format_rational(value_); }

Rational correlation_threshold(const Alpha& alpha) {
  if (alpha.is_infinite()) return Rational(1);
  return (alpha.value() - 1) / (alpha.value() + 1);
}

std::vector<SubsetMask> monomials_up_to(int arity, int max_weight) {
  std::vector<SubsetMask> out;
  for (SubsetMask t = 0; t < cube_size(arity); ++t) {
    if (std::popcount(t) <= max_weight) out.push_back(t);
  }
  std::stable_sort(out.begin(), out.end(),
                   [](SubsetMask a, SubsetMask b) { return std::popcount(a) < std::popcount(b); });
  return out;
}

Rational SignRepresentation::evaluate(InputMask x) const {
  Rational sum;
  for (const auto& [t, c] : coefficients) {
    if (character(t, x) > 0) sum += c; else sum -= c;
  }
  return sum;
}

bool verify_representation(const BoolFunction& f, const SignRepresentation& p, const Alpha& alpha) {
  if (p.arity != f.arity()) return false;
  for (const auto& [t, c] : p.coefficients) {
    if (t >= cube_size(f.arity()) || std::popcount(t) > p.degree_bound) return false;
  }
  for (InputMask x = 0; x < f.size(); ++x) {
    Rational value = p.evaluate(x);
    if (f(x) < 0) value = -value;
    if (value < 1) return false;
    if (!alpha.is_infinite() && value > alpha.value()) return false;
  }
  return true;
}

DualWitness make_witness(const BoolFunction& f, RationalTable table, int claimed_degree, const Alpha& alpha) {
  if (table.arity() != f.arity()) throw Error(ErrorCode::kArityMismatch, "witness arity differs from function");
  DualWitness w{std::move(table), claimed_degree, alpha, {}, {}, -1};
  w.correlation = inner_product(w.table, f);
  w.l1 = l1_norm(w.table);
  if (!w.table.is_zero()) w.orthogonality_level = pure_high_degree(w.table);
  return w;
}

DualWitness trivial_witness(const BoolFunction& f, const Alpha& alpha) {
  RationalTable p(f);
  const Rational scale(1, boost::multiprecision::mpz_int(1) << f.arity());
  for (InputMask x = 0; x < p.size(); ++x) p[x] *= scale;
  return make_witness(f, std::move(p), 0, alpha);
}

std::string WitnessReport::summary() const {
  if (ok) return certifies_lower_bound ? "ok" : "ok (correlation at threshold; not a strict lower bound)";
  std::ostringstream out;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (i) out << "; ";
    out << violations[i].message;
  }
  return out.str();
}

WitnessReport verify_dual_witness(const BoolFunction& f, const DualWitness& witness, const Alpha& alpha) {
  WitnessReport report;
  const auto& p = witness.table;
  if (p.arity() != f.arity()) {
    report.violations.push_back({Violation::Condition::kArity, std::nullopt, Rational(p.arity()),
                                 "witness arity " + std::to_string(p.arity()) + " != function arity " +
                                     std::to_string(f.arity())});
    return report;
  }
  const Rational threshold = correlation_threshold(alpha);

  Rational correlation;
  Rational mass;
  for (InputMask x = 0; x < p.size(); ++x) {
    if (f(x) > 0) correlation += p[x]; else correlation -= p[x];
    mass += abs(p[x]);
  }
  if (correlation < threshold) {
    report.violations.push_back({Violation::Condition::kCorrelation, std::nullopt, correlation,
                                 "correlation <f,p> = " + format_rational(correlation) + " < " +
                                     format_rational(threshold) + " (deficit " +
                                     format_rational(threshold - correlation) + ")"});
  }
  if (mass != 1) {
    report.violations.push_back(
        {Violation::Condition::kL1, std::nullopt, mass, "l1(p) = " + format_rational(mass) + " != 1"});
  }
  const int claimed = std::min(witness.claimed_degree, f.arity() + 1);
  for (SubsetMask t : monomials_up_to(f.arity(), claimed - 1)) {
    const Rational c = character_correlation(p, t);
    if (c != 0) {
      report.violations.push_back({Violation::Condition::kOrthogonality, t, c,
                                   "<p, chi_T> = " + format_rational(c) + " != 0 for T = mask " +
                                       std::to_string(t) + " (|T| = " + std::to_string(std::popcount(t)) +
                                       " < " + std::to_string(witness.claimed_degree) + ")"});
    }
  }
  report.ok = report.violations.empty();
  report.certifies_lower_bound = report.ok && (alpha.is_infinite() || correlation > threshold);
  return report;
}

namespace {

void check_degree_argument(const BoolFunction& f, int d) {
  if (d < 0 || d > f.arity()) {
    throw Error(ErrorCode::kOutOfRange,
                "degree " + std::to_string(d) + " outside [0, " + std::to_string(f.arity()) + "]");
  }
}

// The feasibility system 1 <= f(x) sum_T c_T chi_T(x) (<= alpha) is decided
// through the LP
//   max  sum_x y+_x - alpha sum_x y-_x
//   s.t. sum_x (y+_x - y-_x) f(x) chi_T(x) = 0   for |T| <= d
//        sum_x (y+_x + y-_x) <= 1,  y >= 0,
// whose LP dual is  min u  s.t.  1 - u <= f(x) P(x) <= alpha + u.  The optimum
// is zero exactly when the system is feasible, and the optimal multipliers of
// the equality rows are then the coefficients c_T.
FeasibilityResult decide(const BoolFunction& f, int d, const Alpha& alpha, std::stop_token stop) {
  const std::size_t points = f.size();
  const bool two_sided = !alpha.is_infinite();
  const std::size_t vars = two_sided ? 2 * points : points;
  const auto monomials = monomials_up_to(f.arity(), d);

  lp::LinearProgram program(vars);
  std::vector<Rational> objective(vars, Rational(1));
  if (two_sided) {
    for (std::size_t x = 0; x < points; ++x) objective[points + x] = -alpha.value();
  }
  program.set_objective(std::move(objective));
  for (SubsetMask t : monomials) {
    std::vector<Rational> row(vars);
    for (InputMask x = 0; x < points; ++x) {
      const int s = f(x) * character(t, x);
      row[x] = s;
      if (two_sided) row[points + x] = -s;
    }
    program.add_row(std::move(row), lp::Relation::kEqual, Rational(0));
  }
  program.add_row(std::vector<Rational>(vars, Rational(1)), lp::Relation::kLessEqual, Rational(1));

  lp::Options options;
  options.stop = stop;
  const auto result = lp::solve(program, options);
  if (result.status != lp::Status::kOptimal) {
    throw Error(ErrorCode::kInternal, "degree LP must have a finite optimum");
  }
  FeasibilityResult out;
  if (result.objective > 0) return out;

  SignRepresentation rep{f.arity(), d, {}};
  for (std::size_t k = 0; k < monomials.size(); ++k) {
    if (result.duals[k] != 0) rep.coefficients.emplace(monomials[k], result.duals[k]);
  }
  if (!verify_representation(f, rep, alpha)) {
    throw Error(ErrorCode::kInternal, "LP multipliers failed pointwise verification");
  }
  out.feasible = true;
  out.representation = std::move(rep);
  return out;
}

}  // namespace

FeasibilityResult is_degree_at_most(const BoolFunction& f, int d, const Alpha& alpha, std::stop_token stop) {
  check_degree_argument(f, d);
  return decide(f, d, alpha, stop);
}

DualWitness extract_dual_witness(const BoolFunction& f, int d, const Alpha& alpha, std::stop_token stop) {
  check_degree_argument(f, d);
  const std::size_t points = f.size();
  // Columns: p+ then p-.
  lp::LinearProgram program(2 * points);
  std::vector<Rational> objective(2 * points);
  for (InputMask x = 0; x < points; ++x) {
    objective[x] = f(x);
    objective[points + x] = -f(x);
  }
  program.set_objective(std::move(objective));
  for (SubsetMask t : monomials_up_to(f.arity(), d)) {
    std::vector<Rational> row(2 * points);
    for (InputMask x = 0; x < points; ++x) {
      row[x] = character(t, x);
      row[points + x] = -character(t, x);
    }
    program.add_row(std::move(row), lp::Relation::kEqual, Rational(0));
  }
  program.add_row(std::vector<Rational>(2 * points, Rational(1)), lp::Relation::kLessEqual, Rational(1));

  lp::Options options;
  options.stop = stop;
  const auto result = lp::solve(program, options);
  if (result.status != lp::Status::kOptimal) {
    throw Error(ErrorCode::kInternal, "witness LP must have a finite optimum");
  }
  const Rational threshold = correlation_threshold(alpha);
  const bool certifies = alpha.is_infinite() ? result.objective >= threshold : result.objective > threshold;
  if (!certifies) {
    throw Error(ErrorCode::kNotALowerBound, "best correlation " + format_rational(result.objective) +
                                                " does not exceed threshold " + format_rational(threshold) +
                                                "; deg <= " + std::to_string(d) + " is feasible");
  }
  RationalTable p(f.arity());
  for (InputMask x = 0; x < points; ++x) p[x] = result.values[x] - result.values[points + x];
  const Rational mass = l1_norm(p);
  for (InputMask x = 0; x < points; ++x) p[x] /= mass;

  DualWitness witness = make_witness(f, std::move(p), d + 1, alpha);
  const auto report = verify_dual_witness(f, witness, alpha);
  if (!report.certifies_lower_bound) {
    throw Error(ErrorCode::kInternal, "extracted witness failed verification: " + report.summary());
  }
  return witness;
}

DegreeResult approx_degree(const BoolFunction& f, const Alpha& alpha, std::stop_token stop) {
  for (int d = 0; d <= f.arity(); ++d) {
    auto feasibility = decide(f, d, alpha, stop);
    if (!feasibility.feasible) continue;
    DegreeResult result{d, std::move(*feasibility.representation), std::nullopt};
    if (d > 0) {
      try {
        result.witness = extract_dual_witness(f, d - 1, alpha, stop);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kNotALowerBound) throw;
        throw Error(ErrorCode::kInternal, "decider and witness extractor disagree at degree " +
                                              std::to_string(d - 1) + ": " + e.what());
      }
    }
    return result;
  }
  throw Error(ErrorCode::kInternal, "no feasible degree up to the arity");
}

DegreeResult sign_degree(const BoolFunction& f, std::stop_token stop) {
  return approx_degree(f, Alpha::infinity(), stop);
}

}  // namespace signlab
