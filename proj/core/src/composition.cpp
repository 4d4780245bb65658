#include "signlab/composition.hpp"

namespace signlab {
namespace {

// Output mask z of the inner layer: bit i set iff g(x^i) = -1.
InputMask inner_outputs(const BoolFunction& g, int blocks, InputMask x) {
  const int m = g.arity();
  const InputMask block_mask = static_cast<InputMask>(cube_size(m) - 1);
  InputMask z = 0;
  for (int i = 0; i < blocks; ++i) {
    if (g.is_true((x >> (i * m)) & block_mask)) z |= InputMask{1} << i;
  }
  return z;
}

void check_composed_arity(long long arity) {
  if (arity > kMaxComposedArity) {
    throw Error(ErrorCode::kOutOfRange, "composed arity " + std::to_string(arity) + " exceeds " +
                                            std::to_string(kMaxComposedArity));
  }
}

}  // namespace

ComposedFunction compose_functions(const BoolFunction& outer, const BoolFunction& inner) {
  const int n = outer.arity();
  const long long total = static_cast<long long>(n) * inner.arity();
  check_composed_arity(total);
  auto table = BoolFunction::from_predicate(static_cast<int>(total), [&](InputMask x) {
    return outer.is_true(inner_outputs(inner, n, x));
  });
  return ComposedFunction{outer, inner, std::move(table)};
}

ComposedFunction iterate_compose(const BoolFunction& f, int k) {
  if (k < 1) throw Error(ErrorCode::kOutOfRange, "iteration count must be >= 1");
  long long arity = 1;
  for (int i = 0; i < k; ++i) {
    arity *= f.arity();
    check_composed_arity(arity);
  }
  ComposedFunction current = compose_functions(f, BoolFunction::dictator(1, 1));
  for (int i = 2; i <= k; ++i) current = compose_functions(f, current.table);
  return current;
}

RationalTable mu_factor(const BoolFunction& g, const DualWitness& q) {
  if (!q.alpha.is_infinite()) {
    throw Error(ErrorCode::kInvalidWitness, "inner witness must certify sign degree (alpha = inf)");
  }
  if (q.claimed_degree == 0) {
    throw Error(ErrorCode::kTrivialCase, "inner sign degree 0: the composition bound is vacuous");
  }
  const auto report = verify_dual_witness(g, q, Alpha::infinity());
  if (!report.ok) throw Error(ErrorCode::kInvalidWitness, "inner witness: " + report.summary());
  RationalTable mu(g.arity());
  for (InputMask x = 0; x < g.size(); ++x) {
    mu[x] = g(x) > 0 ? q.table[x] : Rational(-q.table[x]);
    if (mu[x] < 0) {
      throw Error(ErrorCode::kInvalidWitness, "g(x) q(x) < 0 at mask " + std::to_string(x));
    }
  }
  return mu;
}

std::pair<Rational, Rational> half_masses(const BoolFunction& g, const RationalTable& mu) {
  if (g.arity() != mu.arity()) throw Error(ErrorCode::kArityMismatch, "mu arity differs from g");
  std::pair<Rational, Rational> masses;
  for (InputMask x = 0; x < g.size(); ++x) (g.is_true(x) ? masses.first : masses.second) += mu[x];
  return masses;
}

DualWitness compose_witnesses(const BoolFunction& f, const BoolFunction& g, const DualWitness& p,
                              const DualWitness& q, const Alpha& alpha) {
  const auto outer_report = verify_dual_witness(f, p, alpha);
  if (!outer_report.ok) throw Error(ErrorCode::kInvalidWitness, "outer witness: " + outer_report.summary());
  const RationalTable mu = mu_factor(g, q);

  const ComposedFunction composed = compose_functions(f, g);
  const int n = f.arity();
  const int m = g.arity();
  const InputMask block_mask = static_cast<InputMask>(cube_size(m) - 1);
  const Rational scale(boost::multiprecision::mpz_int(1) << n);

  RationalTable h(composed.table.arity());
  for (InputMask x = 0; x < h.size(); ++x) {
    const InputMask z = inner_outputs(g, n, x);
    if (p.table[z] == 0) continue;
    Rational value = scale * p.table[z];
    for (int i = 0; i < n && value != 0; ++i) value *= mu[(x >> (i * m)) & block_mask];
    h[x] = std::move(value);
  }
  DualWitness witness = make_witness(composed.table, std::move(h), p.claimed_degree * q.claimed_degree, alpha);
  const auto report = verify_dual_witness(composed.table, witness, alpha);
  if (!report.ok) {
    throw Error(ErrorCode::kInternal, "composed witness failed verification: " + report.summary());
  }
  return witness;
}

SupermultiplicativityReport check_supermultiplicativity(const BoolFunction& f, const BoolFunction& g,
                                                        const Alpha& alpha, std::stop_token stop) {
  SupermultiplicativityReport report;
  const auto outer = approx_degree(f, alpha, stop);
  const auto inner = sign_degree(g, stop);
  const auto composed = compose_functions(f, g);
  const auto actual = approx_degree(composed.table, alpha, stop);

  report.outer_degree = outer.degree;
  report.inner_degree = inner.degree;
  report.product = outer.degree * inner.degree;
  report.actual = actual.degree;
  report.slack = report.actual - report.product;
  report.holds = report.slack >= 0;

  const DualWitness p = outer.witness ? *outer.witness : trivial_witness(f, alpha);
  report.outer_correlation = p.correlation;
  if (!inner.witness) return report;

  report.certificate_applicable = true;
  DualWitness h = compose_witnesses(f, g, p, *inner.witness, alpha);
  report.composed_correlation = h.correlation;
  report.composed_l1 = h.l1;
  if (h.orthogonality_level >= 0) report.composed_pure_high_degree = h.orthogonality_level;
  const auto check = verify_dual_witness(composed.table, h, alpha);
  report.certificate_verified = check.certifies_lower_bound && h.l1 == 1 &&
                                h.correlation == p.correlation && report.composed_pure_high_degree &&
                                *report.composed_pure_high_degree >= report.product;
  report.composed_witness = std::move(h);
  return report;
}

}  // namespace signlab
