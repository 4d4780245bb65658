#pragma once

#include <optional>
#include <stop_token>
#include <utility>

#include "signlab/boolfn.hpp"
#include "signlab/degree.hpp"

namespace signlab {

/// Largest materialized composition.
inline constexpr int kMaxComposedArity = 20;

/// f o g^n on n*m variables. Block i (0-based) owns input bits i*m .. i*m+m-1.
struct ComposedFunction {
  BoolFunction outer;
  BoolFunction inner;
  BoolFunction table;
};

ComposedFunction compose_functions(const BoolFunction& outer, const BoolFunction& inner);

/// f^(1) = f, f^(k) = f o (f^(k-1))^n. At k = 1 the inner function is x1.
ComposedFunction iterate_compose(const BoolFunction& f, int k);

/// mu = g * q for a verified sign-degree witness q of claimed degree >= 1.
/// Throws kTrivialCase at claimed degree 0 and kInvalidWitness otherwise.
RationalTable mu_factor(const BoolFunction& g, const DualWitness& q);

/// (mass of mu where g = -1, mass where g = +1).
std::pair<Rational, Rational> half_masses(const BoolFunction& g, const RationalTable& mu);

/// h(x) = 2^n p(g(x^1), ..., g(x^n)) prod_i mu(x^i), claimed degree d_f * d_g.
/// The result is re-verified against f o g^n before it is returned.
DualWitness compose_witnesses(const BoolFunction& f, const BoolFunction& g, const DualWitness& p,
                              const DualWitness& q, const Alpha& alpha);

struct SupermultiplicativityReport {
  int outer_degree = 0;  // deg_alpha(f)
  int inner_degree = 0;  // deg_inf(g)
  int product = 0;
  int actual = 0;        // deg_alpha(f o g^n)
  int slack = 0;
  bool holds = false;
  /// False when inner_degree == 0: the lemma is vacuous and no witness is built.
  bool certificate_applicable = false;
  bool certificate_verified = false;
  Rational outer_correlation;     // <f, p>
  Rational composed_correlation;  // <f o g^n, h>
  Rational composed_l1;
  std::optional<int> composed_pure_high_degree;
  std::optional<DualWitness> composed_witness;
};

SupermultiplicativityReport check_supermultiplicativity(const BoolFunction& f, const BoolFunction& g,
                                                        const Alpha& alpha, std::stop_token stop = {});

}  // namespace signlab
