#pragma once

#include <map>
#include <optional>
#include <stop_token>
#include <string>
#include <string_view>
#include <vector>

#include "signlab/boolfn.hpp"

namespace signlab {

/// Approximation parameter: a rational >= 1, or infinity (sign degree).
class Alpha {
 public:
  static Alpha infinity() { return Alpha(); }
  static Alpha finite(Rational value);
  /// "inf" or a rational literal.
  static Alpha parse(std::string_view text);

  bool is_infinite() const noexcept { return infinite_; }
  /// Only meaningful when finite.
  const Rational& value() const noexcept { return value_; }
  std::string to_string() const;

  friend bool operator==(const Alpha&, const Alpha&) = default;

 private:
  Alpha() = default;
  bool infinite_ = true;
  Rational value_;
};

/// (alpha - 1)/(alpha + 1) for finite alpha, 1 at infinity.
Rational correlation_threshold(const Alpha& alpha);

/// Subsets T with |T| <= max_weight, ordered by (|T|, T).
std::vector<SubsetMask> monomials_up_to(int arity, int max_weight);

/// Primal certificate: p = sum_T c_T chi_T with |T| <= degree_bound.
struct SignRepresentation {
  int arity = 0;
  int degree_bound = 0;
  std::map<SubsetMask, Rational> coefficients;

  Rational evaluate(InputMask x) const;
};

/// Pointwise check of 1 <= p(x) f(x) (<= alpha when finite), plus the degree bound.
bool verify_representation(const BoolFunction& f, const SignRepresentation& p, const Alpha& alpha);

struct DualWitness {
  RationalTable table;
  int claimed_degree = 0;
  Alpha alpha = Alpha::infinity();
  Rational correlation;  // <f, p>
  Rational l1;
  /// Pure high degree of the table; -1 when the table is zero.
  int orthogonality_level = -1;
};

/// Fills the recorded attributes from the table.
DualWitness make_witness(const BoolFunction& f, RationalTable table, int claimed_degree, const Alpha& alpha);

/// p = f / 2^n: correlation 1, unit mass, claimed degree 0.
DualWitness trivial_witness(const BoolFunction& f, const Alpha& alpha);

struct Violation {
  enum class Condition { kArity, kCorrelation, kL1, kOrthogonality };
  Condition condition;
  std::optional<SubsetMask> subset;  // orthogonality only
  Rational value;                    // the offending quantity
  std::string message;
};

struct WitnessReport {
  bool ok = false;
  /// For finite alpha a lower bound needs <f,p> strictly above the threshold;
  /// at infinity the condition <f,p> >= 1 is already exact.
  bool certifies_lower_bound = false;
  std::vector<Violation> violations;

  std::string summary() const;
};

/// Exact check of unit mass, correlation and orthogonality below the claimed
/// degree. Independent of the simplex code.
WitnessReport verify_dual_witness(const BoolFunction& f, const DualWitness& witness, const Alpha& alpha);

struct FeasibilityResult {
  bool feasible = false;
  std::optional<SignRepresentation> representation;  // set iff feasible
};

/// Exact LP feasibility of deg_alpha(f) <= d; a returned representation has
/// already passed verify_representation.
FeasibilityResult is_degree_at_most(const BoolFunction& f, int d, const Alpha& alpha, std::stop_token stop = {});

/// Maximizes <f,p> over l1(p) <= 1, p orthogonal to every chi_T with |T| <= d.
/// Throws kNotALowerBound when the optimum does not certify deg_alpha(f) > d.
DualWitness extract_dual_witness(const BoolFunction& f, int d, const Alpha& alpha, std::stop_token stop = {});

struct DegreeResult {
  int degree = 0;
  SignRepresentation representation;
  /// Proves degree > degree-1; absent when degree == 0.
  std::optional<DualWitness> witness;
};

DegreeResult approx_degree(const BoolFunction& f, const Alpha& alpha, std::stop_token stop = {});
DegreeResult sign_degree(const BoolFunction& f, std::stop_token stop = {});

}  // namespace signlab
