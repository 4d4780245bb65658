#pragma once

// Reference implementations used to cross-check the core library. Nothing in
// here shares code with the simplex, the butterfly transform or the witness
// verifier; each routine is the most direct formula that can be run at desk scale.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "signlab/boolfn.hpp"

namespace signlab::oracle {

/// \hat f_T = 2^{-n} sum_x f(x) chi_T(x), computed term by term in O(4^n).
std::vector<Rational> naive_fourier(const RationalTable& f);

/// Integer coefficients c_T in [-bound, bound] for |T| <= d with
/// f(x) * sum_T c_T chi_T(x) >= 1 everywhere, found by exhaustive search.
/// The last coefficient is solved by exact interval intersection instead of
/// being enumerated. Boxes [-b, b] are searched for b = 1, 2, ..., bound, so
/// the hit returned has the smallest possible maximum coefficient.
std::optional<std::map<SubsetMask, long>> brute_force_sign_representation(const BoolFunction& f, int d,
                                                                          long bound = 16);

/// Pointwise 1 <= f(x) p(x) (<= alpha when alpha is set).
bool check_representation(const BoolFunction& f, const std::map<SubsetMask, Rational>& coefficients, int d,
                          const std::optional<Rational>& alpha);

/// The three dual-witness conditions with the threshold passed explicitly.
bool check_witness(const BoolFunction& f, const RationalTable& p, int claimed_degree, const Rational& threshold);

/// Minimal formula size per function of `arity` variables (truth-table bits),
/// over formulas with at most `max_size` leaves. Absent functions need more.
std::map<std::uint64_t, int> minimal_formula_sizes(int arity, int max_size);

}  // namespace signlab::oracle
