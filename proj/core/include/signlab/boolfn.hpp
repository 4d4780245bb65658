#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "signlab/error.hpp"
#include "signlab/rational.hpp"

namespace signlab {

/// Input points and variable subsets share one encoding: bit i of the mask
/// stands for variable x_{i+1}. For an input point a set bit means x_{i+1} = -1
/// (TRUE); for a subset T it means i+1 belongs to T.
using InputMask = std::uint32_t;
using SubsetMask = std::uint32_t;

inline constexpr int kMaxArity = 24;

inline std::size_t cube_size(int arity) { return std::size_t{1} << arity; }

/// chi_T(x) = prod_{i in T} x_i, i.e. (-1)^{|T & x|}.
inline int character(SubsetMask subset, InputMask point) {
  return (std::popcount(subset & point) & 1) ? -1 : 1;
}

void check_arity(int arity);

/// Dense +-1 truth table over {-1,+1}^n.
class BoolFunction {
 public:
  BoolFunction(int arity, std::vector<std::int8_t> values);

  /// `is_true(mask)` decides whether the output is TRUE (-1) at that point.
  template <typename Predicate>
  static BoolFunction from_predicate(int arity, Predicate&& is_true) {
    check_arity(arity);
    std::vector<std::int8_t> values(cube_size(arity));
    for (std::size_t x = 0; x < values.size(); ++x) {
      values[x] = is_true(static_cast<InputMask>(x)) ? -1 : 1;
    }
    return BoolFunction(arity, std::move(values));
  }

  /// Bit j of `true_points` set means f(j) = -1. Requires 2^arity <= 64.
  static BoolFunction from_bits(int arity, std::uint64_t true_points);

  static BoolFunction constant(int arity, int value);
  static BoolFunction parity(int arity);
  static BoolFunction conjunction(int arity);
  static BoolFunction disjunction(int arity);
  /// f = x_{index}, 1-based.
  static BoolFunction dictator(int arity, int index);

  int arity() const noexcept { return arity_; }
  std::size_t size() const noexcept { return values_.size(); }
  int operator()(InputMask x) const { return values_[x]; }
  bool is_true(InputMask x) const { return values_[x] < 0; }
  const std::vector<std::int8_t>& values() const noexcept { return values_; }

  /// Inverse of from_bits.
  std::uint64_t true_bits() const;

  BoolFunction negated() const;
  /// f(x) with x_{index} replaced by -x_{index}, 1-based.
  BoolFunction with_input_negated(int index) const;

  friend bool operator==(const BoolFunction&, const BoolFunction&) = default;

 private:
  int arity_;
  std::vector<std::int8_t> values_;
};

/// Real-valued function on the cube, stored pointwise as exact rationals.
class RationalTable {
 public:
  explicit RationalTable(int arity);
  RationalTable(int arity, std::vector<Rational> entries);
  explicit RationalTable(const BoolFunction& f);

  int arity() const noexcept { return arity_; }
  std::size_t size() const noexcept { return entries_.size(); }
  const Rational& operator[](InputMask x) const { return entries_[x]; }
  Rational& operator[](InputMask x) { return entries_[x]; }
  const std::vector<Rational>& entries() const noexcept { return entries_; }
  bool is_zero() const;

  friend bool operator==(const RationalTable&, const RationalTable&) = default;

 private:
  int arity_;
  std::vector<Rational> entries_;
};

/// Coefficients \hat f_T = 2^{-n} sum_x f(x) chi_T(x), dense over all subsets.
class FourierExpansion {
 public:
  FourierExpansion(int arity, std::vector<Rational> coefficients);

  int arity() const noexcept { return arity_; }
  const Rational& coefficient(SubsetMask subset) const { return coefficients_[subset]; }
  const std::vector<Rational>& coefficients() const noexcept { return coefficients_; }

 private:
  int arity_;
  std::vector<Rational> coefficients_;
};

FourierExpansion fourier_transform(const RationalTable& f);
FourierExpansion fourier_transform(const BoolFunction& f);
RationalTable inverse_fourier(const FourierExpansion& expansion);

/// Largest |T| with a nonzero coefficient; nullopt marks the zero function.
std::optional<int> degree(const FourierExpansion& expansion);
std::optional<int> degree(const RationalTable& f);
std::optional<int> degree(const BoolFunction& f);

/// Smallest |T| with a nonzero coefficient. Throws kZeroFunction on the zero table.
int pure_high_degree(const FourierExpansion& expansion);
int pure_high_degree(const RationalTable& p);

/// Unnormalized: sum over all 2^n points.
Rational inner_product(const RationalTable& a, const RationalTable& b);
Rational inner_product(const RationalTable& a, const BoolFunction& b);
Rational l1_norm(const RationalTable& p);

/// <p, chi_T> as a direct sum, without going through the transform.
Rational character_correlation(const RationalTable& p, SubsetMask subset);

}  // namespace signlab
