#include "signlab/boolfn.hpp"

#include <string>

namespace signlab {

void check_arity(int arity) {
  if (arity < 1 || arity > kMaxArity) {
    throw Error(ErrorCode::kOutOfRange,
                "arity " + std::to_string(arity) + " outside [1, " + std::to_string(kMaxArity) + "]");
  }
}

BoolFunction::BoolFunction(int arity, std::vector<std::int8_t> values)
    : arity_(arity), values_(std::move(values)) {
  check_arity(arity);
  if (values_.size() != cube_size(arity)) {
    throw Error(ErrorCode::kInvalidArgument, "truth table length must be 2^" + std::to_string(arity));
  }
  for (auto v : values_) {
    if (v != 1 && v != -1) throw Error(ErrorCode::kInvalidArgument, "truth table entries must be +1 or -1");
  }
}

BoolFunction BoolFunction::from_bits(int arity, std::uint64_t true_points) {
  if (arity > 6) throw Error(ErrorCode::kOutOfRange, "from_bits supports arity <= 6");
  return from_predicate(arity, [&](InputMask x) { return (true_points >> x) & 1U; });
}

BoolFunction BoolFunction::constant(int arity, int value) {
  if (value != 1 && value != -1) throw Error(ErrorCode::kInvalidArgument, "constant must be +1 or -1");
  return from_predicate(arity, [&](InputMask) { return value < 0; });
}

BoolFunction BoolFunction::parity(int arity) {
  return from_predicate(arity, [](InputMask x) { return (std::popcount(x) & 1) != 0; });
}

BoolFunction BoolFunction::conjunction(int arity) {
  const InputMask all = static_cast<InputMask>(cube_size(arity) - 1);
  return from_predicate(arity, [&](InputMask x) { return x == all; });
}

BoolFunction BoolFunction::disjunction(int arity) {
  return from_predicate(arity, [](InputMask x) { return x != 0; });
}

BoolFunction BoolFunction::dictator(int arity, int index) {
  if (index < 1 || index > arity) throw Error(ErrorCode::kOutOfRange, "variable index out of range");
  return from_predicate(arity, [&](InputMask x) { return (x >> (index - 1)) & 1U; });
}

std::uint64_t BoolFunction::true_bits() const {
  if (arity_ > 6) throw Error(ErrorCode::kOutOfRange, "true_bits supports arity <= 6");
  std::uint64_t bits = 0;
  for (std::size_t x = 0; x < values_.size(); ++x) {
    if (values_[x] < 0) bits |= std::uint64_t{1} << x;
  }
  return bits;
}

BoolFunction BoolFunction::negated() const {
  auto values = values_;
  for (auto& v : values) v = static_cast<std::int8_t>(-v);
  return BoolFunction(arity_, std::move(values));
}

BoolFunction BoolFunction::with_input_negated(int index) const {
  if (index < 1 || index > arity_) throw Error(ErrorCode::kOutOfRange, "variable index out of range");
  const InputMask flip = InputMask{1} << (index - 1);
  std::vector<std::int8_t> values(values_.size());
  for (std::size_t x = 0; x < values.size(); ++x) values[x] = values_[x ^ flip];
  return BoolFunction(arity_, std::move(values));
}

RationalTable::RationalTable(int arity) : arity_(arity) {
  check_arity(arity);
  entries_.resize(cube_size(arity));
}

RationalTable::RationalTable(int arity, std::vector<Rational> entries)
    : arity_(arity), entries_(std::move(entries)) {
  check_arity(arity);
  if (entries_.size() != cube_size(arity)) {
    throw Error(ErrorCode::kInvalidArgument, "rational table length must be 2^" + std::to_string(arity));
  }
}

RationalTable::RationalTable(const BoolFunction& f) : arity_(f.arity()) {
  entries_.reserve(f.size());
  for (auto v : f.values()) entries_.emplace_back(v);
}

bool RationalTable::is_zero() const {
  for (const auto& e : entries_) {
    if (e != 0) return false;
  }
  return true;
}

FourierExpansion::FourierExpansion(int arity, std::vector<Rational> coefficients)
    : arity_(arity), coefficients_(std::move(coefficients)) {
  check_arity(arity);
  if (coefficients_.size() != cube_size(arity)) {
    throw Error(ErrorCode::kInvalidArgument, "expansion must have 2^n coefficients");
  }
}

namespace {

// In-place Walsh-Hadamard butterfly: v[T] <- sum_x v[x] chi_T(x).
void walsh_hadamard(std::vector<Rational>& v) {
  Rational tmp;
  for (std::size_t half = 1; half < v.size(); half <<= 1) {
    for (std::size_t block = 0; block < v.size(); block += 2 * half) {
      for (std::size_t i = block; i < block + half; ++i) {
        tmp = v[i + half];
        v[i + half] = v[i] - tmp;
        v[i] += tmp;
      }
    }
  }
}

}  // namespace

FourierExpansion fourier_transform(const RationalTable& f) {
  auto coeffs = f.entries();
  walsh_hadamard(coeffs);
  const Rational scale(1, boost::multiprecision::mpz_int(1) << f.arity());
  for (auto& c : coeffs) c *= scale;
  return FourierExpansion(f.arity(), std::move(coeffs));
}

FourierExpansion fourier_transform(const BoolFunction& f) { return fourier_transform(RationalTable(f)); }

RationalTable inverse_fourier(const FourierExpansion& expansion) {
  auto values = expansion.coefficients();
  walsh_hadamard(values);
  return RationalTable(expansion.arity(), std::move(values));
}

std::optional<int> degree(const FourierExpansion& expansion) {
  std::optional<int> best;
  const auto& c = expansion.coefficients();
  for (std::size_t t = 0; t < c.size(); ++t) {
    if (c[t] != 0) {
      const int w = std::popcount(static_cast<SubsetMask>(t));
      if (!best || w > *best) best = w;
    }
  }
  return best;
}

std::optional<int> degree(const RationalTable& f) { return degree(fourier_transform(f)); }
std::optional<int> degree(const BoolFunction& f) { return degree(fourier_transform(f)); }

int pure_high_degree(const FourierExpansion& expansion) {
  std::optional<int> best;
  const auto& c = expansion.coefficients();
  for (std::size_t t = 0; t < c.size(); ++t) {
    if (c[t] != 0) {
      const int w = std::popcount(static_cast<SubsetMask>(t));
      if (!best || w < *best) best = w;
    }
  }
  if (!best) throw Error(ErrorCode::kZeroFunction, "pure high degree of the zero function is undefined");
  return *best;
}

int pure_high_degree(const RationalTable& p) { return pure_high_degree(fourier_transform(p)); }

Rational inner_product(const RationalTable& a, const RationalTable& b) {
  if (a.arity() != b.arity()) throw Error(ErrorCode::kArityMismatch, "inner product of different arities");
  Rational sum;
  for (std::size_t x = 0; x < a.size(); ++x) sum += a[x] * b[x];
  return sum;
}

Rational inner_product(const RationalTable& a, const BoolFunction& b) {
  if (a.arity() != b.arity()) throw Error(ErrorCode::kArityMismatch, "inner product of different arities");
  Rational sum;
  for (std::size_t x = 0; x < a.size(); ++x) {
    if (b(x) > 0) sum += a[x]; else sum -= a[x];
  }
  return sum;
}

Rational l1_norm(const RationalTable& p) {
  Rational sum;
  for (const auto& e : p.entries()) sum += abs(e);
  return sum;
}

Rational character_correlation(const RationalTable& p, SubsetMask subset) {
  Rational sum;
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (character(subset, static_cast<InputMask>(x)) > 0) sum += p[x]; else sum -= p[x];
  }
  return sum;
}

}  // namespace signlab
