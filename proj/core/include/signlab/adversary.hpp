#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "signlab/boolfn.hpp"
#include "signlab/formula.hpp"

namespace signlab {

inline constexpr int kMaxAdversaryArity = 10;

/// Dense row-major square matrix of doubles.
class DenseMatrix {
 public:
  explicit DenseMatrix(std::size_t dimension) : dim_(dimension), data_(dimension * dimension, 0.0) {}
  DenseMatrix(std::size_t dimension, std::vector<double> data);

  std::size_t dimension() const noexcept { return dim_; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
  /// Writes (i,j) and (j,i).
  void set_symmetric(std::size_t i, std::size_t j, double value);

  bool is_symmetric() const;
  bool is_zero() const;
  DenseMatrix scaled(double factor) const;
  const std::vector<double>& data() const noexcept { return data_; }

 private:
  std::size_t dim_;
  std::vector<double> data_;
};

/// F[x,y] = 1 iff f(x) != f(y); D_i[x,y] = 1 iff x_i != y_i.
struct DifferenceMatrices {
  int arity = 0;
  std::vector<std::uint8_t> F;  // row-major 2^m x 2^m

  bool f_entry(InputMask x, InputMask y) const { return F[(std::size_t{x} << arity) | y] != 0; }
  /// D_i depends only on bit i-1 of x xor y, so it is never materialized.
  static bool d_entry(int i, InputMask x, InputMask y) { return ((x ^ y) >> (i - 1)) & 1U; }
};

DifferenceMatrices build_difference_matrices(const BoolFunction& f);

struct SpectralOptions {
  std::uint64_t seed = 0;
  double tolerance = 1e-9;
  std::size_t max_iterations = 100'000;
};

/// Largest |eigenvalue| of a symmetric matrix by power iteration on A^2.
double spectral_norm(const DenseMatrix& a, const SpectralOptions& options = {});

/// Symmetric Gamma indexed by input masks of an m-variable function.
class AdversaryCertificate {
 public:
  AdversaryCertificate(int arity, DenseMatrix gamma, std::string note = {});

  int arity() const noexcept { return arity_; }
  const DenseMatrix& gamma() const noexcept { return gamma_; }
  const std::string& note() const noexcept { return note_; }

 private:
  int arity_;
  DenseMatrix gamma_;
  std::string note_;
};

struct AdversaryRatio {
  double numerator = 0;               // ||Gamma o F||
  std::vector<double> denominators;   // ||Gamma o D_i||, i = 1..m
  double ratio = 0;
};

/// A lower bound on ADV+-(f) from one certificate; no maximization over Gamma.
AdversaryRatio adv_ratio(const BoolFunction& f, const AdversaryCertificate& certificate,
                         const SpectralOptions& options = {});

/// Star certificate: Gamma = 1 between the all-FALSE input and each input with
/// exactly one TRUE bit. The AND variant mirrors it through input negation.
AdversaryCertificate build_or_certificate(int k);
AdversaryCertificate build_and_certificate(int k);

/// Symmetric entries uniform in [-1, 1].
AdversaryCertificate random_certificate(int arity, std::uint64_t seed);

/// sqrt(size(F)): the known upper bound on ADV+- for formulas of that size.
double formula_adv_upper_bound(const Formula& formula);

}  // namespace signlab
