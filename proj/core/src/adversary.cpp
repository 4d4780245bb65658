#include "signlab/adversary.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

namespace signlab {

DenseMatrix::DenseMatrix(std::size_t dimension, std::vector<double> data)
    : dim_(dimension), data_(std::move(data)) {
  if (data_.size() != dim_ * dim_) throw Error(ErrorCode::kInvalidArgument, "matrix data is not square");
}

void DenseMatrix::set_symmetric(std::size_t i, std::size_t j, double value) {
  (*this)(i, j) = value;
  (*this)(j, i) = value;
}

bool DenseMatrix::is_symmetric() const {
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i + 1; j < dim_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

bool DenseMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](double v) { return v == 0.0; });
}

DenseMatrix DenseMatrix::scaled(double factor) const {
  auto data = data_;
  for (auto& v : data) v *= factor;
  return DenseMatrix(dim_, std::move(data));
}

namespace {

void check_adversary_arity(int arity) {
  if (arity < 1 || arity > kMaxAdversaryArity) {
    throw Error(ErrorCode::kOutOfRange, "adversary matrices support 1 <= m <= " +
                                            std::to_string(kMaxAdversaryArity));
  }
}

void multiply(const DenseMatrix& a, const std::vector<double>& v, std::vector<double>& out) {
  const std::size_t n = a.dimension();
  const double* row = a.data().data();
  for (std::size_t i = 0; i < n; ++i, row += n) {
    double s = 0;
    for (std::size_t j = 0; j < n; ++j) s += row[j] * v[j];
    out[i] = s;
  }
}

double norm2(const std::vector<double>& v) {
  double s = 0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

}  // namespace

double spectral_norm(const DenseMatrix& a, const SpectralOptions& options) {
  const std::size_t n = a.dimension();
  if (n == 0 || n > (std::size_t{1} << kMaxAdversaryArity)) {
    throw Error(ErrorCode::kOutOfRange, "matrix dimension must lie in [1, 1024]");
  }
  if (!a.is_symmetric()) throw Error(ErrorCode::kNonSymmetric, "spectral_norm requires a symmetric matrix");
  if (a.is_zero()) return 0.0;

  constexpr int kAttempts = 3;
  constexpr std::size_t kStallWindow = 1000;
  std::vector<double> v(n), w(n), u(n);
  double residual = 0;
  std::size_t iterations = 0;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    std::mt19937_64 rng(options.seed + static_cast<std::uint64_t>(attempt) * 0x9E3779B97F4A7C15ULL);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (auto& x : v) x = dist(rng);
    double length = norm2(v);
    for (auto& x : v) x /= length;

    double window_start = std::numeric_limits<double>::infinity();
    for (std::size_t it = 0; iterations < options.max_iterations; ++it, ++iterations) {
      multiply(a, v, w);
      multiply(a, w, u);
      double rho = 0;
      for (std::size_t i = 0; i < n; ++i) rho += v[i] * u[i];
      double r2 = 0;
      for (std::size_t i = 0; i < n; ++i) r2 += (u[i] - rho * v[i]) * (u[i] - rho * v[i]);
      residual = std::sqrt(r2);
      length = norm2(u);
      if (length == 0) break;  // start vector fell into the kernel
      if (residual <= options.tolerance * rho) return std::sqrt(rho);
      if (it % kStallWindow == 0) {
        if (it > 0 && residual > 0.99 * window_start) break;
        window_start = residual;
      }
      for (std::size_t i = 0; i < n; ++i) v[i] = u[i] / length;
    }
  }
  std::ostringstream msg;
  msg << "power iteration did not converge after " << iterations << " iterations (residual " << residual << ")";
  throw Error(ErrorCode::kNonConvergence, msg.str());
}

DifferenceMatrices build_difference_matrices(const BoolFunction& f) {
  check_adversary_arity(f.arity());
  DifferenceMatrices out;
  out.arity = f.arity();
  const std::size_t n = f.size();
  out.F.resize(n * n);
  for (InputMask x = 0; x < n; ++x) {
    for (InputMask y = 0; y < n; ++y) out.F[x * n + y] = f(x) != f(y);
  }
  return out;
}

AdversaryCertificate::AdversaryCertificate(int arity, DenseMatrix gamma, std::string note)
    : arity_(arity), gamma_(std::move(gamma)), note_(std::move(note)) {
  check_adversary_arity(arity);
  if (gamma_.dimension() != cube_size(arity)) {
    throw Error(ErrorCode::kArityMismatch, "certificate dimension must be 2^m");
  }
  if (!gamma_.is_symmetric()) throw Error(ErrorCode::kNonSymmetric, "certificate must be symmetric");
}

AdversaryRatio adv_ratio(const BoolFunction& f, const AdversaryCertificate& certificate,
                         const SpectralOptions& options) {
  if (f.arity() != certificate.arity()) throw Error(ErrorCode::kArityMismatch, "certificate arity mismatch");
  const auto& gamma = certificate.gamma();
  if (gamma.is_zero()) throw Error(ErrorCode::kZeroCertificate, "Gamma is identically zero");
  const auto diff = build_difference_matrices(f);
  const std::size_t n = gamma.dimension();

  AdversaryRatio out;
  DenseMatrix masked(n);
  for (InputMask x = 0; x < n; ++x) {
    for (InputMask y = 0; y < n; ++y) masked(x, y) = diff.f_entry(x, y) ? gamma(x, y) : 0.0;
  }
  out.numerator = spectral_norm(masked, options);
  double worst = 0;
  for (int i = 1; i <= f.arity(); ++i) {
    for (InputMask x = 0; x < n; ++x) {
      for (InputMask y = 0; y < n; ++y) masked(x, y) = DifferenceMatrices::d_entry(i, x, y) ? gamma(x, y) : 0.0;
    }
    out.denominators.push_back(spectral_norm(masked, options));
    worst = std::max(worst, out.denominators.back());
  }
  if (worst == 0) {
    throw Error(ErrorCode::kDegenerateCertificate, "every ||Gamma o D_i|| vanishes (Gamma is diagonal)");
  }
  out.ratio = out.numerator / worst;
  return out;
}

AdversaryCertificate build_or_certificate(int k) {
  check_adversary_arity(k);
  DenseMatrix gamma(cube_size(k));
  for (int i = 0; i < k; ++i) gamma.set_symmetric(0, std::size_t{1} << i, 1.0);
  return AdversaryCertificate(k, std::move(gamma), "star certificate for OR_" + std::to_string(k));
}

AdversaryCertificate build_and_certificate(int k) {
  check_adversary_arity(k);
  const std::size_t all = cube_size(k) - 1;
  DenseMatrix gamma(cube_size(k));
  for (int i = 0; i < k; ++i) gamma.set_symmetric(all, all ^ (std::size_t{1} << i), 1.0);
  return AdversaryCertificate(k, std::move(gamma), "star certificate for AND_" + std::to_string(k));
}

AdversaryCertificate random_certificate(int arity, std::uint64_t seed) {
  check_adversary_arity(arity);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  const std::size_t n = cube_size(arity);
  DenseMatrix gamma(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) gamma.set_symmetric(i, j, dist(rng));
  }
  return AdversaryCertificate(arity, std::move(gamma), "random seed " + std::to_string(seed));
}

double formula_adv_upper_bound(const Formula& formula) { return std::sqrt(static_cast<double>(formula.size())); }

}  // namespace signlab
