#include "signlab/oracle/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <set>

namespace signlab::oracle {

std::vector<Rational> naive_fourier(const RationalTable& f) {
  const std::size_t n = f.size();
  std::vector<Rational> out(n);
  for (SubsetMask t = 0; t < n; ++t) {
    Rational sum;
    for (InputMask x = 0; x < n; ++x) {
      int sign = 1;
      for (int i = 0; i < f.arity(); ++i) {
        if (((t >> i) & 1U) && ((x >> i) & 1U)) sign = -sign;
      }
      sum += sign * f[x];
    }
    out[t] = sum / static_cast<long>(n);
  }
  return out;
}

namespace {

struct Search {
  const BoolFunction& f;
  std::vector<SubsetMask> monomials;
  long bound;
  std::vector<long> coefficients;
  std::vector<long> partial;  // f(x) * sum of assigned terms, per point
  std::vector<long> values;   // search order: 0, 1, -1, 2, -2, ...
  std::vector<long> tail;     // bound * sum_{j >= k} |sum_x sign(j, x)|

  int sign(std::size_t k, InputMask x) const {
    return f(x) * ((std::popcount(monomials[k] & x) & 1) ? -1 : 1);
  }

  bool descend(std::size_t k) {
    const std::size_t points = f.size();
    const long remaining = static_cast<long>(monomials.size() - k);
    long total = 0;
    for (InputMask x = 0; x < points; ++x) {
      if (partial[x] + bound * remaining < 1) return false;
      total += partial[x];
    }
    // The pointwise constraints summed over the cube.
    if (total + tail[k] < static_cast<long>(points)) return false;
    if (k + 1 == monomials.size()) {
      // sign(k,x) * c >= 1 - partial[x] for every x.
      long lo = -bound, hi = bound;
      for (InputMask x = 0; x < points; ++x) {
        const long need = 1 - partial[x];
        if (sign(k, x) > 0) lo = std::max(lo, need);
        else hi = std::min(hi, -need);
      }
      if (lo > hi) return false;
      coefficients[k] = lo <= 0 && 0 <= hi ? 0 : lo;
      return true;
    }
    for (long c : values) {
      for (InputMask x = 0; x < points; ++x) partial[x] += sign(k, x) * c;
      coefficients[k] = c;
      if (descend(k + 1)) return true;
      for (InputMask x = 0; x < points; ++x) partial[x] -= sign(k, x) * c;
    }
    return false;
  }
};

}  // namespace

std::optional<std::map<SubsetMask, long>> brute_force_sign_representation(const BoolFunction& f, int d, long bound) {
  std::vector<SubsetMask> monomials;
  for (SubsetMask t = 0; t < f.size(); ++t) {
    if (std::popcount(t) <= d) monomials.push_back(t);
  }
  // Boxes [-b, b] for b = 1 .. bound; the last one is the full search.
  for (long b = 1; b <= bound; ++b) {
    Search search{f, monomials, b, std::vector<long>(monomials.size(), 0), std::vector<long>(f.size(), 0), {0}, {}};
    for (long v = 1; v <= b; ++v) {
      search.values.push_back(v);
      search.values.push_back(-v);
    }
    search.tail.assign(monomials.size() + 1, 0);
    for (std::size_t k = monomials.size(); k-- > 0;) {
      long column = 0;
      for (InputMask x = 0; x < f.size(); ++x) column += search.sign(k, x);
      search.tail[k] = search.tail[k + 1] + b * std::abs(column);
    }
    if (!search.descend(0)) continue;
    std::map<SubsetMask, long> out;
    for (std::size_t k = 0; k < monomials.size(); ++k) out[monomials[k]] = search.coefficients[k];
    return out;
  }
  return std::nullopt;
}

bool check_representation(const BoolFunction& f, const std::map<SubsetMask, Rational>& coefficients, int d,
                          const std::optional<Rational>& alpha) {
  for (const auto& [t, c] : coefficients) {
    if (std::popcount(t) > d || t >= f.size()) return false;
  }
  for (InputMask x = 0; x < f.size(); ++x) {
    Rational value;
    for (const auto& [t, c] : coefficients) {
      value += ((std::popcount(t & x) & 1) ? -1 : 1) * c;
    }
    value *= f(x);
    if (value < 1) return false;
    if (alpha && value > *alpha) return false;
  }
  return true;
}

bool check_witness(const BoolFunction& f, const RationalTable& p, int claimed_degree, const Rational& threshold) {
  if (p.arity() != f.arity()) return false;
  Rational correlation, mass;
  for (InputMask x = 0; x < f.size(); ++x) {
    correlation += f(x) * p[x];
    mass += p[x] < 0 ? Rational(-p[x]) : p[x];
  }
  if (correlation < threshold || mass != 1) return false;
  const auto coefficients = naive_fourier(p);
  for (SubsetMask t = 0; t < f.size(); ++t) {
    if (std::popcount(t) < claimed_degree && coefficients[t] != 0) return false;
  }
  return true;
}

std::map<std::uint64_t, int> minimal_formula_sizes(int arity, int max_size) {
  const std::uint64_t full = arity == 6 ? ~std::uint64_t{0} : (std::uint64_t{1} << (1U << arity)) - 1;
  std::vector<std::set<std::uint64_t>> by_size(max_size + 1);
  std::map<std::uint64_t, int> best;
  for (int i = 0; i < arity; ++i) {
    std::uint64_t bits = 0;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << arity); ++x) {
      if ((x >> i) & 1U) bits |= std::uint64_t{1} << x;
    }
    by_size[1].insert(bits);
    by_size[1].insert(~bits & full);
  }
  for (auto b : by_size[1]) best.emplace(b, 1);
  for (int s = 2; s <= max_size; ++s) {
    for (int left = 1; left < s; ++left) {
      for (auto a : by_size[left]) {
        for (auto b : by_size[s - left]) {
          by_size[s].insert(a & b);
          by_size[s].insert(a | b);
        }
      }
    }
    for (auto b : by_size[s]) best.emplace(b, s);
  }
  return best;
}

}  // namespace signlab::oracle
