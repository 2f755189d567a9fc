#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "chargelat/errors.hpp"
#include "chargelat/projection.hpp"

namespace chargelat {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// "p/q" with q >= 1, always with an explicit denominator.
inline std::string to_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

inline Rational parse_rational(const std::string& text) {
  try {
    return Rational(text);
  } catch (const std::exception&) {
    throw InputError("not a rational number: '" + text + "'");
  }
}

namespace detail {

/// Number of points in [-bound, bound]^k.
inline std::uint64_t cube_count(int bound, std::size_t k) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k; ++i) total *= static_cast<std::uint64_t>(2 * bound + 1);
  return total;
}

/// All sums sum_i v_i w_i over v in [-bound, bound]^k.
inline std::vector<std::int64_t> box_sums(std::span<const std::int64_t> w, int bound) {
  std::vector<std::int64_t> sums{0};
  for (std::int64_t wi : w) {
    std::vector<std::int64_t> next;
    next.reserve(sums.size() * static_cast<std::size_t>(2 * bound + 1));
    for (std::int64_t s : sums) {
      for (int v = -bound; v <= bound; ++v) next.push_back(s + v * wi);
    }
    sums = std::move(next);
  }
  return sums;
}

}  // namespace detail

/// Largest half-cube size the certificate is willing to materialize.
inline constexpr std::uint64_t kCertificateBudget = std::uint64_t{1} << 22;

/// True iff c(p) is pairwise distinct over all canonical points p with
/// components in [0, bound]. Equivalently, no integer v in [-bound, bound]^n
/// outside Z(1,...,1) has sum_i v_i h_i = 0. Checked by meet-in-the-middle:
/// the number of zero-sum pairs must equal the 2*bound+1 multiples of
/// (1,...,1).
inline bool bounded_injective(std::span<const Rational> h, int bound) {
  if (bound < 1) return true;
  BigInt lcm = 1;
  for (const Rational& r : h) {
    lcm = boost::multiprecision::lcm(lcm, BigInt(boost::multiprecision::denominator(r)));
  }
  std::vector<std::int64_t> w;
  const BigInt limit = BigInt(1) << 56;
  for (const Rational& r : h) {
    BigInt scaled = boost::multiprecision::numerator(r) * (lcm / boost::multiprecision::denominator(r));
    if (boost::multiprecision::abs(scaled) * bound * static_cast<int>(h.size()) >= limit) {
      throw InputError("weights too large for the genericity certificate");
    }
    w.push_back(static_cast<std::int64_t>(scaled));
  }
  std::int64_t total = std::accumulate(w.begin(), w.end(), std::int64_t{0});
  const std::size_t half = h.size() / 2;
  auto left = detail::box_sums(std::span<const std::int64_t>(w.data(), half), bound);
  auto right = detail::box_sums(std::span<const std::int64_t>(w.data() + half, w.size() - half), bound);
  std::sort(left.begin(), left.end());
  std::uint64_t zero_pairs = 0;
  for (std::int64_t s : right) {
    auto [lo, hi] = std::equal_range(left.begin(), left.end(), -s);
    zero_pairs += static_cast<std::uint64_t>(hi - lo);
  }
  // With sum h != 0 only v = 0 among the multiples of (1,...,1) is a zero.
  const std::uint64_t expected = total == 0 ? static_cast<std::uint64_t>(2 * bound + 1) : 1;
  return zero_pairs == expected;
}

/// Largest bound <= requested whose certificate fits the budget in dimension n.
inline int certifiable_bound(std::size_t n, int requested) {
  int bound = requested;
  while (bound > 1 && detail::cube_count(bound, n - n / 2) > kCertificateBudget) --bound;
  return bound;
}

/// Flavor weights h_1..h_n with sum h_i = 0 exactly.
class WeightAssignment {
 public:
  /// Throws InputError unless sum h = 0.
  static WeightAssignment from_values(std::vector<Rational> h) {
    if (h.size() < 2 || h.size() > kMaxDim) throw InputError("weights need 2 <= n <= 16");
    Rational total = 0;
    for (const Rational& r : h) total += r;
    if (total != 0) throw InputError("weights violate the Calabi-Yau condition (sum != 0)");
    WeightAssignment w;
    w.h_ = std::move(h);
    return w;
  }

  std::size_t dim() const { return h_.size(); }
  const Rational& operator[](std::size_t i) const { return h_[i]; }
  std::span<const Rational> values() const { return h_; }

  /// Bound up to which bounded_injective has been established, 0 if never.
  int certified_bound() const { return certified_bound_; }

  /// Runs the certificate at `bound` (clamped to the budget); returns success.
  bool certify(int bound) {
    const int b = certifiable_bound(dim(), bound);
    if (!bounded_injective(h_, b)) return false;
    certified_bound_ = b;
    return true;
  }

  friend bool operator==(const WeightAssignment& a, const WeightAssignment& b) { return a.h_ == b.h_; }

 private:
  std::vector<Rational> h_;
  int certified_bound_ = 0;
};

inline constexpr int kDefaultGenericityBound = 8;
inline constexpr std::int64_t kWeightDrawRange = std::int64_t{1} << 40;

/// Deterministic generic weights: n-1 integer draws in [-2^40, 2^40], the
/// last weight minus their sum, redrawn until the certificate holds.
inline WeightAssignment generic_weights(std::size_t n, std::uint64_t seed, int bound = kDefaultGenericityBound) {
  if (n < 2 || n > kMaxDim) throw InputError("generic_weights: need 2 <= n <= 16");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> draw(-kWeightDrawRange, kWeightDrawRange);
  constexpr int kRetries = 64;
  for (int attempt = 0; attempt < kRetries; ++attempt) {
    std::vector<Rational> h;
    Rational partial = 0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      h.emplace_back(draw(rng));
      partial += h.back();
    }
    h.push_back(-partial);
    auto w = WeightAssignment::from_values(std::move(h));
    if (w.certify(bound)) return w;
  }
  throw GenericityError("generic_weights: certificate failed after retry budget");
}

inline Rational eval_point(const ProjectedPoint& p, const WeightAssignment& w) {
  if (p.dim() != w.dim()) throw InputError("eval_point: dimension mismatch");
  Rational total = 0;
  for (std::size_t i = 0; i < p.dim(); ++i) total += p[i] * w[i];
  return total;
}

}  // namespace chargelat
