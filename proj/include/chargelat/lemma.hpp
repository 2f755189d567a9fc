#pragma once

// Hypercube lemma: for every partition inside HC^(d) anchored at 0 with axes
// (1..d), the potential omega_0 at the top cell is 1 on G-members and <= 0
// otherwise. Exhaustive for d <= 6.

#include <bit>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "chargelat/charge.hpp"
#include "chargelat/errors.hpp"
#include "chargelat/hypercube.hpp"

namespace chargelat {

/// omega_0 at the top cell of an origin-anchored HC^(d) in dimension n, for
/// any configuration inside the cube. Per-cell and per-cluster contributions
/// are tabulated once from omega_single_box / cluster_directions_to; only
/// terms that land on the target are kept.
class HypercubeOmega {
 public:
  HypercubeOmega(std::size_t n, int d) : n_(n), d_(d) {
    if (n % 2 != 0 || n < 4) throw InputError("hypercube omega needs even n >= 4");
    if (d < 1 || static_cast<std::size_t>(d) > n || d > kMaxSubdim) throw InputError("hypercube omega needs 1 <= d <= n");
    const auto axes = first_axes(static_cast<std::size_t>(d));
    const std::uint32_t cells = std::uint32_t{1} << d;
    const Box origin(n);
    target_ = project(cell_box(origin, axes, cells - 1));
    vacuum_ = target_.is_origin() ? 1 : 0;
    single_.resize(cells);
    for (std::uint32_t cell = 0; cell < cells; ++cell) {
      const ProjectedPoint c = project(cell_box(origin, axes, cell));
      single_[cell] = omega_single_box(n, c, target_);
      // Successors inside the cube are the axes not set in `cell`.
      const std::uint32_t free_axes = (cells - 1) & ~cell;
      const auto dirs = cluster_directions_to(n, c, target_);
      if (!dirs || (*dirs & ~free_axes) != 0) continue;
      const int weight = omega_cluster(n, std::popcount(*dirs) + 1);
      if (weight == 0) continue;
      ClusterTerm term{cell, {}, 0, weight};
      term.required.push_back(cell);
      for (int j = 0; j < d; ++j) {
        if (*dirs >> j & 1u) term.required.push_back(cell | (std::uint32_t{1} << j));
      }
      for (std::uint32_t r : term.required) {
        if (r < 64) term.required_bits |= std::uint64_t{1} << r;
      }
      clusters_.push_back(std::move(term));
    }
  }

  std::size_t n() const { return n_; }
  int d() const { return d_; }
  const ProjectedPoint& target() const { return target_; }

  int operator()(std::uint64_t mask) const {
    int omega = vacuum_;
    for (std::uint64_t m = mask; m != 0; m &= m - 1) omega += single_[static_cast<std::size_t>(std::countr_zero(m))];
    for (const ClusterTerm& t : clusters_) {
      if ((mask & t.required_bits) == t.required_bits) omega += t.weight;
    }
    return omega;
  }

  int operator()(const CellMask& mask) const {
    int omega = vacuum_;
    for (std::size_t c = mask.find_first(); c != CellMask::npos; c = mask.find_next(c)) omega += single_[c];
    for (const ClusterTerm& t : clusters_) {
      bool present = true;
      for (std::uint32_t r : t.required) {
        if (!mask.test(r)) {
          present = false;
          break;
        }
      }
      if (present) omega += t.weight;
    }
    return omega;
  }

 private:
  struct ClusterTerm {
    std::uint32_t origin_cell;
    std::vector<std::uint32_t> required;  // origin cell and its successors along the directions
    std::uint64_t required_bits;          // same, when d <= 6
    int weight;
  };

  std::size_t n_;
  int d_;
  ProjectedPoint target_;
  int vacuum_ = 0;
  std::vector<int> single_;
  std::vector<ClusterTerm> clusters_;
};

/// The membership list claimed for cube configurations, on a raw mask.
inline bool claimed_G_member(std::uint64_t mask, int d, std::size_t n) {
  const std::uint64_t full = d == 6 ? ~std::uint64_t{0} : (std::uint64_t{1} << (1 << d)) - 1;
  const std::uint64_t top = std::uint64_t{1} << ((1 << d) - 1);
  if (mask == full || mask == (full & ~top)) return true;
  return static_cast<std::size_t>(d) == n && (mask == 0 || mask == 1);
}

struct LemmaViolation {
  std::uint64_t mask;
  int boxes;
  int omega;
  bool member;
  friend bool operator==(const LemmaViolation&, const LemmaViolation&) = default;
};

using OmegaHistogram = std::map<std::pair<int, int>, std::uint64_t>;  // (N, omega) -> count

struct LemmaReport {
  std::size_t n = 0;
  int d = 0;
  std::uint64_t total_configs = 0;
  std::uint64_t members = 0;
  std::uint64_t claim_mismatches = 0;  // melting-rule G vs the claimed membership list
  std::vector<LemmaViolation> violations;
  OmegaHistogram histogram;

  bool holds() const { return violations.empty() && claim_mismatches == 0; }

  /// max omega per box count N.
  std::map<int, int> envelope() const {
    std::map<int, int> out;
    for (const auto& [key, count] : histogram) {
      auto [it, inserted] = out.try_emplace(key.first, key.second);
      if (!inserted) it->second = std::max(it->second, key.second);
    }
    return out;
  }

  friend bool operator==(const LemmaReport&, const LemmaReport&) = default;
};

namespace detail {

inline void merge_histogram(OmegaHistogram& into, const OmegaHistogram& from) {
  for (const auto& [key, count] : from) into[key] += count;
}

}  // namespace detail

/// Exhaustive check over every down-set of HC^(d) at the origin in dimension n.
inline LemmaReport verify_lemma(std::size_t n, int d, unsigned jobs = 1) {
  if (n % 2 != 0 || n < 4) throw InputError("verify_lemma needs even n >= 4");
  if (d < 1 || static_cast<std::size_t>(d) > n) throw InputError("verify_lemma needs 1 <= d <= n");
  detail::check_exhaustive(d);
  const HypercubeOmega omega_at(n, d);

  auto visit = [&](LemmaReport& acc, std::uint64_t mask) {
    const int boxes = std::popcount(mask);
    const int omega = omega_at(mask);
    const bool member = hypercube_target_in_G(d, n, [mask](std::uint32_t c) { return (mask >> c & 1u) != 0; });
    ++acc.total_configs;
    ++acc.histogram[{boxes, omega}];
    if (member) ++acc.members;
    if (member != claimed_G_member(mask, d, n)) ++acc.claim_mismatches;
    if (member ? omega != 1 : omega > 0) acc.violations.push_back({mask, boxes, omega, member});
  };
  auto merge = [](LemmaReport& total, LemmaReport& part) {
    total.total_configs += part.total_configs;
    total.members += part.members;
    total.claim_mismatches += part.claim_mismatches;
    total.violations.insert(total.violations.end(), part.violations.begin(), part.violations.end());
    detail::merge_histogram(total.histogram, part.histogram);
  };
  LemmaReport report = reduce_downsets<LemmaReport>(
      d, jobs, [] { return LemmaReport{}; }, visit, merge);
  report.n = n;
  report.d = d;
  return report;
}

/// CSV rows "N,omega,count" sorted by (N, omega).
inline std::string histogram_csv(const OmegaHistogram& histogram) {
  std::ostringstream os;
  os << "N,omega,count\n";
  for (const auto& [key, count] : histogram) os << key.first << ',' << key.second << ',' << count << '\n';
  return os.str();
}

inline std::string scatter_csv(const LemmaReport& report) { return histogram_csv(report.histogram); }

/// Distinct projected cube points c with c + (m of the cube weights) = c(top).
inline std::uint64_t neighbor_count(int d, int m, std::size_t n = 0) {
  if (n == 0) n = static_cast<std::size_t>(d);
  if (d < 1 || static_cast<std::size_t>(d) > n || m < 0 || m > d) throw InputError("neighbor_count needs 0 <= m <= d <= n");
  const auto axes = first_axes(static_cast<std::size_t>(d));
  const std::uint32_t cells = std::uint32_t{1} << d;
  const Box origin(n);
  const ProjectedPoint target = project(cell_box(origin, axes, cells - 1));
  std::set<ProjectedPoint> found;
  for (std::uint32_t cell = 0; cell < cells; ++cell) {
    const ProjectedPoint c = project(cell_box(origin, axes, cell));
    for (std::uint32_t s = 0; s < cells; ++s) {
      if (std::popcount(s) == m && c.shifted_by_axes(s) == target) found.insert(c);
    }
  }
  return found.size();
}

inline std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

struct HypercubeOmegaClosedForm {
  int omega_hc;  // without the vacuum term
  int omega0;
};

/// Alternating neighbour sums for the full cube: sum_{m=1}^{d} C(d,m)(-1)^{m+1}
/// when d < n; when d = n the two corner classes are replaced by the
/// 2K-cluster, giving sum_{m=1}^{n-1} C(n,m)(-1)^{m+1} - 2 plus the vacuum.
inline HypercubeOmegaClosedForm omega_hypercube_closed_form(std::size_t n, int d) {
  if (d < 1 || static_cast<std::size_t>(d) > n) throw InputError("closed form needs 1 <= d <= n");
  if (static_cast<std::size_t>(d) == n && n % 2 != 0) throw InputError("closed form for d = n needs even n");
  auto alternating = [](int top, int dd) {
    std::int64_t s = 0;
    for (int m = 1; m <= top; ++m) s += binomial(dd, m) * (m % 2 == 1 ? 1 : -1);
    return static_cast<int>(s);
  };
  if (static_cast<std::size_t>(d) < n) {
    const int w = alternating(d, d);
    return {w, w};
  }
  const int w = alternating(d - 1, d) - 2;
  return {w, 1 + w};
}

}  // namespace chargelat
