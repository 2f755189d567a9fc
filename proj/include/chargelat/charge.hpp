#pragma once

// Net pole-order ledger of the charge function psi(u) of a partition. Every
// factor of psi is a product of linear terms (u - c) whose roots sit at
// projected lattice points, so psi is fully described by an integer order at
// each point: +m for a pole of order m, -m for a zero of order m.
//
// Dimension rules (c = c(box), S ranges over axis subsets):
//   n = 2          : poles c+h_1, c+h_2; pair clusters -2, triple clusters +2,
//                    both sitting at c + h_1 + h_2 (= c).
//   n = 3          : poles c+h_i, zeros c-h_i.
//   n = 4          : poles c+h_i, zeros c-h_i and c+h_i+h_j; 4-clusters +2,
//                    5-clusters -2.
//   n = 2K >= 6    : poles c+h_i, zeros c-h_i and c+sum_S h for |S| = 2,4,..,2K-2;
//                    p-clusters +1 for p = 4,6,..,2K-2, +2 for p = 2K, -2 for p = 2K+1.
//   n = 2K+1 >= 5  : poles c+h_i, zeros c+sum_S h for |S| = 2,4,..,2K;
//                    p-clusters +1 for p = 4,6,..,2K.
// A p-cluster rooted at box b with direction set S (|S| = p-1) sits at
// c(b) + sum_{s in S} h_s for n >= 3.
// Plus the vacuum pole +1 at the origin point.

#include <bit>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "chargelat/errors.hpp"
#include "chargelat/partition.hpp"
#include "chargelat/projection.hpp"

namespace chargelat {

inline constexpr std::size_t kMaxChargeDim = 12;

enum class ChargeRule { Young2D, Plane3D, Solid4D, OddGeneral, EvenGeneral };

inline const char* rule_name(ChargeRule r) {
  switch (r) {
    case ChargeRule::Young2D: return "young2d";
    case ChargeRule::Plane3D: return "plane3d";
    case ChargeRule::Solid4D: return "solid4d";
    case ChargeRule::OddGeneral: return "odd";
    case ChargeRule::EvenGeneral: return "even";
  }
  return "?";
}

/// One linear root of the single-box factor, relative to c(box):
/// sign * sum_{i in axes} h_i, with net order `order`.
struct BoxTerm {
  std::uint32_t axes;
  int sign;
  int order;
};

class ChargeModel {
 public:
  /// The established or conjectured rule for dimension n.
  static ChargeModel for_dimension(std::size_t n) {
    if (n < 2 || n > kMaxChargeDim) {
      throw InputError("charge function unsupported for n = " + std::to_string(n) + " (need 2 <= n <= 12)");
    }
    if (n == 2) return ChargeModel(n, ChargeRule::Young2D);
    if (n == 3) return ChargeModel(n, ChargeRule::Plane3D);
    if (n == 4) return ChargeModel(n, ChargeRule::Solid4D);
    return ChargeModel(n, n % 2 ? ChargeRule::OddGeneral : ChargeRule::EvenGeneral);
  }

  /// Explicit rule choice; the general odd/even formulas also apply at n = 3/4.
  static ChargeModel with_rule(std::size_t n, ChargeRule rule) {
    if (n < 2 || n > kMaxChargeDim) throw InputError("charge function unsupported for n = " + std::to_string(n));
    const bool ok = (rule == ChargeRule::Young2D && n == 2) || (rule == ChargeRule::Plane3D && n == 3) ||
                    (rule == ChargeRule::Solid4D && n == 4) || (rule == ChargeRule::OddGeneral && n % 2 == 1) ||
                    (rule == ChargeRule::EvenGeneral && n % 2 == 0 && n >= 4);
    if (!ok) throw InputError(std::string("rule ") + rule_name(rule) + " does not apply to n = " + std::to_string(n));
    return ChargeModel(n, rule);
  }

  std::size_t dim() const { return n_; }
  ChargeRule rule() const { return rule_; }
  int K() const { return static_cast<int>(n_ / 2); }

  const std::vector<BoxTerm>& box_terms() const { return terms_; }

  /// Net order contributed by one p-box cluster, 0 if p carries no factor.
  int cluster_order(int p) const {
    const int k = K();
    switch (rule_) {
      case ChargeRule::Young2D: return p == 2 ? -2 : p == 3 ? 2 : 0;
      case ChargeRule::Plane3D: return 0;
      case ChargeRule::Solid4D: return p == 4 ? 2 : p == 5 ? -2 : 0;
      case ChargeRule::OddGeneral: return (p % 2 == 0 && p >= 4 && p <= 2 * k) ? 1 : 0;
      case ChargeRule::EvenGeneral:
        if (p == 2 * k) return 2;
        if (p == 2 * k + 1) return -2;
        return (p % 2 == 0 && p >= 4 && p <= 2 * k - 2) ? 1 : 0;
    }
    return 0;
  }

  /// Axis mask added to c(origin) to place a cluster with these directions.
  std::uint32_t cluster_shift(std::uint32_t directions) const {
    return rule_ == ChargeRule::Young2D ? 0b11u : directions;
  }

 private:
  ChargeModel(std::size_t n, ChargeRule rule) : n_(n), rule_(rule) { build_terms(); }

  void add_subsets(int size, int order) {
    const std::uint32_t all = (std::uint32_t{1} << n_) - 1;
    for (std::uint32_t s = 1; s <= all; ++s) {
      if (std::popcount(s) == size) terms_.push_back({s, +1, order});
    }
  }

  void build_terms() {
    const int n = static_cast<int>(n_);
    auto poles_plus = [&] {
      for (int i = 0; i < n; ++i) terms_.push_back({std::uint32_t{1} << i, +1, +1});
    };
    auto zeros_minus = [&] {
      for (int i = 0; i < n; ++i) terms_.push_back({std::uint32_t{1} << i, -1, -1});
    };
    switch (rule_) {
      case ChargeRule::Young2D:
        poles_plus();
        break;
      case ChargeRule::Plane3D:
        poles_plus();
        zeros_minus();
        break;
      case ChargeRule::Solid4D:
        // prod (u+h_i) prod_{i<j} (u-h_i-h_j) / prod (u-h_i)
        poles_plus();
        zeros_minus();
        for (int i = 0; i < 4; ++i) {
          for (int j = i + 1; j < 4; ++j) terms_.push_back({(1u << i) | (1u << j), +1, -1});
        }
        break;
      case ChargeRule::EvenGeneral:
        poles_plus();
        zeros_minus();
        for (int m = 1; m <= K() - 1; ++m) add_subsets(2 * m, -1);
        break;
      case ChargeRule::OddGeneral:
        poles_plus();
        for (int m = 1; m <= K(); ++m) add_subsets(2 * m, -1);
        break;
    }
  }

  std::size_t n_;
  ChargeRule rule_;
  std::vector<BoxTerm> terms_;
};

/// phi_p: a box with p-1 distinct unit-offset neighbours, all in the partition.
struct Cluster {
  Box origin;
  std::uint32_t directions;  // axis bitmask, popcount p-1

  int size() const { return std::popcount(directions) + 1; }
  friend bool operator==(const Cluster&, const Cluster&) = default;
};

/// Every cluster of `size` boxes in p, box-major then by direction mask.
inline std::vector<Cluster> enumerate_clusters(const Partition& p, int size) {
  if (size < 2 || size > static_cast<int>(p.dim()) + 1) {
    throw InputError("cluster size must be in [2, n+1]");
  }
  std::vector<Cluster> out;
  for (const Box& b : p) {
    const std::uint32_t succ = p.successor_axes(b);
    if (std::popcount(succ) < size - 1) continue;
    // submasks of succ in increasing numeric order
    for (std::uint32_t s = 0;; s = (s - succ) & succ) {
      if (std::popcount(s) == size - 1) out.push_back({b, s});
      if (s == succ) break;
    }
  }
  return out;
}

/// Lattice point carrying a cluster's factor under the model's convention.
inline ProjectedPoint cluster_projection(const Cluster& c, const ChargeModel& model) {
  return project(c.origin).shifted_by_axes(model.cluster_shift(c.directions));
}

inline ProjectedPoint cluster_projection(const Cluster& c) {
  return cluster_projection(c, ChargeModel::for_dimension(c.origin.dim()));
}

/// Projected point -> nonzero net pole order.
class PoleLedger {
 public:
  explicit PoleLedger(std::size_t n) : n_(n) {}

  std::size_t dim() const { return n_; }

  void add(const ProjectedPoint& q, int delta) {
    if (delta == 0) return;
    auto [it, inserted] = entries_.try_emplace(q, delta);
    if (!inserted) {
      it->second += delta;
      if (it->second == 0) entries_.erase(it);
    }
  }

  int order(const ProjectedPoint& q) const {
    auto it = entries_.find(q);
    return it == entries_.end() ? 0 : it->second;
  }

  const std::map<ProjectedPoint, int>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  std::vector<ProjectedPoint> poles_of_order(int k) const {
    std::vector<ProjectedPoint> out;
    for (const auto& [q, ord] : entries_) {
      if (ord == k) out.push_back(q);
    }
    return out;
  }

  friend bool operator==(const PoleLedger&, const PoleLedger&) = default;

 private:
  std::size_t n_;
  std::map<ProjectedPoint, int> entries_;
};

inline int pole_order(const PoleLedger& ledger, const ProjectedPoint& q) { return ledger.order(q); }

inline constexpr std::uint64_t kDefaultWorkLimit = 100'000'000;

/// Cap on ledger construction work, overridable by CHARGE_LATTICE_WORK_LIMIT.
inline std::uint64_t work_limit() {
  if (const char* env = std::getenv("CHARGE_LATTICE_WORK_LIMIT")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') return v;
  }
  return kDefaultWorkLimit;
}

/// Work estimate |boxes| * (box terms + sum_p C(n, p-1)) over cluster sizes.
inline std::uint64_t ledger_work(const Partition& p, const ChargeModel& model) {
  std::uint64_t per_box = model.box_terms().size();
  const int n = static_cast<int>(p.dim());
  std::uint64_t binom = 1;  // C(n, k) for k = size - 1
  for (int k = 1; k <= n; ++k) {
    binom = binom * static_cast<std::uint64_t>(n - k + 1) / static_cast<std::uint64_t>(k);
    if (model.cluster_order(k + 1) != 0) per_box += binom;
  }
  return per_box * p.size();
}

inline PoleLedger build_ledger(const Partition& p, const ChargeModel& model) {
  if (model.dim() != p.dim()) throw InputError("build_ledger: model and partition dimensions differ");
  if (const auto work = ledger_work(p, model); work > work_limit()) {
    throw WorkLimitError("ledger work " + std::to_string(work) + " exceeds limit " + std::to_string(work_limit()));
  }
  PoleLedger ledger(p.dim());
  ledger.add(ProjectedPoint::origin(p.dim()), +1);
  for (const Box& b : p) {
    const ProjectedPoint c = project(b);
    for (const BoxTerm& t : model.box_terms()) ledger.add(c.shifted_by_axes(t.axes, t.sign), t.order);
  }
  for (const Box& b : p) {
    const std::uint32_t succ = p.successor_axes(b);
    if (std::popcount(succ) < 1) continue;
    const ProjectedPoint c = project(b);
    for (std::uint32_t s = (0 - succ) & succ;; s = (s - succ) & succ) {
      if (const int ord = model.cluster_order(std::popcount(s) + 1); ord != 0) {
        ledger.add(c.shifted_by_axes(model.cluster_shift(s)), ord);
      }
      if (s == succ) break;
    }
  }
  return ledger;
}

inline PoleLedger build_ledger(const Partition& p) { return build_ledger(p, ChargeModel::for_dimension(p.dim())); }

// -- Potential function (even n >= 4) ---------------------------------------

/// Single-box part: net order at `target` from one box at projected point c.
/// The difference target - c must be a 0/1 class; with s set axes it is
/// c + h_i (s = 1, pole), c - h_i (s = n-1, zero), or c + sum_S h with
/// |S| = s even in [2, 2K-2] (zero).
inline int omega_single_box(std::size_t n, const ProjectedPoint& c, const ProjectedPoint& target) {
  const auto support = target.minus(c).binary_support();
  if (!support || *support == 0) return 0;
  const int s = std::popcount(*support);
  const int k = static_cast<int>(n / 2);
  if (s == 1) return 1;
  if (s == static_cast<int>(n) - 1) return -1;
  if (s % 2 == 0 && s <= 2 * k - 2) return -1;
  return 0;
}

/// Cluster weight in the potential: +1 for p in {4,..,2K-2}, +2 at 2K, -2 at 2K+1.
inline int omega_cluster(std::size_t n, int p) {
  const int k = static_cast<int>(n / 2);
  if (p == 2 * k) return 2;
  if (p == 2 * k + 1) return -2;
  if (p % 2 == 0 && p >= 4 && p <= 2 * k - 2) return 1;
  return 0;
}

/// Direction set S with c + sum_S h = target, if the difference is a 0/1
/// class; an empty difference means the full direction set (sum h = 0).
inline std::optional<std::uint32_t> cluster_directions_to(std::size_t n, const ProjectedPoint& c,
                                                          const ProjectedPoint& target) {
  const auto support = target.minus(c).binary_support();
  if (!support) return std::nullopt;
  return *support == 0 ? (std::uint32_t{1} << n) - 1 : *support;
}

/// Cluster part: net order at `target` from all clusters rooted at a box at
/// point c whose in-partition successor axes are `succ`. Only the direction
/// set S with c + sum_S h = target can contribute.
inline int omega_clusters_at(std::size_t n, const ProjectedPoint& c, std::uint32_t succ,
                             const ProjectedPoint& target) {
  const auto dirs = cluster_directions_to(n, c, target);
  if (!dirs || (*dirs & ~succ) != 0) return 0;
  return omega_cluster(n, std::popcount(*dirs) + 1);
}

/// omega_0 at `target`: vacuum + single-box + cluster terms, evaluated
/// directly without building the ledger.
inline int potential_omega0(const Partition& p, const ProjectedPoint& target) {
  const std::size_t n = p.dim();
  if (n % 2 != 0 || n < 4) {
    throw InputError("potential_omega0 is defined for even n >= 4; use build_ledger for n = " + std::to_string(n));
  }
  if (target.dim() != n) throw InputError("potential_omega0: target dimension mismatch");
  int omega = target.is_origin() ? 1 : 0;
  for (const Box& b : p) {
    const ProjectedPoint c = project(b);
    omega += omega_single_box(n, c, target);
    omega += omega_clusters_at(n, c, p.successor_axes(b), target);
  }
  return omega;
}

// -- Property check ---------------------------------------------------------

struct PropertyMismatch {
  ProjectedPoint point;
  int order;
  bool in_addable_or_removable;
};

struct PropertyReport {
  bool simple_poles = true;
  bool bijection = true;
  std::vector<PropertyMismatch> mismatches;

  bool ok() const { return simple_poles && bijection; }
};

/// Checks that psi has only simple poles and that they sit exactly on the
/// projections of the addable and removable boxes, one pole per box.
inline PropertyReport verify_properties(const Partition& p, const ChargeModel& model) {
  const PoleLedger ledger = build_ledger(p, model);
  std::map<ProjectedPoint, int> boundary;  // projection -> number of A/R boxes
  for (const Box& b : addable_set(p)) ++boundary[project(b)];
  for (const Box& b : removable_set(p)) ++boundary[project(b)];

  PropertyReport report;
  for (const auto& [q, ord] : ledger.entries()) {
    if (ord > 1) report.simple_poles = false;
    if (ord > 1 || (ord == 1 && !boundary.contains(q))) {
      report.bijection = false;
      report.mismatches.push_back({q, ord, boundary.contains(q)});
    }
  }
  for (const auto& [q, count] : boundary) {
    const int ord = ledger.order(q);
    if (ord > 1) continue;  // already reported
    if (ord != 1 || count != 1) {
      report.bijection = false;
      report.mismatches.push_back({q, ord, true});
    }
  }
  return report;
}

inline PropertyReport verify_properties(const Partition& p) {
  return verify_properties(p, ChargeModel::for_dimension(p.dim()));
}

}  // namespace chargelat
