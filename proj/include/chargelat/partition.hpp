#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "chargelat/box.hpp"
#include "chargelat/errors.hpp"
#include "chargelat/projection.hpp"

namespace chargelat {

/// A finite down-closed subset of Z^n_{>=0}. Boxes are kept sorted and unique.
class Partition {
 public:
  explicit Partition(std::size_t n) : n_(n) {
    if (n < 1 || n > kMaxDim) throw InputError("dimension must be in [1, 16]");
  }

  std::size_t dim() const { return n_; }
  std::size_t size() const { return boxes_.size(); }
  bool empty() const { return boxes_.empty(); }
  const std::vector<Box>& boxes() const { return boxes_; }
  auto begin() const { return boxes_.begin(); }
  auto end() const { return boxes_.end(); }

  bool contains(const Box& b) const { return std::binary_search(boxes_.begin(), boxes_.end(), b); }

  /// Axes k with b + e_k in the partition, as a bitmask.
  std::uint32_t successor_axes(const Box& b) const {
    std::uint32_t mask = 0;
    for (std::size_t k = 0; k < n_; ++k) {
      if (contains(b.plus(k))) mask |= std::uint32_t{1} << k;
    }
    return mask;
  }

  friend bool operator==(const Partition&, const Partition&) = default;

  /// Builds without checking the melting rule. Callers guarantee down-closure.
  static Partition from_sorted_unchecked(std::size_t n, std::vector<Box> sorted_boxes) {
    Partition p(n);
    p.boxes_ = std::move(sorted_boxes);
    return p;
  }

 private:
  std::size_t n_;
  std::vector<Box> boxes_;
};

/// A box whose predecessor along `axis` is missing.
struct MeltingViolation {
  Box box;
  std::size_t axis;
  friend bool operator==(const MeltingViolation&, const MeltingViolation&) = default;
};

using ValidationResult = std::variant<Partition, std::vector<MeltingViolation>>;

/// Returns the partition if `boxes` is down-closed, else every (box, axis)
/// melting-rule violation in sorted box order. Dimension mismatch and
/// duplicate boxes are input errors, not violations.
inline ValidationResult validate_partition(std::size_t n, std::span<const Box> boxes) {
  std::vector<Box> sorted(boxes.begin(), boxes.end());
  for (const Box& b : sorted) {
    if (b.dim() != n) {
      throw InputError("box of dimension " + std::to_string(b.dim()) + " in a dimension-" +
                       std::to_string(n) + " partition");
    }
  }
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InputError("duplicate box in partition");
  }
  Partition candidate = Partition::from_sorted_unchecked(n, std::move(sorted));
  std::vector<MeltingViolation> violations;
  for (const Box& b : candidate) {
    for (std::size_t k = 0; k < n; ++k) {
      if (auto pred = b.minus(k); pred && !candidate.contains(*pred)) violations.push_back({b, k});
    }
  }
  if (violations.empty()) return candidate;
  return violations;
}

/// validate_partition that throws on violations.
inline Partition make_partition(std::size_t n, std::span<const Box> boxes) {
  auto result = validate_partition(n, boxes);
  if (auto* p = std::get_if<Partition>(&result)) return std::move(*p);
  const auto& v = std::get<std::vector<MeltingViolation>>(result).front();
  std::ostringstream os;
  os << "melting rule violated: box " << v.box << " lacks predecessor along axis " << v.axis + 1;
  throw InputError(os.str());
}

inline Partition make_partition(std::size_t n, std::initializer_list<Box> boxes) {
  return make_partition(n, std::span<const Box>(boxes.begin(), boxes.size()));
}

inline bool is_addable(const Partition& p, const Box& b) {
  if (p.contains(b)) return false;
  for (std::size_t k = 0; k < p.dim(); ++k) {
    if (auto pred = b.minus(k); pred && !p.contains(*pred)) return false;
  }
  return true;
}

inline bool is_removable(const Partition& p, const Box& b) { return p.contains(b) && p.successor_axes(b) == 0; }

inline std::vector<Box> addable_set(const Partition& p) {
  if (p.empty()) return {Box(p.dim())};
  std::set<Box> out;
  for (const Box& b : p) {
    for (std::size_t k = 0; k < p.dim(); ++k) {
      Box next = b.plus(k);
      if (is_addable(p, next)) out.insert(next);
    }
  }
  return {out.begin(), out.end()};
}

inline std::vector<Box> removable_set(const Partition& p) {
  std::vector<Box> out;
  for (const Box& b : p) {
    if (p.successor_axes(b) == 0) out.push_back(b);
  }
  return out;
}

inline Partition with_box(const Partition& p, const Box& b) {
  std::vector<Box> boxes = p.boxes();
  boxes.insert(std::lower_bound(boxes.begin(), boxes.end(), b), b);
  return Partition::from_sorted_unchecked(p.dim(), std::move(boxes));
}

inline Partition without_box(const Partition& p, const Box& b) {
  std::vector<Box> boxes = p.boxes();
  boxes.erase(std::lower_bound(boxes.begin(), boxes.end(), b));
  return Partition::from_sorted_unchecked(p.dim(), std::move(boxes));
}

/// Membership in G(target): some addable or removable box projects onto c(target).
inline bool in_G(const Partition& p, const Box& target) {
  if (target.dim() != p.dim()) throw InputError("in_G: target dimension mismatch");
  const ProjectedPoint want = project(target);
  for (const Box& b : addable_set(p)) {
    if (project(b) == want) return true;
  }
  for (const Box& b : removable_set(p)) {
    if (project(b) == want) return true;
  }
  return false;
}

/// Grows a partition from the empty one by adding uniformly chosen addable
/// boxes, `boxes` times.
template <class Rng>
Partition grow_random_partition(std::size_t n, std::size_t boxes, Rng& rng) {
  Partition p(n);
  for (std::size_t i = 0; i < boxes; ++i) {
    const auto candidates = addable_set(p);
    std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
    p = with_box(p, candidates[pick(rng)]);
  }
  return p;
}

/// Every partition of Z^n_{>=0} with at most `max_boxes` boxes, ordered by
/// size and then by sorted box list.
inline std::vector<Partition> all_partitions_up_to(std::size_t n, std::size_t max_boxes) {
  std::vector<Partition> out{Partition(n)};
  std::vector<Partition> layer{Partition(n)};
  for (std::size_t size = 1; size <= max_boxes; ++size) {
    std::set<std::vector<Box>> next;
    for (const Partition& p : layer) {
      for (const Box& b : addable_set(p)) next.insert(with_box(p, b).boxes());
    }
    layer.clear();
    for (const auto& boxes : next) layer.push_back(Partition::from_sorted_unchecked(n, boxes));
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

}  // namespace chargelat
