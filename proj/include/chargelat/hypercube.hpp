#pragma once

// Hypercube configurations HC^(d): the 2^d cells origin + sum_i delta_i e_{axes[i]},
// delta in {0,1}^d. Cell index bit i is delta_i, so cell 0 is the origin and
// cell 2^d - 1 is the top. A partition inside the cube is a down-set of the
// Boolean lattice on the cells.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "chargelat/box.hpp"
#include "chargelat/errors.hpp"
#include "chargelat/parallel.hpp"
#include "chargelat/partition.hpp"

namespace chargelat {

inline constexpr int kMaxSubdim = 16;
inline constexpr int kMaxExhaustiveSubdim = 6;

using CellMask = boost::dynamic_bitset<std::uint64_t>;

inline void check_axes(std::size_t n, std::span<const std::size_t> axes) {
  if (axes.empty() || axes.size() > static_cast<std::size_t>(kMaxSubdim)) {
    throw InputError("hypercube needs 1 <= d <= 16 axes");
  }
  std::set<std::size_t> seen;
  for (std::size_t a : axes) {
    if (a >= n) throw InputError("hypercube axis " + std::to_string(a + 1) + " outside [1, n]");
    if (!seen.insert(a).second) throw InputError("duplicate hypercube axis " + std::to_string(a + 1));
  }
}

inline Box cell_box(const Box& origin, std::span<const std::size_t> axes, std::uint32_t cell) {
  Box b = origin;
  for (std::size_t i = 0; i < axes.size(); ++i) {
    if (cell >> i & 1u) b = b.plus(axes[i]);
  }
  return b;
}

/// The 2^d boxes of HC^(d)(origin, axes), in cell-index order.
inline std::vector<Box> make_hypercube(const Box& origin, std::span<const std::size_t> axes) {
  check_axes(origin.dim(), axes);
  const std::uint32_t cells = std::uint32_t{1} << axes.size();
  std::vector<Box> out;
  out.reserve(cells);
  for (std::uint32_t c = 0; c < cells; ++c) out.push_back(cell_box(origin, axes, c));
  return out;
}

inline std::vector<std::size_t> first_axes(std::size_t d) {
  std::vector<std::size_t> axes(d);
  for (std::size_t i = 0; i < d; ++i) axes[i] = i;
  return axes;
}

/// True iff every set cell has all of its immediate predecessors set.
inline bool is_down_closed(const CellMask& mask, int d) {
  for (std::size_t cell = mask.find_first(); cell != CellMask::npos; cell = mask.find_next(cell)) {
    for (int j = 0; j < d; ++j) {
      if ((cell >> j & 1u) && !mask.test(cell ^ (std::size_t{1} << j))) return false;
    }
  }
  return true;
}

class HypercubeConfig {
 public:
  HypercubeConfig(Box origin, std::vector<std::size_t> axes, CellMask mask)
      : origin_(std::move(origin)), axes_(std::move(axes)), mask_(std::move(mask)) {
    check_axes(origin_.dim(), axes_);
    if (mask_.size() != std::size_t{1} << axes_.size()) throw InputError("hypercube mask has wrong length");
    if (!is_down_closed(mask_, subdim())) throw InputError("hypercube mask is not down-closed");
  }

  /// Origin 0 and axes (0..d-1) in dimension n.
  static HypercubeConfig at_origin(std::size_t n, int d, CellMask mask) {
    return HypercubeConfig(Box(n), first_axes(static_cast<std::size_t>(d)), std::move(mask));
  }

  static HypercubeConfig at_origin(std::size_t n, int d, std::uint64_t bits) {
    CellMask mask(std::size_t{1} << d, bits);
    return at_origin(n, d, std::move(mask));
  }

  int subdim() const { return static_cast<int>(axes_.size()); }
  std::size_t cells() const { return mask_.size(); }
  std::uint32_t top_cell() const { return static_cast<std::uint32_t>(cells() - 1); }
  const Box& origin() const { return origin_; }
  const std::vector<std::size_t>& axes() const { return axes_; }
  const CellMask& mask() const { return mask_; }
  std::size_t box_count() const { return mask_.count(); }
  bool empty() const { return mask_.none(); }
  bool full() const { return mask_.all(); }

  Box box_of(std::uint32_t cell) const { return cell_box(origin_, axes_, cell); }
  Box top() const { return box_of(top_cell()); }

  std::vector<Box> boxes() const {
    std::vector<Box> out;
    for (std::size_t c = mask_.find_first(); c != CellMask::npos; c = mask_.find_next(c)) {
      out.push_back(box_of(static_cast<std::uint32_t>(c)));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  /// The configuration as a partition of Z^n; requires origin 0.
  Partition to_partition() const {
    if (origin_ != Box(origin_.dim())) throw InputError("only origin-anchored hypercubes are partitions");
    return Partition::from_sorted_unchecked(origin_.dim(), boxes());
  }

 private:
  Box origin_;
  std::vector<std::size_t> axes_;
  CellMask mask_;
};

/// Membership claim for configurations anchored at 0 with target = top cell:
/// {HC - top, HC} when d < n, plus {empty, {0}} when d = n.
inline bool hypercube_G_characterization(const HypercubeConfig& config, std::size_t n) {
  const std::size_t count = config.box_count();
  const std::size_t cells = config.cells();
  if (count == cells) return true;
  if (count == cells - 1 && !config.mask().test(config.top_cell())) return true;
  if (static_cast<std::size_t>(config.subdim()) == n) {
    if (count == 0) return true;
    if (count == 1 && config.mask().test(0)) return true;
  }
  return false;
}

/// G-membership of an origin-anchored cube configuration with the top cell as
/// target, decided by the melting rule on the only lattice boxes that can
/// project onto the top: the top itself (outside boxes congruent to it need
/// predecessors outside the cube), and when d = n also the origin, since
/// top - (1,...,1) = 0.
template <class HasCell>
bool hypercube_target_in_G(int d, std::size_t n, HasCell&& has) {
  const std::uint32_t top = (std::uint32_t{1} << d) - 1;
  if (has(top)) return true;  // removable: its successors lie outside the cube
  bool top_addable = true;
  for (int j = 0; j < d && top_addable; ++j) top_addable = has(top ^ (std::uint32_t{1} << j));
  if (top_addable) return true;
  if (static_cast<std::size_t>(d) == n) {
    if (!has(0)) return true;  // empty: origin addable
    bool only_origin = true;
    for (int j = 0; j < d && only_origin; ++j) only_origin = !has(std::uint32_t{1} << j);
    if (only_origin) return true;  // {0}: origin removable
  }
  return false;
}

// -- Exhaustive down-set enumeration (d <= 6, masks fit in 64 bits) --------

namespace detail {

struct DownsetTables {
  int d;
  int cells;
  std::vector<int> order;                // topological: popcount, then index
  std::vector<std::uint64_t> preds;      // immediate predecessors of each cell

  explicit DownsetTables(int subdim) : d(subdim), cells(1 << subdim) {
    order.resize(static_cast<std::size_t>(cells));
    for (int c = 0; c < cells; ++c) order[static_cast<std::size_t>(c)] = c;
    std::stable_sort(order.begin(), order.end(),
                     [](int a, int b) { return std::popcount(unsigned(a)) < std::popcount(unsigned(b)); });
    preds.assign(static_cast<std::size_t>(cells), 0);
    for (int c = 0; c < cells; ++c) {
      for (int j = 0; j < d; ++j) {
        if (c >> j & 1) preds[static_cast<std::size_t>(c)] |= std::uint64_t{1} << (c ^ (1 << j));
      }
    }
  }

  // Include-first DFS over cells in topological order from position `pos`.
  template <class Visit>
  void dfs(int pos, std::uint64_t mask, Visit& visit) const {
    while (pos < cells) {
      const int cell = order[static_cast<std::size_t>(pos)];
      const std::uint64_t need = preds[static_cast<std::size_t>(cell)];
      if ((mask & need) == need) {
        dfs(pos + 1, mask | (std::uint64_t{1} << cell), visit);
      }
      ++pos;  // exclude branch, iteratively
    }
    visit(mask);
  }

  struct Prefix {
    int pos;
    std::uint64_t mask;
  };

  // Partial states after deciding the first `depth` cells, in DFS order.
  std::vector<Prefix> prefixes(int depth) const {
    std::vector<Prefix> out;
    std::function<void(int, std::uint64_t)> walk = [&](int pos, std::uint64_t mask) {
      if (pos == depth) {
        out.push_back({pos, mask});
        return;
      }
      const int cell = order[static_cast<std::size_t>(pos)];
      const std::uint64_t need = preds[static_cast<std::size_t>(cell)];
      if ((mask & need) == need) walk(pos + 1, mask | (std::uint64_t{1} << cell));
      walk(pos + 1, mask);
    };
    walk(0, 0);
    return out;
  }
};

inline void check_exhaustive(int d) {
  if (d < 1) throw InputError("down-set enumeration needs d >= 1");
  if (d > kMaxExhaustiveSubdim) {
    throw IntractableError("exhaustive enumeration of HC^(" + std::to_string(d) +
                           ") down-sets is intractable (d > 6); use the Monte Carlo sampler");
  }
}

}  // namespace detail

/// Visits every down-closed mask of HC^(d) exactly once, in a fixed order;
/// returns the number visited.
template <class Visitor>
std::uint64_t enumerate_downsets(int d, Visitor&& visitor) {
  detail::check_exhaustive(d);
  const detail::DownsetTables tables(d);
  std::uint64_t count = 0;
  auto visit = [&](std::uint64_t mask) {
    ++count;
    visitor(mask);
  };
  tables.dfs(0, 0, visit);
  return count;
}

/// Parallel enumeration: the search tree is cut after the rank <= 2 cells into
/// subtrees, each folded into its own accumulator; accumulators are merged in
/// subtree order. The cut does not depend on `jobs`, so the result does not
/// either, and subtree order equals the sequential visit order.
template <class Acc, class MakeAcc, class Visit, class Merge>
Acc reduce_downsets(int d, unsigned jobs, MakeAcc&& make, Visit&& visit, Merge&& merge) {
  detail::check_exhaustive(d);
  const detail::DownsetTables tables(d);
  const int depth = std::min(tables.cells, 1 + d + d * (d - 1) / 2);
  const auto prefixes = tables.prefixes(depth);
  std::vector<Acc> partial;
  partial.reserve(prefixes.size());
  for (std::size_t i = 0; i < prefixes.size(); ++i) partial.push_back(make());
  run_tasks(prefixes.size(), jobs, [&](std::size_t i) {
    Acc& acc = partial[i];
    auto fold = [&](std::uint64_t mask) { visit(acc, mask); };
    tables.dfs(prefixes[i].pos, prefixes[i].mask, fold);
  });
  Acc total = make();
  for (Acc& acc : partial) merge(total, acc);
  return total;
}

inline std::uint64_t count_downsets(int d, unsigned jobs = 1) {
  return reduce_downsets<std::uint64_t>(
      d, jobs, [] { return std::uint64_t{0}; }, [](std::uint64_t& acc, std::uint64_t) { ++acc; },
      [](std::uint64_t& total, const std::uint64_t& part) { total += part; });
}

}  // namespace chargelat
