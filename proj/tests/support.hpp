#pragma once

// Brute-force oracles used only by tests. None of these call into the code
// paths they check.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "chargelat/box.hpp"
#include "chargelat/partition.hpp"

namespace chargelat::testing {

/// All boxes of Z^n with every coordinate <= bound.
inline std::vector<Box> boxes_up_to(std::size_t n, int bound) {
  std::vector<Box> out;
  std::vector<int> c(n, 0);
  while (true) {
    out.emplace_back(std::span<const int>(c));
    std::size_t i = 0;
    while (i < n && c[i] == bound) c[i++] = 0;
    if (i == n) break;
    ++c[i];
  }
  return out;
}

/// Down-closure by definition: every coordinate decrement stays inside.
inline bool down_closed(const std::set<Box>& s) {
  for (const Box& b : s) {
    for (std::size_t k = 0; k < b.dim(); ++k) {
      if (auto p = b.minus(k); p && !s.contains(*p)) return false;
    }
  }
  return true;
}

/// Boxes b (coords <= bound) not in p such that p + b is down-closed.
inline std::set<Box> brute_addable(const Partition& p, int bound) {
  std::set<Box> base(p.begin(), p.end());
  std::set<Box> out;
  for (const Box& b : boxes_up_to(p.dim(), bound)) {
    if (base.contains(b)) continue;
    auto grown = base;
    grown.insert(b);
    if (down_closed(grown)) out.insert(b);
  }
  return out;
}

inline std::set<Box> brute_removable(const Partition& p) {
  std::set<Box> base(p.begin(), p.end());
  std::set<Box> out;
  for (const Box& b : p) {
    auto shrunk = base;
    shrunk.erase(b);
    if (down_closed(shrunk)) out.insert(b);
  }
  return out;
}

/// Down-closed masks of the Boolean lattice on 2^d cells, by filtering all
/// 2^(2^d) subsets against the order relation (subset inclusion of cells).
inline std::vector<std::uint64_t> brute_downsets(int d) {
  const int cells = 1 << d;
  std::vector<std::uint64_t> out;
  const std::uint64_t limit = std::uint64_t{1} << cells;
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    bool ok = true;
    for (int x = 0; x < cells && ok; ++x) {
      if (!(mask >> x & 1u)) continue;
      for (int y = 0; y < cells && ok; ++y) {
        if ((y & x) == y && !(mask >> y & 1u)) ok = false;  // y below x
      }
    }
    if (ok) out.push_back(mask);
  }
  return out;
}

}  // namespace chargelat::testing
