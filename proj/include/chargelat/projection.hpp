#pragma once

// Exact lattice home of the projection c(l) = sum_i l_i h_i modulo the
// Calabi-Yau relation sum_i h_i = 0. Integer vectors differing by a multiple
// of (1,...,1) project to the same point; the canonical representative has
// minimal component zero.

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "chargelat/box.hpp"

namespace chargelat {

class ProjectedPoint {
 public:
  ProjectedPoint() = default;

  /// Canonical class of an arbitrary integer vector.
  template <class Int>
  static ProjectedPoint from_lattice(std::span<const Int> l) {
    if (l.empty() || l.size() > kMaxDim) throw InputError("projected point dimension out of range");
    ProjectedPoint p;
    p.n_ = static_cast<std::uint8_t>(l.size());
    for (std::size_t i = 0; i < l.size(); ++i) p.l_[i] = static_cast<std::int32_t>(l[i]);
    p.normalize();
    return p;
  }

  static ProjectedPoint origin(std::size_t n) {
    std::array<int, kMaxDim> zero{};
    return from_lattice(std::span<const int>(zero.data(), n));
  }

  std::size_t dim() const { return n_; }
  int operator[](std::size_t i) const { return l_[i]; }
  std::span<const std::int32_t> coords() const { return {l_.data(), n_}; }

  bool is_origin() const {
    return std::all_of(l_.begin(), l_.begin() + n_, [](std::int32_t v) { return v == 0; });
  }

  /// Adds `sign` along every axis whose bit is set in `axes`.
  ProjectedPoint shifted_by_axes(std::uint32_t axes, int sign = 1) const {
    ProjectedPoint p = *this;
    for (std::size_t i = 0; i < n_; ++i) {
      if (axes >> i & 1u) p.l_[i] += sign;
    }
    p.normalize();
    return p;
  }

  ProjectedPoint shifted_by_axis(std::size_t axis, int sign = 1) const {
    return shifted_by_axes(std::uint32_t{1} << axis, sign);
  }

  /// Canonical class of (this - other).
  ProjectedPoint minus(const ProjectedPoint& other) const {
    ProjectedPoint p = *this;
    for (std::size_t i = 0; i < n_; ++i) p.l_[i] -= other.l_[i];
    p.normalize();
    return p;
  }

  /// If the canonical vector is 0/1-valued, its support as an axis bitmask.
  std::optional<std::uint32_t> binary_support() const {
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      if (l_[i] > 1) return std::nullopt;
      if (l_[i] == 1) mask |= std::uint32_t{1} << i;
    }
    return mask;
  }

  friend bool operator==(const ProjectedPoint&, const ProjectedPoint&) = default;
  friend auto operator<=>(const ProjectedPoint& a, const ProjectedPoint& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return std::lexicographical_compare_three_way(a.l_.begin(), a.l_.begin() + a.n_, b.l_.begin(),
                                                  b.l_.begin() + b.n_);
  }

  friend std::ostream& operator<<(std::ostream& os, const ProjectedPoint& p) {
    os << '[';
    for (std::size_t i = 0; i < p.n_; ++i) os << (i ? "," : "") << p.l_[i];
    return os << ']';
  }

 private:
  void normalize() {
    const std::int32_t lo = *std::min_element(l_.begin(), l_.begin() + n_);
    for (std::size_t i = 0; i < n_; ++i) l_[i] -= lo;
  }

  std::uint8_t n_ = 0;
  std::array<std::int32_t, kMaxDim> l_{};
};

inline ProjectedPoint project(const Box& b) {
  std::array<int, kMaxDim> l{};
  for (std::size_t i = 0; i < b.dim(); ++i) l[i] = b[i];
  return ProjectedPoint::from_lattice(std::span<const int>(l.data(), b.dim()));
}

/// Canonical class of p.l + deltas.
inline ProjectedPoint shift(const ProjectedPoint& p, std::span<const int> deltas) {
  if (deltas.size() != p.dim()) throw InputError("shift: delta length does not match dimension");
  std::array<std::int64_t, kMaxDim> l{};
  for (std::size_t i = 0; i < p.dim(); ++i) l[i] = std::int64_t{p[i]} + deltas[i];
  return ProjectedPoint::from_lattice(std::span<const std::int64_t>(l.data(), p.dim()));
}

}  // namespace chargelat
