#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>

#include "chargelat/errors.hpp"

namespace chargelat {

inline constexpr std::size_t kMaxDim = 16;
inline constexpr int kMaxCoord = 0xFFFF;

/// One cell of Z^n_{>=0}. Axes are 0-based throughout the library.
class Box {
 public:
  Box() = default;

  /// The origin of Z^n.
  explicit Box(std::size_t n) : n_(checked_dim(n)) {}

  Box(std::initializer_list<int> coords) : Box(std::span<const int>(coords.begin(), coords.size())) {}

  explicit Box(std::span<const int> coords) : n_(checked_dim(coords.size())) {
    for (std::size_t i = 0; i < coords.size(); ++i) {
      if (coords[i] < 0 || coords[i] > kMaxCoord) {
        throw InputError("box coordinate out of range: " + std::to_string(coords[i]));
      }
      c_[i] = static_cast<std::uint16_t>(coords[i]);
    }
  }

  std::size_t dim() const { return n_; }
  int operator[](std::size_t i) const { return c_[i]; }

  int sum() const {
    int s = 0;
    for (std::size_t i = 0; i < n_; ++i) s += c_[i];
    return s;
  }

  Box plus(std::size_t axis) const {
    if (c_[axis] == kMaxCoord) throw InputError("box coordinate overflow");
    Box b = *this;
    ++b.c_[axis];
    return b;
  }

  std::optional<Box> minus(std::size_t axis) const {
    if (c_[axis] == 0) return std::nullopt;
    Box b = *this;
    --b.c_[axis];
    return b;
  }

  friend bool operator==(const Box&, const Box&) = default;
  friend auto operator<=>(const Box& a, const Box& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return std::lexicographical_compare_three_way(a.c_.begin(), a.c_.begin() + a.n_, b.c_.begin(),
                                                  b.c_.begin() + b.n_);
  }

  friend std::ostream& operator<<(std::ostream& os, const Box& b) {
    os << '(';
    for (std::size_t i = 0; i < b.n_; ++i) os << (i ? "," : "") << b.c_[i];
    return os << ')';
  }

 private:
  static std::uint8_t checked_dim(std::size_t n) {
    if (n < 1 || n > kMaxDim) throw InputError("dimension must be in [1, 16], got " + std::to_string(n));
    return static_cast<std::uint8_t>(n);
  }

  std::uint8_t n_ = 0;
  std::array<std::uint16_t, kMaxDim> c_{};
};

/// e_axis in dimension n.
inline Box unit_box(std::size_t n, std::size_t axis) { return Box(n).plus(axis); }

}  // namespace chargelat
