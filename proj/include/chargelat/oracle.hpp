#pragma once

// Independent route to the pole ledger: expand psi(u) into its literal linear
// factors with exact rational roots, group equal roots, and only then map the
// groups back to lattice points. Shares no factor tables with build_ledger.

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <sstream>
#include <vector>

#include "chargelat/charge.hpp"
#include "chargelat/errors.hpp"
#include "chargelat/partition.hpp"
#include "chargelat/weights.hpp"

namespace chargelat {

namespace detail {

using LatticeVec = std::array<std::int64_t, kMaxDim>;

class RootMultiset {
 public:
  RootMultiset(std::size_t n, const WeightAssignment& w) : n_(n), w_(w) {}

  // A root at sum_i lattice_i h_i with the given net order.
  void add(const LatticeVec& lattice, int order) {
    Rational value = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      if (lattice[i] != 0) value += lattice[i] * w_[i];
    }
    const ProjectedPoint label = ProjectedPoint::from_lattice(std::span<const std::int64_t>(lattice.data(), n_));
    auto [it, inserted] = groups_.try_emplace(value, Group{0, label});
    if (!inserted && it->second.label != label) {
      std::ostringstream os;
      os << "roots " << it->second.label << " and " << label << " coincide at " << to_string(value)
         << "; weights are not generic enough";
      throw GenericityError(os.str());
    }
    it->second.order += order;
  }

  PoleLedger to_ledger() const {
    PoleLedger ledger(n_);
    for (const auto& [value, g] : groups_) ledger.add(g.label, g.order);
    return ledger;
  }

 private:
  struct Group {
    int order;
    ProjectedPoint label;
  };
  std::size_t n_;
  const WeightAssignment& w_;
  std::map<Rational, Group> groups_;
};

inline LatticeVec lattice_of(const Box& b) {
  LatticeVec v{};
  for (std::size_t i = 0; i < b.dim(); ++i) v[i] = b[i];
  return v;
}

inline LatticeVec offset(LatticeVec v, std::uint32_t axes, int sign) {
  for (std::size_t i = 0; i < kMaxDim; ++i) {
    if (axes >> i & 1u) v[i] += sign;
  }
  return v;
}

}  // namespace detail

/// Pole ledger of psi built from exact rational roots of its printed factors.
/// Throws GenericityError if two roots at different lattice classes collide.
inline PoleLedger rational_oracle_ledger(const Partition& p, const WeightAssignment& w, const ChargeModel& model) {
  const std::size_t n = p.dim();
  if (w.dim() != n || model.dim() != n) throw InputError("rational_oracle_ledger: dimension mismatch");
  const std::uint32_t all = (std::uint32_t{1} << n) - 1;
  const int k = model.K();
  detail::RootMultiset roots(n, w);

  roots.add(detail::LatticeVec{}, +1);  // 1/u

  for (const Box& b : p) {
    const auto c = detail::lattice_of(b);
    auto denominator_h = [&] {  // 1 / prod_i (u - c - h_i)
      for (std::size_t i = 0; i < n; ++i) roots.add(detail::offset(c, 1u << i, +1), +1);
    };
    auto numerator_plus_h = [&] {  // prod_i (u - c + h_i)
      for (std::size_t i = 0; i < n; ++i) roots.add(detail::offset(c, 1u << i, -1), -1);
    };
    auto numerator_even_sums = [&](int max_m) {  // prod_{m, |S| = 2m} (u - c - sum_S h)
      for (std::uint32_t s = 1; s <= all; ++s) {
        const int size = std::popcount(s);
        if (size % 2 == 0 && size / 2 >= 1 && size / 2 <= max_m) roots.add(detail::offset(c, s, +1), -1);
      }
    };
    switch (model.rule()) {
      case ChargeRule::Young2D:
        denominator_h();
        break;
      case ChargeRule::Plane3D:
        numerator_plus_h();
        denominator_h();
        break;
      case ChargeRule::Solid4D:
        numerator_plus_h();
        for (std::size_t i = 0; i < 4; ++i) {
          for (std::size_t j = i + 1; j < 4; ++j) roots.add(detail::offset(c, (1u << i) | (1u << j), +1), -1);
        }
        denominator_h();
        break;
      case ChargeRule::EvenGeneral:
        numerator_plus_h();
        denominator_h();
        numerator_even_sums(k - 1);
        break;
      case ChargeRule::OddGeneral:
        denominator_h();
        numerator_even_sums(k);
        break;
    }
  }

  // Clusters by brute force over every direction subset.
  for (const Box& b : p) {
    const auto c = detail::lattice_of(b);
    for (std::uint32_t s = 1; s <= all; ++s) {
      bool present = true;
      for (std::size_t i = 0; i < n && present; ++i) {
        if (s >> i & 1u) present = p.contains(b.plus(i));
      }
      if (!present) continue;
      const int size = std::popcount(s) + 1;
      int order = 0;
      switch (model.rule()) {
        case ChargeRule::Young2D:  // u^2 for pairs, 1/u^2 for triples, at c + h_1 + h_2
          order = size == 2 ? -2 : size == 3 ? 2 : 0;
          break;
        case ChargeRule::Plane3D:
          break;
        case ChargeRule::Solid4D:  // 1/u^2, u^2
          order = size == 4 ? 2 : size == 5 ? -2 : 0;
          break;
        case ChargeRule::EvenGeneral:
          if (size == 2 * k) order = 2;
          else if (size == 2 * k + 1) order = -2;
          else if (size % 2 == 0 && size >= 4 && size <= 2 * k - 2) order = 1;
          break;
        case ChargeRule::OddGeneral:
          if (size % 2 == 0 && size >= 4 && size <= 2 * k) order = 1;
          break;
      }
      if (order == 0) continue;
      const std::uint32_t shift = model.rule() == ChargeRule::Young2D ? 0b11u : s;
      roots.add(detail::offset(c, shift, +1), order);
    }
  }
  return roots.to_ledger();
}

inline PoleLedger rational_oracle_ledger(const Partition& p, const WeightAssignment& w) {
  return rational_oracle_ledger(p, w, ChargeModel::for_dimension(p.dim()));
}

/// Whether the two printed numerators of the 4D single-box factor have the
/// same root multiset for these weights: {-h_i} + {h_i+h_j} against
/// {h_i+h_j} + {h_i+h_j+h_k}. Holds exactly when sum h = 0.
inline bool phi1_4d_symmetric_equiv(std::span<const Rational> h) {
  if (h.size() != 4) throw InputError("phi1_4d_symmetric_equiv needs n = 4");
  std::vector<Rational> first;
  std::vector<Rational> second;
  for (std::size_t i = 0; i < 4; ++i) first.push_back(-h[i]);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      first.push_back(h[i] + h[j]);
      second.push_back(h[i] + h[j]);
      for (std::size_t l = j + 1; l < 4; ++l) second.push_back(h[i] + h[j] + h[l]);
    }
  }
  std::sort(first.begin(), first.end());
  std::sort(second.begin(), second.end());
  return first == second;
}

inline bool phi1_4d_symmetric_equiv(const WeightAssignment& w) { return phi1_4d_symmetric_equiv(w.values()); }

}  // namespace chargelat
