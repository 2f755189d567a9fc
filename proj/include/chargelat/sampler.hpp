#pragma once

// Random down-sets of HC^(d) for dimensions too large to enumerate. Two
// samplers: a single-cell toggle chain (symmetric proposals, so uniform
// stationary law) and a sequential growth sampler that hits every box count.

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "chargelat/errors.hpp"
#include "chargelat/hypercube.hpp"
#include "chargelat/lemma.hpp"
#include "chargelat/parallel.hpp"

namespace chargelat {

inline constexpr int kMaxSampleSubdim = 10;

enum class SampleMethod { Chain, Sequential };

inline const char* method_name(SampleMethod m) { return m == SampleMethod::Chain ? "chain" : "sequential"; }

inline SampleMethod parse_method(const std::string& s) {
  if (s == "chain") return SampleMethod::Chain;
  if (s == "sequential") return SampleMethod::Sequential;
  throw InputError("unknown sampling method '" + s + "' (expected chain or sequential)");
}

inline void check_sample_subdim(int d) {
  if (d < 1 || d > kMaxSampleSubdim) throw InputError("sampling needs 1 <= d <= 10");
}

/// Toggle chain on down-sets: pick a uniform cell and flip it iff the result
/// is still down-closed.
class DownsetChain {
 public:
  DownsetChain(int d, std::uint64_t seed) : d_(d), mask_(std::size_t{1} << d), rng_(seed) { check_sample_subdim(d); }

  const CellMask& mask() const { return mask_; }
  std::mt19937_64& rng() { return rng_; }

  /// One proposal; returns whether it was accepted.
  bool step() {
    std::uniform_int_distribution<std::size_t> pick(0, mask_.size() - 1);
    const std::size_t cell = pick(rng_);
    if (mask_.test(cell)) {
      for (int j = 0; j < d_; ++j) {
        if (!(cell >> j & 1u) && mask_.test(cell | (std::size_t{1} << j))) return false;
      }
    } else {
      for (int j = 0; j < d_; ++j) {
        if ((cell >> j & 1u) && !mask_.test(cell ^ (std::size_t{1} << j))) return false;
      }
    }
    mask_.flip(cell);
    return true;
  }

  void run(std::uint64_t steps) {
    for (std::uint64_t i = 0; i < steps; ++i) step();
  }

 private:
  int d_;
  CellMask mask_;
  std::mt19937_64 rng_;
};

inline HypercubeConfig sample_downset_chain(int d, std::uint64_t seed, std::uint64_t steps, std::size_t n = 0) {
  DownsetChain chain(d, seed);
  chain.run(steps);
  return HypercubeConfig::at_origin(n == 0 ? static_cast<std::size_t>(d) : n, d, chain.mask());
}

/// Grows from the empty set, adding a uniformly chosen addable cell until
/// `target_boxes` cells are present.
template <class Rng>
CellMask grow_downset(int d, std::size_t target_boxes, Rng& rng) {
  check_sample_subdim(d);
  const std::size_t cells = std::size_t{1} << d;
  if (target_boxes > cells) throw InputError("target box count exceeds 2^d");
  CellMask mask(cells);
  std::vector<std::uint32_t> addable{0};
  for (std::size_t placed = 0; placed < target_boxes; ++placed) {
    std::uniform_int_distribution<std::size_t> pick(0, addable.size() - 1);
    const std::size_t at = pick(rng);
    const std::uint32_t cell = addable[at];
    addable[at] = addable.back();
    addable.pop_back();
    mask.set(cell);
    for (int j = 0; j < d; ++j) {
      if (cell >> j & 1u) continue;
      const std::uint32_t up = cell | (std::uint32_t{1} << j);
      bool ready = true;
      for (int i = 0; i < d && ready; ++i) {
        if (up >> i & 1u) ready = mask.test(up ^ (std::uint32_t{1} << i));
      }
      if (ready) addable.push_back(up);
    }
  }
  return mask;
}

inline HypercubeConfig sample_downset_sequential(int d, std::uint64_t seed, std::size_t target_boxes,
                                                 std::size_t n = 0) {
  std::mt19937_64 rng(seed);
  return HypercubeConfig::at_origin(n == 0 ? static_cast<std::size_t>(d) : n, d, grow_downset(d, target_boxes, rng));
}

struct McReport {
  std::size_t n = 0;
  int d = 0;
  SampleMethod method = SampleMethod::Sequential;
  std::uint64_t total_samples = 0;
  std::uint64_t above_bound = 0;         // omega > 1
  std::uint64_t boundary_failures = 0;   // omega != 1 at N in {0, 1, 2^d-1, 2^d} when d = n
  std::uint64_t lemma_violations = 0;    // member with omega != 1, or non-member with omega > 0
  OmegaHistogram histogram;

  bool pass() const { return above_bound == 0 && boundary_failures == 0; }
  friend bool operator==(const McReport&, const McReport&) = default;
};

/// Per-stratum sampling and omega_0 evaluation at the top cell. Sequential:
/// stratum N draws `samples_per_n` down-sets with exactly N cells from the
/// stream seeded by seed ^ N. Chain: 2^d + 1 independent chains seeded by
/// seed ^ t, burn-in 10 * 2^d, then `samples_per_n` states spaced 2^d steps.
inline McReport run_mc_experiment(std::size_t n, int d, std::uint64_t samples_per_n, std::uint64_t seed,
                                  SampleMethod method = SampleMethod::Sequential, unsigned jobs = 1) {
  check_sample_subdim(d);
  if (static_cast<std::size_t>(d) > n) throw InputError("sampling needs d <= n");
  const HypercubeOmega omega_at(n, d);
  const std::size_t cells = std::size_t{1} << d;
  const std::size_t strata = cells + 1;
  std::vector<McReport> parts(strata);

  auto record = [&](McReport& part, const CellMask& mask) {
    if (!is_down_closed(mask, d)) throw std::logic_error("sampler produced a mask violating the melting rule");
    const int boxes = static_cast<int>(mask.count());
    const int omega = omega_at(mask);
    const bool member = hypercube_target_in_G(d, n, [&mask](std::uint32_t c) { return mask.test(c); });
    ++part.total_samples;
    ++part.histogram[{boxes, omega}];
    if (omega > 1) ++part.above_bound;
    const std::size_t bx = static_cast<std::size_t>(boxes);
    const bool boundary = bx == 0 || bx == 1 || bx == cells - 1 || bx == cells;
    if (static_cast<std::size_t>(d) == n && boundary && omega != 1) ++part.boundary_failures;
    if (member ? omega != 1 : omega > 0) ++part.lemma_violations;
  };

  run_tasks(strata, jobs, [&](std::size_t t) {
    McReport& part = parts[t];
    if (method == SampleMethod::Sequential) {
      std::mt19937_64 rng(seed ^ t);
      for (std::uint64_t i = 0; i < samples_per_n; ++i) record(part, grow_downset(d, t, rng));
    } else {
      DownsetChain chain(d, seed ^ t);
      chain.run(10 * cells);
      for (std::uint64_t i = 0; i < samples_per_n; ++i) {
        chain.run(cells);
        record(part, chain.mask());
      }
    }
  });

  McReport report;
  report.n = n;
  report.d = d;
  report.method = method;
  for (const McReport& part : parts) {
    report.total_samples += part.total_samples;
    report.above_bound += part.above_bound;
    report.boundary_failures += part.boundary_failures;
    report.lemma_violations += part.lemma_violations;
    detail::merge_histogram(report.histogram, part.histogram);
  }
  return report;
}

}  // namespace chargelat
