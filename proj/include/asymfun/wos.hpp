#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "asymfun/geometry.hpp"

// Walk-on-spheres estimate of the harmonic measure, at a point of
// D_j ∩ B(0,R), of the circular part of the boundary of that set.

namespace asymfun {

struct WosConfig {
  std::size_t n_walks = 100'000;
  /// Absorption distance as a fraction of R.
  double eps_shell = 1e-4;
  std::size_t max_steps = 100'000;
  std::uint64_t seed = 1;
  /// Worker threads; 0 picks the hardware concurrency. Results do not
  /// depend on this value.
  unsigned threads = 0;

  void validate() const;
};

struct WosEstimate {
  double omega_hat = 0.0;
  double ci95_halfwidth = 0.0;
  std::size_t hits = 0;
  std::size_t truncated_walks = 0;
  std::size_t n_walks = 0;
  std::uint64_t seed = 0;
  /// Set when more than 1% of the walks hit max_steps.
  std::optional<std::string> warning;
};

/// Seed of the RNG stream for walk `index`.
std::uint64_t walk_stream_seed(std::uint64_t seed, std::uint64_t index);

/// Walks jump to uniform points on the largest disk around the current
/// point inside D_j ∩ B(0,R) and are absorbed within eps_shell*R of the
/// boundary; a walk counts as a hit when the circle |z| = R is strictly the
/// nearest boundary feature there. Walks exceeding max_steps count as
/// misses. Throws StartOutsideDomain when z1 is not in D_j ∩ B(0,R).
WosEstimate estimate_harmonic_measure(const PathSystem& sys, int j, double R, cplx z1, const WosConfig& cfg);

}  // namespace asymfun
