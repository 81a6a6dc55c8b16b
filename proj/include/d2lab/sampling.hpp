// SPDX-License-Identifier: MIT
//
// Deterministic low-discrepancy point sets. All sampling sweeps in the
// laboratory draw from Halton sequences with a fixed seed offset, so every
// report is reproducible byte for byte.

#pragma once

#include <cstdint>
#include <vector>

#include "d2lab/linalg.hpp"

namespace d2lab::sampling {

/// Radical-inverse (van der Corput) value of `index` in the given prime
/// base; lies in [0, 1).
double halton(std::uint64_t index, int base);

/// Point of the n-dimensional Halton sequence (bases 2, 3, 5, ...). The seed
/// shifts the start index, keeping sequences disjoint across suites while
/// staying fully deterministic. Supports n <= 8.
Vec halton_point(std::uint64_t index, int n, std::uint64_t seed = 0);

/// `count` unit direction vectors, derived from Halton points by rejection
/// of the cube-to-ball map (deterministic for fixed seed).
std::vector<Vec> sphere_dirs(int n, std::size_t count, std::uint64_t seed = 0);

/// `count` points with |x| <= radius, distributed uniformly in volume.
std::vector<Vec> ball_points(int n, std::size_t count, double radius,
                             std::uint64_t seed = 0);

/// `count` points with rmin <= |x| <= rmax, log-uniform in radius so small
/// scales are covered as densely as large ones.
std::vector<Vec> annulus_points(int n, std::size_t count, double rmin, double rmax,
                                std::uint64_t seed = 0);

} // namespace d2lab::sampling
