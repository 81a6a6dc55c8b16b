// SPDX-License-Identifier: MIT

#include "d2lab/sampling.hpp"

#include <cmath>
#include <stdexcept>

namespace d2lab::sampling {

namespace {

constexpr int kBases[8] = {2, 3, 5, 7, 11, 13, 17, 19};

void require_dim(int n) {
    if (n < 1 || n > 8) {
        throw std::invalid_argument("sampling: dimension must lie in [1,8]");
    }
}

// Direction from consecutive Halton points by rejection: map the n-cube to
// [-1,1]^n and keep vectors whose norm lands in [0.1, 1], then normalize.
// The lower cut avoids amplifying discretization noise near the origin.
Vec next_dir(int n, std::uint64_t& index, std::uint64_t seed) {
    for (;;) {
        const Vec u = halton_point(index++, n, seed);
        Vec v(u.size());
        for (std::size_t i = 0; i < u.size(); ++i) v[i] = 2.0 * u[i] - 1.0;
        const double len = norm2(v);
        if (len >= 0.1 && len <= 1.0) {
            for (double& c : v) c /= len;
            return v;
        }
    }
}

} // namespace

double halton(std::uint64_t index, int base) {
    double f = 1.0;
    double r = 0.0;
    std::uint64_t i = index;
    while (i > 0) {
        f /= static_cast<double>(base);
        r += f * static_cast<double>(i % static_cast<std::uint64_t>(base));
        i /= static_cast<std::uint64_t>(base);
    }
    return r;
}

Vec halton_point(std::uint64_t index, int n, std::uint64_t seed) {
    require_dim(n);
    // Index 0 maps to the origin of the unit cube in every base; skip it and
    // apply the seed as a plain start offset.
    const std::uint64_t shifted = index + 1 + seed;
    Vec p(static_cast<std::size_t>(n));
    for (int d = 0; d < n; ++d) {
        p[static_cast<std::size_t>(d)] = halton(shifted, kBases[d]);
    }
    return p;
}

std::vector<Vec> sphere_dirs(int n, std::size_t count, std::uint64_t seed) {
    require_dim(n);
    std::vector<Vec> dirs;
    dirs.reserve(count);
    std::uint64_t index = 0;
    for (std::size_t i = 0; i < count; ++i) {
        dirs.push_back(next_dir(n, index, seed));
    }
    return dirs;
}

std::vector<Vec> ball_points(int n, std::size_t count, double radius,
                             std::uint64_t seed) {
    require_dim(n);
    if (!(radius > 0.0)) {
        throw std::invalid_argument("sampling: ball radius must be positive");
    }
    std::vector<Vec> pts;
    pts.reserve(count);
    std::uint64_t dir_index = 0;
    const int rbase = kBases[n % 8]; // first base unused by the direction dims
    for (std::size_t i = 0; i < count; ++i) {
        Vec dir = next_dir(n, dir_index, seed);
        // An extra Halton dimension drives the radius; u^(1/n) makes the
        // distribution uniform in volume.
        const double u = halton(i + 1 + seed, rbase);
        const double rho = radius * std::pow(u, 1.0 / static_cast<double>(n));
        for (double& c : dir) c *= rho;
        pts.push_back(std::move(dir));
    }
    return pts;
}

std::vector<Vec> annulus_points(int n, std::size_t count, double rmin, double rmax,
                                std::uint64_t seed) {
    require_dim(n);
    if (!(rmin > 0.0) || !(rmax > rmin)) {
        throw std::invalid_argument("sampling: need 0 < rmin < rmax");
    }
    std::vector<Vec> pts;
    pts.reserve(count);
    std::uint64_t dir_index = 0;
    const int rbase = kBases[n % 8];
    const double lmin = std::log(rmin);
    const double lmax = std::log(rmax);
    for (std::size_t i = 0; i < count; ++i) {
        Vec dir = next_dir(n, dir_index, seed);
        const double u = halton(i + 1 + seed, rbase);
        const double rho = std::exp(lmin + u * (lmax - lmin));
        for (double& c : dir) c *= rho;
        pts.push_back(std::move(dir));
    }
    return pts;
}

} // namespace d2lab::sampling
