// SPDX-License-Identifier: MIT
//
// Deterministic point sets and the parallel sweep kernels. The contract that
// everything else leans on: identical bytes for identical inputs, and the
// parallel path bitwise-equal to the serial reference.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "d2lab/linalg.hpp"
#include "d2lab/sampling.hpp"
#include "d2lab/sweep.hpp"

using namespace d2lab;

TEST_CASE("radical inverse in base 2 and 3 matches hand values") {
    CHECK(sampling::halton(1, 2) == 0.5);
    CHECK(sampling::halton(2, 2) == 0.25);
    CHECK(sampling::halton(3, 2) == 0.75);
    CHECK(sampling::halton(4, 2) == 0.125);
    CHECK(sampling::halton(5, 2) == 0.625);
    CHECK(sampling::halton(1, 3) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(sampling::halton(2, 3) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
    CHECK(sampling::halton(3, 3) == doctest::Approx(1.0 / 9.0).epsilon(1e-15));
    CHECK(sampling::halton(4, 3) == doctest::Approx(4.0 / 9.0).epsilon(1e-15));
    for (int i = 1; i < 200; ++i) {
        const double v = sampling::halton(static_cast<std::uint64_t>(i), 2);
        CHECK(v >= 0.0);
        CHECK(v < 1.0);
    }
}

TEST_CASE("halton_point is deterministic and seed-shifted") {
    const Vec a = sampling::halton_point(7, 3, 0);
    const Vec b = sampling::halton_point(7, 3, 0);
    REQUIRE(a.size() == 3);
    for (int i = 0; i < 3; ++i) CHECK(a[i] == b[i]);

    const Vec c = sampling::halton_point(7, 3, 1000);
    bool differs = false;
    for (int i = 0; i < 3; ++i) differs = differs || (a[i] != c[i]);
    CHECK(differs);

    CHECK_THROWS_AS(sampling::halton_point(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(sampling::halton_point(1, 9), std::invalid_argument);
}

TEST_CASE("point sets satisfy their geometric contracts") {
    SUBCASE("sphere directions are unit") {
        for (const int n : {2, 3, 5}) {
            const auto dirs = sampling::sphere_dirs(n, 200, 42);
            REQUIRE(dirs.size() == 200);
            for (const Vec& d : dirs) {
                CHECK(std::abs(norm2(d) - 1.0) < 1e-12);
            }
        }
    }
    SUBCASE("ball points stay inside and fill the volume") {
        const double radius = 0.37;
        const auto pts = sampling::ball_points(3, 500, radius, 7);
        REQUIRE(pts.size() == 500);
        double rmax = 0.0;
        for (const Vec& p : pts) {
            const double r = norm2(p);
            CHECK(r <= radius + 1e-12);
            rmax = std::max(rmax, r);
        }
        // Uniform-in-volume samples concentrate near the boundary.
        CHECK(rmax > 0.9 * radius);
        CHECK_THROWS_AS(sampling::ball_points(3, 10, 0.0), std::invalid_argument);
    }
    SUBCASE("annulus points respect both radii") {
        const auto pts = sampling::annulus_points(2, 300, 1e-4, 1e-1, 3);
        REQUIRE(pts.size() == 300);
        double rmin_seen = 1.0, rmax_seen = 0.0;
        for (const Vec& p : pts) {
            const double r = norm2(p);
            CHECK(r >= 1e-4 * (1.0 - 1e-12));
            CHECK(r <= 1e-1 * (1.0 + 1e-12));
            rmin_seen = std::min(rmin_seen, r);
            rmax_seen = std::max(rmax_seen, r);
        }
        // Log-uniform radius: both decades end up populated.
        CHECK(rmin_seen < 1e-3);
        CHECK(rmax_seen > 1e-2);
        CHECK_THROWS_AS(sampling::annulus_points(2, 10, 0.1, 0.1),
                        std::invalid_argument);
    }
}

TEST_CASE("tabulate: parallel result is bitwise equal to serial") {
    const std::size_t n = 10000;
    const auto f = [](std::size_t i) {
        const double x = 1e-3 * static_cast<double>(i);
        return std::sin(x) * std::exp(-x) + std::cos(3.0 * x);
    };
    const std::vector<double> s = sweep::tabulate<double>(n, sweep::Exec::serial, f);
    const std::vector<double> p =
        sweep::tabulate<double>(n, sweep::Exec::parallel, f);
    REQUIRE(s.size() == p.size());
    for (std::size_t i = 0; i < n; ++i) {
        REQUIRE(s[i] == p[i]); // bitwise, not approximate
    }
}

TEST_CASE("max_abs_over: parallel reduction is bitwise equal to serial") {
    const std::size_t n = 50000;
    const auto f = [](std::size_t i) {
        const double x = static_cast<double>(i) * 1e-4 - 2.0;
        return x * std::sin(7.0 * x);
    };
    const double s = sweep::max_abs_over(n, sweep::Exec::serial, f);
    const double p = sweep::max_abs_over(n, sweep::Exec::parallel, f);
    CHECK(s == p);
    CHECK(s > 0.0);
    CHECK(sweep::max_abs_over(0, sweep::Exec::parallel, f) == 0.0);
}

TEST_CASE("both execution modes reject non-finite samples alike") {
    const auto bad_nan = [](std::size_t i) {
        return i == 12345 ? std::numeric_limits<double>::quiet_NaN() : 1.0;
    };
    const auto bad_inf = [](std::size_t i) {
        return i == 23456 ? std::numeric_limits<double>::infinity() : 1.0;
    };
    CHECK_THROWS_AS(sweep::max_abs_over(50000, sweep::Exec::serial, bad_nan),
                    std::domain_error);
    CHECK_THROWS_AS(sweep::max_abs_over(50000, sweep::Exec::parallel, bad_nan),
                    std::domain_error);
    CHECK_THROWS_AS(sweep::max_abs_over(50000, sweep::Exec::serial, bad_inf),
                    std::domain_error);
    CHECK_THROWS_AS(sweep::max_abs_over(50000, sweep::Exec::parallel, bad_inf),
                    std::domain_error);
}
