// SPDX-License-Identifier: MIT
//
// The finite-difference oracle itself: exactness on low-degree polynomials,
// observed order of accuracy on transcendental fields, the Richardson boost,
// and the non-finite-sample guard.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>

#include "d2lab/fd.hpp"
#include "d2lab/linalg.hpp"

using namespace d2lab;

namespace {

double bilinear(const Vec& x) {
    return 3.0 + 2.0 * x[0] - x[1] + 0.5 * x[0] * x[1];
}

double smooth3(const Vec& x) {
    return std::sin(x[0]) * std::exp(0.5 * x[1]) + std::cos(x[0] * x[2]);
}

} // namespace

TEST_CASE("central differences are exact on quadratics") {
    // Degree <= 2 has zero truncation error for every central scheme; only
    // rounding remains.
    const Vec x{0.3, -0.7};
    const Vec g = fd::fd_gradient(bilinear, x);
    CHECK(g[0] == doctest::Approx(2.0 + 0.5 * x[1]).epsilon(1e-10));
    CHECK(g[1] == doctest::Approx(-1.0 + 0.5 * x[0]).epsilon(1e-10));

    const Mat h = fd::fd_hessian(bilinear, x);
    CHECK(std::abs(h(0, 0)) < 1e-6);
    CHECK(std::abs(h(1, 1)) < 1e-6);
    CHECK(h(0, 1) == doctest::Approx(0.5).epsilon(1e-7));
    CHECK(h(0, 1) == h(1, 0)); // symmetric by construction, not by luck
}

TEST_CASE("gradient and Hessian match analytic derivatives of a smooth field") {
    const Vec x{0.4, -0.2, 1.1};
    const Vec g = fd::fd_gradient(smooth3, x);
    const double s0 = std::sin(x[0]), c0 = std::cos(x[0]);
    const double e1 = std::exp(0.5 * x[1]);
    const double s02 = std::sin(x[0] * x[2]);
    CHECK(g[0] == doctest::Approx(c0 * e1 - s02 * x[2]).epsilon(1e-10));
    CHECK(g[1] == doctest::Approx(0.5 * s0 * e1).epsilon(1e-10));
    CHECK(g[2] == doctest::Approx(-s02 * x[0]).epsilon(1e-10));

    const Mat h = fd::fd_hessian(smooth3, x);
    const double c02 = std::cos(x[0] * x[2]);
    CHECK(h(0, 0) == doctest::Approx(-s0 * e1 - c02 * x[2] * x[2]).epsilon(1e-7));
    CHECK(h(1, 1) == doctest::Approx(0.25 * s0 * e1).epsilon(1e-7));
    CHECK(h(2, 2) == doctest::Approx(-c02 * x[0] * x[0]).epsilon(1e-7));
    CHECK(h(0, 1) == doctest::Approx(0.5 * c0 * e1).epsilon(1e-7));
    CHECK(h(0, 2) ==
          doctest::Approx(-s02 - c02 * x[0] * x[2]).epsilon(1e-7));
    CHECK(h(1, 2) == doctest::Approx(0.0).epsilon(1e-7));
    CHECK(h.max_asym() == 0.0);
}

TEST_CASE("observed order of accuracy matches the scheme") {
    // Fixed explicit steps, no Richardson: halving h must shrink the error
    // by ~2^order. Measured on sin'(0.5) = cos(0.5).
    const auto f = [](double s) { return std::sin(s); };
    const double x = 0.5;
    const double exact = std::cos(x);

    const auto err_at = [&](fd::Scheme scheme, double h) {
        fd::FdConfig cfg;
        cfg.scheme = scheme;
        cfg.base_step = h;
        cfg.coord_floor = 1.0;
        cfg.richardson = false;
        return std::abs(fd::fd_d1(f, x, cfg) - exact);
    };

    SUBCASE("central2 is second order") {
        const double e1 = err_at(fd::Scheme::central2, 1e-2);
        const double e2 = err_at(fd::Scheme::central2, 5e-3);
        const double rate = std::log2(e1 / e2);
        CHECK(rate > 1.8);
        CHECK(rate < 2.2);
    }
    SUBCASE("central4 is fourth order") {
        const double e1 = err_at(fd::Scheme::central4, 2e-2);
        const double e2 = err_at(fd::Scheme::central4, 1e-2);
        const double rate = std::log2(e1 / e2);
        CHECK(rate > 3.6);
        CHECK(rate < 4.4);
    }
}

TEST_CASE("Richardson extrapolation beats the raw stencil") {
    const auto f = [](double s) { return std::exp(s) * std::sin(2.0 * s); };
    const double x = 0.3;
    const double exact =
        std::exp(x) * (std::sin(2.0 * x) + 2.0 * std::cos(2.0 * x));

    fd::FdConfig raw;
    raw.scheme = fd::Scheme::central2;
    raw.base_step = 1e-3;
    raw.coord_floor = 1.0;
    raw.richardson = false;

    fd::FdConfig rich = raw;
    rich.richardson = true;

    const double e_raw = std::abs(fd::fd_d1(f, x, raw) - exact);
    const double e_rich = std::abs(fd::fd_d1(f, x, rich) - exact);
    CHECK(e_rich < e_raw / 10.0);
}

TEST_CASE("second derivative matches on a closed form") {
    const auto f = [](double s) { return std::log(1.0 + s * s); };
    // f'' = 2(1 - s^2)/(1 + s^2)^2
    const double x = 0.7;
    const double q = 1.0 + x * x;
    const double exact = 2.0 * (1.0 - x * x) / (q * q);
    CHECK(fd::fd_d2(f, x) == doctest::Approx(exact).epsilon(1e-8));
}

TEST_CASE("non-finite stencil samples raise domain_error") {
    SUBCASE("NaN region") {
        const auto f = [](double s) {
            return s > 0.5 ? std::numeric_limits<double>::quiet_NaN() : s;
        };
        fd::FdConfig cfg;
        cfg.base_step = 0.2;
        cfg.coord_floor = 1.0;
        CHECK_THROWS_AS(fd::fd_d1(f, 0.45, cfg), std::domain_error);
    }
    SUBCASE("infinite region reached by the vector stencils") {
        const auto f = [](const Vec& x) {
            return x[0] > 0.5 ? std::numeric_limits<double>::infinity()
                              : x[0] * x[1];
        };
        fd::FdConfig cfg;
        cfg.base_step = 0.2;
        cfg.coord_floor = 1.0;
        const Vec x{0.45, 0.2};
        CHECK_THROWS_AS(fd::fd_gradient(f, x, cfg), std::domain_error);
        CHECK_THROWS_AS(fd::fd_hessian(f, x, cfg), std::domain_error);
    }
}
