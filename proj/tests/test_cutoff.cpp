// SPDX-License-Identifier: MIT
//
// The fixed smooth cutoff eta. The bump-quotient form has closed-form
// symmetry values at the midpoint of the transition, exact plateaus, and
// exponentially flat joins; the FD oracle cross-checks d1/d2 inside the
// transition with steps adapted to the local smoothness scale.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "d2lab/cutoff.hpp"
#include "d2lab/fd.hpp"

using namespace d2lab;

namespace {

// Steps for FD checks in the transition (1/2, 2/3): the bump B(x) = e^(-1/x)
// varies on the scale x^2 near its edge, so the step shrinks quadratically
// with the distance to the nearer join.
fd::FdConfig shell_cfg(double s) {
    fd::FdConfig cfg;
    const double margin = std::min(2.0 / 3.0 - s, s - 0.5);
    cfg.base_step = 0.05 * margin * margin;
    cfg.coord_floor = 1.0; // absolute steps
    return cfg;
}

} // namespace

TEST_CASE("plateau and support are exact") {
    const cutoff::SmoothCutoff eta = cutoff::make_cutoff();
    for (const double s : {0.0, 0.1, 0.25, 0.49999, 0.5}) {
        CHECK(eta.value(s) == 1.0);
        CHECK(eta.d1(s) == 0.0);
        CHECK(eta.d2(s) == 0.0);
    }
    for (const double s : {2.0 / 3.0, 0.7, 1.0, 100.0}) {
        CHECK(eta.value(s) == 0.0);
        CHECK(eta.d1(s) == 0.0);
        CHECK(eta.d2(s) == 0.0);
    }
}

TEST_CASE("midpoint symmetry: eta(7/12) = 1/2 and eta'(7/12) = -72") {
    // At the midpoint both bump arguments equal 1/12, so the quotient is
    // exactly 1/2 and the derivative reduces to -B'(a)/(2B(a)) = -1/(2a^2)
    // with a = 1/12, i.e. -72.
    const cutoff::SmoothCutoff eta = cutoff::make_cutoff();
    // fl(2/3) - fl(7/12) and fl(7/12) - 1/2 differ in the last ulp, and the
    // quotient amplifies that to ~1e-14 relative, so the tolerances are a
    // shade above that rather than exact.
    const double mid = 7.0 / 12.0;
    CHECK(eta.value(mid) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(eta.d1(mid) == doctest::Approx(-72.0).epsilon(1e-10));
}

TEST_CASE("eta is non-increasing on a fine grid") {
    const cutoff::SmoothCutoff eta = cutoff::make_cutoff();
    double prev = eta.value(0.0);
    for (int i = 1; i <= 1000; ++i) {
        const double s = 0.8 * i / 1000.0;
        const double v = eta.value(s);
        CHECK(v <= prev + 1e-15);
        CHECK(v >= 0.0);
        CHECK(v <= 1.0);
        prev = v;
    }
}

TEST_CASE("derivatives match the FD oracle inside the transition") {
    const cutoff::SmoothCutoff eta = cutoff::make_cutoff();
    const auto f = [&eta](double s) { return eta.value(s); };
    for (const double s : {0.52, 0.55, 0.58333, 0.61, 0.64}) {
        const fd::FdConfig cfg = shell_cfg(s);
        const double d1 = fd::fd_d1(f, s, cfg);
        const double d2 = fd::fd_d2(f, s, cfg);
        INFO("s = ", s);
        const double scale1 = std::max(1.0, std::abs(eta.d1(s)));
        const double scale2 = std::max(1.0, std::abs(eta.d2(s)));
        CHECK(std::abs(d1 - eta.d1(s)) / scale1 < 1e-7);
        CHECK(std::abs(d2 - eta.d2(s)) / scale2 < 1e-5);
    }
}

TEST_CASE("joins are numerically flat from inside the transition") {
    // Approaching either join from inside, value and both derivatives decay
    // below any fixed tolerance well before the join itself: the quotient is
    // exponentially flat there.
    const cutoff::SmoothCutoff eta = cutoff::make_cutoff();
    CHECK(std::abs(eta.value(2.0 / 3.0 - 1e-4)) < 1e-100);
    CHECK(std::abs(eta.d1(2.0 / 3.0 - 1e-4)) < 1e-90);
    CHECK(std::abs(eta.d2(2.0 / 3.0 - 1e-4)) < 1e-80);
    CHECK(1.0 - eta.value(0.5 + 1e-4) < 1e-100);
    CHECK(std::abs(eta.d1(0.5 + 1e-4)) < 1e-90);
    CHECK(std::abs(eta.d2(0.5 + 1e-4)) < 1e-80);
}
