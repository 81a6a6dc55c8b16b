// SPDX-License-Identifier: MIT
//
// Planar gallery fixtures. Values are closed-form, so the tests pin them
// directly; the report columns built from the FD oracle are checked against
// independently derived expressions for the pure-second-derivative gap
//   w_xx - w_yy at (r/sqrt2, r/sqrt2) = 4 G(m) + 8 m G'(m),  m = r^2,
// which is 4 ln N - 8/N for the log amplitude and
// 4 sin(ln N) - (8/N) cos(ln N) for the sine amplitude, with N = -ln m.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "d2lab/gallery.hpp"

using namespace d2lab;

TEST_CASE("values: exact zeros and closed forms on the axis") {
    using gallery::Which;
    CHECK(gallery::gallery_value(Which::log_amplitude, {0.0, 0.0}) == 0.0);
    // On the diagonal x^2 - y^2 vanishes exactly in floating point too.
    CHECK(gallery::gallery_value(Which::log_amplitude, {0.125, 0.125}) == 0.0);
    CHECK(gallery::gallery_value(Which::sin_log_amplitude, {0.1, 0.1}) == 0.0);

    for (double r : {1e-1, 1e-2, 1e-3, 1e-5}) {
        const double N = -std::log(r * r);
        const double want_log = r * r * std::log(N);
        const double want_sin = r * r * std::sin(std::log(N));
        CHECK(gallery::gallery_value(Which::log_amplitude, {r, 0.0}) ==
              doctest::Approx(want_log).epsilon(1e-14));
        CHECK(gallery::gallery_value(Which::sin_log_amplitude, {0.0, r}) ==
              doctest::Approx(-want_sin).epsilon(1e-14));
    }

    CHECK_THROWS_AS(gallery::gallery_value(Which::log_amplitude, {0.6, 0.0}),
                    std::domain_error);
    CHECK_THROWS_AS(
        gallery::gallery_value(Which::log_amplitude, {0.1, 0.1, 0.1}),
        std::invalid_argument);
}

TEST_CASE("gallery_eval returns the zero record at the origin") {
    const block::PointEval pe =
        gallery::gallery_eval(gallery::Which::log_amplitude, {0.0, 0.0});
    CHECK(pe.value == 0.0);
    CHECK(pe.laplacian == 0.0);
    for (int i = 0; i < 2; ++i) {
        CHECK(pe.gradient[i] == 0.0);
        for (int j = 0; j < 2; ++j) CHECK(pe.hessian(i, j) == 0.0);
    }
}

TEST_CASE("log amplitude report: unbounded gap, quiet Laplacian") {
    const gallery::GalleryReport rep =
        gallery::gallery_report(gallery::Which::log_amplitude);
    REQUIRE(rep.rows.size() == 5);
    for (std::size_t i = 0; i < rep.rows.size(); ++i) {
        const gallery::GalleryRow& row = rep.rows[i];
        CHECK(row.r == doctest::Approx(std::pow(10.0, -2.0 - double(i)))
                           .epsilon(1e-12));
        const double N = -std::log(row.r * row.r);
        const double want = 4.0 * std::log(N) - 8.0 / N;
        CHECK(row.cross_gap == doctest::Approx(want).epsilon(1e-3));
    }
    CHECK(rep.cross_exceeds_10_with_small_lap);
    CHECK(rep.band_shrinks);
    CHECK(rep.remainder_grows);
    // |w|/r^2 on the axis is |ln(-ln r^2)| exactly; r = 1e-3 gives ln(6 ln 10).
    CHECK(rep.rows[1].remainder ==
          doctest::Approx(std::log(6.0 * std::log(10.0))).epsilon(1e-9));
    CHECK(rep.rows.back().cross_gap > 10.0);
    CHECK(rep.rows.back().lap_band <= 0.5);
}

TEST_CASE("sine amplitude report: bounded Hessian, oscillating gap") {
    const gallery::GalleryReport rep =
        gallery::gallery_report(gallery::Which::sin_log_amplitude);
    REQUIRE(rep.rows.size() == 5);
    for (const gallery::GalleryRow& row : rep.rows) {
        const double N = -std::log(row.r * row.r);
        const double lnN = std::log(N);
        const double want = 4.0 * std::sin(lnN) - (8.0 / N) * std::cos(lnN);
        CHECK(std::abs(row.cross_gap - want) < 1e-2);
        CHECK(row.remainder <= 1.0);
    }
    CHECK(rep.hess_sup <= 10.0);
    CHECK(rep.cross_spread >= 0.5);
}
