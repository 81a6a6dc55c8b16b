// SPDX-License-Identifier: MIT
//
// Radial analyzer. The rank-one-plus-spherical Hessian assembly is checked
// against a hand-expanded cubic profile and the finite-difference oracle on
// an annulus; the probe-grid classifier must sort the three stock profiles
// into their known regularity classes and stay stable under grid refinement.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "d2lab/fd.hpp"
#include "d2lab/radial.hpp"
#include "d2lab/sampling.hpp"

using namespace d2lab;

TEST_CASE("square profile: Hessian is 2I and the Laplacian is 2n") {
    const radial::RadialProfile p = radial::profile_square();
    const Vec x = {0.3, -0.2, 0.7};
    const block::PointEval pe = radial_hessian(p, x);
    for (int i = 0; i < 3; ++i) {
        CHECK(pe.hessian(i, i) == doctest::Approx(2.0).epsilon(1e-14));
        for (int j = 0; j < 3; ++j) {
            if (i != j) CHECK(std::abs(pe.hessian(i, j)) < 1e-13);
        }
    }
    CHECK(pe.laplacian == doctest::Approx(6.0).epsilon(1e-14));
}

TEST_CASE("cubic profile matches the hand expansion at x = (1,2,2)") {
    // psi = s^3: psi' = 3 s^2, psi'' = 6 s. At s = 3 the off-diagonal factor
    // psi''/s^2 - psi'/s^3 is 2 - 1 = 1 and the diagonal is 9 + x_i^2.
    radial::RadialProfile cubic;
    cubic.name = "cubic";
    cubic.psi = [](double s) { return s * s * s; };
    cubic.psi1 = [](double s) { return 3.0 * s * s; };
    cubic.psi2 = [](double s) { return 6.0 * s; };

    const Vec x = {1.0, 2.0, 2.0};
    const block::PointEval pe = radial_hessian(cubic, x);
    CHECK(pe.value == doctest::Approx(27.0).epsilon(1e-14));
    const double want_grad[3] = {9.0, 18.0, 18.0};
    const double want_hess[3][3] = {
        {10.0, 2.0, 2.0}, {2.0, 13.0, 4.0}, {2.0, 4.0, 13.0}};
    for (int i = 0; i < 3; ++i) {
        CHECK(pe.gradient[i] == doctest::Approx(want_grad[i]).epsilon(1e-14));
        for (int j = 0; j < 3; ++j) {
            CHECK(pe.hessian(i, j) ==
                  doctest::Approx(want_hess[i][j]).epsilon(1e-13));
        }
    }
    CHECK(pe.laplacian == doctest::Approx(36.0).epsilon(1e-13));
}

TEST_CASE("trace reproduces the Laplacian on annulus samples") {
    const radial::RadialProfile p = radial::profile_s4_sin();
    for (const Vec& x : sampling::annulus_points(3, 80, 1e-2, 1.0, 11u)) {
        const block::PointEval pe = radial_hessian(p, x);
        const double scale = std::max(1.0, std::abs(pe.laplacian));
        CHECK(std::abs(pe.hessian.trace() - pe.laplacian) <= 1e-12 * scale);
    }
}

TEST_CASE("analytic radial Hessian agrees with the FD oracle") {
    const radial::RadialProfile p = radial::profile_s4_sin();
    const fd::Field f = [&p](const Vec& x) { return p.psi(norm2(x)); };
    for (const Vec& x : sampling::annulus_points(3, 100, 1e-2, 1.0, 3u)) {
        const double rho = norm2(x);
        fd::FdConfig cfg;
        cfg.base_step = std::min(0.02, 0.1 * rho);
        cfg.coord_floor = rho;
        const block::PointEval pe = radial_hessian(p, x);
        const Mat fh = fd::fd_hessian(f, x, cfg);
        double scale = 1e-14;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                scale = std::max(scale, std::abs(pe.hessian(i, j)));
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                CHECK(std::abs(fh(i, j) - pe.hessian(i, j)) <= 1e-5 * scale);
            }
        }
    }
}

TEST_CASE("classifier sorts the stock profiles and is refinement-stable") {
    SUBCASE("square is C2 with both limits equal to 2") {
        const radial::RadialReport rep =
            radial::classify_radial(radial::profile_square());
        CHECK(rep.classification == radial::RadialClass::C2);
        CHECK(rep.lim_psi1_over_s == radial::Lim1::finite);
        CHECK(rep.lim_psi2 == radial::Lim2::finite);
        CHECK(rep.lim1_value == doctest::Approx(2.0).epsilon(1e-9));
        CHECK(rep.lim2_value == doctest::Approx(2.0).epsilon(1e-9));
        CHECK(rep.hypotheses_ok);
        CHECK(rep.lhopital_ok);
        CHECK(rep.case_f_ok);
        CHECK(radial::classify_radial(radial::profile_square(), 2)
                  .classification == radial::RadialClass::C2);
    }
    SUBCASE("s^3 sin(1/s) is not twice differentiable") {
        const radial::RadialReport rep =
            radial::classify_radial(radial::profile_s3_sin());
        CHECK(rep.classification ==
              radial::RadialClass::not_twice_differentiable);
        CHECK(rep.lim_psi1_over_s == radial::Lim1::absent);
        CHECK(rep.hypotheses_ok);
        CHECK(rep.case_f_ok);
        CHECK(radial::classify_radial(radial::profile_s3_sin(), 2)
                  .classification ==
              radial::RadialClass::not_twice_differentiable);
    }
    SUBCASE("s^4 sin(1/s) has the bounded discontinuous Hessian") {
        const radial::RadialReport rep =
            radial::classify_radial(radial::profile_s4_sin());
        CHECK(rep.classification ==
              radial::RadialClass::twice_diff_bounded_discontinuous_hessian);
        CHECK(rep.lim_psi1_over_s == radial::Lim1::finite);
        CHECK(rep.lim_psi2 == radial::Lim2::absent_bounded);
        CHECK(rep.hypotheses_ok);
        CHECK(rep.lhopital_ok);
        CHECK(rep.case_f_ok);
        CHECK(radial::classify_radial(radial::profile_s4_sin(), 2)
                  .classification ==
              radial::RadialClass::twice_diff_bounded_discontinuous_hessian);
    }
}

TEST_CASE("argument validation") {
    CHECK_THROWS_AS(radial::classify_radial(radial::profile_square(), 0),
                    std::invalid_argument);
    CHECK_THROWS_AS(radial::classify_radial(radial::profile_square(), 9),
                    std::invalid_argument);
    const radial::RadialProfile p = radial::profile_square();
    CHECK_THROWS_AS(radial_hessian(p, Vec{0.0, 0.0, 0.0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(radial_hessian(p, Vec{0.5}), std::invalid_argument);
}
