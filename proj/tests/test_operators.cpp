// SPDX-License-Identifier: MIT
//
// Geometric evaluators and the determinant side conditions. Mean curvature
// and the second fundamental form get hand-computed oracles; the profile
// conditions phi^(n-1) phi' and phi^(n-1) phi'' have closed-form tails; the
// planar obstruction ratio has the exact value sqrt(11/2) for the harmonic
// sqrt profile ladder.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "d2lab/operators.hpp"

using namespace d2lab;

namespace {

ladder::Ladder make_ladder(int n, const char* sel,
                           ladder::TRule rule = ladder::TRule::harmonic) {
    ladder::LadderParams p;
    p.n = n;
    p.phi = phi::make_phi(sel);
    p.K = 10;
    p.signed_sum = true;
    p.t_rule = rule;
    return ladder::build_ladder(p);
}

} // namespace

TEST_CASE("det_hessian: diagonal and exactly singular cases") {
    block::PointEval pe(3);
    pe.hessian(0, 0) = 2.0;
    pe.hessian(1, 1) = 3.0;
    pe.hessian(2, 2) = 4.0;
    CHECK(ops::det_hessian(pe) == doctest::Approx(24.0).epsilon(1e-14));

    const block::PointEval zero(3);
    CHECK(ops::det_hessian(zero) == 0.0);
}

TEST_CASE("zero gradient collapses the graph geometry exactly") {
    // With grad u = 0: W = 1, so H == laplacian and sff == hessian, bitwise.
    block::PointEval pe(3);
    pe.hessian(0, 0) = 0.3;
    pe.hessian(1, 1) = -0.7;
    pe.hessian(2, 2) = 0.123456789;
    pe.hessian(0, 1) = pe.hessian(1, 0) = 0.05;
    pe.laplacian = pe.hessian.trace();
    const ops::GeometryEval geo = ops::mean_curvature(pe);
    CHECK(geo.H == pe.laplacian);
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            CHECK(geo.sff(i, j) == pe.hessian(i, j));
        }
    }
    CHECK(geo.lap == pe.laplacian);
}

TEST_CASE("mean curvature matches a hand-computed planar case") {
    // grad = (3/4, 0), hess = [[1.2, 0.3], [0.3, -0.4]]:
    // W = 5/4, H = 0.8/1.25 - (0.5625 * 1.2)/1.953125 = 0.2944.
    block::PointEval pe(2);
    pe.gradient[0] = 0.75;
    pe.hessian(0, 0) = 1.2;
    pe.hessian(1, 1) = -0.4;
    pe.hessian(0, 1) = pe.hessian(1, 0) = 0.3;
    pe.laplacian = 0.8;
    const ops::GeometryEval geo = ops::mean_curvature(pe);
    CHECK(geo.H == doctest::Approx(0.2944).epsilon(1e-14));
    CHECK(geo.sff(0, 1) == doctest::Approx(0.24).epsilon(1e-14));
    CHECK(geo.sff(0, 0) == doctest::Approx(0.96).epsilon(1e-14));
    CHECK(geo.detH == doctest::Approx(-0.57).epsilon(1e-14));
}

TEST_CASE("profile side conditions have closed-form tails") {
    SUBCASE("log profile in n = 3 passes with tail (ln 1e6)^2 / 1e6") {
        const ops::MaConditionReport rep =
            ops::ma_conditions_check(phi::make_phi("log"), 3);
        REQUIRE(rep.rows.size() == 6);
        CHECK(rep.rows.front().s == 10.0);
        CHECK(rep.pass);
        CHECK_FALSE(rep.flagged());
        const double l6 = std::log(1e6);
        CHECK(rep.tail_d1 == doctest::Approx(l6 * l6 * 1e-6).epsilon(1e-12));
        CHECK(rep.tail_d2 ==
              doctest::Approx(-l6 * l6 * 1e-12).epsilon(1e-12));
    }
    SUBCASE("sqrt profile fails: phi phi' is the constant 1/2") {
        const ops::MaConditionReport rep =
            ops::ma_conditions_check(phi::make_phi("pow:0.5"), 2);
        CHECK(rep.tail_d1 == doctest::Approx(0.5).epsilon(1e-14));
        CHECK_FALSE(rep.pass);
        CHECK(rep.flagged());
        CHECK(rep.flag == "n=2 construction unsupported");
    }
    SUBCASE("sqrt profile in n = 3 diverges outright") {
        const ops::MaConditionReport rep =
            ops::ma_conditions_check(phi::make_phi("pow:0.5"), 3);
        // phi^2 phi' = s/2 * s^(-1/2) = sqrt(s)/2 -> 500 at s = 1e6.
        CHECK(rep.tail_d1 == doctest::Approx(500.0).epsilon(1e-12));
        CHECK_FALSE(rep.pass);
        CHECK_FALSE(rep.flagged()); // the flag marks n = 2 only
    }
    SUBCASE("loglog passes in high dimension") {
        CHECK(ops::ma_conditions_check(phi::make_phi("loglog"), 5).pass);
    }
    CHECK_THROWS_AS(ops::ma_conditions_check(phi::make_phi("log"), 1),
                    std::invalid_argument);
}

TEST_CASE("planar obstruction: sampled suprema blow up at the exact rate") {
    const ladder::Ladder lad = make_ladder(2, "pow:0.5");
    const ops::ObstructionTable tab = ops::ma_obstruction_demo(lad);
    REQUIRE(tab.rows.size() == 10);
    CHECK(tab.increasing);
    CHECK(tab.ratio_ok);
    CHECK(tab.min_ratio == 2.3);
    // M(k) = e^(-1/2) sqrt(2(k+1)), so the exact end-to-end ratio is
    // sqrt(22)/sqrt(4) = sqrt(11/2); the sampled one sits within grid error.
    const double exact = std::sqrt(5.5);
    CHECK(std::abs(tab.ratio - exact) / exact < 1e-3);
    for (const ops::ObstructionRow& row : tab.rows) {
        // A grid sup never exceeds the true sup and the log grid is dense
        // enough to land within 0.1% of it.
        CHECK(row.M_sampled <= row.M * (1.0 + 1e-12));
        CHECK(row.M_sampled >= row.M * (1.0 - 1e-3));
    }
    CHECK_THROWS_AS(ops::ma_obstruction_demo(make_ladder(3, "pow:0.5")),
                    std::invalid_argument);
}

TEST_CASE("level_table is deterministic and execution-mode independent") {
    const ladder::Ladder lad = make_ladder(3, "log");
    const auto a = ops::level_table(lad, 40, 7, sweep::Exec::parallel);
    const auto b = ops::level_table(lad, 40, 7, sweep::Exec::parallel);
    const auto c = ops::level_table(lad, 40, 7, sweep::Exec::serial);
    REQUIRE(a.size() == 10);
    REQUIRE(b.size() == a.size());
    REQUIRE(c.size() == a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].max_abs_lap == b[i].max_abs_lap);
        CHECK(a[i].max_abs_det == b[i].max_abs_det);
        CHECK(a[i].max_abs_H == b[i].max_abs_H);
        CHECK(a[i].max_abs_lap == c[i].max_abs_lap);
        CHECK(a[i].max_abs_det == c[i].max_abs_det);
        CHECK(a[i].max_abs_H == c[i].max_abs_H);
        CHECK(a[i].sff12_plus == c[i].sff12_plus);
    }
    CHECK_THROWS_AS(ops::level_table(lad, 0), std::invalid_argument);
}

TEST_CASE("level table trends: decay of lap and det, witness band for sff") {
    const ladder::Ladder lad = make_ladder(3, "log");
    const auto rows = ops::level_table(lad, 60, 0);
    REQUIRE(rows.size() == 10);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        CHECK(rows[i].max_abs_lap <= rows[i - 1].max_abs_lap);
    }
    // eps_k = 1/M_k shrinks only logarithmically for the log profile, so ten
    // levels halve the Laplacian sup rather than crushing it.
    CHECK(rows.back().max_abs_lap < 0.6 * rows.front().max_abs_lap);
    CHECK(rows.back().max_abs_det < rows.front().max_abs_det);
    for (const ops::LevelRow& row : rows) {
        // sff(1,2) at the witnesses brackets +-1/2.
        CHECK(row.sff12_plus > 0.4);
        CHECK(row.sff12_plus < 0.6);
        CHECK(row.sff12_minus == doctest::Approx(-row.sff12_plus).epsilon(1e-9));
    }
}
