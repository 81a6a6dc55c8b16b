// SPDX-License-Identifier: MIT
//
// Vector and matrix helpers: these are the substrate every other module sits
// on, so the determinant in particular gets independent closed-form oracles.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "d2lab/linalg.hpp"

using namespace d2lab;

TEST_CASE("vector arithmetic and norms") {
    const Vec a{3.0, -4.0, 0.0};
    const Vec b{1.0, 2.0, -2.0};

    CHECK(dot(a, b) == doctest::Approx(3.0 - 8.0 + 0.0));
    CHECK(norm2(a) == doctest::Approx(5.0));
    CHECK(norm_inf(a) == 4.0);

    const Vec s = a + b;
    CHECK(s[0] == 4.0);
    CHECK(s[1] == -2.0);
    CHECK(s[2] == -2.0);

    const Vec d = a - b;
    CHECK(d[0] == 2.0);
    CHECK(d[1] == -6.0);
    CHECK(d[2] == 2.0);

    const Vec c = 2.5 * b;
    CHECK(c[0] == 2.5);
    CHECK(c[1] == 5.0);
    CHECK(c[2] == -5.0);
}

TEST_CASE("Mat accessors, trace, and max norms") {
    Mat m(3);
    m(0, 0) = 1.0;
    m(1, 1) = -7.0;
    m(2, 2) = 2.0;
    m(0, 2) = 5.0;
    m(2, 0) = 4.0;

    CHECK(m.dim() == 3);
    CHECK(m.trace() == doctest::Approx(-4.0));
    CHECK(m.max_abs() == 7.0);
    CHECK(m.max_asym() == doctest::Approx(1.0));

    m *= -2.0;
    CHECK(m(1, 1) == 14.0);

    Mat z(3);
    const Mat diff = m - z;
    CHECK(diff(0, 2) == m(0, 2));
}

TEST_CASE("det_lu reproduces closed-form determinants") {
    SUBCASE("diagonal") {
        Mat m(3);
        m(0, 0) = 2.0;
        m(1, 1) = 3.0;
        m(2, 2) = 4.0;
        CHECK(det_lu(m) == doctest::Approx(24.0).epsilon(1e-14));
    }
    SUBCASE("permutation flips the sign") {
        // Swap of two rows of the identity: determinant -1.
        Mat m(3);
        m(0, 1) = 1.0;
        m(1, 0) = 1.0;
        m(2, 2) = 1.0;
        CHECK(det_lu(m) == doctest::Approx(-1.0).epsilon(1e-14));
    }
    SUBCASE("general 3x3 against cofactor expansion") {
        Mat m(3);
        const double a[3][3] = {{2.0, -1.0, 3.0}, {0.5, 4.0, -2.0}, {1.0, 0.0, 1.5}};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) m(i, j) = a[i][j];
        const double oracle = a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
                              a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
                              a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
        CHECK(det_lu(m) == doctest::Approx(oracle).epsilon(1e-14));
    }
    SUBCASE("exactly singular matrices return exact zero") {
        // Two equal rows. The LU loop must short-circuit, not accumulate
        // rounding residue.
        Mat m(3);
        for (int j = 0; j < 3; ++j) {
            m(0, j) = 1.0 + j;
            m(1, j) = 1.0 + j;
            m(2, j) = 7.0 - j;
        }
        CHECK(det_lu(m) == 0.0);

        const Mat zero(4);
        CHECK(det_lu(zero) == 0.0);
    }
    SUBCASE("empty matrix is rejected") {
        CHECK_THROWS_AS(det_lu(Mat()), std::invalid_argument);
    }
}
