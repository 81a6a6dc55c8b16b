// SPDX-License-Identifier: MIT
//
// Profile family phi: closed-form derivative oracles, the decay/boundedness
// dichotomy (weighted sup bounded, unweighted witness divergent), and the
// probe certification. All expected numbers here are computed from
// independent closed forms, never from the module under test.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "d2lab/phi.hpp"

using namespace d2lab;
namespace np = std::numbers;

TEST_CASE("log profile matches d/ds ln s oracles") {
    const phi::AdmissiblePhi p = phi::make_phi("log");
    CHECK(p.value(np::e) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(p.d1(np::e) == doctest::Approx(1.0 / np::e).epsilon(1e-15));
    CHECK(p.d2(np::e) == doctest::Approx(-1.0 / (np::e * np::e)).epsilon(1e-15));
    CHECK(p.name == "log");
}

TEST_CASE("power profile matches d/ds s^alpha oracles") {
    const phi::AdmissiblePhi p = phi::make_phi("pow:0.5");
    CHECK(p.alpha == 0.5);
    CHECK(p.value(4.0) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(p.d1(4.0) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(p.d2(4.0) == doctest::Approx(-0.03125).epsilon(1e-15));
}

TEST_CASE("shifted loglog profile is pinned at s = 0") {
    // ln(ln(s + e)) at s = 0: value ln(ln e) = 0, d1 = 1/(e ln e) = 1/e,
    // d2 = -(ln e + 1)/(e^2 ln^2 e) = -2/e^2.
    const phi::AdmissiblePhi p = phi::make_phi("loglog");
    CHECK(p.value(0.0) == 0.0);
    CHECK(p.d1(0.0) == doctest::Approx(1.0 / np::e).epsilon(1e-15));
    CHECK(p.d2(0.0) ==
          doctest::Approx(-2.0 / (np::e * np::e)).epsilon(1e-15));
}

TEST_CASE("selector parsing rejects bad input") {
    CHECK_THROWS_AS(phi::make_phi("pow:1.5"), std::invalid_argument);
    CHECK_THROWS_AS(phi::make_phi("pow:0"), std::invalid_argument);
    CHECK_THROWS_AS(phi::make_phi("pow:-0.3"), std::invalid_argument);
    CHECK_THROWS_AS(phi::make_phi("pow:abc"), std::invalid_argument);
    CHECK_THROWS_AS(phi::make_phi("pow:0.5x"), std::invalid_argument);
    CHECK_THROWS_AS(phi::make_phi("gamma"), std::invalid_argument);
    CHECK_THROWS_AS(phi::make_phi(phi::Kind::power, 1.0), std::invalid_argument);
}

TEST_CASE("ma_ready is n*alpha < 1 for powers and always true for logs") {
    CHECK(phi::make_phi("pow:0.4").ma_ready(2));   // 0.8 < 1
    CHECK_FALSE(phi::make_phi("pow:0.5").ma_ready(2)); // exactly 1, not < 1
    CHECK_FALSE(phi::make_phi("pow:0.5").ma_ready(3));
    CHECK(phi::make_phi("pow:0.2").ma_ready(4));   // 0.8 < 1
    CHECK_FALSE(phi::make_phi("pow:0.2").ma_ready(5));
    for (int n = 2; n <= 8; ++n) {
        CHECK(phi::make_phi("log").ma_ready(n));
        CHECK(phi::make_phi("loglog").ma_ready(n));
    }
}

TEST_CASE("decay_profile decreases to zero and validates its radius list") {
    const phi::AdmissiblePhi p = phi::make_phi("log");
    const std::vector<double> radii{1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6};
    const std::vector<double> vals = phi::decay_profile(p, 0.5, radii);
    REQUIRE(vals.size() == radii.size());
    for (std::size_t i = 0; i < vals.size(); ++i) {
        // Closed form: rho^beta * ln(-ln rho^2).
        const double rho = radii[i];
        const double oracle = std::pow(rho, 0.5) * std::log(-std::log(rho * rho));
        CHECK(vals[i] == doctest::Approx(oracle).epsilon(1e-13));
        if (i > 0) CHECK(vals[i] < vals[i - 1]);
    }
    CHECK(vals.back() < 1e-2);

    CHECK_THROWS_AS(phi::decay_profile(p, 0.5, {1e-2, 1e-1}),
                    std::invalid_argument); // not decreasing
    CHECK_THROWS_AS(phi::decay_profile(p, 0.5, {1.0, 0.5}),
                    std::invalid_argument); // radius at domain edge
    CHECK_THROWS_AS(phi::decay_profile(p, 0.0, {0.5}), std::invalid_argument);
}

TEST_CASE("scaled_sup is stable under grid refinement") {
    // beta * rho^beta * phi(-ln rho^2) stays bounded uniformly in beta; the
    // certificate is that doubling the grid moves the sampled sup by < 1%.
    for (const char* sel : {"log", "loglog", "pow:0.5"}) {
        const phi::AdmissiblePhi p = phi::make_phi(sel);
        const double coarse =
            phi::scaled_sup(p, phi::default_beta_grid(64), phi::default_rho_grid(64));
        const double fine =
            phi::scaled_sup(p, phi::default_beta_grid(128), phi::default_rho_grid(128));
        CHECK(coarse > 0.0);
        CHECK(std::abs(fine - coarse) / coarse < 0.01);
    }
    CHECK_THROWS_AS(phi::scaled_sup(phi::make_phi("log"), {}, {0.5}),
                    std::invalid_argument);
    CHECK_THROWS_AS(phi::scaled_sup(phi::make_phi("log"), {2.0}, {0.5}),
                    std::invalid_argument);
    CHECK_THROWS_AS(phi::scaled_sup(phi::make_phi("log"), {0.5}, {0.7}),
                    std::invalid_argument);
}

TEST_CASE("divergence_witness evaluates e^-1 phi(2/beta) at radius e^(-1/beta)") {
    const phi::AdmissiblePhi p = phi::make_phi("log");
    SUBCASE("closed-form values") {
        const phi::WitnessPoint w01 = phi::divergence_witness(p, 0.1);
        CHECK(w01.radius == doctest::Approx(std::exp(-10.0)).epsilon(1e-14));
        CHECK(w01.value ==
              doctest::Approx(std::log(20.0) / np::e).epsilon(1e-12)); // 1.102068
        const phi::WitnessPoint w001 = phi::divergence_witness(p, 0.01);
        CHECK(w001.value ==
              doctest::Approx(std::log(200.0) / np::e).epsilon(1e-12)); // 1.949142
    }
    SUBCASE("values grow as beta shrinks, against the bounded weighted sup") {
        const double bound =
            phi::scaled_sup(p, phi::default_beta_grid(), phi::default_rho_grid());
        double prev = 0.0;
        for (const double beta : {0.2, 0.1, 0.05, 0.02, 0.01, 0.005}) {
            const double v = phi::divergence_witness(p, beta).value;
            CHECK(v > prev);
            prev = v;
        }
        // By beta = 0.005 the unweighted witness has left the weighted bound
        // far behind.
        CHECK(prev > 2.0 * bound);
    }
    SUBCASE("substitution identity: value equals the direct evaluation") {
        for (const char* sel : {"log", "loglog", "pow:0.5"}) {
            const phi::AdmissiblePhi q = phi::make_phi(sel);
            for (const double beta : {0.3, 0.1, 0.02}) {
                const phi::WitnessPoint w = phi::divergence_witness(q, beta);
                const double direct =
                    std::pow(w.radius, beta) * q.value(-std::log(w.radius * w.radius));
                CHECK(w.value == doctest::Approx(direct).epsilon(1e-12));
            }
        }
    }
    CHECK_THROWS_AS(phi::divergence_witness(p, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(phi::divergence_witness(p, 1.0), std::invalid_argument);
}

TEST_CASE("probe certification of the admissibility conditions") {
    SUBCASE("profiles with fast enough decay certify at s <= 1e6") {
        for (const char* sel : {"log", "loglog", "pow:0.5", "pow:0.1"}) {
            const phi::ProbeReport rep = phi::probe_certify(phi::make_phi(sel));
            INFO("profile ", std::string(sel));
            CHECK(rep.increasing);
            CHECK(rep.d1_decay);
            CHECK(rep.d2_decay);
            CHECK(rep.d1_tail);
            CHECK(rep.d2_tail);
            CHECK(rep.fd_match);
            CHECK(rep.pass());
            CHECK(rep.tail_d1 < 1e-3);
            CHECK(rep.tail_d2 < 1e-3);
            CHECK(rep.max_fd_rel_d1 < 1e-6);
            CHECK(rep.max_fd_rel_d2 < 1e-6);
        }
    }
    SUBCASE("pow:0.9 decays too slowly for the tail threshold, and the "
            "probe says so rather than papering over it") {
        // phi' = 0.9 s^(-0.1) needs s ~ 1e30 to drop below 1e-3; at the
        // probe horizon it sits at 0.9 * 10^(-0.6). Decay and FD agreement
        // still certify, the d1 tail honestly fails.
        const phi::ProbeReport rep = phi::probe_certify(phi::make_phi("pow:0.9"));
        CHECK(rep.increasing);
        CHECK(rep.d1_decay);
        CHECK(rep.d2_decay);
        CHECK(rep.fd_match);
        CHECK_FALSE(rep.d1_tail);
        CHECK(rep.d2_tail);
        CHECK_FALSE(rep.pass());
        CHECK(rep.tail_d1 ==
              doctest::Approx(0.9 * std::pow(1e6, -0.1)).epsilon(1e-12));
    }
}

TEST_CASE("probe tails match the closed forms at s = 1e6") {
    const phi::ProbeReport lg = phi::probe_certify(phi::make_phi("log"));
    CHECK(lg.tail_d1 == doctest::Approx(1e-6).epsilon(1e-12));
    CHECK(lg.tail_d2 == doctest::Approx(1e-12).epsilon(1e-12));
    const phi::ProbeReport pw = phi::probe_certify(phi::make_phi("pow:0.5"));
    CHECK(pw.tail_d1 == doctest::Approx(0.5 * std::pow(1e6, -0.5)).epsilon(1e-12));
}
