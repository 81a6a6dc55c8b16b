// SPDX-License-Identifier: MIT

#include "d2lab/ladder.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace d2lab::ladder {

namespace {

const double kS0 = 2.0 * std::log(1.5); // -2 ln(2/3), support edge in s
constexpr double kSupportFrac = 2.0 / 3.0;

} // namespace

// ============================================================================
// Parameters
// ============================================================================

double LadderParams::R(int k) const { return std::pow(10.0, -k); }

double LadderParams::r(int k) const { return std::pow(10.0, -(k + 1)); }

double LadderParams::t(int k) const {
    switch (t_rule) {
    case TRule::harmonic:
        return 1.0 / (4.0 * (k + 1));
    case TRule::geometric:
        return std::pow(4.0, -(k + 1));
    }
    throw std::logic_error("ladder: unknown t rule");
}

Vec LadderParams::center_dir() const {
    return Vec(static_cast<std::size_t>(n), 1.0 / std::numbers::sqrt2);
}

// ============================================================================
// Profile maximization and root solving
// ============================================================================

SupResult maximize_log_profile(const std::function<double(double)>& h,
                               double s0) {
    if (!(s0 > 0.0)) {
        throw std::invalid_argument("maximize: s0 must be positive");
    }
    constexpr double kGrow = 1.3;
    constexpr double kHorizon = 1e9;

    // Expanding scan: multiplicative steps until the profile has clearly
    // passed its peak. A profile still at its running maximum beyond the
    // horizon cannot be bracketed, which for this laboratory means the
    // supplied profile is not admissible.
    std::vector<double> ss = {s0};
    std::vector<double> hs = {h(s0)};
    std::size_t best = 0;
    for (;;) {
        const double s = ss.back() * kGrow;
        ss.push_back(s);
        hs.push_back(h(s));
        if (hs.back() > hs[best]) best = hs.size() - 1;
        const bool past_peak = best + 1 < hs.size()
                               && hs.back() < 0.3 * hs[best];
        if (past_peak) break;
        if (s > kHorizon) {
            throw std::runtime_error(
                "maximize: profile still rising at the search horizon");
        }
    }

    // Golden-section refinement inside the bracket around the best sample.
    double a = ss[best > 0 ? best - 1 : 0];
    double b = ss[best + 1];
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = b - gr * (b - a);
    double x2 = a + gr * (b - a);
    double f1 = h(x1);
    double f2 = h(x2);
    int iters = 0;
    while (b - a > 1e-12 * b && iters < 400) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + gr * (b - a);
            f2 = h(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - gr * (b - a);
            f1 = h(x1);
        }
        ++iters;
    }

    SupResult out;
    out.iters = iters;
    out.lo = a;
    out.hi = b;
    out.s_star = 0.5 * (a + b);
    out.M = h(out.s_star);
    const double boundary_val = hs[0];
    if (boundary_val >= out.M || out.s_star <= s0 * (1.0 + 1e-9)) {
        out.M = boundary_val;
        out.s_star = s0;
        out.boundary = true;
    }
    return out;
}

SupResult compute_Mk(const phi::AdmissiblePhi& phi, double t) {
    if (!(t > 0.0) || t > 1.0) {
        throw std::invalid_argument("compute_Mk: t must lie in (0, 1]");
    }
    auto h = [&phi, t](double s) { return std::exp(-t * s) * phi.value(s); };
    return maximize_log_profile(h, kS0);
}

RootResult solve_profile_root(const std::function<double(double)>& h,
                              double s_star, double target) {
    if (!(h(s_star) > target)) {
        throw std::invalid_argument(
            "root: target must lie below the branch start");
    }
    double lo = s_star;
    double hi = std::max(2.0 * s_star, s_star + 2.0);
    while (h(hi) >= target) {
        lo = hi;
        hi *= 2.0;
        if (hi > 1e12) {
            throw std::runtime_error(
                "root: profile does not drop to the target level");
        }
    }
    RootResult out;
    while (hi - lo > 1e-13 * hi && out.iters < 500) {
        const double mid = 0.5 * (lo + hi);
        if (h(mid) > target) {
            lo = mid;
        } else {
            hi = mid;
        }
        ++out.iters;
    }
    out.s_w = 0.5 * (lo + hi);
    return out;
}

RootResult solve_witness_radius(const phi::AdmissiblePhi& phi, double t,
                                double M, double s_star) {
    if (s_star <= 0.0) {
        s_star = compute_Mk(phi, t).s_star;
    }
    auto h = [&phi, t](double s) { return std::exp(-t * s) * phi.value(s); };
    return solve_profile_root(h, s_star, 0.5 * M);
}

// ============================================================================
// Ladder construction
// ============================================================================

const Level& Ladder::level(int k) const {
    if (k < 1 || k > static_cast<int>(levels.size())) {
        throw std::out_of_range("ladder: level index out of range");
    }
    return levels[static_cast<std::size_t>(k - 1)];
}

Ladder build_ladder(LadderParams params) {
    if (params.n < 2) {
        throw std::invalid_argument("ladder: dimension must be at least 2");
    }
    if (params.K < 1 || params.K > 12) {
        throw std::invalid_argument("ladder: K must lie in [1, 12]");
    }
    for (int k = 1; k <= params.K; ++k) {
        const double tk = params.t(k);
        if (!(tk > 0.0) || !(tk < 0.25)) {
            throw std::invalid_argument("ladder: t(k) must lie in (0, 1/4)");
        }
        if (!(params.t(k + 1) < tk)) {
            throw std::invalid_argument("ladder: t(k) must be decreasing");
        }
        if (!(params.R(k) - params.r(k)
              > params.R(k + 1) + params.r(k + 1))) {
            throw std::invalid_argument("ladder: balls are not disjoint");
        }
        if (!(params.R(k) / std::numbers::sqrt2
              > kSupportFrac * params.r(k))) {
            throw std::invalid_argument(
                "ladder: hyperplane clearance violated");
        }
    }

    Ladder lad;
    lad.params = std::move(params);
    lad.levels.reserve(static_cast<std::size_t>(lad.params.K));
    for (int k = 1; k <= lad.params.K; ++k) {
        Level lv;
        lv.k = k;
        lv.R = lad.params.R(k);
        lv.r = lad.params.r(k);
        lv.t = lad.params.t(k);
        const SupResult sup = compute_Mk(lad.params.phi, lv.t);
        lv.M = sup.M;
        lv.s_star = sup.s_star;
        lv.sup_boundary = sup.boundary;
        lv.sup_iters = sup.iters;
        lv.eps = 1.0 / lv.M;
        const RootResult root =
            solve_witness_radius(lad.params.phi, lv.t, lv.M, lv.s_star);
        lv.s_w = root.s_w;
        lv.root_iters = root.iters;
        lv.witness_ok = witness_available(lv.s_w);
        lv.y_norm = std::exp(-0.5 * lv.s_w);
        lad.levels.push_back(lv);
    }
    return lad;
}

// ============================================================================
// Evaluation
// ============================================================================

BallLocation locate_ball(const Ladder& lad, const Vec& x) {
    if (static_cast<int>(x.size()) != lad.params.n) {
        throw std::invalid_argument("ladder: point dimension mismatch");
    }
    const double z = 1.0 / std::numbers::sqrt2;
    for (const Level& lv : lad.levels) {
        const double radius = kSupportFrac * lv.r;
        const double r2 = radius * radius;
        double dp = 0.0, dm = 0.0;
        for (double xi : x) {
            const double cp = xi - lv.R * z;
            const double cm = xi + lv.R * z;
            dp += cp * cp;
            dm += cm * cm;
        }
        if (dp < r2) return {BallLocation::Where::plus, lv.k};
        if (dm < r2) return {BallLocation::Where::minus, lv.k};
    }
    return {BallLocation::Where::outside, 0};
}

namespace {

block::PointEval scaled_eval(const Ladder& lad, const Level& lv, bool minus,
                             const Vec& y) {
    const block::BlockParams p =
        block::make_block(lad.params.n, lv.t, lad.params.phi);
    const block::PointEval local = block_eval(p, y);
    const double sign = (minus && lad.params.signed_sum) ? -1.0 : 1.0;

    block::PointEval out(lad.params.n);
    out.value = sign * lv.eps * lv.r * lv.r * local.value;
    for (std::size_t i = 0; i < out.gradient.size(); ++i) {
        out.gradient[i] = sign * lv.eps * lv.r * local.gradient[i];
    }
    for (int i = 0; i < lad.params.n; ++i) {
        for (int j = 0; j < lad.params.n; ++j) {
            out.hessian(i, j) = sign * lv.eps * local.hessian(i, j);
        }
    }
    out.laplacian = sign * lv.eps * local.laplacian;
    return out;
}

} // namespace

block::PointEval u_eval(const Ladder& lad, const Vec& x) {
    const BallLocation loc = locate_ball(lad, x);
    if (loc.where == BallLocation::Where::outside) {
        block::PointEval zero(lad.params.n);
        zero.point = x;
        return zero;
    }
    const Level& lv = lad.level(loc.k);
    const bool minus = loc.where == BallLocation::Where::minus;
    const double z = 1.0 / std::numbers::sqrt2;
    Vec y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double center = (minus ? -lv.R : lv.R) * z;
        y[i] = (x[i] - center) / lv.r;
    }
    block::PointEval pe = scaled_eval(lad, lv, minus, y);
    pe.point = x;
    return pe;
}

block::PointEval u_eval_local(const Ladder& lad, int k, bool minus,
                              const Vec& y) {
    if (static_cast<int>(y.size()) != lad.params.n) {
        throw std::invalid_argument("ladder: point dimension mismatch");
    }
    const Level& lv = lad.level(k);
    block::PointEval pe = scaled_eval(lad, lv, minus, y);
    const double z = 1.0 / std::numbers::sqrt2;
    for (std::size_t i = 0; i < y.size(); ++i) {
        const double center = (minus ? -lv.R : lv.R) * z;
        pe.point[i] = center + lv.r * y[i];
    }
    return pe;
}

// ============================================================================
// Witness table and Taylor remainder
// ============================================================================

std::vector<WitnessRecord> witness_sequence(const Ladder& lad) {
    std::vector<WitnessRecord> out;
    const int n = lad.params.n;
    const Vec xi_w(static_cast<std::size_t>(n),
                   1.0 / std::sqrt(static_cast<double>(n)));
    const Vec z0 = lad.params.center_dir();
    for (const Level& lv : lad.levels) {
        if (!lv.witness_ok) continue;
        const block::BlockParams p = block::make_block(n, lv.t, lad.params.phi);
        const block::PointEval pe = block_eval_s(p, lv.s_w, xi_w);
        const block::Hess12Split split = plateau_hess12(p, lv.s_w, xi_w);

        WitnessRecord rec;
        rec.k = lv.k;
        rec.y_norm = lv.y_norm;
        rec.M = lv.M;
        rec.eps = lv.eps;
        rec.y_point = Vec(static_cast<std::size_t>(n), 0.0);
        rec.x_plus = Vec(static_cast<std::size_t>(n), 0.0);
        rec.x_minus = Vec(static_cast<std::size_t>(n), 0.0);
        for (int i = 0; i < n; ++i) {
            const std::size_t ui = static_cast<std::size_t>(i);
            rec.y_point[ui] = lv.y_norm * xi_w[ui];
            rec.x_plus[ui] = lv.R * z0[ui] + lv.r * rec.y_point[ui];
            rec.x_minus[ui] = -lv.R * z0[ui] + lv.r * rec.y_point[ui];
        }
        rec.hess12_plus = lv.eps * pe.hessian(0, 1);
        rec.hess12_minus =
            lad.params.signed_sum ? -rec.hess12_plus : rec.hess12_plus;
        rec.h_y = split.rest;
        rec.residual = rec.hess12_plus - 0.5;
        out.push_back(rec);
    }
    return out;
}

double taylor_remainder(const Ladder& lad, const Vec& x) {
    const double x2 = dot(x, x);
    if (x2 == 0.0) {
        throw std::invalid_argument("taylor_remainder: x must be nonzero");
    }
    const BallLocation loc = locate_ball(lad, x);
    if (loc.where == BallLocation::Where::outside) return 0.0;
    return std::abs(u_eval(lad, x).value) / x2;
}

} // namespace d2lab::ladder
