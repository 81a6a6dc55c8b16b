// SPDX-License-Identifier: MIT

#include "d2lab/operators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "d2lab/sampling.hpp"

namespace d2lab::ops {

double det_hessian(const block::PointEval& pe) { return det_lu(pe.hessian); }

GeometryEval mean_curvature(const block::PointEval& pe) {
    const int n = pe.hessian.dim();
    const double w2 = 1.0 + dot(pe.gradient, pe.gradient);
    const double W = std::sqrt(w2);

    double mixed = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            mixed += pe.gradient[static_cast<std::size_t>(i)]
                     * pe.gradient[static_cast<std::size_t>(j)]
                     * pe.hessian(i, j);
        }
    }

    GeometryEval out;
    out.lap = pe.laplacian;
    out.H = pe.laplacian / W - mixed / (W * W * W);
    out.sff = Mat(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            out.sff(i, j) = pe.hessian(i, j) / W;
        }
    }
    out.detH = det_lu(pe.hessian);
    return out;
}

MaConditionReport ma_conditions_check(const phi::AdmissiblePhi& phi, int n) {
    if (n < 2) {
        throw std::invalid_argument("ma_conditions_check: n must be >= 2");
    }
    MaConditionReport rep;
    rep.phi_name = phi.name;
    rep.n = n;
    for (int e = 1; e <= 6; ++e) {
        const double s = std::pow(10.0, e);
        const double p = std::pow(phi.value(s), n - 1);
        MaProbeRow row;
        row.s = s;
        row.d1_prod = p * phi.d1(s);
        row.d2_prod = p * phi.d2(s);
        rep.rows.push_back(row);
    }
    rep.tail_d1 = rep.rows.back().d1_prod;
    rep.tail_d2 = rep.rows.back().d2_prod;
    rep.pass = std::abs(rep.tail_d1) < 1e-3 && std::abs(rep.tail_d2) < 1e-3;
    if (n == 2) rep.flag = "n=2 construction unsupported";
    return rep;
}

ObstructionTable ma_obstruction_demo(const ladder::Ladder& lad,
                                     double min_ratio) {
    if (lad.params.n != 2) {
        throw std::invalid_argument(
            "ma_obstruction_demo: requires an n = 2 ladder");
    }
    const double s0 = 2.0 * std::log(1.5);
    ObstructionTable tab;
    tab.min_ratio = min_ratio;
    for (const ladder::Level& lv : lad.levels) {
        const double s_hi = std::max(200.0, 40.0 / lv.t);
        const double decades = std::log10(s_hi / s0);
        const std::size_t count = static_cast<std::size_t>(
            std::max(256.0, std::ceil(64.0 * decades)));
        const double lf = std::log(s_hi / s0);
        const auto& phi = lad.params.phi;
        const double t = lv.t;
        const double sampled = sweep::max_abs_over(
            count, sweep::Exec::parallel, [&phi, t, s0, lf, count](std::size_t i) {
                const double f =
                    static_cast<double>(i) / static_cast<double>(count - 1);
                const double s = s0 * std::exp(lf * f);
                return std::exp(-t * s) * phi.value(s);
            });
        ObstructionRow row;
        row.k = lv.k;
        row.t = lv.t;
        row.M = lv.M;
        row.s_star = lv.s_star;
        row.M_sampled = sampled;
        tab.rows.push_back(row);
    }
    tab.increasing = true;
    for (std::size_t i = 1; i < tab.rows.size(); ++i) {
        if (!(tab.rows[i].M_sampled > tab.rows[i - 1].M_sampled)) {
            tab.increasing = false;
        }
    }
    if (!tab.rows.empty() && tab.rows.front().M_sampled > 0.0) {
        tab.ratio = tab.rows.back().M_sampled / tab.rows.front().M_sampled;
    }
    tab.ratio_ok = tab.ratio >= tab.min_ratio;
    return tab;
}

namespace {

struct BallMax {
    double lap = 0.0;
    double det = 0.0;
    double H = 0.0;
};

} // namespace

std::vector<LevelRow> level_table(const ladder::Ladder& lad, int pts_per_ball,
                                  unsigned seed, sweep::Exec exec) {
    if (pts_per_ball < 1) {
        throw std::invalid_argument("level_table: need at least one point");
    }
    const int n = lad.params.n;
    const Vec xi_w(static_cast<std::size_t>(n),
                   1.0 / std::sqrt(static_cast<double>(n)));

    std::vector<LevelRow> rows;
    rows.reserve(lad.levels.size());
    for (const ladder::Level& lv : lad.levels) {
        // One shared point cloud for every level: cross-level comparisons of
        // the sampled maxima then vary only through t(k) and eps(k), not
        // through sampling noise.
        const auto pts = sampling::ball_points(
            n, static_cast<std::size_t>(pts_per_ball), 2.0 / 3.0, seed);
        const auto maxima = sweep::tabulate<BallMax>(
            pts.size(), exec, [&lad, &lv, &pts](std::size_t i) {
                const block::PointEval pe =
                    u_eval_local(lad, lv.k, false, pts[i]);
                BallMax m;
                m.lap = std::abs(pe.laplacian);
                m.det = std::abs(det_hessian(pe));
                m.H = std::abs(mean_curvature(pe).H);
                return m;
            });
        LevelRow row;
        row.k = lv.k;
        for (const BallMax& m : maxima) {
            row.max_abs_lap = std::max(row.max_abs_lap, m.lap);
            row.max_abs_det = std::max(row.max_abs_det, m.det);
            row.max_abs_H = std::max(row.max_abs_H, m.H);
        }
        if (lv.witness_ok) {
            const block::BlockParams p =
                block::make_block(n, lv.t, lad.params.phi);
            const block::PointEval w = block_eval_s(p, lv.s_w, xi_w);
            const double h12 = lv.eps * w.hessian(0, 1);
            double g2 = 0.0;
            for (double g : w.gradient) {
                const double gu = lv.eps * lv.r * g;
                g2 += gu * gu;
            }
            const double W = std::sqrt(1.0 + g2);
            row.sff12_plus = h12 / W;
            row.sff12_minus =
                lad.params.signed_sum ? -row.sff12_plus : row.sff12_plus;
        }
        rows.push_back(row);
    }
    return rows;
}

} // namespace d2lab::ops
