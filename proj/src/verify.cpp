// SPDX-License-Identifier: MIT

#include "d2lab/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "d2lab/block.hpp"
#include "d2lab/cutoff.hpp"
#include "d2lab/fd.hpp"
#include "d2lab/gallery.hpp"
#include "d2lab/io.hpp"
#include "d2lab/operators.hpp"
#include "d2lab/phi.hpp"
#include "d2lab/radial.hpp"
#include "d2lab/sampling.hpp"

namespace d2lab::verify {

bool Suite::pass() const {
    for (const Check& c : checks) {
        if (!c.pass) return false;
    }
    return true;
}

namespace {

constexpr double kPlateauEnd = cutoff::SmoothCutoff::plateau_end;
constexpr double kSupportEnd = cutoff::SmoothCutoff::support_end;

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6e", v);
    return buf;
}

Check mk(std::string id, bool pass, std::string detail) {
    Check c;
    c.id = std::move(id);
    c.pass = pass;
    c.detail = std::move(detail);
    return c;
}

ladder::LadderParams ladder_params(const Options& o) {
    ladder::LadderParams p;
    p.n = o.n;
    p.phi = phi::make_phi(o.phi);
    p.K = o.K;
    p.signed_sum = o.signed_sum;
    p.t_rule = o.t_rule;
    return p;
}

/**
 * FD configuration adapted to the block's cutoff shell. Inside the shell the
 * bump quotient eta varies on the scale m^2 where m is the distance to the
 * nearer join, so the stencil step must stay well below that scale; steps
 * are made absolute (coord_floor = 1) and sized 0.05 m^2. Near the inner
 * join the tail e^(-1/m) drops below roundoff of the O(1) plateau terms for
 * m <= 0.02, where the default relative steps are both safe and far more
 * accurate. Near the outer join the tail IS the function, so the scaled
 * steps stay in force all the way to the support edge.
 */
fd::FdConfig block_fd_cfg(const Vec& y) {
    fd::FdConfig cfg;
    const double rho = norm2(y);
    if (rho > kPlateauEnd && rho < kSupportEnd) {
        const double a = kSupportEnd - rho;
        const double b = rho - kPlateauEnd;
        const double m = std::min(a, b);
        const bool inner_tail_invisible = (b < a) && (b <= 0.02);
        if (!inner_tail_invisible) {
            cfg.base_step = 0.05 * m * m;
            cfg.coord_floor = 1.0; // floor above any |y_i|: steps are absolute
            return cfg;
        }
    }
    // Plateau (and numerically plateau-smooth shell rim): the block varies on
    // the scale rho along every coordinate, so near-axis coordinates must not
    // shrink their steps below it; second-difference roundoff grows as h^-2.
    if (rho > 0.0) cfg.coord_floor = rho;
    return cfg;
}

struct FdSummary {
    double worst_grad = 0.0;
    double worst_hess_plateau = 0.0;
    double worst_hess_shell = 0.0;
};

FdSummary fd_check_block(const block::BlockParams& p, const std::vector<Vec>& pts,
                         sweep::Exec exec) {
    struct R {
        double g = 0.0;
        double h = 0.0;
        bool shell = false;
    };
    const auto field = [&p](const Vec& v) { return block::block_eval(p, v).value; };
    const auto rs = sweep::tabulate<R>(pts.size(), exec, [&](std::size_t i) {
        const Vec& y = pts[i];
        const block::PointEval pe = block::block_eval(p, y);
        const fd::FdConfig cfg = block_fd_cfg(y);
        const Vec fg = fd::fd_gradient(field, y, cfg);
        const Mat fh = fd::fd_hessian(field, y, cfg);
        double gd = 0.0;
        for (std::size_t j = 0; j < fg.size(); ++j) {
            gd = std::max(gd, std::abs(fg[j] - pe.gradient[j]));
        }
        double hd = 0.0;
        for (int a = 0; a < pe.hessian.dim(); ++a) {
            for (int b = 0; b < pe.hessian.dim(); ++b) {
                hd = std::max(hd, std::abs(fh(a, b) - pe.hessian(a, b)));
            }
        }
        // Entries below 1e-280 sit in the far cutoff tail where both routes
        // degenerate to subnormal noise; the floor keeps the ratio honest.
        R r;
        r.g = gd / std::max(norm_inf(pe.gradient), 1e-280);
        r.h = hd / std::max(pe.hessian.max_abs(), 1e-280);
        const double rho = norm2(y);
        r.shell = rho > kPlateauEnd && rho < kSupportEnd;
        return r;
    });
    FdSummary s;
    for (const R& r : rs) {
        s.worst_grad = std::max(s.worst_grad, r.g);
        if (r.shell) {
            s.worst_hess_shell = std::max(s.worst_hess_shell, r.h);
        } else {
            s.worst_hess_plateau = std::max(s.worst_hess_plateau, r.h);
        }
    }
    return s;
}

// ===========================================================================
// Module suites
// ===========================================================================

Suite suite_phi(const Options& opts, bool assertive) {
    Suite s;
    s.name = "phi";
    const phi::AdmissiblePhi ph = phi::make_phi(opts.phi);
    const phi::ProbeReport rep = phi::probe_certify(ph);

    s.checks.push_back(mk("phi.monotone_growth", rep.increasing,
                          "strictly increasing on the probe grid"));
    s.checks.push_back(mk("phi.derivative_decay", rep.d1_decay && rep.d2_decay,
                          "|phi'| and |phi''| non-increasing on the probe grid"));
    if (assertive) {
        s.checks.push_back(mk("phi.tails", rep.d1_tail && rep.d2_tail,
                              "|phi'(1e6)| = " + num(rep.tail_d1) +
                                  ", |phi''(1e6)| = " + num(rep.tail_d2) +
                                  " (threshold 1e-3)"));
    }
    s.checks.push_back(mk("phi.fd_match", rep.fd_match,
                          "worst FD rel mismatch: d1 " + num(rep.max_fd_rel_d1) +
                              ", d2 " + num(rep.max_fd_rel_d2)));

    {
        const std::vector<double> radii = {1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6};
        const std::vector<double> vals = phi::decay_profile(ph, 0.5, radii);
        bool dec = true;
        for (std::size_t i = 1; i < vals.size(); ++i) {
            dec = dec && vals[i] < vals[i - 1];
        }
        s.checks.push_back(mk("phi.weighted_decay", dec,
                              "|x|^(1/2) phi(-ln|x|^2) falls " + num(vals.front()) +
                                  " -> " + num(vals.back()) + " over radii 1e-1..1e-6"));
    }
    {
        const double a =
            phi::scaled_sup(ph, phi::default_beta_grid(64), phi::default_rho_grid(64));
        const double b =
            phi::scaled_sup(ph, phi::default_beta_grid(128), phi::default_rho_grid(128));
        const bool ok = std::abs(a - b) <= 0.01 * std::max(a, b);
        s.checks.push_back(mk("phi.scaled_sup_stable", ok,
                              "sup beta rho^beta |phi|: " + num(a) + " vs refined " +
                                  num(b) + " (within 1%)"));
    }
    {
        const phi::WitnessPoint w1 = phi::divergence_witness(ph, 0.2);
        const phi::WitnessPoint w2 = phi::divergence_witness(ph, 0.1);
        const phi::WitnessPoint w3 = phi::divergence_witness(ph, 0.05);
        const bool grow = w3.value > w2.value && w2.value > w1.value;
        const double lhs =
            std::pow(w2.radius, 0.1) * ph.value(-std::log(w2.radius * w2.radius));
        const bool ident = std::abs(lhs - w2.value) <= 1e-12 * std::abs(w2.value);
        s.checks.push_back(mk("phi.divergence_witness", grow && ident,
                              "rho^beta phi at rho = e^(-1/beta) grows: " + num(w1.value) +
                                  " < " + num(w2.value) + " < " + num(w3.value)));
    }
    return s;
}

Suite suite_block(const Options& opts) {
    Suite s;
    s.name = "block";
    const phi::AdmissiblePhi ph = phi::make_phi(opts.phi);
    const block::BlockParams p = block::make_block(opts.n, 0.25, ph);
    const auto pts = sampling::ball_points(opts.n, 48, kSupportEnd, opts.seed + 7);

    // Ten-term expansion of the distinguished entry vs. the assembled value.
    {
        double worst = 0.0;
        bool ok = true;
        for (const Vec& y : pts) {
            const block::TermList tl = block::hess12_terms(p, y);
            const double entry = block::block_eval(p, y).hessian(0, 1);
            double scale = 1e-300;
            for (const block::Term& t : tl.terms) {
                scale = std::max(scale, std::abs(t.value));
            }
            const double rel = std::abs(tl.total() - entry) / scale;
            worst = std::max(worst, rel);
            ok = ok && rel <= 1e-12;
        }
        s.checks.push_back(mk("block.term_identity", ok,
                              "ten-term (1,2) expansion vs assembled entry, worst rel " +
                                  num(worst)));
    }

    // The (1,j) plateau expansion needs its display-omitted cross term.
    if (opts.n >= 3) {
        bool ok = true;
        double worst = 0.0, gap = 0.0;
        for (const Vec& y : pts) {
            Vec q = 0.7 * y; // pull into the plateau
            if (norm2(q) < 1e-3) continue;
            const block::TermList tl = block::hess1j_terms(p, q, 2);
            const double entry = block::block_eval(p, q).hessian(0, 2);
            double scale = 1e-300;
            double a5 = 0.0;
            double sum4 = 0.0;
            for (const block::Term& t : tl.terms) {
                scale = std::max(scale, std::abs(t.value));
                if (t.name.find("display-omitted") != std::string::npos) {
                    a5 = t.value;
                } else {
                    sum4 += t.value;
                }
            }
            const double full = std::abs(tl.total() - entry) / scale;
            // the four displayed terms must miss the entry by exactly the
            // omitted cross term, so it is not redundant
            const double necessity =
                std::abs(std::abs(sum4 - entry) - std::abs(a5)) / scale;
            ok = ok && full <= 1e-12 && necessity <= 1e-12;
            worst = std::max(worst, full);
            gap = std::max(gap, std::abs(a5) / scale);
        }
        s.checks.push_back(mk("block.hess1j_cross_term", ok && gap > 0.0,
                              "five-term sum matches entry (worst rel " + num(worst) +
                                  "); four displayed terms miss it by |a5| up to " +
                                  num(gap)));
    } else {
        s.checks.push_back(mk("block.hess1j_cross_term", true,
                              "skipped: no tail coordinate in dimension 2"));
    }

    if (opts.n >= 4) {
        bool ok = true;
        double worst = 0.0;
        for (const Vec& y : pts) {
            Vec q = 0.7 * y;
            if (norm2(q) < 1e-3) continue;
            const block::TermList tl = block::hessij_terms(p, q, 2, 3);
            const double entry = block::block_eval(p, q).hessian(2, 3);
            double scale = 1e-300;
            for (const block::Term& t : tl.terms) {
                scale = std::max(scale, std::abs(t.value));
            }
            const double rel = std::abs(tl.total() - entry) / scale;
            ok = ok && rel <= 1e-12;
            worst = std::max(worst, rel);
        }
        s.checks.push_back(mk("block.hessij_identity", ok,
                              "three-term tail-pair expansion, worst rel " + num(worst)));
    } else {
        s.checks.push_back(mk("block.hessij_identity", true,
                              "skipped: needs two tail coordinates (n >= 4)"));
    }

    {
        double worst = 0.0;
        for (const Vec& y : pts) {
            worst = std::max(worst, block::block_eval(p, y).hessian.max_asym());
        }
        s.checks.push_back(
            mk("block.symmetry", worst == 0.0,
               "Hessian asymmetry exactly zero by construction, worst " + num(worst)));
    }

    {
        Vec outside(static_cast<std::size_t>(opts.n), 0.0);
        outside[0] = 0.7;
        Vec origin(static_cast<std::size_t>(opts.n), 0.0);
        Vec plane(static_cast<std::size_t>(opts.n), 0.0);
        plane[1] = 0.3; // first distinguished coordinate is zero
        const block::PointEval a = block::block_eval(p, outside);
        const block::PointEval b = block::block_eval(p, origin);
        const block::PointEval c = block::block_eval(p, plane);
        const bool ok = a.value == 0.0 && a.hessian.max_abs() == 0.0 &&
                        norm_inf(a.gradient) == 0.0 && b.value == 0.0 &&
                        b.hessian.max_abs() == 0.0 && c.value == 0.0;
        s.checks.push_back(mk("block.support", ok,
                              "exact zeros outside |x| = 2/3, at the origin, and value "
                              "zero on the x1 = 0 hyperplane"));
    }

    {
        bool ok = true;
        double worst = 0.0;
        for (const Vec& y : pts) {
            Vec q = 0.7 * y;
            const double rho = norm2(q);
            if (rho < 1e-3) continue;
            const double ssp = -std::log(dot(q, q));
            Vec xi(q.size());
            for (std::size_t i = 0; i < q.size(); ++i) xi[i] = q[i] / rho;
            const block::Hess12Split split = block::plateau_hess12(p, ssp, xi);
            const double entry = block::block_eval(p, q).hessian(0, 1);
            const double scale =
                std::max({std::abs(split.leading), std::abs(split.rest), 1e-300});
            const double rel = std::abs(split.total() - entry) / scale;
            ok = ok && rel <= 1e-11;
            worst = std::max(worst, rel);
        }
        s.checks.push_back(mk("block.plateau_split", ok,
                              "leading + rest reproduces the assembled (1,2) entry, "
                              "worst rel " + num(worst)));
    }

    {
        bool ok = true;
        double worst = 0.0;
        for (const Vec& y : pts) {
            const double rho = norm2(y);
            if (rho < 1e-3 || rho >= kSupportEnd) continue;
            const double ssp = -std::log(dot(y, y));
            Vec xi(y.size());
            for (std::size_t i = 0; i < y.size(); ++i) xi[i] = y[i] / rho;
            const block::PointEval ex = block::block_eval(p, y);
            const block::PointEval es = block::block_eval_s(p, ssp, xi);
            double d = std::abs(ex.value - es.value);
            double scale = std::max(1.0, std::abs(ex.value));
            for (int a = 0; a < ex.hessian.dim(); ++a) {
                for (int b = 0; b < ex.hessian.dim(); ++b) {
                    d = std::max(d, std::abs(ex.hessian(a, b) - es.hessian(a, b)));
                    scale = std::max(scale, std::abs(ex.hessian(a, b)));
                }
            }
            const double rel = d / scale;
            ok = ok && rel <= 1e-12;
            worst = std::max(worst, rel);
        }
        s.checks.push_back(mk("block.log_radius_consistency", ok,
                              "global and log-radius evaluation agree, worst rel " +
                                  num(worst)));
    }

    {
        std::vector<Vec> spots(pts.begin(), pts.begin() + std::min<std::size_t>(12, pts.size()));
        const FdSummary f = fd_check_block(p, spots, opts.exec);
        const bool ok = f.worst_grad <= 1e-7 && f.worst_hess_plateau <= 1e-5 &&
                        f.worst_hess_shell <= 1e-4;
        s.checks.push_back(mk("block.fd_spot", ok,
                              "grad rel " + num(f.worst_grad) + ", hess rel " +
                                  num(f.worst_hess_plateau) + " plateau / " +
                                  num(f.worst_hess_shell) + " shell"));
    }

    {
        const block::BoundReport rep = block::block_term_bounds(opts.n, ph);
        s.checks.push_back(mk("block.bounds_t_stable", rep.t_stable,
                              "value/gradient/diagonal/off-pair/Laplacian sups stay "
                              "within 2x of t = 0.25 as t -> 0 (C_lap " +
                                  num(rep.C_lap) + ", C_h " + num(rep.C_h) + ")"));
        s.checks.push_back(mk("block.h12_grows", rep.grows_12,
                              "the (1,2) sup grows, " + num(rep.rows.front().sup_h12) +
                                  " at t = 0.25 -> " + num(rep.rows.back().sup_h12) +
                                  " at t = " + num(rep.rows.back().t)));
    }
    return s;
}

Suite suite_ladder(const Options& opts) {
    Suite s;
    s.name = "ladder";
    const ladder::LadderParams params = ladder_params(opts);
    const ladder::Ladder lad = ladder::build_ladder(params);
    const int K = params.K;

    {
        double min_gap = std::numeric_limits<double>::infinity();
        double min_clear = std::numeric_limits<double>::infinity();
        for (int k = 1; k <= K; ++k) {
            if (k < K) {
                min_gap = std::min(min_gap, (params.R(k) - kSupportEnd * params.r(k)) -
                                                (params.R(k + 1) + kSupportEnd * params.r(k + 1)));
            }
            min_clear = std::min(min_clear, params.R(k) / std::sqrt(2.0) -
                                                kSupportEnd * params.r(k));
        }
        s.checks.push_back(mk("ladder.geometry", min_gap > 0.0 && min_clear > 0.0,
                              "balls disjoint (min gap " + num(min_gap) +
                                  ") and clear of the coordinate hyperplanes (min "
                                  "clearance " + num(min_clear) + ")"));
    }
    {
        double worst = 0.0;
        bool dec = true;
        for (int k = 1; k <= K; ++k) {
            const ladder::Level& lv = lad.level(k);
            worst = std::max(worst, std::abs(lv.eps * lv.M - 1.0));
            if (k > 1) dec = dec && lv.t < lad.level(k - 1).t;
        }
        s.checks.push_back(mk("ladder.normalization", worst <= 4.0 * std::numeric_limits<double>::epsilon() && dec,
                              "eps_k * M_k = 1 to " + num(worst) +
                                  "; t schedule strictly decreasing"));
    }

    const std::vector<ladder::WitnessRecord> recs = ladder::witness_sequence(lad);
    {
        double worst = 0.0;
        bool on_plateau = !recs.empty();
        for (const ladder::WitnessRecord& w : recs) {
            const ladder::Level& lv = lad.level(w.k);
            const double lhs = std::exp(-lv.t * lv.s_w) * params.phi.value(lv.s_w);
            worst = std::max(worst, std::abs(lhs - w.M / 2.0) / w.M);
            on_plateau = on_plateau && w.y_norm <= kPlateauEnd + 1e-15;
        }
        s.checks.push_back(mk("ladder.witness_equation", on_plateau && worst <= 1e-10,
                              std::to_string(recs.size()) + " usable witnesses on the "
                              "plateau; half-maximum equation residual " + num(worst)));
    }
    {
        double worst = 0.0;
        for (const ladder::WitnessRecord& w : recs) {
            worst = std::max(worst, std::abs(w.hess12_plus - (0.5 + w.eps * w.h_y)));
        }
        s.checks.push_back(mk("ladder.decomposition", !recs.empty() && worst <= 1e-9,
                              "hess12_plus = 1/2 + eps h(y) to " + num(worst)));
    }
    {
        double worst = 0.0;
        for (const ladder::WitnessRecord& w : recs) {
            const double want = params.signed_sum ? -w.hess12_plus : w.hess12_plus;
            worst = std::max(worst, std::abs(w.hess12_minus - want));
        }
        s.checks.push_back(mk("ladder.mirror", worst <= 1e-12,
                              std::string(params.signed_sum
                                              ? "minus-family witness entry is the exact "
                                                "negation"
                                              : "single-sum: minus family matches the plus "
                                                "value") + ", worst " + num(worst)));
    }
    {
        bool dec = true, pos = true;
        for (std::size_t i = 0; i < recs.size(); ++i) {
            pos = pos && recs[i].residual > 0.0;
            if (i > 0) dec = dec && recs[i].residual < recs[i - 1].residual;
        }
        s.checks.push_back(mk("ladder.residual_trend", !recs.empty() && dec && pos,
                              "residual positive and strictly decreasing, " +
                                  num(recs.empty() ? 0.0 : recs.front().residual) + " -> " +
                                  num(recs.empty() ? 0.0 : recs.back().residual)));
    }
    {
        Vec origin(static_cast<std::size_t>(params.n), 0.0);
        const block::PointEval pe = ladder::u_eval(lad, origin);
        Vec far(static_cast<std::size_t>(params.n), 0.0);
        far[0] = 0.09;
        far[2 % params.n] = 0.05; // off the center ray, on no ball
        const block::PointEval pf = ladder::u_eval(lad, far);
        const ladder::BallLocation loc = ladder::locate_ball(lad, far);
        bool thrown = false;
        try {
            ladder::taylor_remainder(lad, origin);
        } catch (const std::invalid_argument&) {
            thrown = true;
        }
        const bool ok = pe.value == 0.0 && pe.hessian.max_abs() == 0.0 &&
                        pf.value == 0.0 &&
                        loc.where == ladder::BallLocation::Where::outside && thrown;
        s.checks.push_back(mk("ladder.support", ok,
                              "exact zero at the origin and off the balls; remainder "
                              "rejects x = 0"));
    }
    {
        // u(-x) = -u(x) for the signed sum (overall odd); dropping the sign
        // makes the superposition even instead.
        const auto ys = sampling::ball_points(params.n, 10, kSupportEnd, opts.seed + 21);
        const Vec z0 = params.center_dir();
        double worst = 0.0;
        for (const Vec& y : ys) {
            Vec x(static_cast<std::size_t>(params.n));
            Vec mx(static_cast<std::size_t>(params.n));
            for (std::size_t i = 0; i < x.size(); ++i) {
                x[i] = params.R(1) * z0[i] + params.r(1) * y[i];
                mx[i] = -x[i];
            }
            const block::PointEval a = ladder::u_eval(lad, x);
            const block::PointEval b = ladder::u_eval(lad, mx);
            const double sign = params.signed_sum ? -1.0 : 1.0;
            worst = std::max(worst, std::abs(b.value - sign * a.value));
            for (int i = 0; i < params.n; ++i) {
                for (int j = 0; j < params.n; ++j) {
                    worst = std::max(worst,
                                     std::abs(b.hessian(i, j) - sign * a.hessian(i, j)));
                }
            }
        }
        s.checks.push_back(mk("ladder.mirror_symmetry", worst == 0.0,
                              std::string(params.signed_sum ? "odd" : "even") +
                                  " under x -> -x, bitwise (worst dev " + num(worst) + ")"));
    }
    {
        double worst = 0.0;
        bool any = false;
        for (const ladder::WitnessRecord& w : recs) {
            // A witness is reachable in global coordinates only while the
            // offset r_k y survives rounding against the center R_k z0; a
            // y_norm below ~1e-12 is absorbed outright (the geometric t
            // schedule gets there by level 2). Deep witnesses stay on the
            // log-radius path, which has no such floor.
            if (w.k > 2 || w.y_norm < 1e-12) continue;
            any = true;
            const block::PointEval pe = ladder::u_eval(lad, w.x_plus);
            worst = std::max(worst, std::abs(pe.hessian(0, 1) - w.hess12_plus) /
                                        std::max(1.0, std::abs(w.hess12_plus)));
        }
        s.checks.push_back(mk("ladder.cross_path", !any || worst <= 1e-6,
                              any ? "global-coordinate evaluation at shallow witnesses "
                                    "agrees with the log-radius path, worst rel " +
                                        num(worst)
                                  : "no witness shallow enough; skipped"));
    }
    {
        std::vector<double> ts;
        for (int k = 1; k <= K; ++k) ts.push_back(params.t(k));
        const block::BoundReport bounds =
            block::block_term_bounds(params.n, params.phi, ts);
        const double denom = (10.0 - kSupportEnd) * (10.0 - kSupportEnd);
        const auto ys = sampling::ball_points(params.n, 40, kSupportEnd, opts.seed + 13);
        const Vec z0 = params.center_dir();
        bool conform = true, dec = true;
        double prev_bound = std::numeric_limits<double>::infinity();
        double worst_margin = 0.0;
        for (int k = 1; k <= K; ++k) {
            const ladder::Level& lv = lad.level(k);
            const double bound = lv.eps * bounds.C_value / denom;
            for (const Vec& y : ys) {
                for (int fam = 0; fam < 2; ++fam) {
                    Vec x(static_cast<std::size_t>(params.n));
                    const double sgn = fam == 0 ? 1.0 : -1.0;
                    for (std::size_t i = 0; i < x.size(); ++i) {
                        x[i] = sgn * lv.R * z0[i] + lv.r * y[i];
                    }
                    const double rem = ladder::taylor_remainder(lad, x);
                    conform = conform && rem <= bound * 1.0001;
                    worst_margin = std::max(worst_margin, rem / bound);
                }
            }
            dec = dec && bound < prev_bound;
            prev_bound = bound;
        }
        s.checks.push_back(mk("ladder.taylor_bound", conform && dec,
                              "|u|/|x|^2 <= eps_k C/(10 - 2/3)^2 on every level (worst "
                              "fill " + num(worst_margin) + "), bound sequence "
                              "strictly decreasing"));
    }
    return s;
}

Suite suite_ma(const Options& opts, bool assertive) {
    Suite s;
    s.name = "ma";
    const phi::AdmissiblePhi ph = phi::make_phi(opts.phi);
    const ops::MaConditionReport rep = ops::ma_conditions_check(ph, opts.n);

    if (assertive) {
        s.checks.push_back(mk("ma.conditions", rep.pass,
                              "phi^(n-1) phi' and phi^(n-1) phi'' at s = 1e6: " +
                                  num(rep.tail_d1) + ", " + num(rep.tail_d2) +
                                  " (threshold 1e-3)"));
    }
    {
        const bool meta = ph.ma_ready(opts.n);
        const bool ok = !rep.pass || meta;
        s.checks.push_back(mk("ma.probe_vs_metadata", ok,
                              std::string("probe ") + (rep.pass ? "pass" : "fail") +
                                  ", exact decay metadata " + (meta ? "true" : "false") +
                                  " (probe pass must imply metadata)"));
    }
    {
        const bool ok = (opts.n == 2) == rep.flagged();
        s.checks.push_back(mk("ma.plane_flag", ok,
                              rep.flagged() ? ("flagged: " + rep.flag)
                                            : "no flag outside the plane"));
    }
    if (opts.n == 2) {
        const ladder::Ladder lad = ladder::build_ladder(ladder_params(opts));
        const ops::ObstructionTable demo = ops::ma_obstruction_demo(lad);
        s.checks.push_back(mk("ma.obstruction_increasing", demo.increasing,
                              "sampled normalization sup strictly increasing; "
                              "end-to-end ratio " + num(demo.ratio)));
    } else {
        s.checks.push_back(mk("ma.obstruction_increasing", true,
                              "skipped: the blow-up demonstration is planar (n = 2)"));
    }
    return s;
}

Suite suite_geometry(const Options& opts) {
    Suite s;
    s.name = "geometry";
    const ladder::LadderParams params = ladder_params(opts);
    const ladder::Ladder lad = ladder::build_ladder(params);
    const std::vector<ops::LevelRow> rows =
        ops::level_table(lad, 100, opts.seed, opts.exec);

    {
        block::PointEval pe(params.n);
        pe.hessian(0, 0) = 2.0;
        pe.hessian(1, 1) = 3.0;
        pe.laplacian = 5.0;
        const ops::GeometryEval ge = ops::mean_curvature(pe);
        bool ok = ge.H == 5.0;
        for (int i = 0; i < params.n; ++i) {
            for (int j = 0; j < params.n; ++j) {
                ok = ok && ge.sff(i, j) == pe.hessian(i, j);
            }
        }
        s.checks.push_back(mk("geometry.zero_gradient_collapse", ok,
                              "at grad = 0 the formulas collapse exactly: H == "
                              "Laplacian, sff == Hessian"));
    }
    {
        bool dec = true;
        for (std::size_t i = 1; i < rows.size(); ++i) {
            dec = dec && rows[i].max_abs_H <= rows[i - 1].max_abs_H;
        }
        const bool drop = rows.size() > 1 && rows.back().max_abs_H < rows.front().max_abs_H;
        s.checks.push_back(mk("geometry.H_decay", dec && drop,
                              "sampled max |H| non-increasing, " +
                                  num(rows.front().max_abs_H) + " -> " +
                                  num(rows.back().max_abs_H)));
    }
    {
        // last level with a usable witness
        int last = 0;
        for (int k = 1; k <= params.K; ++k) {
            if (lad.level(k).witness_ok) last = k;
        }
        if (last == 0) {
            s.checks.push_back(mk("geometry.sff_witness_band", false, "no usable witness"));
        } else {
            const ops::LevelRow& row = rows[static_cast<std::size_t>(last - 1)];
            const double want = params.signed_sum ? -row.sff12_plus : row.sff12_plus;
            const bool ok = row.sff12_plus > 0.4 && row.sff12_plus < 0.6 &&
                            std::abs(row.sff12_minus - want) <= 1e-12;
            s.checks.push_back(mk("geometry.sff_witness_band", ok,
                                  "sff(1,2) at the deepest witness: " +
                                      num(row.sff12_plus) + " / " + num(row.sff12_minus)));
        }
    }
    {
        Vec origin(static_cast<std::size_t>(params.n), 0.0);
        const double det0 = ops::det_hessian(ladder::u_eval(lad, origin));
        s.checks.push_back(mk("geometry.det_origin", det0 == 0.0,
                              "det D^2 u at x = 0 is exactly " + num(det0)));
    }
    return s;
}

Suite suite_radial(const Options& opts) {
    Suite s;
    s.name = "radial";
    struct Fixture {
        radial::RadialProfile p;
        radial::RadialClass want;
        const char* id;
    };
    const std::vector<Fixture> fixtures = {
        {radial::profile_square(), radial::RadialClass::C2, "radial.class_square"},
        {radial::profile_s4_sin(),
         radial::RadialClass::twice_diff_bounded_discontinuous_hessian,
         "radial.class_s4_sin"},
        {radial::profile_s3_sin(), radial::RadialClass::not_twice_differentiable,
         "radial.class_s3_sin"},
    };
    bool hyp = true, lho = true, casef = true;
    for (const Fixture& f : fixtures) {
        const radial::RadialReport r1 = radial::classify_radial(f.p, 1);
        const radial::RadialReport r2 = radial::classify_radial(f.p, 2);
        const bool ok = r1.classification == f.want && r2.classification == f.want;
        s.checks.push_back(mk(f.id, ok,
                              std::string(radial::to_string(r1.classification)) +
                                  " (stable under 2x probe refinement)"));
        hyp = hyp && r1.hypotheses_ok;
        lho = lho && r1.lhopital_ok;
        casef = casef && r1.case_f_ok;
    }
    s.checks.push_back(mk("radial.hypotheses", hyp,
                          "psi -> 0 and psi' -> 0 certified on every fixture"));
    s.checks.push_back(mk("radial.cross_checks", lho && casef,
                          "L'Hopital consistency and the Laplacian-vs-psi'' "
                          "boundedness equivalence hold on every fixture"));
    {
        const radial::RadialProfile p4 = radial::profile_s4_sin();
        const auto pts = sampling::annulus_points(3, 20, 1e-2, 1.0, opts.seed + 31);
        double worst = 0.0;
        for (const Vec& x : pts) {
            const block::PointEval pe = radial::radial_hessian(p4, x);
            worst = std::max(worst, std::abs(pe.hessian.trace() - pe.laplacian) /
                                        std::max(1.0, std::abs(pe.laplacian)));
        }
        s.checks.push_back(mk("radial.trace_identity", worst <= 1e-12,
                              "Hessian trace reproduces the Laplacian, worst rel " +
                                  num(worst)));
    }
    {
        const radial::RadialProfile p4 = radial::profile_s4_sin();
        const auto pts = sampling::annulus_points(3, 100, 1e-2, 1.0, opts.seed + 37);
        const auto field = [&p4](const Vec& v) {
            return p4.psi(norm2(v));
        };
        const auto rel = sweep::tabulate<double>(pts.size(), opts.exec, [&](std::size_t i) {
            const Vec& x = pts[i];
            const double rho = norm2(x);
            fd::FdConfig cfg;
            // steps must stay under the local oscillation scale rho^2 of
            // sin(1/s) while remaining relative for large radii
            cfg.base_step = std::min(0.02, 0.1 * rho);
            cfg.coord_floor = rho;
            const block::PointEval pe = radial::radial_hessian(p4, x);
            const Mat fh = fd::fd_hessian(field, x, cfg);
            double d = 0.0;
            for (int a = 0; a < 3; ++a) {
                for (int b = 0; b < 3; ++b) {
                    d = std::max(d, std::abs(fh(a, b) - pe.hessian(a, b)));
                }
            }
            return d / std::max(pe.hessian.max_abs(), 1e-280);
        });
        const double worst = *std::max_element(rel.begin(), rel.end());
        s.checks.push_back(mk("radial.fd_match", worst <= 1e-5,
                              "analytic radial Hessian vs FD oracle at 100 points in "
                              "1e-2 <= |x| <= 1, worst rel " + num(worst)));
    }
    return s;
}

Suite suite_gallery(const Options&) {
    Suite s;
    s.name = "gallery";
    const gallery::GalleryReport wlog = gallery::gallery_report(gallery::Which::log_amplitude);
    const gallery::GalleryReport wsin =
        gallery::gallery_report(gallery::Which::sin_log_amplitude);

    {
        const gallery::GalleryRow& last = wlog.rows.back();
        s.checks.push_back(mk("gallery.log_cross_blowup", wlog.cross_exceeds_10_with_small_lap,
                              "second-derivative gap reaches " + num(last.cross_gap) +
                                  " while |Laplacian| stays " + num(last.lap_band) +
                                  " at r = " + num(last.r)));
    }
    s.checks.push_back(mk("gallery.log_laplacian_shrinks", wlog.band_shrinks,
                          "sampled |Laplacian| band strictly decreasing along the radii"));
    s.checks.push_back(mk("gallery.log_remainder_grows", wlog.remainder_grows,
                          "|w|/r^2 strictly increasing toward the origin (no "
                          "second-order Taylor expansion)"));
    {
        bool ok = true;
        double worst = 0.0;
        for (const gallery::GalleryRow& row : wlog.rows) {
            const double N = -std::log(row.r * row.r);
            const double analytic = 4.0 * std::log(N) - 8.0 / N;
            const double rel =
                std::abs(row.cross_gap - analytic) / std::max(1.0, std::abs(analytic));
            ok = ok && rel <= 1e-3;
            worst = std::max(worst, rel);
        }
        s.checks.push_back(mk("gallery.log_cross_analytic", ok,
                              "FD cross gap matches 4 ln N - 8/N, worst rel " + num(worst)));
    }
    {
        const double rem = wlog.rows[1].remainder; // r = 1e-3
        const double want = std::log(6.0 * std::log(10.0));
        s.checks.push_back(mk("gallery.log_remainder_value",
                              std::abs(rem - want) <= 1e-9 * want,
                              "|w|/r^2 at r = 1e-3 equals ln(-ln r^2) = " + num(want)));
    }
    s.checks.push_back(mk("gallery.sin_bounded_hessian", wsin.hess_sup <= 10.0,
                          "largest sampled Hessian entry " + num(wsin.hess_sup) +
                              " (bound 10)"));
    s.checks.push_back(mk("gallery.sin_cross_oscillates", wsin.cross_spread >= 0.5,
                          "cross-gap spread over the radii " + num(wsin.cross_spread) +
                              " (needs >= 0.5)"));
    {
        bool thrown = false;
        try {
            gallery::gallery_value(gallery::Which::log_amplitude, Vec{0.6, 0.6});
        } catch (const std::domain_error&) {
            thrown = true;
        }
        const double at_origin =
            gallery::gallery_value(gallery::Which::log_amplitude, Vec{0.0, 0.0});
        const double on_diag =
            gallery::gallery_value(gallery::Which::log_amplitude, Vec{0.1, 0.1});
        s.checks.push_back(mk("gallery.domain", thrown && at_origin == 0.0 && on_diag == 0.0,
                              "outside the disk rejected; exact zeros at the origin "
                              "and on the diagonal"));
    }
    return s;
}

// ===========================================================================
// Pinned acceptance criteria
// ===========================================================================

Options pinned_base(const Options& opts) {
    Options o;
    o.exec = opts.exec;
    o.seed = opts.seed;
    return o;
}

Check criterion_1(const Options& opts) {
    const auto t0 = std::chrono::steady_clock::now();
    struct Cfg {
        int n;
        double t;
        const char* phi;
    };
    const std::vector<Cfg> cfgs = {
        {2, 0.25, "log"}, {2, 0.25, "pow:0.5"}, {2, 0.05, "log"}, {2, 0.05, "pow:0.5"},
        {3, 0.25, "log"}, {3, 0.25, "pow:0.5"}, {3, 0.05, "log"}, {3, 0.05, "pow:0.5"},
    };
    FdSummary total;
    for (const Cfg& c : cfgs) {
        const block::BlockParams p = block::make_block(c.n, c.t, phi::make_phi(c.phi));
        const auto pts =
            sampling::ball_points(c.n, 200, kSupportEnd, 1000 + opts.seed);
        const FdSummary f = fd_check_block(p, pts, opts.exec);
        total.worst_grad = std::max(total.worst_grad, f.worst_grad);
        total.worst_hess_plateau = std::max(total.worst_hess_plateau, f.worst_hess_plateau);
        total.worst_hess_shell = std::max(total.worst_hess_shell, f.worst_hess_shell);
    }
    const double ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
    const bool ok = total.worst_grad <= 1e-7 && total.worst_hess_plateau <= 1e-5 &&
                    total.worst_hess_shell <= 1e-4 && ms < 30000.0;
    // No wall-clock figure in the detail: reports must be byte-reproducible.
    return mk("criterion.1", ok,
              "8 configurations x 200 points: grad rel " + num(total.worst_grad) +
                  " (tol 1e-7), hess rel " + num(total.worst_hess_plateau) +
                  " plateau (tol 1e-5) / " + num(total.worst_hess_shell) +
                  " shell (tol 1e-4), within the 30 s budget: " +
                  (ms < 30000.0 ? "yes" : "NO"));
}

ladder::Ladder pinned_ladder(const Options& opts, const char* phi_sel, int n,
                             ladder::TRule rule) {
    Options o = pinned_base(opts);
    o.phi = phi_sel;
    o.n = n;
    o.K = 10;
    o.signed_sum = true;
    o.t_rule = rule;
    return ladder::build_ladder(ladder_params(o));
}

Check criterion_2(const Options& opts) {
    const ladder::Ladder lad =
        pinned_ladder(opts, "pow:0.5", 3, ladder::TRule::harmonic);
    const auto recs = ladder::witness_sequence(lad);
    double worst_dec = 0.0, worst_mirror = 0.0;
    for (const ladder::WitnessRecord& w : recs) {
        worst_dec = std::max(worst_dec, std::abs(w.hess12_plus - w.eps * w.h_y - 0.5));
        worst_mirror = std::max(worst_mirror, std::abs(w.hess12_minus + w.hess12_plus));
    }
    const bool ok = recs.size() == lad.levels.size() && worst_dec <= 1e-9 &&
                    worst_mirror <= 1e-12;
    return mk("criterion.2", ok,
              std::to_string(recs.size()) + "/10 witnesses usable; hess12_plus - "
              "eps h(y) = 1/2 to " + num(worst_dec) + " (tol 1e-9); mirror to " +
                  num(worst_mirror) + " (tol 1e-12)");
}

Check criterion_3(const Options& opts) {
    const ladder::Ladder lad =
        pinned_ladder(opts, "pow:0.5", 3, ladder::TRule::harmonic);
    const auto recs = ladder::witness_sequence(lad);
    bool dec = true, band = true;
    for (std::size_t i = 0; i < recs.size(); ++i) {
        if (i > 0) {
            dec = dec && std::abs(recs[i].residual) < std::abs(recs[i - 1].residual);
        }
        if (recs[i].k >= 5) {
            band = band && recs[i].hess12_plus > 0.3 && recs[i].hess12_minus < -0.3;
        }
    }
    const bool last_ok = !recs.empty() && std::abs(recs.back().residual) <= 0.2;
    const bool ok = recs.size() == lad.levels.size() && dec && last_ok && band;
    return mk("criterion.3", ok,
              "|hess12_plus - 1/2| strictly decreasing, " +
                  num(recs.empty() ? 0.0 : std::abs(recs.front().residual)) + " -> " +
                  num(recs.empty() ? 0.0 : std::abs(recs.back().residual)) +
                  " (last <= 0.2); entries beyond +-0.3 from k = 5 on");
}

Check criterion_4(const Options& opts) {
    const ladder::Ladder lad =
        pinned_ladder(opts, "pow:0.5", 3, ladder::TRule::harmonic);
    std::vector<double> ts;
    for (const ladder::Level& lv : lad.levels) ts.push_back(lv.t);
    const block::BoundReport bounds =
        block::block_term_bounds(3, lad.params.phi, ts);
    const auto rows = ops::level_table(lad, 100, 2000 + opts.seed, opts.exec);
    bool conform = true;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        conform = conform &&
                  rows[i].max_abs_lap <= lad.levels[i].eps * bounds.C_lap * 1.0001;
    }
    const double drop = rows[1].max_abs_lap / rows[7].max_abs_lap; // k = 2 vs 8
    const bool ok = conform && drop >= 1.2;
    return mk("criterion.4", ok,
              "max |Laplacian| <= eps_k C (C = " + num(bounds.C_lap) +
                  ") on all levels; k = 2 to k = 8 decay factor " + num(drop) +
                  " (needs >= 1.2)");
}

Check criterion_5(const Options& opts) {
    const ladder::Ladder lad =
        pinned_ladder(opts, "pow:0.5", 3, ladder::TRule::harmonic);
    std::vector<double> ts;
    for (const ladder::Level& lv : lad.levels) ts.push_back(lv.t);
    const block::BoundReport bounds =
        block::block_term_bounds(3, lad.params.phi, ts);
    double block_max = 0.0;
    for (const block::BoundRow& row : bounds.rows) {
        block_max = std::max({block_max, row.sup_diag, row.sup_offdiag, row.sup_h12});
    }
    double eps_max = 0.0;
    for (const ladder::Level& lv : lad.levels) eps_max = std::max(eps_max, lv.eps);
    // Certified constant: sampled sweep supremum with direction-coverage slack.
    const double C_bound = 1.25 * eps_max * block_max;

    const auto pts = sampling::ball_points(3, 100, kSupportEnd, 3000 + opts.seed);
    double global = 0.0;
    bool per_level = true;
    double worst_margin = 0.0;
    for (const ladder::Level& lv : lad.levels) {
        const auto maxima = sweep::tabulate<double>(pts.size(), opts.exec, [&](std::size_t i) {
            return ladder::u_eval_local(lad, lv.k, false, pts[i]).hessian.max_abs();
        });
        const double hmax = *std::max_element(maxima.begin(), maxima.end());
        global = std::max(global, hmax);
        const double cap = 2.0 * (1.0 + bounds.C_h * lv.eps);
        per_level = per_level && hmax <= cap;
        worst_margin = std::max(worst_margin, hmax / cap);
    }
    const bool ok = global <= C_bound && per_level;
    return mk("criterion.5", ok,
              "global sampled sup |Hess u| = " + num(global) + " <= C_bound = " +
                  num(C_bound) + "; every level under 2(1 + C_h eps_k), worst fill " +
                  num(worst_margin));
}

Check criterion_6(const Options& opts) {
    const ladder::Ladder lad_h =
        pinned_ladder(opts, "pow:0.5", 3, ladder::TRule::harmonic);
    const ladder::Ladder lad_g =
        pinned_ladder(opts, "pow:0.5", 3, ladder::TRule::geometric);
    std::vector<double> ts;
    for (const ladder::Level& lv : lad_h.levels) ts.push_back(lv.t);
    for (const ladder::Level& lv : lad_g.levels) ts.push_back(lv.t);
    const block::BoundReport bounds =
        block::block_term_bounds(3, lad_h.params.phi, ts);
    const double denom = (10.0 - kSupportEnd) * (10.0 - kSupportEnd);

    const auto ys = sampling::ball_points(3, 60, kSupportEnd, 4000 + opts.seed);
    const Vec z0 = lad_h.params.center_dir();
    bool conform = true, dec = true;
    double prev = std::numeric_limits<double>::infinity();
    for (const ladder::Level& lv : lad_h.levels) {
        const double bound = lv.eps * bounds.C_value / denom;
        for (const Vec& y : ys) {
            for (int fam = 0; fam < 2; ++fam) {
                Vec x(3);
                const double sgn = fam == 0 ? 1.0 : -1.0;
                for (std::size_t i = 0; i < 3; ++i) {
                    x[i] = sgn * lv.R * z0[i] + lv.r * y[i];
                }
                conform = conform && ladder::taylor_remainder(lad_h, x) <= bound * 1.0001;
            }
        }
        dec = dec && bound < prev;
        prev = bound;
    }
    const double b1 = lad_g.level(1).eps * bounds.C_value / denom;
    const double b10 = lad_g.level(10).eps * bounds.C_value / denom;
    const bool fast = b10 <= 1e-2 * b1;
    const bool ok = conform && dec && fast;
    return mk("criterion.6", ok,
              "harmonic ladder: sampled |u|/|x|^2 within the level bound, bound "
              "sequence strictly decreasing; geometric ladder: bound falls to " +
                  num(b10 / b1) + " of level 1 by level 10 (needs <= 1e-2)");
}

Check criterion_7(const Options& opts) {
    Options o = pinned_base(opts);
    o.phi = "log";
    o.n = 3;
    o.K = 10;
    o.t_rule = ladder::TRule::geometric;
    const ladder::Ladder lad = ladder::build_ladder(ladder_params(o));
    const ops::MaConditionReport ma = ops::ma_conditions_check(lad.params.phi, 3);
    const auto rows = ops::level_table(lad, 100, 5000 + opts.seed, opts.exec);
    bool dec = true;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        dec = dec && rows[i].max_abs_det < rows[i - 1].max_abs_det;
    }
    const double ratio = rows.back().max_abs_det / rows.front().max_abs_det;
    Vec origin(3, 0.0);
    const double det0 = ops::det_hessian(ladder::u_eval(lad, origin));
    const bool ok = ma.pass && dec && ratio <= 1e-2 && det0 == 0.0;
    return mk("criterion.7", ok,
              "side conditions pass (tails " + num(ma.tail_d1) + ", " + num(ma.tail_d2) +
                  "); max |det D^2 u| strictly decreasing, final/first = " + num(ratio) +
                  " (<= 1e-2); det at origin exactly " + num(det0));
}

Check criterion_8(const Options& opts) {
    Options o = pinned_base(opts);
    o.phi = "pow:0.5";
    o.n = 2;
    o.K = 10;
    o.t_rule = ladder::TRule::harmonic;
    const ladder::Ladder lad = ladder::build_ladder(ladder_params(o));
    const ops::ObstructionTable demo = ops::ma_obstruction_demo(lad, 2.3);
    double worst_cf = 0.0;
    for (const ops::ObstructionRow& row : demo.rows) {
        const double closed = std::exp(-0.5) * std::sqrt(0.5 / row.t);
        worst_cf = std::max(worst_cf, std::abs(row.M - closed) / closed);
    }
    const bool ok = demo.increasing && demo.ratio_ok && worst_cf <= 1e-6;
    return mk("criterion.8", ok,
              "normalization sup strictly increasing, M(10)/M(1) = " + num(demo.ratio) +
                  " (needs >= 2.3); closed form e^(-1/2) sqrt(alpha/t_k) matched to " +
                  num(worst_cf) + " rel (tol 1e-6)");
}

Check criterion_9(const Options& opts) {
    const ladder::Ladder lad =
        pinned_ladder(opts, "pow:0.5", 3, ladder::TRule::geometric);
    const auto rows = ops::level_table(lad, 100, 6000 + opts.seed, opts.exec);
    bool dec = true;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        dec = dec && rows[i].max_abs_H < rows[i - 1].max_abs_H;
    }
    const double ratio = rows.front().max_abs_H > 0.0
                             ? rows.back().max_abs_H / rows.front().max_abs_H
                             : 1.0;
    const Vec xi_w(3, 1.0 / std::sqrt(3.0));
    bool band = true, grad_small = true;
    double worst_w = 0.0, worst_half = 0.0;
    for (const ladder::Level& lv : lad.levels) {
        if (lv.k < 5 || !lv.witness_ok) continue;
        const block::BlockParams p = block::make_block(3, lv.t, lad.params.phi);
        const block::PointEval w = block::block_eval_s(p, lv.s_w, xi_w);
        double g2 = 0.0;
        for (double g : w.gradient) {
            const double gu = lv.eps * lv.r * g;
            g2 += gu * gu;
        }
        grad_small = grad_small && std::sqrt(g2) <= 1e-3;
        const double W = std::sqrt(1.0 + g2);
        const ops::LevelRow& row = rows[static_cast<std::size_t>(lv.k - 1)];
        worst_w = std::max(worst_w, std::abs(row.sff12_plus - 0.5 / W));
        worst_half = std::max(worst_half, std::abs(row.sff12_plus - 0.5));
        band = band && std::abs(row.sff12_plus - 0.5 / W) <= 1e-2 &&
               std::abs(row.sff12_plus - 0.5) <= 2e-2 &&
               std::abs(row.sff12_minus + row.sff12_plus) <= 1e-12;
    }
    const bool ok = dec && ratio <= 1e-1 && band && grad_small;
    return mk("criterion.9", ok,
              "max |H| strictly decreasing, final/first = " + num(ratio) +
                  " (<= 0.1); witness sff(1,2) within " + num(worst_w) +
                  " of +-(1/2)/W (tol 1e-2) and " + num(worst_half) +
                  " of +-1/2 (tol 2e-2) for k >= 5");
}

Check criterion_10(const Options&) {
    struct Fixture {
        radial::RadialProfile p;
        radial::RadialClass want;
    };
    const std::vector<Fixture> fixtures = {
        {radial::profile_square(), radial::RadialClass::C2},
        {radial::profile_s4_sin(),
         radial::RadialClass::twice_diff_bounded_discontinuous_hessian},
        {radial::profile_s3_sin(), radial::RadialClass::not_twice_differentiable},
    };
    bool ok = true;
    std::string got;
    for (const Fixture& f : fixtures) {
        const radial::RadialReport r1 = radial::classify_radial(f.p, 1);
        const radial::RadialReport r2 = radial::classify_radial(f.p, 2);
        ok = ok && r1.classification == f.want && r2.classification == f.want;
        if (!got.empty()) got += ", ";
        got += radial::to_string(r1.classification);
    }
    return mk("criterion.10", ok,
              "fixture classes (stable under 2x refinement): " + got);
}

Check criterion_11(const Options&) {
    const gallery::GalleryReport wlog =
        gallery::gallery_report(gallery::Which::log_amplitude);
    const gallery::GalleryReport wsin =
        gallery::gallery_report(gallery::Which::sin_log_amplitude);
    const bool ok = wlog.cross_exceeds_10_with_small_lap && wsin.hess_sup <= 10.0 &&
                    wsin.cross_spread >= 0.5;
    return mk("criterion.11", ok,
              "log amplitude: cross gap > 10 with |Laplacian| <= 0.5 at the same "
              "radii; sin amplitude: Hessian sup " + num(wsin.hess_sup) +
                  " <= 10 with cross spread " + num(wsin.cross_spread) + " >= 0.5");
}

Check criterion_12(const Options& opts) {
    Options o = pinned_base(opts);
    const ladder::Ladder lad1 = ladder::build_ladder(ladder_params(o));
    const ladder::Ladder lad2 = ladder::build_ladder(ladder_params(o));
    const std::string w1 = io::witness_csv(ladder::witness_sequence(lad1));
    const std::string w2 = io::witness_csv(ladder::witness_sequence(lad2));
    const std::string s1 = io::sample_ball_csv(lad1, 3, 64, o.exec);
    const std::string s2 = io::sample_ball_csv(lad2, 3, 64, o.exec);
    const auto render = [&o]() {
        std::vector<Suite> suites;
        suites.push_back(suite_ma(o, false));
        suites.push_back(suite_radial(o));
        suites.push_back(suite_gallery(o));
        return report_json(suites).dump(2);
    };
    const std::string j1 = render();
    const std::string j2 = render();
    const bool ok = w1 == w2 && s1 == s2 && j1 == j2;
    return mk("criterion.12", ok,
              "witness CSV (" + std::to_string(w1.size()) + " B), ball-sample CSV (" +
                  std::to_string(s1.size()) + " B), and suite report JSON (" +
                  std::to_string(j1.size()) + " B) byte-identical across re-renders");
}

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "phi", "block", "ladder", "ma", "geometry", "radial", "gallery"};
    return names;
}

Suite run_suite(const std::string& name, const Options& opts) {
    if (name == "phi") return suite_phi(opts, true);
    if (name == "block") return suite_block(opts);
    if (name == "ladder") return suite_ladder(opts);
    if (name == "ma") return suite_ma(opts, true);
    if (name == "geometry") return suite_geometry(opts);
    if (name == "radial") return suite_radial(opts);
    if (name == "gallery") return suite_gallery(opts);
    throw std::invalid_argument("unknown suite: " + name);
}

Check criterion(int index, const Options& opts) {
    try {
        switch (index) {
            case 1: return criterion_1(opts);
            case 2: return criterion_2(opts);
            case 3: return criterion_3(opts);
            case 4: return criterion_4(opts);
            case 5: return criterion_5(opts);
            case 6: return criterion_6(opts);
            case 7: return criterion_7(opts);
            case 8: return criterion_8(opts);
            case 9: return criterion_9(opts);
            case 10: return criterion_10(opts);
            case 11: return criterion_11(opts);
            case 12: return criterion_12(opts);
            default: break;
        }
    } catch (const std::exception& e) {
        return mk("criterion." + std::to_string(index), false,
                  std::string("exception: ") + e.what());
    }
    throw std::invalid_argument("criterion index must be 1..12");
}

Suite acceptance_suite(const Options& opts) {
    Suite s;
    s.name = "acceptance";
    for (int i = 1; i <= 12; ++i) {
        s.checks.push_back(criterion(i, opts));
    }
    return s;
}

std::vector<Suite> run_all(const Options& opts) {
    std::vector<Suite> suites;
    suites.push_back(suite_phi(opts, false));
    suites.push_back(suite_block(opts));
    suites.push_back(suite_ladder(opts));
    suites.push_back(suite_ma(opts, false));
    suites.push_back(suite_geometry(opts));
    suites.push_back(suite_radial(opts));
    suites.push_back(suite_gallery(opts));
    suites.push_back(acceptance_suite(opts));
    return suites;
}

std::string report_text(const std::vector<Suite>& suites) {
    std::string out;
    int failures = 0;
    for (const Suite& s : suites) {
        int ok = 0;
        for (const Check& c : s.checks) {
            out += c.pass ? "[PASS] " : "[FAIL] ";
            out += c.id;
            if (!c.detail.empty()) {
                out += "  ";
                out += c.detail;
            }
            out += "\n";
            if (c.pass) {
                ++ok;
            } else {
                ++failures;
            }
        }
        out += "suite " + s.name + ": " + (s.pass() ? "PASS" : "FAIL") + " (" +
               std::to_string(ok) + "/" + std::to_string(s.checks.size()) + ")\n";
    }
    out += failures == 0 ? "ALL SUITES PASS\n"
                         : "FAILURES: " + std::to_string(failures) + "\n";
    return out;
}

nlohmann::ordered_json report_json(const std::vector<Suite>& suites) {
    nlohmann::ordered_json j;
    j["schema"] = io::kSchema;
    j["command"] = "verify";
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    bool all = true;
    for (const Suite& s : suites) {
        nlohmann::ordered_json js;
        js["name"] = s.name;
        js["pass"] = s.pass();
        nlohmann::ordered_json checks = nlohmann::ordered_json::array();
        for (const Check& c : s.checks) {
            nlohmann::ordered_json jc;
            jc["id"] = c.id;
            jc["pass"] = c.pass;
            jc["detail"] = c.detail;
            checks.push_back(jc);
        }
        js["checks"] = checks;
        arr.push_back(js);
        all = all && s.pass();
    }
    j["suites"] = arr;
    j["pass"] = all;
    return j;
}

} // namespace d2lab::verify
