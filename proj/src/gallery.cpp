// SPDX-License-Identifier: MIT

#include "d2lab/gallery.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "d2lab/fd.hpp"

namespace d2lab::gallery {

namespace {

double amplitude(Which which, double m) {
    const double N = -std::log(m);
    switch (which) {
    case Which::log_amplitude:
        return std::log(N);
    case Which::sin_log_amplitude:
        return std::sin(std::log(N));
    }
    throw std::logic_error("gallery: unknown fixture");
}

// Field for the FD oracle: defined on the whole punctured unit disk so that
// stencil samples of an admissible point (m <= 1/4) never fall off the
// domain. The public entry point enforces the disk bound separately.
double raw_value(Which which, const Vec& point) {
    const double m = dot(point, point);
    if (m == 0.0) return 0.0;
    if (m >= 1.0) {
        throw std::domain_error("gallery: sample outside the unit disk");
    }
    return (point[0] * point[0] - point[1] * point[1]) * amplitude(which, m);
}

void require_point(const Vec& point) {
    if (point.size() != 2) {
        throw std::invalid_argument("gallery: fixtures are planar");
    }
    const double m = dot(point, point);
    if (m > 0.25) {
        throw std::domain_error(
            "gallery: point outside the disk x^2 + y^2 <= 1/4");
    }
}

fd::FdConfig config_for(const Vec& point) {
    fd::FdConfig cfg;
    cfg.scheme = fd::Scheme::central4;
    cfg.base_step = 0.02;
    cfg.coord_floor = 0.5 * norm2(point);
    cfg.richardson = true;
    return cfg;
}

} // namespace

const char* to_string(Which w) {
    switch (w) {
    case Which::log_amplitude:
        return "log_amplitude";
    case Which::sin_log_amplitude:
        return "sin_log_amplitude";
    }
    return "log_amplitude";
}

double gallery_value(Which which, const Vec& point) {
    require_point(point);
    return raw_value(which, point);
}

block::PointEval gallery_eval(Which which, const Vec& point) {
    require_point(point);
    block::PointEval pe(2);
    pe.point = point;
    const double m = dot(point, point);
    if (m == 0.0) return pe;

    pe.value = raw_value(which, point);
    const fd::FdConfig cfg = config_for(point);
    auto field = [which](const Vec& x) { return raw_value(which, x); };
    pe.gradient = fd::fd_gradient(field, point, cfg);
    pe.hessian = fd::fd_hessian(field, point, cfg);
    pe.laplacian = pe.hessian.trace();
    return pe;
}

GalleryReport gallery_report(Which which) {
    GalleryReport rep;
    rep.which = which;
    const double radii[] = {1e-2, 1e-3, 1e-4, 1e-5, 1e-6};
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    constexpr int kDirs = 16;

    for (double r : radii) {
        GalleryRow row;
        row.r = r;

        const Vec diag = {r * inv_sqrt2, r * inv_sqrt2};
        const block::PointEval at_diag = gallery_eval(which, diag);
        row.cross_gap = at_diag.hessian(0, 0) - at_diag.hessian(1, 1);

        for (int d = 0; d < kDirs; ++d) {
            const double a = 2.0 * std::numbers::pi_v<double>
                             * static_cast<double>(d) / kDirs;
            const Vec x = {r * std::cos(a), r * std::sin(a)};
            const block::PointEval pe = gallery_eval(which, x);
            row.lap_band = std::max(row.lap_band, std::abs(pe.laplacian));
            row.hess_max = std::max(row.hess_max, pe.hessian.max_abs());
        }

        const Vec axis = {r, 0.0};
        row.remainder = std::abs(gallery_value(which, axis)) / (r * r);
        rep.rows.push_back(row);
    }

    rep.band_shrinks = true;
    rep.remainder_grows = true;
    double cmin = rep.rows.front().cross_gap;
    double cmax = cmin;
    for (std::size_t i = 0; i < rep.rows.size(); ++i) {
        const GalleryRow& row = rep.rows[i];
        if (row.cross_gap > 10.0 && row.lap_band <= 0.5) {
            rep.cross_exceeds_10_with_small_lap = true;
        }
        cmin = std::min(cmin, row.cross_gap);
        cmax = std::max(cmax, row.cross_gap);
        rep.hess_sup = std::max(rep.hess_sup, row.hess_max);
        if (i > 0) {
            if (!(row.lap_band < rep.rows[i - 1].lap_band)) {
                rep.band_shrinks = false;
            }
            if (!(row.remainder > rep.rows[i - 1].remainder)) {
                rep.remainder_grows = false;
            }
        }
    }
    rep.cross_spread = cmax - cmin;
    return rep;
}

} // namespace d2lab::gallery
