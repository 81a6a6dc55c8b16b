// SPDX-License-Identifier: MIT

#include "d2lab/fd.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace d2lab::fd {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Truncation-vs-roundoff optima per scheme and derivative order.
double auto_base(Scheme scheme, int deriv_order) {
    if (scheme == Scheme::central2) {
        return deriv_order == 1 ? std::cbrt(kEps) : std::pow(kEps, 0.25);
    }
    return deriv_order == 1 ? std::pow(kEps, 0.2) : std::pow(kEps, 1.0 / 6.0);
}

double base_for(const FdConfig& cfg, int deriv_order) {
    return cfg.base_step > 0.0 ? cfg.base_step : auto_base(cfg.scheme, deriv_order);
}

double step_for(double base, double coord, double floor) {
    return base * std::max(std::abs(coord), floor);
}

[[noreturn]] void report_bad_sample(const Vec& at) {
    std::string where = "(";
    for (std::size_t i = 0; i < at.size(); ++i) {
        where += (i ? "," : "") + std::to_string(at[i]);
    }
    throw std::domain_error("fd: non-finite sample at " + where + ")");
}

// Every stencil read goes through here so non-finite samples are reported,
// never silently folded into a derivative estimate.
double sample(const Field& f, const Vec& at) {
    const double v = f(at);
    if (!std::isfinite(v)) report_bad_sample(at);
    return v;
}

Vec shifted(Vec x, int i, double dx) {
    x[static_cast<std::size_t>(i)] += dx;
    return x;
}

Vec shifted2(Vec x, int i, double dxi, int j, double dxj) {
    x[static_cast<std::size_t>(i)] += dxi;
    x[static_cast<std::size_t>(j)] += dxj;
    return x;
}

// First derivative along coordinate i at step h.
double d1_at(const Field& f, const Vec& x, int i, double h, Scheme scheme) {
    if (scheme == Scheme::central2) {
        return (sample(f, shifted(x, i, h)) - sample(f, shifted(x, i, -h))) / (2.0 * h);
    }
    return (-sample(f, shifted(x, i, 2.0 * h)) + 8.0 * sample(f, shifted(x, i, h))
            - 8.0 * sample(f, shifted(x, i, -h)) + sample(f, shifted(x, i, -2.0 * h)))
           / (12.0 * h);
}

// Pure second derivative along coordinate i at step h; f0 = f(x) is shared.
double d2_at(const Field& f, const Vec& x, double f0, int i, double h, Scheme scheme) {
    if (scheme == Scheme::central2) {
        return (sample(f, shifted(x, i, h)) - 2.0 * f0 + sample(f, shifted(x, i, -h)))
               / (h * h);
    }
    return (-sample(f, shifted(x, i, 2.0 * h)) + 16.0 * sample(f, shifted(x, i, h))
            - 30.0 * f0 + 16.0 * sample(f, shifted(x, i, -h))
            - sample(f, shifted(x, i, -2.0 * h)))
           / (12.0 * h * h);
}

// Mixed second derivative: composition of the two one-dimensional
// first-derivative stencils, 4 points for central2 and 16 for central4.
double dmixed_at(const Field& f, const Vec& x, int i, int j, double hi, double hj,
                 Scheme scheme) {
    if (scheme == Scheme::central2) {
        const double v = sample(f, shifted2(x, i, hi, j, hj))
                         - sample(f, shifted2(x, i, hi, j, -hj))
                         - sample(f, shifted2(x, i, -hi, j, hj))
                         + sample(f, shifted2(x, i, -hi, j, -hj));
        return v / (4.0 * hi * hj);
    }
    static constexpr double off[4] = {-2.0, -1.0, 1.0, 2.0};
    static constexpr double wgt[4] = {1.0, -8.0, 8.0, -1.0};
    double acc = 0.0;
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            acc += wgt[a] * wgt[b]
                   * sample(f, shifted2(x, i, off[a] * hi, j, off[b] * hj));
        }
    }
    return acc / (144.0 * hi * hj);
}

// Richardson combination of the estimates at steps h and h/2 for a scheme of
// order p: (2^p D(h/2) - D(h)) / (2^p - 1).
double richardson(double coarse, double fine, Scheme scheme) {
    const double w = scheme == Scheme::central2 ? 4.0 : 16.0;
    return (w * fine - coarse) / (w - 1.0);
}

} // namespace

Vec fd_gradient(const Field& f, const Vec& x, const FdConfig& cfg) {
    const int n = static_cast<int>(x.size());
    const double base = base_for(cfg, 1);
    Vec g(x.size(), 0.0);
    for (int i = 0; i < n; ++i) {
        const double h = step_for(base, x[static_cast<std::size_t>(i)], cfg.coord_floor);
        double est = d1_at(f, x, i, h, cfg.scheme);
        if (cfg.richardson) {
            est = richardson(est, d1_at(f, x, i, 0.5 * h, cfg.scheme), cfg.scheme);
        }
        g[static_cast<std::size_t>(i)] = est;
    }
    return g;
}

Mat fd_hessian(const Field& f, const Vec& x, const FdConfig& cfg) {
    const int n = static_cast<int>(x.size());
    const double base = base_for(cfg, 2);
    const double f0 = sample(f, x);
    Mat hess(n);
    for (int i = 0; i < n; ++i) {
        const double hi = step_for(base, x[static_cast<std::size_t>(i)], cfg.coord_floor);
        double est = d2_at(f, x, f0, i, hi, cfg.scheme);
        if (cfg.richardson) {
            est = richardson(est, d2_at(f, x, f0, i, 0.5 * hi, cfg.scheme), cfg.scheme);
        }
        hess(i, i) = est;
        for (int j = i + 1; j < n; ++j) {
            const double hj =
                step_for(base, x[static_cast<std::size_t>(j)], cfg.coord_floor);
            double mixed = dmixed_at(f, x, i, j, hi, hj, cfg.scheme);
            if (cfg.richardson) {
                mixed = richardson(
                    mixed, dmixed_at(f, x, i, j, 0.5 * hi, 0.5 * hj, cfg.scheme),
                    cfg.scheme);
            }
            hess(i, j) = mixed;
            hess(j, i) = mixed;
        }
    }
    return hess;
}

double fd_d1(const Curve& f, double x, const FdConfig& cfg) {
    const Field lifted = [&f](const Vec& p) { return f(p[0]); };
    return fd_gradient(lifted, Vec{x}, cfg)[0];
}

double fd_d2(const Curve& f, double x, const FdConfig& cfg) {
    const Field lifted = [&f](const Vec& p) { return f(p[0]); };
    return fd_hessian(lifted, Vec{x}, cfg)(0, 0);
}

} // namespace d2lab::fd
