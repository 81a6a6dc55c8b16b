// SPDX-License-Identifier: MIT

#include "d2lab/phi.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "d2lab/fd.hpp"

namespace d2lab::phi {

namespace {

constexpr double kE = std::numbers::e;

void require_alpha(double alpha) {
    if (!(alpha > 0.0) || !(alpha < 1.0)) {
        throw std::invalid_argument("phi: power exponent must lie in (0,1), got "
                                    + std::to_string(alpha));
    }
}

} // namespace

double AdmissiblePhi::value(double s) const {
    switch (kind) {
    case Kind::power:
        return std::pow(s, alpha);
    case Kind::log:
        return std::log(s);
    case Kind::shifted_loglog:
        return std::log(std::log(s + kE));
    }
    return 0.0; // unreachable
}

double AdmissiblePhi::d1(double s) const {
    switch (kind) {
    case Kind::power:
        return alpha * std::pow(s, alpha - 1.0);
    case Kind::log:
        return 1.0 / s;
    case Kind::shifted_loglog: {
        const double u = s + kE;
        return 1.0 / (u * std::log(u));
    }
    }
    return 0.0; // unreachable
}

double AdmissiblePhi::d2(double s) const {
    switch (kind) {
    case Kind::power:
        return alpha * (alpha - 1.0) * std::pow(s, alpha - 2.0);
    case Kind::log:
        return -1.0 / (s * s);
    case Kind::shifted_loglog: {
        const double u = s + kE;
        const double lu = std::log(u);
        return -(lu + 1.0) / (u * u * lu * lu);
    }
    }
    return 0.0; // unreachable
}

bool AdmissiblePhi::ma_ready(int n) const {
    // phi^{n-1} phi' for the power profile is alpha * s^{n*alpha - 1}, which
    // tends to 0 iff n*alpha < 1 (phi^{n-1} phi'' then decays as well, since
    // it only needs n*alpha < 2). The logarithmic profiles win against any
    // fixed power of s.
    switch (kind) {
    case Kind::power:
        return static_cast<double>(n) * alpha < 1.0;
    case Kind::log:
    case Kind::shifted_loglog:
        return true;
    }
    return false; // unreachable
}

AdmissiblePhi make_phi(Kind kind, double alpha) {
    AdmissiblePhi p;
    p.kind = kind;
    p.s_min = 0.0;
    switch (kind) {
    case Kind::power:
        require_alpha(alpha);
        p.alpha = alpha;
        p.name = "pow:" + std::to_string(alpha);
        break;
    case Kind::log:
        p.name = "log";
        break;
    case Kind::shifted_loglog:
        p.name = "loglog";
        break;
    }
    return p;
}

AdmissiblePhi make_phi(const std::string& selector) {
    if (selector == "log") return make_phi(Kind::log);
    if (selector == "loglog") return make_phi(Kind::shifted_loglog);
    if (selector.rfind("pow:", 0) == 0) {
        double alpha = 0.0;
        try {
            std::size_t used = 0;
            alpha = std::stod(selector.substr(4), &used);
            if (used != selector.size() - 4) {
                throw std::invalid_argument("trailing characters");
            }
        } catch (const std::exception&) {
            throw std::invalid_argument("phi: cannot parse exponent in '" + selector
                                        + "'");
        }
        AdmissiblePhi p = make_phi(Kind::power, alpha);
        p.name = selector;
        return p;
    }
    throw std::invalid_argument("phi: unknown selector '" + selector
                                + "' (expected log | loglog | pow:<alpha>)");
}

std::vector<double> decay_profile(const AdmissiblePhi& phi, double beta,
                                  const std::vector<double>& radii) {
    if (!(beta > 0.0)) {
        throw std::invalid_argument("decay_profile: beta must be positive");
    }
    double prev = 1.0;
    for (double r : radii) {
        if (!(r > 0.0) || !(r < 1.0)) {
            throw std::invalid_argument(
                "decay_profile: radii must lie in (0,1); -ln|x|^2 leaves the "
                "profile domain at radius 1");
        }
        if (!(r < prev)) {
            throw std::invalid_argument("decay_profile: radii must be strictly "
                                        "decreasing");
        }
        prev = r;
    }
    std::vector<double> out;
    out.reserve(radii.size());
    for (double r : radii) {
        out.push_back(std::pow(r, beta) * phi.value(-2.0 * std::log(r)));
    }
    return out;
}

double scaled_sup(const AdmissiblePhi& phi, const std::vector<double>& beta_grid,
                  const std::vector<double>& rho_grid) {
    if (beta_grid.empty() || rho_grid.empty()) {
        throw std::invalid_argument("scaled_sup: grids must be non-empty");
    }
    for (double b : beta_grid) {
        if (!(b > 0.0) || !(b <= 1.0)) {
            throw std::invalid_argument("scaled_sup: beta values must lie in (0,1]");
        }
    }
    for (double rho : rho_grid) {
        if (!(rho > 0.0) || !(rho <= 2.0 / 3.0)) {
            throw std::invalid_argument("scaled_sup: rho values must lie in (0,2/3]");
        }
    }
    // Precompute |phi(-ln rho^2)| once per rho; the beta sweep touches each.
    std::vector<double> abs_phi(rho_grid.size());
    std::vector<double> log_rho(rho_grid.size());
    for (std::size_t i = 0; i < rho_grid.size(); ++i) {
        abs_phi[i] = std::abs(phi.value(-2.0 * std::log(rho_grid[i])));
        log_rho[i] = std::log(rho_grid[i]);
    }
    double sup = 0.0;
    for (double b : beta_grid) {
        for (std::size_t i = 0; i < rho_grid.size(); ++i) {
            const double v = b * std::exp(b * log_rho[i]) * abs_phi[i];
            if (v > sup) sup = v;
        }
    }
    return sup;
}

namespace {

std::vector<double> log_grid(double lo, double hi, int per_decade) {
    if (per_decade < 1) throw std::invalid_argument("grid resolution must be >= 1");
    const double decades = std::log10(hi / lo);
    const int count = std::max(2, static_cast<int>(std::ceil(decades * per_decade)) + 1);
    std::vector<double> g(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        const double f = static_cast<double>(i) / static_cast<double>(count - 1);
        g[static_cast<std::size_t>(i)] = lo * std::pow(hi / lo, f);
    }
    g.back() = hi; // pin the endpoint exactly
    return g;
}

} // namespace

std::vector<double> default_beta_grid(int per_decade) {
    return log_grid(1e-4, 1.0, per_decade);
}

std::vector<double> default_rho_grid(int per_decade) {
    return log_grid(1e-8, 2.0 / 3.0, per_decade);
}

WitnessPoint divergence_witness(const AdmissiblePhi& phi, double beta) {
    if (!(beta > 0.0) || !(beta < 1.0)) {
        throw std::invalid_argument("divergence_witness: beta must lie in (0,1)");
    }
    WitnessPoint w;
    w.radius = std::exp(-1.0 / beta);
    w.value = std::exp(-1.0) * phi.value(2.0 / beta);
    return w;
}

ProbeReport probe_certify(const AdmissiblePhi& phi) {
    ProbeReport rep;

    // Monotone growth and derivative decay on the decade grid.
    rep.increasing = true;
    rep.d1_decay = true;
    rep.d2_decay = true;
    double prev_v = -std::numeric_limits<double>::infinity();
    double prev_d1 = std::numeric_limits<double>::infinity();
    double prev_d2 = std::numeric_limits<double>::infinity();
    for (int e = 1; e <= 6; ++e) {
        const double s = std::pow(10.0, e);
        const double v = phi.value(s);
        const double a1 = std::abs(phi.d1(s));
        const double a2 = std::abs(phi.d2(s));
        if (!(v > prev_v)) rep.increasing = false;
        if (e > 1 && !(a1 <= prev_d1 * 1.05)) rep.d1_decay = false;
        if (e > 1 && !(a2 <= prev_d2 * 1.05)) rep.d2_decay = false;
        prev_v = v;
        prev_d1 = a1;
        prev_d2 = a2;
        if (e == 6) {
            rep.tail_d1 = a1;
            rep.tail_d2 = a2;
        }
    }
    rep.d1_tail = rep.tail_d1 < 1e-3;
    rep.d2_tail = rep.tail_d2 < 1e-3;

    // Analytic derivatives against the FD oracle, chained: d1 vs FD(value),
    // d2 vs FD(d1).
    fd::FdConfig cfg;
    cfg.coord_floor = 1.0; // probe points are O(1)..O(100); steps scale with s
    rep.fd_match = true;
    for (double s : {2.0, 10.0, 100.0}) {
        const double fd1 = fd::fd_d1([&phi](double q) { return phi.value(q); }, s, cfg);
        const double fd2 = fd::fd_d1([&phi](double q) { return phi.d1(q); }, s, cfg);
        const double r1 = std::abs(fd1 - phi.d1(s)) / std::abs(phi.d1(s));
        const double r2 = std::abs(fd2 - phi.d2(s)) / std::abs(phi.d2(s));
        rep.max_fd_rel_d1 = std::max(rep.max_fd_rel_d1, r1);
        rep.max_fd_rel_d2 = std::max(rep.max_fd_rel_d2, r2);
    }
    rep.fd_match = rep.max_fd_rel_d1 <= 1e-6 && rep.max_fd_rel_d2 <= 1e-6;
    return rep;
}

} // namespace d2lab::phi
