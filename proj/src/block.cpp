// SPDX-License-Identifier: MIT

#include "d2lab/block.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "d2lab/sampling.hpp"
#include "d2lab/sweep.hpp"

namespace d2lab::block {

namespace {

constexpr double kSupportEnd = cutoff::SmoothCutoff::support_end; // 2/3
constexpr double kPlateauEnd = cutoff::SmoothCutoff::plateau_end; // 1/2

// s = -2 ln rho at the support edge and at the plateau edge.
const double kS0 = -2.0 * std::log(kSupportEnd);
const double kSPlateau = -2.0 * std::log(kPlateauEnd);

struct Shared {
    double s = 0.0;
    double rho = 0.0; // e^(-s/2); may underflow to 0 for huge s
    double Ps = 0.0;  // rho^(2t)   = e^(-t s)
    double P1 = 0.0;  // rho^(2t+1) = e^(-(t+1/2) s)
    double P2 = 0.0;  // rho^(2t+2) = e^(-(t+1) s)
    double f0 = 0.0, f1 = 0.0, f2 = 0.0; // phi, phi', phi'' at s
    double W = 0.0;   // 2t phi - 2 phi'
    double Wp = 0.0;  // derivative of W in s
    double V = 0.0;   // (2t-2) W - 2 W'
    double e0 = 0.0, e1 = 0.0, e2 = 0.0; // eta, eta', eta'' at rho
};

Shared shared_at(const BlockParams& p, double s) {
    Shared sh;
    sh.s = s;
    sh.rho = std::exp(-0.5 * s);
    sh.Ps = std::exp(-p.t * s);
    sh.P1 = std::exp(-(p.t + 0.5) * s);
    sh.P2 = std::exp(-(p.t + 1.0) * s);
    sh.f0 = p.phi.value(s);
    sh.f1 = p.phi.d1(s);
    sh.f2 = p.phi.d2(s);
    sh.W = 2.0 * p.t * sh.f0 - 2.0 * sh.f1;
    sh.Wp = 2.0 * p.t * sh.f1 - 2.0 * sh.f2;
    sh.V = (2.0 * p.t - 2.0) * sh.W - 2.0 * sh.Wp;
    sh.e0 = p.eta.value(sh.rho);
    sh.e1 = p.eta.d1(sh.rho);
    sh.e2 = p.eta.d2(sh.rho);
    return sh;
}

// Assembly of value/gradient/Hessian from the shared factors. With
// q = xi1 xi2 rho^(2t+2) phi the product and chain rules give, in unit
// direction coordinates xi = x/rho,
//
//   dq/dx_i    = rho^(2t+1) [ (d1i xi2 + d2i xi1) phi + xi1 xi2 xi_i W ]
//   d2q/dx_idx_j = rho^(2t) [ (d1i d2j + d1j d2i) phi
//                  + ((d1j xi2 + d2j xi1) xi_i + (d1i xi2 + d2i xi1) xi_j) W
//                  + xi1 xi2 (dij W + xi_i xi_j V) ]
//
// and the cutoff wraps around by one more product rule. Every rho power is
// an exponential in s, so nothing here degrades at tiny radii.
PointEval assemble(const BlockParams& p, const Shared& sh, const Vec& xi) {
    const int n = p.n;
    PointEval pe(n);
    const double x0 = xi[0];
    const double x1 = xi[1];

    const double q = x0 * x1 * sh.P2 * sh.f0;
    const double q_over_rho = x0 * x1 * sh.P1 * sh.f0;

    Vec qg(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < n; ++i) {
        const double d0 = i == 0 ? 1.0 : 0.0;
        const double d1 = i == 1 ? 1.0 : 0.0;
        qg[static_cast<std::size_t>(i)] =
            sh.P1 * ((d0 * x1 + d1 * x0) * sh.f0
                     + x0 * x1 * xi[static_cast<std::size_t>(i)] * sh.W);
    }

    pe.value = sh.e0 * q;
    for (int i = 0; i < n; ++i) {
        pe.gradient[static_cast<std::size_t>(i)] =
            sh.e1 * xi[static_cast<std::size_t>(i)] * q
            + sh.e0 * qg[static_cast<std::size_t>(i)];
    }

    for (int i = 0; i < n; ++i) {
        const double d0i = i == 0 ? 1.0 : 0.0;
        const double d1i = i == 1 ? 1.0 : 0.0;
        const double xii = xi[static_cast<std::size_t>(i)];
        for (int j = i; j < n; ++j) {
            const double d0j = j == 0 ? 1.0 : 0.0;
            const double d1j = j == 1 ? 1.0 : 0.0;
            const double xij = xi[static_cast<std::size_t>(j)];
            const double dij = i == j ? 1.0 : 0.0;
            const double qh =
                sh.Ps
                * ((d0i * d1j + d0j * d1i) * sh.f0
                   + ((d0j * x1 + d1j * x0) * xii + (d0i * x1 + d1i * x0) * xij)
                         * sh.W
                   + x0 * x1 * (dij * sh.W + xii * xij * sh.V));
            const double entry = sh.e2 * xii * xij * q
                                 + sh.e1 * (dij - xii * xij) * q_over_rho
                                 + sh.e1
                                       * (xij * qg[static_cast<std::size_t>(i)]
                                          + xii * qg[static_cast<std::size_t>(j)])
                                 + sh.e0 * qh;
            pe.hessian(i, j) = entry;
            pe.hessian(j, i) = entry;
        }
    }
    pe.laplacian = pe.hessian.trace();
    return pe;
}

void require_unit(const Vec& xi) {
    const double len = norm2(xi);
    if (std::abs(len - 1.0) > 1e-9) {
        throw std::invalid_argument("block: direction must be a unit vector");
    }
}

} // namespace

BlockParams make_block(int n, double t, phi::AdmissiblePhi phi) {
    if (n < 2) {
        throw std::invalid_argument("block: dimension must be at least 2");
    }
    if (!(t > 0.0) || !(t <= 0.5)) {
        throw std::invalid_argument("block: t must lie in (0, 1/2]");
    }
    BlockParams p;
    p.n = n;
    p.t = t;
    p.phi = std::move(phi);
    p.eta = cutoff::make_cutoff();
    return p;
}

PointEval block_eval(const BlockParams& p, const Vec& x) {
    if (static_cast<int>(x.size()) != p.n) {
        throw std::invalid_argument("block: point dimension mismatch");
    }
    PointEval zero(p.n);
    zero.point = x;
    const double rho2 = dot(x, x);
    if (rho2 == 0.0) return zero;
    const double rho = std::sqrt(rho2);
    if (rho >= kSupportEnd) return zero;
    const double s = -std::log(rho2);
    Vec xi(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) xi[i] = x[i] / rho;
    PointEval pe = assemble(p, shared_at(p, s), xi);
    pe.point = x;
    return pe;
}

PointEval block_eval_s(const BlockParams& p, double s, const Vec& xi) {
    if (static_cast<int>(xi.size()) != p.n) {
        throw std::invalid_argument("block: direction dimension mismatch");
    }
    if (!(s > kS0)) {
        throw std::invalid_argument("block: s must exceed -2 ln(2/3)");
    }
    require_unit(xi);
    const Shared sh = shared_at(p, s);
    PointEval pe = assemble(p, sh, xi);
    for (std::size_t i = 0; i < xi.size(); ++i) pe.point[i] = sh.rho * xi[i];
    return pe;
}

Hess12Split plateau_hess12(const BlockParams& p, double s, const Vec& xi) {
    if (static_cast<int>(xi.size()) != p.n) {
        throw std::invalid_argument("block: direction dimension mismatch");
    }
    if (!(s >= kSPlateau)) {
        throw std::invalid_argument("block: plateau split needs s >= 2 ln 2");
    }
    require_unit(xi);
    const Shared sh = shared_at(p, s);
    const double x0 = xi[0];
    const double x1 = xi[1];
    Hess12Split split;
    split.leading = sh.Ps * sh.f0;
    split.rest = sh.Ps
                 * ((x0 * x0 + x1 * x1) * sh.W + x0 * x0 * x1 * x1 * sh.V);
    return split;
}

double TermList::total() const {
    double acc = 0.0;
    for (const Term& t : terms) acc += t.value;
    return acc;
}

TermList hess12_terms(const BlockParams& p, const Vec& x) {
    if (static_cast<int>(x.size()) != p.n) {
        throw std::invalid_argument("block: point dimension mismatch");
    }
    static const char* kNames[10] = {
        "eta xi1 xi2-free rho^2t phi (leading)",
        "eta'' xi1^2 xi2^2 rho^(2t+2) phi",
        "eta' (xi1^2+xi2^2) rho^(2t+1) phi",
        "(4t-1) eta' xi1^2 xi2^2 rho^(2t+1) phi",
        "2t(2t-2) eta xi1^2 xi2^2 rho^2t phi",
        "2t eta (xi1^2+xi2^2) rho^2t phi",
        "-4 eta' xi1^2 xi2^2 rho^(2t+1) phi'",
        "-2 eta (xi1^2+xi2^2) rho^2t phi'",
        "(4-8t) eta xi1^2 xi2^2 rho^2t phi'",
        "4 eta xi1^2 xi2^2 rho^2t phi''",
    };
    TermList list;
    list.terms.reserve(10);
    for (const char* name : kNames) list.terms.push_back({name, 0.0});

    const double rho2 = dot(x, x);
    if (rho2 == 0.0) return list;
    const double rho = std::sqrt(rho2);
    if (rho >= kSupportEnd) return list;
    const Shared sh = shared_at(p, -std::log(rho2));
    const double x0 = x[0] / rho;
    const double x1 = x[1] / rho;
    const double a = x0 * x0 + x1 * x1; // xi1^2 + xi2^2
    const double b = x0 * x0 * x1 * x1; // xi1^2 xi2^2
    const double t = p.t;

    list.terms[0].value = sh.e0 * sh.Ps * sh.f0;
    list.terms[1].value = sh.e2 * b * sh.P2 * sh.f0;
    list.terms[2].value = sh.e1 * a * sh.P1 * sh.f0;
    list.terms[3].value = (4.0 * t - 1.0) * sh.e1 * b * sh.P1 * sh.f0;
    list.terms[4].value = 2.0 * t * (2.0 * t - 2.0) * sh.e0 * b * sh.Ps * sh.f0;
    list.terms[5].value = 2.0 * t * sh.e0 * a * sh.Ps * sh.f0;
    list.terms[6].value = -4.0 * sh.e1 * b * sh.P1 * sh.f1;
    list.terms[7].value = -2.0 * sh.e0 * a * sh.Ps * sh.f1;
    list.terms[8].value = (4.0 - 8.0 * t) * sh.e0 * b * sh.Ps * sh.f1;
    list.terms[9].value = 4.0 * sh.e0 * b * sh.Ps * sh.f2;
    return list;
}

TermList hess1j_terms(const BlockParams& p, const Vec& x, int j) {
    if (static_cast<int>(x.size()) != p.n) {
        throw std::invalid_argument("block: point dimension mismatch");
    }
    if (j < 2 || j >= p.n) {
        throw std::invalid_argument("block: tail coordinate out of range");
    }
    static const char* kNames[5] = {
        "2t eta xi2 xij rho^2t phi",
        "2t(2t-2) eta xi1^2 xi2 xij rho^2t phi",
        "(4-8t) eta xi1^2 xi2 xij rho^2t phi'",
        "4 eta xi1^2 xi2 xij rho^2t phi''",
        "-2 eta xi2 xij rho^2t phi' (display-omitted cross term)",
    };
    TermList list;
    list.terms.reserve(5);
    for (const char* name : kNames) list.terms.push_back({name, 0.0});

    const double rho2 = dot(x, x);
    if (rho2 == 0.0) return list;
    const double rho = std::sqrt(rho2);
    if (rho >= kSupportEnd) return list;
    const Shared sh = shared_at(p, -std::log(rho2));
    const double x0 = x[0] / rho;
    const double x1 = x[1] / rho;
    const double xj = x[static_cast<std::size_t>(j)] / rho;
    const double t = p.t;

    list.terms[0].value = 2.0 * t * sh.e0 * x1 * xj * sh.Ps * sh.f0;
    list.terms[1].value =
        2.0 * t * (2.0 * t - 2.0) * sh.e0 * x0 * x0 * x1 * xj * sh.Ps * sh.f0;
    list.terms[2].value =
        (4.0 - 8.0 * t) * sh.e0 * x0 * x0 * x1 * xj * sh.Ps * sh.f1;
    list.terms[3].value = 4.0 * sh.e0 * x0 * x0 * x1 * xj * sh.Ps * sh.f2;
    list.terms[4].value = -2.0 * sh.e0 * x1 * xj * sh.Ps * sh.f1;
    return list;
}

TermList hessij_terms(const BlockParams& p, const Vec& x, int i, int j) {
    if (static_cast<int>(x.size()) != p.n) {
        throw std::invalid_argument("block: point dimension mismatch");
    }
    if (i < 2 || i >= p.n || j < 2 || j >= p.n || i == j) {
        throw std::invalid_argument("block: need distinct tail coordinates");
    }
    static const char* kNames[3] = {
        "2t(2t-2) eta xi1 xi2 xii xij rho^2t phi",
        "(4-8t) eta xi1 xi2 xii xij rho^2t phi'",
        "4 eta xi1 xi2 xii xij rho^2t phi''",
    };
    TermList list;
    list.terms.reserve(3);
    for (const char* name : kNames) list.terms.push_back({name, 0.0});

    const double rho2 = dot(x, x);
    if (rho2 == 0.0) return list;
    const double rho = std::sqrt(rho2);
    if (rho >= kSupportEnd) return list;
    const Shared sh = shared_at(p, -std::log(rho2));
    const double x0 = x[0] / rho;
    const double x1 = x[1] / rho;
    const double xi_ = x[static_cast<std::size_t>(i)] / rho;
    const double xj = x[static_cast<std::size_t>(j)] / rho;
    const double t = p.t;
    const double common = sh.e0 * x0 * x1 * xi_ * xj * sh.Ps;

    list.terms[0].value = 2.0 * t * (2.0 * t - 2.0) * common * sh.f0;
    list.terms[1].value = (4.0 - 8.0 * t) * common * sh.f1;
    list.terms[2].value = 4.0 * common * sh.f2;
    return list;
}

// ============================================================================
// Sampled suprema
// ============================================================================

namespace {

struct SupSample {
    double value = 0.0;
    double grad = 0.0;
    double diag = 0.0;
    double offdiag = 0.0;
    double lap = 0.0;
    double h12 = 0.0;
    double h12_rest = 0.0;
};

SupSample sample_sups(const BlockParams& p, double s, const Vec& xi) {
    const PointEval pe = block_eval_s(p, s, xi);
    SupSample out;
    out.value = std::abs(pe.value);
    for (double g : pe.gradient) out.grad = std::max(out.grad, std::abs(g));
    for (int i = 0; i < p.n; ++i) {
        out.diag = std::max(out.diag, std::abs(pe.hessian(i, i)));
        for (int j = i + 1; j < p.n; ++j) {
            if (i == 0 && j == 1) continue;
            out.offdiag = std::max(out.offdiag, std::abs(pe.hessian(i, j)));
        }
    }
    out.lap = std::abs(pe.laplacian);
    out.h12 = std::abs(pe.hessian(0, 1));
    // Leading term of the (1,2) entry; the remainder is the h of the witness
    // decomposition, cutoff terms included outside the plateau.
    const double leading =
        p.eta.value(std::exp(-0.5 * s)) * std::exp(-p.t * s) * p.phi.value(s);
    out.h12_rest = std::abs(pe.hessian(0, 1) - leading);
    return out;
}

std::vector<double> sweep_s_grid(double t) {
    // Linear coverage of the cutoff shell and the low-s plateau, then a
    // log-spaced extension far past the profile maximum for this t.
    std::vector<double> grid;
    const int linear_count = 600;
    const double lin_lo = kS0 + 1e-9;
    const double lin_hi = 4.0;
    for (int i = 0; i < linear_count; ++i) {
        grid.push_back(lin_lo
                       + (lin_hi - lin_lo) * static_cast<double>(i)
                             / static_cast<double>(linear_count - 1));
    }
    const double s_max = std::max(200.0, 40.0 / t);
    const int log_count = 2400;
    for (int i = 1; i <= log_count; ++i) {
        const double f = static_cast<double>(i) / static_cast<double>(log_count);
        grid.push_back(lin_hi * std::pow(s_max / lin_hi, f));
    }
    return grid;
}

std::vector<Vec> sweep_dirs(int n) {
    std::vector<Vec> dirs;
    Vec diag12(static_cast<std::size_t>(n), 0.0);
    diag12[0] = std::sqrt(0.5);
    diag12[1] = std::sqrt(0.5);
    dirs.push_back(diag12);
    Vec e0(static_cast<std::size_t>(n), 0.0);
    e0[0] = 1.0;
    dirs.push_back(e0);
    Vec all(static_cast<std::size_t>(n),
             1.0 / std::sqrt(static_cast<double>(n)));
    dirs.push_back(all);
    // Skew pair directions: the diagonal entries peak near lopsided splits
    // of the distinguished pair, not on the symmetric diagonal.
    Vec skew(static_cast<std::size_t>(n), 0.0);
    skew[0] = std::sqrt(0.75);
    skew[1] = 0.5;
    dirs.push_back(skew);
    std::swap(skew[0], skew[1]);
    dirs.push_back(skew);
    auto extra = sampling::sphere_dirs(n, 24, 11);
    dirs.insert(dirs.end(), extra.begin(), extra.end());
    return dirs;
}

} // namespace

BoundReport block_term_bounds(int n, const phi::AdmissiblePhi& phi,
                              const std::vector<double>& extra_t) {
    std::vector<double> ts = {0.25, 0.1, 0.01, 0.001};
    for (double t : extra_t) {
        bool seen = false;
        for (double u : ts) {
            if (std::abs(u - t) < 1e-15) seen = true;
        }
        if (!seen) ts.push_back(t);
    }
    std::sort(ts.begin(), ts.end(), std::greater<double>());

    const std::vector<Vec> dirs = sweep_dirs(n);
    BoundReport rep;
    rep.rows.reserve(ts.size());
    for (double t : ts) {
        const BlockParams p = make_block(n, t, phi);
        const std::vector<double> s_grid = sweep_s_grid(t);
        const std::size_t total = dirs.size() * s_grid.size();
        const auto samples = sweep::tabulate<SupSample>(
            total, sweep::Exec::parallel, [&](std::size_t idx) {
                const std::size_t d = idx / s_grid.size();
                const std::size_t si = idx % s_grid.size();
                return sample_sups(p, s_grid[si], dirs[d]);
            });
        BoundRow row;
        row.t = t;
        for (const SupSample& smp : samples) {
            row.sup_value = std::max(row.sup_value, smp.value);
            row.sup_grad = std::max(row.sup_grad, smp.grad);
            row.sup_diag = std::max(row.sup_diag, smp.diag);
            row.sup_offdiag = std::max(row.sup_offdiag, smp.offdiag);
            row.sup_lap = std::max(row.sup_lap, smp.lap);
            row.sup_h12 = std::max(row.sup_h12, smp.h12);
            row.sup_h12_rest = std::max(row.sup_h12_rest, smp.h12_rest);
        }
        rep.rows.push_back(row);
    }

    const BoundRow* base = nullptr;
    for (const BoundRow& row : rep.rows) {
        if (row.t == 0.25) base = &row;
    }
    rep.t_stable = base != nullptr;
    for (const BoundRow& row : rep.rows) {
        rep.C_value = std::max(rep.C_value, row.sup_value);
        rep.C_grad = std::max(rep.C_grad, row.sup_grad);
        rep.C_diag = std::max(rep.C_diag, row.sup_diag);
        rep.C_offdiag = std::max(rep.C_offdiag, row.sup_offdiag);
        rep.C_lap = std::max(rep.C_lap, row.sup_lap);
        rep.C_h = std::max(rep.C_h, row.sup_h12_rest);
        if (base != nullptr) {
            const bool stable = row.sup_value <= 2.0 * base->sup_value + 1e-12
                                && row.sup_grad <= 2.0 * base->sup_grad + 1e-12
                                && row.sup_diag <= 2.0 * base->sup_diag + 1e-12
                                && row.sup_offdiag
                                       <= 2.0 * base->sup_offdiag + 1e-12
                                && row.sup_lap <= 2.0 * base->sup_lap + 1e-12;
            if (!stable) rep.t_stable = false;
        }
    }
    if (base != nullptr && !rep.rows.empty()) {
        rep.grows_12 = rep.rows.back().sup_h12 > base->sup_h12;
    }
    return rep;
}

} // namespace d2lab::block
