// SPDX-License-Identifier: MIT

#include "d2lab/radial.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace d2lab::radial {

RadialProfile profile_square() {
    RadialProfile p;
    p.name = "square";
    p.psi = [](double s) { return s * s; };
    p.psi1 = [](double s) { return 2.0 * s; };
    p.psi2 = [](double) { return 2.0; };
    return p;
}

RadialProfile profile_s3_sin() {
    RadialProfile p;
    p.name = "s3_sin";
    p.psi = [](double s) { return s * s * s * std::sin(1.0 / s); };
    p.psi1 = [](double s) {
        return 3.0 * s * s * std::sin(1.0 / s) - s * std::cos(1.0 / s);
    };
    p.psi2 = [](double s) {
        return 6.0 * s * std::sin(1.0 / s) - 4.0 * std::cos(1.0 / s)
               - std::sin(1.0 / s) / s;
    };
    return p;
}

RadialProfile profile_s4_sin() {
    RadialProfile p;
    p.name = "s4_sin";
    p.psi = [](double s) { return s * s * s * s * std::sin(1.0 / s); };
    p.psi1 = [](double s) {
        return 4.0 * s * s * s * std::sin(1.0 / s) - s * s * std::cos(1.0 / s);
    };
    p.psi2 = [](double s) {
        return 12.0 * s * s * std::sin(1.0 / s) - 6.0 * s * std::cos(1.0 / s)
               - std::sin(1.0 / s);
    };
    return p;
}

block::PointEval radial_hessian(const RadialProfile& p, const Vec& x) {
    const int n = static_cast<int>(x.size());
    if (n < 2) {
        throw std::invalid_argument("radial: need dimension >= 2");
    }
    const double rho = norm2(x);
    if (rho == 0.0) {
        throw std::invalid_argument("radial: x must be nonzero");
    }
    const double v1 = p.psi1(rho);
    const double v2 = p.psi2(rho);
    const double slope = v1 / rho; // psi'(|x|)/|x|

    block::PointEval pe(n);
    pe.point = x;
    pe.value = p.psi(rho);
    for (int i = 0; i < n; ++i) {
        pe.gradient[static_cast<std::size_t>(i)] =
            slope * x[static_cast<std::size_t>(i)];
    }
    for (int i = 0; i < n; ++i) {
        const double xi = x[static_cast<std::size_t>(i)];
        for (int j = i; j < n; ++j) {
            const double xj = x[static_cast<std::size_t>(j)];
            double entry;
            if (i == j) {
                entry = slope + (xi * xi / (rho * rho)) * (v2 - slope);
            } else {
                entry = v2 * xi * xj / (rho * rho) - v1 * xi * xj / (rho * rho * rho);
            }
            pe.hessian(i, j) = entry;
            pe.hessian(j, i) = entry;
        }
    }
    pe.laplacian = v2 + (n - 1) * slope;
    return pe;
}

const char* to_string(RadialClass c) {
    switch (c) {
    case RadialClass::not_twice_differentiable:
        return "not_twice_differentiable";
    case RadialClass::C2:
        return "C2";
    case RadialClass::twice_diff_bounded_discontinuous_hessian:
        return "twice_diff_bounded_discontinuous_hessian";
    case RadialClass::inconclusive:
        return "inconclusive";
    }
    return "inconclusive";
}

namespace {

struct TailStat {
    double center = 0.0;
    double spread = 0.0;
};

TailStat tail_stat(const std::vector<double>& vals, std::size_t tail_len) {
    const std::size_t start = vals.size() > tail_len ? vals.size() - tail_len : 0;
    double mn = vals[start], mx = vals[start];
    for (std::size_t i = start; i < vals.size(); ++i) {
        mn = std::min(mn, vals[i]);
        mx = std::max(mx, vals[i]);
    }
    return {0.5 * (mn + mx), mx - mn};
}

enum class Spread { converged, oscillating, unclear };

Spread spread_verdict(const TailStat& st) {
    const double scale = std::max(1.0, std::abs(st.center));
    if (st.spread < 1e-3 * scale) return Spread::converged;
    if (st.spread >= 0.1 * scale) return Spread::oscillating;
    return Spread::unclear;
}

enum class Bound { bounded, unbounded, unclear };

// Windowed maxima from the tail backwards: four windows of 8*substeps
// probes each. Monotone strong growth across windows reads as unbounded;
// window maxima within a factor of two of each other read as bounded.
Bound bound_verdict(const std::vector<double>& vals, std::size_t window) {
    std::vector<double> w;
    std::size_t end = vals.size();
    while (w.size() < 4 && end >= window) {
        double mx = 0.0;
        for (std::size_t i = end - window; i < end; ++i) {
            mx = std::max(mx, std::abs(vals[i]));
        }
        w.push_back(mx);
        end -= window;
    }
    if (w.size() < 2) return Bound::unclear;
    std::reverse(w.begin(), w.end()); // coarse (large s) to fine (small s)
    bool monotone_growth = true;
    for (std::size_t i = 1; i < w.size(); ++i) {
        if (!(w[i] > w[i - 1] * 2.0)) monotone_growth = false;
    }
    const double total = w.back() / std::max(w.front(), 1e-300);
    if (monotone_growth && total >= 100.0) return Bound::unbounded;
    double wmin = w[0], wmax = w[0];
    for (double v : w) {
        wmin = std::min(wmin, v);
        wmax = std::max(wmax, v);
    }
    if (wmax <= 2.0 * std::max(wmin, 1e-300) || wmax < 1e-6) {
        return Bound::bounded;
    }
    return Bound::unclear;
}

} // namespace

RadialReport classify_radial(const RadialProfile& p, int substeps) {
    if (substeps < 1 || substeps > 8) {
        throw std::invalid_argument("classify_radial: substeps must be 1..8");
    }
    RadialReport rep;
    rep.name = p.name;

    const int span = (40 - 4) * substeps;
    std::vector<double> q1, q2, lap, psis, psi1s;
    for (int i = 0; i <= span; ++i) {
        const double e = 4.0 + static_cast<double>(i) / substeps;
        const double s = std::exp2(-e);
        ProbeRow row;
        row.s = s;
        row.psi1_over_s = p.psi1(s) / s;
        row.psi2 = p.psi2(s);
        row.lap3 = row.psi2 + 2.0 * row.psi1_over_s;
        rep.rows.push_back(row);
        q1.push_back(row.psi1_over_s);
        q2.push_back(row.psi2);
        lap.push_back(row.lap3);
        psis.push_back(std::abs(p.psi(s)));
        psi1s.push_back(std::abs(p.psi1(s)));
    }

    const std::size_t tail_len = static_cast<std::size_t>(12 * substeps);
    const std::size_t window = static_cast<std::size_t>(8 * substeps);

    const TailStat st_psi = tail_stat(psis, tail_len);
    const TailStat st_psi1 = tail_stat(psi1s, tail_len);
    rep.hypotheses_ok = std::abs(st_psi.center) + st_psi.spread < 1e-3
                        && std::abs(st_psi1.center) + st_psi1.spread < 1e-3;

    const TailStat st1 = tail_stat(q1, tail_len);
    rep.lim1_value = st1.center;
    rep.lim1_spread = st1.spread;
    switch (spread_verdict(st1)) {
    case Spread::converged:
        rep.lim_psi1_over_s = Lim1::finite;
        break;
    case Spread::oscillating:
        rep.lim_psi1_over_s = Lim1::absent;
        break;
    case Spread::unclear:
        rep.lim_psi1_over_s = Lim1::inconclusive;
        break;
    }

    const TailStat st2 = tail_stat(q2, tail_len);
    rep.lim2_value = st2.center;
    rep.lim2_spread = st2.spread;
    const Bound b2 = bound_verdict(q2, window);
    switch (spread_verdict(st2)) {
    case Spread::converged:
        rep.lim_psi2 = Lim2::finite;
        break;
    case Spread::oscillating:
        if (b2 == Bound::bounded) {
            rep.lim_psi2 = Lim2::absent_bounded;
        } else if (b2 == Bound::unbounded) {
            rep.lim_psi2 = Lim2::absent_unbounded;
        } else {
            rep.lim_psi2 = Lim2::inconclusive;
        }
        break;
    case Spread::unclear:
        rep.lim_psi2 = Lim2::inconclusive;
        break;
    }

    if (rep.lim_psi2 == Lim2::finite) {
        rep.lhopital_ok =
            rep.lim_psi1_over_s == Lim1::finite
            && std::abs(rep.lim1_value - rep.lim2_value)
                   <= 1e-3 * std::max(1.0, std::abs(rep.lim2_value));
    } else {
        rep.lhopital_ok = true;
    }

    const Bound blap = bound_verdict(lap, window);
    rep.case_f_ok = blap == b2;

    if (!rep.hypotheses_ok) {
        rep.classification = RadialClass::inconclusive;
        rep.detail = "profile hypotheses (psi, psi' -> 0) not certified";
        return rep;
    }
    if (rep.lim_psi1_over_s == Lim1::inconclusive
        || rep.lim_psi2 == Lim2::inconclusive) {
        rep.classification = RadialClass::inconclusive;
        rep.detail = "probe spreads fall between the decision thresholds";
        return rep;
    }
    if (rep.lim_psi1_over_s == Lim1::absent) {
        rep.classification = RadialClass::not_twice_differentiable;
        rep.detail = "psi'(s)/s has no limit at 0";
        return rep;
    }
    if (rep.lim_psi2 == Lim2::finite) {
        rep.classification = RadialClass::C2;
        rep.detail = "both scalar limits exist";
        return rep;
    }
    if (rep.lim_psi2 == Lim2::absent_bounded) {
        rep.classification =
            RadialClass::twice_diff_bounded_discontinuous_hessian;
        rep.detail = "psi'/s converges while bounded psi'' oscillates";
        return rep;
    }
    rep.classification = RadialClass::inconclusive;
    rep.detail = "psi'/s converges but psi'' grows without bound; outside "
                 "the three target classes";
    return rep;
}

} // namespace d2lab::radial
