// SPDX-License-Identifier: MIT
//
// The admissible family of slowly growing profiles phi: functions with
// phi(s) -> infinity while phi'(s) -> 0 and phi''(s) -> 0. Composed as
// phi(-ln|x|^2) they create controlled blow-up at the origin; the helpers
// below certify the decay behaviour that the rest of the laboratory relies
// on.

#pragma once

#include <string>
#include <vector>

namespace d2lab::phi {

/// Built-in profile shapes.
enum class Kind {
    power,         ///< s^alpha with alpha in (0,1)
    log,           ///< ln s
    shifted_loglog ///< ln(ln(s + e)); the shift keeps it defined down to s = 0
};

/**
 * @brief A profile together with exact closed-form first and second
 *        derivatives.
 *
 * value/d1/d2 are finite for every s > s_min. ma_ready(n) states whether
 * phi^{n-1} phi' -> 0 and phi^{n-1} phi'' -> 0, the decay needed for the
 * determinant bound in dimension n; it is exact metadata, not a probe.
 */
struct AdmissiblePhi {
    std::string name;
    Kind kind = Kind::power;
    double alpha = 0.0; ///< exponent, meaningful only for Kind::power
    double s_min = 0.0;

    double value(double s) const;
    double d1(double s) const;
    double d2(double s) const;

    /// True when phi^{n-1} phi' and phi^{n-1} phi'' both tend to 0.
    /// For power profiles this is n*alpha < 1; log and shifted_loglog
    /// satisfy it in every dimension.
    bool ma_ready(int n) const;
};

/// Build a profile by kind. alpha is required (and validated) only for
/// Kind::power. Throws std::invalid_argument for alpha outside (0,1).
AdmissiblePhi make_phi(Kind kind, double alpha = 0.0);

/// Build a profile from its CLI selector: "log", "loglog", or "pow:<alpha>".
/// Throws std::invalid_argument for unknown names or bad exponents.
AdmissiblePhi make_phi(const std::string& selector);

/**
 * @brief Evaluate |x|^beta * phi(-ln|x|^2) at each radius.
 *
 * The returned sequence witnesses that the power weight defeats the
 * logarithmic growth: it decreases to 0 along any radius sequence
 * decreasing to 0. Radii must be strictly decreasing, each in (0,1);
 * radius >= 1 would push -ln|x|^2 at or below the profile's domain floor.
 * Throws std::invalid_argument on a bad radius list.
 */
std::vector<double> decay_profile(const AdmissiblePhi& phi, double beta,
                                  const std::vector<double>& radii);

/**
 * @brief Sampled sup over the grids of beta * rho^beta * |phi(-ln rho^2)|.
 *
 * The point of the quantity: it stays bounded by a constant depending only
 * on phi, uniformly in beta (contrast divergence_witness, where the missing
 * beta factor lets the value blow up as beta -> 0). Callers certify
 * boundedness by comparing against a refined grid.
 *
 * Grids must be non-empty, beta values in (0,1], rho values in (0, 2/3].
 */
double scaled_sup(const AdmissiblePhi& phi, const std::vector<double>& beta_grid,
                  const std::vector<double>& rho_grid);

/// Log-spaced default grids for scaled_sup: beta spans [1e-4, 1] and rho
/// spans [1e-8, 2/3], at the given resolution per decade.
std::vector<double> default_beta_grid(int per_decade = 64);
std::vector<double> default_rho_grid(int per_decade = 64);

/// A point showing that rho^beta * phi(-ln rho^2) alone (no beta factor) is
/// NOT uniformly bounded: at radius e^{-1/beta} the value is
/// e^{-1} * phi(2/beta), which diverges as beta -> 0.
struct WitnessPoint {
    double radius = 0.0;
    double value = 0.0;
};

/// Requires beta in (0,1); throws std::invalid_argument otherwise.
WitnessPoint divergence_witness(const AdmissiblePhi& phi, double beta);

/**
 * @brief Probe-grid certification of the admissibility conditions.
 *
 * On s in {10, 10^2, ..., 10^6}: value strictly increasing, |d1| and |d2|
 * non-increasing up to 5% slack, tails below 1e-3, and d1/d2 matching
 * finite differences of value/d1 at s in {2, 10, 100} to 1e-6 relative.
 * These are finite surrogates for limit statements; pass() reports the
 * conjunction and the report keeps the measured numbers.
 */
struct ProbeReport {
    bool increasing = false;
    bool d1_decay = false;
    bool d2_decay = false;
    bool d1_tail = false;
    bool d2_tail = false;
    bool fd_match = false;
    double tail_d1 = 0.0;       ///< |d1| at s = 1e6
    double tail_d2 = 0.0;       ///< |d2| at s = 1e6
    double max_fd_rel_d1 = 0.0; ///< worst relative FD mismatch for d1
    double max_fd_rel_d2 = 0.0; ///< worst relative FD mismatch for d2

    bool pass() const {
        return increasing && d1_decay && d2_decay && d1_tail && d2_tail && fd_match;
    }
};

ProbeReport probe_certify(const AdmissiblePhi& phi);

} // namespace d2lab::phi
