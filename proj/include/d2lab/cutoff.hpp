// SPDX-License-Identifier: MIT
//
// The fixed C-infinity cutoff eta: identically 1 on [0, 1/2], identically 0
// from 2/3 on, non-increasing, with closed-form first and second
// derivatives. Every building block is multiplied by eta(|x|), which is what
// confines the construction to a ball without disturbing it near the origin.

#pragma once

namespace d2lab::cutoff {

/**
 * @brief Bump-quotient cutoff eta(s) = B(2/3 - s) / (B(2/3 - s) + B(s - 1/2))
 *        with B(x) = exp(-1/x) for x > 0 and 0 otherwise.
 *
 * The quotient is exponentially flat at both joins, so d1 and d2 vanish
 * identically outside the open transition interval (1/2, 2/3) and underflow
 * smoothly to 0 at its ends. By symmetry eta(7/12) = 1/2 exactly.
 */
struct SmoothCutoff {
    static constexpr double plateau_end = 0.5;
    static constexpr double support_end = 2.0 / 3.0;

    double value(double s) const;
    double d1(double s) const;
    double d2(double s) const;
};

SmoothCutoff make_cutoff();

} // namespace d2lab::cutoff
