// SPDX-License-Identifier: MIT

#include "d2lab/cutoff.hpp"

#include <cmath>

namespace d2lab::cutoff {

namespace {

// Below this distance from a join the bump factor exp(-1/x) is far beyond
// double underflow; treating it as exactly 0 keeps every expression finite.
constexpr double kGuard = 1e-12;

double bump(double x) {
    return x > kGuard ? std::exp(-1.0 / x) : 0.0;
}

} // namespace

double SmoothCutoff::value(double s) const {
    if (s <= plateau_end) return 1.0;
    if (s >= support_end) return 0.0;
    const double a = bump(support_end - s);
    const double b = bump(s - plateau_end);
    return a / (a + b);
}

double SmoothCutoff::d1(double s) const {
    if (s <= plateau_end || s >= support_end) return 0.0;
    const double a = support_end - s;
    const double b = s - plateau_end;
    const double A = bump(a);
    const double B = bump(b);
    const double ia2 = 1.0 / (a * a);
    const double ib2 = 1.0 / (b * b);
    const double q = A + B;
    // d/ds [A/(A+B)] with A' = -A/a^2 and B' = +B/b^2. The product A*B is
    // taken first: when one factor underflows to 0 it kills the whole term
    // before the large 1/a^2-type factors can manufacture an overflow.
    return -(A * B) * (ia2 + ib2) / (q * q);
}

double SmoothCutoff::d2(double s) const {
    if (s <= plateau_end || s >= support_end) return 0.0;
    const double a = support_end - s;
    const double b = s - plateau_end;
    const double A = bump(a);
    const double B = bump(b);
    const double ia2 = 1.0 / (a * a);
    const double ib2 = 1.0 / (b * b);
    const double ia3 = ia2 / a;
    const double ib3 = ib2 / b;
    const double q = A + B;
    // eta' = -P/Q with P = A*B*(a^-2 + b^-2) and Q = (A+B)^2, so
    // eta'' = -P'/Q + P*Q'/Q^2.
    const double P = (A * B) * (ia2 + ib2);
    const double Pp = (A * B) * (ib2 * ib2 - ia2 * ia2 + 2.0 * ia3 - 2.0 * ib3);
    const double Qp = 2.0 * q * (-A * ia2 + B * ib2);
    return -Pp / (q * q) + P * Qp / (q * q * q * q);
}

SmoothCutoff make_cutoff() {
    return SmoothCutoff{};
}

} // namespace d2lab::cutoff
