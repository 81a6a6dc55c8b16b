// SPDX-License-Identifier: MIT
//
// Parallel sampling-sweep kernels with a serial reference path. Reports must
// be byte-deterministic, so only two interaction patterns are offered:
// index-ordered table fill (no cross-point interaction at all) and max
// reduction (associative, commutative, and exact for doubles, hence
// independent of evaluation order). Both produce bitwise-identical results
// in serial and parallel mode; the test suite asserts exactly that.

#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace d2lab::sweep {

/// Execution policy for sampling sweeps.
enum class Exec {
    serial,  ///< plain loop, the reference semantics
    parallel ///< OpenMP worksharing when compiled in, else same as serial
};

/// True when the parallel path is actually backed by OpenMP.
inline bool parallel_enabled() {
#ifdef _OPENMP
    return true;
#else
    return false;
#endif
}

/// max over i in [0, n) of f(i). f must be reentrant. Throws
/// std::domain_error if any value is non-finite (checked on both paths, so
/// the two execution modes fail identically too).
template <class F>
double max_abs_over(std::size_t n, Exec exec, F&& f) {
    if (n == 0) return 0.0;
    bool bad = false;
    double m = 0.0;
#ifdef _OPENMP
    if (exec == Exec::parallel) {
#pragma omp parallel for reduction(max : m) reduction(|| : bad) schedule(static)
        for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
            const double v = f(static_cast<std::size_t>(i));
            if (v != v) bad = true;
            const double a = v < 0.0 ? -v : v;
            if (a > m) m = a;
        }
        if (bad || std::isinf(m)) {
            throw std::domain_error("sweep: non-finite sample in max reduction");
        }
        return m;
    }
#else
    (void)exec;
#endif
    for (std::size_t i = 0; i < n; ++i) {
        const double v = f(i);
        if (v != v) bad = true;
        const double a = v < 0.0 ? -v : v;
        if (a > m) m = a;
    }
    if (bad || std::isinf(m)) {
        throw std::domain_error("sweep: non-finite sample in max reduction");
    }
    return m;
}

/// out[i] = f(i) for i in [0, n), written by index. The parallel path only
/// changes who computes each slot, never the contents or the order.
template <class T, class F>
std::vector<T> tabulate(std::size_t n, Exec exec, F&& f) {
    std::vector<T> out(n);
#ifdef _OPENMP
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
            out[static_cast<std::size_t>(i)] = f(static_cast<std::size_t>(i));
        }
        return out;
    }
#else
    (void)exec;
#endif
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = f(i);
    }
    return out;
}

} // namespace d2lab::sweep
