// SPDX-License-Identifier: MIT
#pragma once

/**
 * @file linalg.hpp
 * @brief Minimal dense vector/matrix helpers for low-dimensional work.
 *
 * Everything in this project lives in dimension n <= 8, so a std::vector
 * backed value type is plenty. SymMat stores a full row-major square matrix
 * and offers the handful of operations the rest of the library needs
 * (symmetry checks, trace, max norms, LU determinant with partial pivoting).
 */

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace d2lab {

using Vec = std::vector<double>;

inline double dot(const Vec& a, const Vec& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double norm2(const Vec& a) { return std::sqrt(dot(a, a)); }

inline double norm_inf(const Vec& a) {
    double m = 0.0;
    for (double v : a) m = std::max(m, std::abs(v));
    return m;
}

inline Vec operator+(Vec a, const Vec& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

inline Vec operator-(Vec a, const Vec& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}

inline Vec operator*(double c, Vec a) {
    for (double& v : a) v *= c;
    return a;
}

/// Dense square matrix, row major. Used for Hessians (n x n, n small).
class Mat {
  public:
    Mat() = default;
    explicit Mat(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0.0) {}

    int dim() const { return n_; }

    double& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

    double trace() const {
        double s = 0.0;
        for (int i = 0; i < n_; ++i) s += (*this)(i, i);
        return s;
    }

    /// Largest absolute entry.
    double max_abs() const {
        double m = 0.0;
        for (double v : a_) m = std::max(m, std::abs(v));
        return m;
    }

    /// Largest absolute asymmetry |A(i,j) - A(j,i)|.
    double max_asym() const {
        double m = 0.0;
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j)
                m = std::max(m, std::abs((*this)(i, j) - (*this)(j, i)));
        return m;
    }

    Mat& operator*=(double c) {
        for (double& v : a_) v *= c;
        return *this;
    }

    Mat operator-(const Mat& o) const {
        Mat r(n_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
        return r;
    }

    const std::vector<double>& data() const { return a_; }

  private:
    int n_ = 0;
    std::vector<double> a_;
};

/**
 * @brief Determinant by LU with partial pivoting.
 *
 * A zero pivot column short-circuits to an exact 0.0 so that matrices that
 * are exactly singular (for example the all-zero Hessian at the origin)
 * report determinant 0 with no rounding residue.
 */
inline double det_lu(Mat a) {
    const int n = a.dim();
    if (n == 0) throw std::invalid_argument("det_lu: empty matrix");
    double det = 1.0;
    for (int c = 0; c < n; ++c) {
        int piv = c;
        double best = std::abs(a(c, c));
        for (int r = c + 1; r < n; ++r) {
            const double v = std::abs(a(r, c));
            if (v > best) {
                best = v;
                piv = r;
            }
        }
        if (best == 0.0) return 0.0;
        if (piv != c) {
            for (int j = 0; j < n; ++j) std::swap(a(piv, j), a(c, j));
            det = -det;
        }
        det *= a(c, c);
        for (int r = c + 1; r < n; ++r) {
            const double f = a(r, c) / a(c, c);
            for (int j = c + 1; j < n; ++j) a(r, j) -= f * a(c, j);
        }
    }
    return det;
}

}  // namespace d2lab
