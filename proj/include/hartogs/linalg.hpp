#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "errors.hpp"
#include "ring.hpp"

namespace hartogs {

/// Dense complex matrix, row-major. Small sizes only (metrics, Jacobians).
struct CMat {
    int rows = 0, cols = 0;
    std::vector<cdouble> a;

    CMat() = default;
    CMat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}

    cdouble& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    const cdouble& operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

    static CMat identity(int n) {
        CMat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    CMat adjoint() const {
        CMat m(cols, rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) m(j, i) = std::conj((*this)(i, j));
        return m;
    }

    CMat conjugated() const {
        CMat m(rows, cols);
        for (std::size_t k = 0; k < a.size(); ++k) m.a[k] = std::conj(a[k]);
        return m;
    }
};

inline CMat operator*(const CMat& x, const CMat& y) {
    CMat r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const cdouble xv = x(i, k);
            if (xv == 0.0) continue;
            for (int j = 0; j < y.cols; ++j) r(i, j) += xv * y(k, j);
        }
    return r;
}

/// Determinant over any scalar ring via LU with partial pivoting on the
/// modulus of the leading value. `m` is an n x n row-major buffer, consumed.
template <class S>
S det_lu(std::vector<S>& m, int n) {
    int sign = 1;
    for (int k = 0; k < n; ++k) {
        int piv = k;
        double best = std::abs(value_of(m[static_cast<std::size_t>(k) * n + k]));
        for (int i = k + 1; i < n; ++i) {
            const double cand = std::abs(value_of(m[static_cast<std::size_t>(i) * n + k]));
            if (cand > best) {
                best = cand;
                piv = i;
            }
        }
        if (piv != k) {
            for (int j = 0; j < n; ++j)
                std::swap(m[static_cast<std::size_t>(k) * n + j], m[static_cast<std::size_t>(piv) * n + j]);
            sign = -sign;
        }
        const S& pivot = m[static_cast<std::size_t>(k) * n + k];
        if (std::abs(value_of(pivot)) == 0.0) return zero_like(pivot);
        const S pinv = inv(pivot);
        for (int i = k + 1; i < n; ++i) {
            S f = m[static_cast<std::size_t>(i) * n + k] * pinv;
            for (int j = k + 1; j < n; ++j)
                m[static_cast<std::size_t>(i) * n + j] =
                    m[static_cast<std::size_t>(i) * n + j] - f * m[static_cast<std::size_t>(k) * n + j];
        }
    }
    S det = m[0];
    for (int k = 1; k < n; ++k) det = det * m[static_cast<std::size_t>(k) * n + k];
    if (sign < 0) det = det * cdouble(-1.0);
    return det;
}

/// LU factorization with partial pivoting, reusable across right-hand sides.
/// Throws SingularMetric when a pivot falls below `pivot_tol` x matrix scale.
struct LuFactor {
    CMat lu;
    std::vector<int> perm;

    explicit LuFactor(CMat A, double pivot_tol = 1e-13) : lu(std::move(A)) {
        const int n = lu.rows;
        perm.resize(n);
        for (int i = 0; i < n; ++i) perm[i] = i;
        double scale = 0.0;
        for (const auto& v : lu.a) scale = std::max(scale, std::abs(v));
        if (scale == 0.0) throw SingularMetric("zero matrix");
        for (int k = 0; k < n; ++k) {
            int piv = k;
            double best = std::abs(lu(k, k));
            for (int i = k + 1; i < n; ++i)
                if (std::abs(lu(i, k)) > best) {
                    best = std::abs(lu(i, k));
                    piv = i;
                }
            if (best < pivot_tol * scale)
                throw SingularMetric("pivot underflow in metric factorization");
            if (piv != k) {
                for (int j = 0; j < n; ++j) std::swap(lu(k, j), lu(piv, j));
                std::swap(perm[k], perm[piv]);
            }
            for (int i = k + 1; i < n; ++i) {
                const cdouble f = lu(i, k) / lu(k, k);
                lu(i, k) = f;
                for (int j = k + 1; j < n; ++j) lu(i, j) -= f * lu(k, j);
            }
        }
    }

    std::vector<cdouble> solve(std::span<const cdouble> b) const {
        const int n = lu.rows;
        std::vector<cdouble> x(n);
        for (int i = 0; i < n; ++i) {
            cdouble s = b[perm[i]];
            for (int j = 0; j < i; ++j) s -= lu(i, j) * x[j];
            x[i] = s;
        }
        for (int i = n - 1; i >= 0; --i) {
            for (int j = i + 1; j < n; ++j) x[i] -= lu(i, j) * x[j];
            x[i] /= lu(i, i);
        }
        return x;
    }
};

inline std::vector<cdouble> lu_solve(CMat A, std::vector<cdouble> b, double pivot_tol = 1e-13) {
    return LuFactor(std::move(A), pivot_tol).solve(b);
}

/// Positive definiteness of a Hermitian matrix by LDL^H: any pivot at or
/// below `tol` times the diagonal scale fails the test.
inline bool hermitian_positive_definite(CMat A, double tol = 1e-12) {
    const int n = A.rows;
    double scale = 0.0;
    for (int i = 0; i < n; ++i) scale = std::max(scale, std::abs(A(i, i)));
    if (scale == 0.0) return false;
    for (int k = 0; k < n; ++k) {
        const double d = A(k, k).real();
        if (d <= tol * scale) return false;
        for (int i = k + 1; i < n; ++i) {
            const cdouble l = A(i, k) / d;
            for (int j = k + 1; j <= i; ++j) A(i, j) -= l * std::conj(A(j, k));
        }
        for (int i = k + 1; i < n; ++i) A(i, k) = 0.0;
    }
    return true;
}

} // namespace hartogs
