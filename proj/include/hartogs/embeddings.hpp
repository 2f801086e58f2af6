#pragma once

#include <cmath>
#include <complex>
#include <span>
#include <vector>

#include "domains.hpp"
#include "errors.hpp"
#include "linalg.hpp"
#include "potential.hpp"

// Explicit totally geodesic polydisk embeddings into each Cartan domain, the
// induced Hartogs / dual extensions, and the automorphism lifts used to move
// them around.
//
// All embeddings are linear and odd; f(z) = A z with A the d x r column
// matrix below. In every case the image is a coordinate subspace of the
// ambient realization, recorded in `retained`:
//   I   : diagonal entries z_1..z_n
//   II  : 2x2 antidiagonal blocks [[0, z_i], [-z_i, 0]]
//   III : diagonal entries
//   IV  : ((z1+z2)/2, i(z1-z2)/2, 0, ...)        -> spans coords {0, 1}
//   V   : Z2 = (z1-z2)/sqrt2 + i (z1+z2)/sqrt2 e1 -> spans coords {0, 1} of Z2
//   VI  : (z1, z2, z3, 0, 0, 0)
// For IV and V the map itself is a unitary rotation of the polydisk inside
// that coordinate plane, not a coordinate inclusion; the normalized columns
// are kept as the adapted frame.

namespace hartogs {

struct PolydiskEmbedding {
    SymmetricDomainSpec target;
    int r = 0;                 // rank = polydisk dimension
    CMat A;                    // d x r, f(z) = A z
    std::vector<int> retained; // coordinate indices spanning the image

    std::vector<cdouble> embed_base(std::span<const cdouble> z) const {
        if (static_cast<int>(z.size()) != r) throw RankMismatch("embedding expects a rank-r point");
        std::vector<cdouble> w(A.rows, 0.0);
        for (int i = 0; i < A.rows; ++i)
            for (int j = 0; j < r; ++j) w[i] += A(i, j) * z[j];
        return w;
    }
};

namespace detail {

inline int upper_strict_index(int n, int i, int j) { // i < j
    return i * (2 * n - i - 1) / 2 + (j - i - 1);
}
inline int upper_diag_index(int n, int i, int j) { // i <= j
    return i * (2 * n - i + 1) / 2 + (j - i);
}

} // namespace detail

inline PolydiskEmbedding standard_polydisk_embedding(const CartanDomainSpec& spec) {
    const auto inv = invariants_of(spec);
    PolydiskEmbedding e;
    e.target.factors = {spec};
    e.r = static_cast<int>(inv.r);
    e.A = CMat(spec.dim(), e.r);
    switch (spec.kind) {
        case CartanKind::I:
            for (int i = 0; i < e.r; ++i) {
                e.A(i * spec.m + i, i) = 1.0;
                e.retained.push_back(i * spec.m + i);
            }
            break;
        case CartanKind::II:
            for (int i = 0; i < e.r; ++i) {
                const int idx = detail::upper_strict_index(spec.n, 2 * i, 2 * i + 1);
                e.A(idx, i) = 1.0;
                e.retained.push_back(idx);
            }
            break;
        case CartanKind::III:
            for (int i = 0; i < e.r; ++i) {
                const int idx = detail::upper_diag_index(spec.n, i, i);
                e.A(idx, i) = 1.0;
                e.retained.push_back(idx);
            }
            break;
        case CartanKind::IV:
            e.A(0, 0) = 0.5;
            e.A(0, 1) = 0.5;
            e.A(1, 0) = cdouble(0.0, 0.5);
            e.A(1, 1) = cdouble(0.0, -0.5);
            e.retained = {0, 1};
            break;
        case CartanKind::V: {
            const double s = 1.0 / std::sqrt(2.0);
            e.A(0, 0) = s;
            e.A(0, 1) = -s;
            e.A(1, 0) = cdouble(0.0, s);
            e.A(1, 1) = cdouble(0.0, s);
            e.retained = {0, 1};
            break;
        }
        case CartanKind::VI:
            for (int i = 0; i < 3; ++i) {
                e.A(i, i) = 1.0;
                e.retained.push_back(i);
            }
            break;
    }
    return e;
}

inline PolydiskEmbedding standard_polydisk_embedding(const SymmetricDomainSpec& spec) {
    spec.validate();
    PolydiskEmbedding e;
    e.target = spec;
    e.r = static_cast<int>(spec.rank());
    e.A = CMat(spec.dim(), e.r);
    int coff = 0, roff = 0;
    for (const auto& f : spec.factors) {
        const auto fe = standard_polydisk_embedding(f);
        for (int i = 0; i < fe.A.rows; ++i)
            for (int j = 0; j < fe.r; ++j) e.A(coff + i, roff + j) = fe.A(i, j);
        for (int idx : fe.retained) e.retained.push_back(coff + idx);
        coff += f.dim();
        roff += fe.r;
    }
    return e;
}

/// Coordinate permutation putting the image first, plus the normalized
/// column frame (the two non-inclusion cases IV and V rotate the polydisk
/// inside the retained coordinate plane).
struct StandardFrame {
    std::vector<int> permutation; // new index -> original coordinate
    int retained_count = 0;
    CMat frame; // d x r, unit columns spanning the image
};

inline StandardFrame standard_permutation(const PolydiskEmbedding& e) {
    StandardFrame f;
    f.retained_count = e.r;
    f.permutation = e.retained;
    for (int i = 0; i < e.A.rows; ++i) {
        bool kept = false;
        for (int idx : e.retained) kept = kept || idx == i;
        if (!kept) f.permutation.push_back(i);
    }
    f.frame = CMat(e.A.rows, e.r);
    for (int j = 0; j < e.r; ++j) {
        double n2 = 0.0;
        for (int i = 0; i < e.A.rows; ++i) n2 += std::norm(e.A(i, j));
        const double s = 1.0 / std::sqrt(n2);
        for (int i = 0; i < e.A.rows; ++i) f.frame(i, j) = e.A(i, j) * s;
    }
    return f;
}

/// (z0, z) in M_{Delta^r, mu} -> (z0, f(z)) in M_{Omega, mu}.
inline std::vector<cdouble> hartogs_embed(const PolydiskEmbedding& e, double mu,
                                          std::span<const cdouble> point) {
    if (static_cast<int>(point.size()) != e.r + 1)
        throw RankMismatch("hartogs_embed expects (z0, z) with z of rank size");
    double N = 1.0;
    for (int i = 0; i < e.r; ++i) N *= 1.0 - std::norm(point[1 + i]);
    if (!(N > 0.0) || !(std::norm(point[0]) < std::pow(N, mu)))
        throw OutsideDomain("point is not in the Hartogs polydisk");
    std::vector<cdouble> out;
    out.reserve(e.A.rows + 1);
    out.push_back(point[0]);
    const auto w = e.embed_base(point.subspan(1));
    out.insert(out.end(), w.begin(), w.end());
    return out;
}

/// Linear extension (z0, z) -> (z0, f(z)) on all of C^{r+1}; odd in z.
inline std::vector<cdouble> dual_embed(const PolydiskEmbedding& e, std::span<const cdouble> point) {
    if (static_cast<int>(point.size()) != e.r + 1)
        throw RankMismatch("dual_embed expects (z0, z) with z of rank size");
    std::vector<cdouble> out;
    out.reserve(e.A.rows + 1);
    out.push_back(point[0]);
    const auto w = e.embed_base(point.subspan(1));
    out.insert(out.end(), w.begin(), w.end());
    return out;
}

/// d(id x f): block-diagonal (1, A) Jacobian of the fibered extension.
inline CMat hartogs_jacobian(const PolydiskEmbedding& e) {
    CMat J(e.A.rows + 1, e.r + 1);
    J(0, 0) = 1.0;
    for (int i = 0; i < e.A.rows; ++i)
        for (int j = 0; j < e.r; ++j) J(i + 1, j + 1) = e.A(i, j);
    return J;
}

/// (J^T g J-bar): pullback of a Hermitian metric under a holomorphic linear map.
inline CMat pullback_metric(const CMat& g, const CMat& J) {
    CMat Jt(J.cols, J.rows);
    for (int i = 0; i < J.rows; ++i)
        for (int j = 0; j < J.cols; ++j) Jt(j, i) = J(i, j);
    return Jt * g * J.conjugated();
}

// -- automorphism lifts -------------------------------------------------------

/// (w, z) -> (w, e^{i theta} z). The base rotation fixes the origin, so the
/// fiber factor is trivial.
struct RotationLift {
    double theta = 0.0;

    std::vector<cdouble> apply(std::span<const cdouble> point) const {
        const cdouble ph = std::polar(1.0, theta);
        std::vector<cdouble> out(point.begin(), point.end());
        for (std::size_t i = 1; i < out.size(); ++i) out[i] *= ph;
        return out;
    }
    CMat jacobian(int m) const {
        CMat J(m, m);
        J(0, 0) = 1.0;
        const cdouble ph = std::polar(1.0, theta);
        for (int i = 1; i < m; ++i) J(i, i) = ph;
        return J;
    }
};

/// (z0, z) -> (z0, e^{i theta} z) on C^{d+1} with the dual metric.
struct DualRotationLift {
    double theta = 0.0;

    std::vector<cdouble> apply(std::span<const cdouble> point) const {
        return RotationLift{theta}.apply(point);
    }
};

/// Per-factor disk Moebius automorphism of the Hartogs polydisk,
///   phi_a(z)_k = (z_k - a_k) / (1 - conj(a_k) z_k),
/// lifted by the holomorphic cocycle
///   h(z) = sum_k [ log(1 - |a_k|^2)/2 - log(1 - conj(a_k) z_k) ],
/// so that (w, z) -> (e^{mu h(z)} w, phi_a(z)) preserves the metric.
struct MobiusLift {
    std::vector<cdouble> a;
    double mu = 1.0;

    void validate() const {
        for (const auto& ak : a)
            if (!(std::abs(ak) < 1.0)) throw InvalidParameter("Moebius parameter must satisfy |a| < 1");
    }

    cdouble cocycle(std::span<const cdouble> z) const {
        cdouble h = 0.0;
        for (std::size_t k = 0; k < a.size(); ++k)
            h += 0.5 * std::log(1.0 - std::norm(a[k])) - std::log(1.0 - std::conj(a[k]) * z[k]);
        return h;
    }

    std::vector<cdouble> apply(std::span<const cdouble> point) const {
        validate();
        const auto z = point.subspan(1);
        std::vector<cdouble> out(point.size());
        out[0] = std::exp(mu * cocycle(z)) * point[0];
        for (std::size_t k = 0; k < a.size(); ++k)
            out[1 + k] = (z[k] - a[k]) / (1.0 - std::conj(a[k]) * z[k]);
        return out;
    }

    CMat jacobian(std::span<const cdouble> point) const {
        validate();
        const auto z = point.subspan(1);
        const int r = static_cast<int>(a.size());
        CMat J(r + 1, r + 1);
        const cdouble eh = std::exp(mu * cocycle(z));
        J(0, 0) = eh;
        for (int k = 0; k < r; ++k) {
            const cdouble denom = 1.0 - std::conj(a[k]) * z[k];
            J(0, 1 + k) = mu * (std::conj(a[k]) / denom) * eh * point[0];
            J(1 + k, 1 + k) = (1.0 - std::norm(a[k])) / (denom * denom);
        }
        return J;
    }
};

} // namespace hartogs
