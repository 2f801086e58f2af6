#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <vector>

#include "directional.hpp"
#include "errors.hpp"
#include "linalg.hpp"
#include "potential.hpp"

// Connection, curvature and geodesics of the potential metrics.
//
// Conventions (fixed by the one-dimensional closed forms, see tests):
//   Gamma^t_{lj} = sum_k g^{t kbar} d g_{j kbar} / dz_l
//   R_{i jbar k lbar} = -d^2 g_{i jbar}/dz_k dzbar_l
//                       + sum_{p,q} g^{p qbar} (d g_{i qbar}/dz_k)(d g_{p jbar}/dzbar_l)
//   real metric G = 2 Re(g); K(X ^ Y) = R(X,Y,Y,X) / Gram(X,Y)
//   holomorphic sectional curvature of a complex direction xi:
//     2 R(xi, xibar, xi, xibar) / (g(xi, xibar))^2
// With these normalizations the unit-disk base metric has K(x ^ y) = -2 and
// holomorphic sectional curvature -4; its dual has +2 and +4.

namespace hartogs {

struct ChristoffelTensor {
    int m = 0;
    std::vector<cdouble> v; // index (t, l, j)

    cdouble& at(int t, int l, int j) { return v[(static_cast<std::size_t>(t) * m + l) * m + j]; }
    const cdouble& at(int t, int l, int j) const {
        return v[(static_cast<std::size_t>(t) * m + l) * m + j];
    }
};

struct KahlerCurvature {
    int m = 0;
    std::vector<cdouble> v; // index (i, j, k, l) for R_{i jbar k lbar}

    cdouble& at(int i, int j, int k, int l) {
        return v[((static_cast<std::size_t>(i) * m + j) * m + k) * m + l];
    }
    const cdouble& at(int i, int j, int k, int l) const {
        return v[((static_cast<std::size_t>(i) * m + j) * m + k) * m + l];
    }
};

/// Two real tangent vectors in the frame (d/dx_0, d/dy_0, d/dx_1, ...).
struct SectionalPlane {
    std::vector<double> X, Y;
};

/// Plane spanned by two coordinate directions, e.g. (x_1, y_1).
inline SectionalPlane coordinate_plane(int m, int slot_a, bool ya, int slot_b, bool yb) {
    SectionalPlane p;
    p.X.assign(2 * m, 0.0);
    p.Y.assign(2 * m, 0.0);
    p.X[2 * slot_a + (ya ? 1 : 0)] = 1.0;
    p.Y[2 * slot_b + (yb ? 1 : 0)] = 1.0;
    return p;
}

struct GeodesicTrajectory {
    std::vector<double> t;
    std::vector<std::vector<cdouble>> position;
    std::vector<std::vector<cdouble>> velocity;
    std::vector<double> energy; // hermitian energy g(v, vbar) per step
};

namespace detail {

/// Holomorphic components of a real tangent vector: xi^j = X_{x_j} + i X_{y_j}.
inline std::vector<cdouble> holomorphic_components(std::span<const double> X) {
    std::vector<cdouble> xi(X.size() / 2);
    for (std::size_t j = 0; j < xi.size(); ++j) xi[j] = cdouble(X[2 * j], X[2 * j + 1]);
    return xi;
}

} // namespace detail

/// Gamma^t_{lj}; symmetric in (l, j) by equality of mixed partials.
inline ChristoffelTensor christoffel_at(const PotentialKind& kind, std::span<const cdouble> point) {
    const int m = kind.ambient_dim();
    const HermitianMetric h = metric_at(kind, point);
    const LuFactor lu(h.g.conjugated());
    ChristoffelTensor gam;
    gam.m = m;
    gam.v.assign(static_cast<std::size_t>(m) * m * m, cdouble(0.0));
    for (int l = 0; l < m; ++l) {
        const CMat D = metric_derivative_at(kind, point, l);
        for (int j = 0; j < m; ++j) {
            std::vector<cdouble> d(m);
            for (int k = 0; k < m; ++k) d[k] = D(j, k);
            const auto x = lu.solve(d);
            for (int t = 0; t < m; ++t) gam.at(t, l, j) = x[t];
        }
    }
    return gam;
}

/// Full curvature tensor. Cost grows like m^4 fourth-order jets; intended for
/// the low-dimensional kinds (polydisks and their duals, small Cartan bases).
inline KahlerCurvature curvature_at(const PotentialKind& kind, std::span<const cdouble> point) {
    const int m = kind.ambient_dim();
    const HermitianMetric h = metric_at(kind, point);
    const LuFactor lu(h.g);
    std::vector<CMat> D(m);
    for (int l = 0; l < m; ++l) D[l] = metric_derivative_at(kind, point, l);

    // w[j][l] = G^{-1} conj(row j of D_l)
    std::vector<std::vector<std::vector<cdouble>>> w(m, std::vector<std::vector<cdouble>>(m));
    for (int j = 0; j < m; ++j)
        for (int l = 0; l < m; ++l) {
            std::vector<cdouble> row(m);
            for (int p = 0; p < m; ++p) row[p] = std::conj(D[l](j, p));
            w[j][l] = lu.solve(row);
        }

    KahlerCurvature R;
    R.m = m;
    R.v.assign(static_cast<std::size_t>(m) * m * m * m, cdouble(0.0));
    for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l) {
            const CMat S2 = metric_second_derivative_at(kind, point, k, l);
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j) {
                    cdouble corr = 0.0;
                    for (int q = 0; q < m; ++q) corr += D[k](i, q) * w[j][l][q];
                    R.at(i, j, k, l) = -S2(i, j) + corr;
                }
        }
    return R;
}

/// Single curvature component for spot checks on high-dimensional kinds.
inline cdouble curvature_entry(const PotentialKind& kind, std::span<const cdouble> point, int i,
                               int j, int k, int l) {
    const int m = kind.ambient_dim();
    const HermitianMetric h = metric_at(kind, point);
    const LuFactor lu(h.g);
    std::vector<cdouble> rowB(m), rowA(m);
    for (int p = 0; p < m; ++p) rowB[p] = std::conj(metric_derivative_entry(kind, point, j, p, l));
    for (int q = 0; q < m; ++q) rowA[q] = metric_derivative_entry(kind, point, i, q, k);
    const auto wv = lu.solve(rowB);
    cdouble corr = 0.0;
    for (int q = 0; q < m; ++q) corr += rowA[q] * wv[q];
    return -metric_second_derivative_entry(kind, point, i, j, k, l) + corr;
}

/// Real curvature value R(X,Y,Z,W) assembled from the complex tensor.
inline double real_curvature(const KahlerCurvature& R, std::span<const double> X,
                             std::span<const double> Y, std::span<const double> Z,
                             std::span<const double> W) {
    const auto xi = detail::holomorphic_components(X);
    const auto eta = detail::holomorphic_components(Y);
    const auto zeta = detail::holomorphic_components(Z);
    const auto omega = detail::holomorphic_components(W);
    const int m = R.m;
    cdouble acc = 0.0;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            const cdouble fij = xi[i] * std::conj(eta[j]);
            if (fij == 0.0) continue;
            for (int k = 0; k < m; ++k)
                for (int l = 0; l < m; ++l) {
                    const cdouble pair =
                        zeta[k] * std::conj(omega[l]) - omega[k] * std::conj(zeta[l]);
                    if (pair == 0.0) continue;
                    acc += R.at(i, j, k, l) * fij * pair;
                }
        }
    return 2.0 * acc.real();
}

/// Riemannian inner product of real tangent vectors under G = 2 Re(g).
inline double real_inner(const HermitianMetric& h, std::span<const double> X,
                         std::span<const double> Y) {
    const auto xi = detail::holomorphic_components(X);
    const auto eta = detail::holomorphic_components(Y);
    cdouble acc = 0.0;
    for (int j = 0; j < h.dim(); ++j)
        for (int k = 0; k < h.dim(); ++k) acc += h.g(j, k) * xi[j] * std::conj(eta[k]);
    return 2.0 * acc.real();
}

inline double sectional_curvature(const PotentialKind& kind, std::span<const cdouble> point,
                                  const SectionalPlane& plane) {
    const HermitianMetric h = metric_at(kind, point);
    const double xx = real_inner(h, plane.X, plane.X);
    const double yy = real_inner(h, plane.Y, plane.Y);
    const double xy = real_inner(h, plane.X, plane.Y);
    const double gram = xx * yy - xy * xy;
    if (gram <= 1e-12 * xx * yy) throw DegeneratePlane("sectional plane is numerically degenerate");
    const KahlerCurvature R = curvature_at(kind, point);
    return real_curvature(R, plane.X, plane.Y, plane.Y, plane.X) / gram;
}

/// 2 R(xi, xibar, xi, xibar) / g(xi, xibar)^2 for a complex direction xi.
inline double holomorphic_sectional_curvature(const PotentialKind& kind,
                                              std::span<const cdouble> point,
                                              std::span<const cdouble> xi) {
    const int m = kind.ambient_dim();
    const HermitianMetric h = metric_at(kind, point);
    const KahlerCurvature R = curvature_at(kind, point);
    cdouble num = 0.0, den = 0.0;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            den += h.g(i, j) * xi[i] * std::conj(xi[j]);
            for (int k = 0; k < m; ++k)
                for (int l = 0; l < m; ++l)
                    num += R.at(i, j, k, l) * xi[i] * std::conj(xi[j]) * xi[k] * std::conj(xi[l]);
        }
    return 2.0 * num.real() / (den.real() * den.real());
}

// -- geodesics ----------------------------------------------------------------

/// Fast metric/force evaluations through nested forward duals on the
/// polarized potential. Used only by the integrator; agreement with the
/// per-entry jet tensors is part of the unit-test surface.
class GeodesicEvaluator {
public:
    explicit GeodesicEvaluator(PotentialKind kind) : kind_(std::move(kind)), m_(kind_.ambient_dim()) {}

    const PotentialKind& kind() const { return kind_; }
    int dim() const { return m_; }

    CMat metric(std::span<const cdouble> pos) const {
        std::vector<BiGrad> z, u;
        z.reserve(m_);
        u.reserve(m_);
        for (int s = 0; s < m_; ++s) {
            BiGrad zs(pos[s]);
            zs.dz.assign(m_, cdouble(0.0));
            zs.dz[s] = 1.0;
            BiGrad us(std::conj(pos[s]));
            us.du.assign(m_, cdouble(0.0));
            us.du[s] = 1.0;
            z.push_back(std::move(zs));
            u.push_back(std::move(us));
        }
        const BiGrad phi =
            potential_polarized(kind_, std::span<const BiGrad>(z), std::span<const BiGrad>(u));
        CMat g(m_, m_);
        if (!phi.dzdu.empty())
            for (int j = 0; j < m_; ++j)
                for (int k = 0; k < m_; ++k) g(j, k) = phi.dzdu[static_cast<std::size_t>(j) * m_ + k];
        return g;
    }

    /// b_k = phi_{z_l z_j u_k} v^l v^j for all k, plus the hermitian energy
    /// g(v, vbar), in one pass.
    std::pair<std::vector<cdouble>, double> hessian_contraction(std::span<const cdouble> pos,
                                                                std::span<const cdouble> vel) const {
        using T2 = Tay<cdouble, 2>;
        using GT = Grad<T2>;
        std::vector<GT> z, u;
        z.reserve(m_);
        u.reserve(m_);
        for (int s = 0; s < m_; ++s) {
            T2 zt(pos[s]);
            zt.c[1] = vel[s];
            z.push_back(GT{zt});
            GT us{T2(std::conj(pos[s]))};
            us.g.assign(m_, T2(cdouble(0.0)));
            us.g[s] = T2(cdouble(1.0));
            u.push_back(std::move(us));
        }
        const GT phi = potential_polarized(kind_, std::span<const GT>(z), std::span<const GT>(u));
        std::vector<cdouble> b(m_, 0.0);
        cdouble energy = 0.0;
        if (!phi.constant())
            for (int k = 0; k < m_; ++k) {
                b[k] = 2.0 * phi.g[k].c[2];
                energy += phi.g[k].c[1] * std::conj(vel[k]);
            }
        return {std::move(b), energy.real()};
    }

private:
    PotentialKind kind_;
    int m_;
};

/// Classical fixed-step RK4 on the complex geodesic equation
/// zdotdot^t + Gamma^t_{lj} zdot^l zdot^j = 0. Energy is recorded at every
/// step; leaving the domain raises ExitedDomain.
inline GeodesicTrajectory geodesic_integrate(const PotentialKind& kind,
                                             std::span<const cdouble> start,
                                             std::span<const cdouble> velocity, double t_end,
                                             double step) {
    if (!(step > 0.0) || !(t_end >= 0.0)) throw InvalidParameter("geodesic: step and t_end must be positive");
    const GeodesicEvaluator ev(kind);
    const int m = ev.dim();
    if (static_cast<int>(start.size()) != m || static_cast<int>(velocity.size()) != m)
        throw RankMismatch("geodesic: state dimension mismatch");

    // acceleration and hermitian energy at a state, from one metric pass and
    // one directional pass
    const auto accel_energy = [&](const std::vector<cdouble>& pos,
                                  const std::vector<cdouble>& vel) {
        const CMat g = ev.metric(pos);
        auto [b, energy] = ev.hessian_contraction(pos, vel);
        const auto x = LuFactor(g.conjugated()).solve(b);
        std::vector<cdouble> a(m);
        for (int t = 0; t < m; ++t) a[t] = -x[t];
        return std::make_pair(std::move(a), energy);
    };

    const bool check_membership = !kind.dual();
    const auto inside = [&](std::span<const cdouble> pos) -> bool {
        if (!check_membership) return true;
        if (kind.fibered())
            return hartogs_membership({kind.domain, kind.mu}, pos[0], pos.subspan(1));
        return membership(kind.domain, pos);
    };

    std::vector<cdouble> pos(start.begin(), start.end());
    std::vector<cdouble> vel(velocity.begin(), velocity.end());

    GeodesicTrajectory traj;
    const int nsteps = static_cast<int>(std::llround(t_end / step));
    traj.t.reserve(nsteps + 1);

    const auto record = [&](double tnow, double energy) {
        traj.t.push_back(tnow);
        traj.position.push_back(pos);
        traj.velocity.push_back(vel);
        traj.energy.push_back(energy);
    };

    try {
        for (int n = 0; n < nsteps; ++n) {
            const double h = step;
            const auto advance = [&](const std::vector<cdouble>& dp, const std::vector<cdouble>& dv,
                                     double frac, std::vector<cdouble>& pout,
                                     std::vector<cdouble>& vout) {
                pout.resize(m);
                vout.resize(m);
                for (int i = 0; i < m; ++i) {
                    pout[i] = pos[i] + frac * h * dp[i];
                    vout[i] = vel[i] + frac * h * dv[i];
                }
            };
            std::vector<cdouble> p2, v2, p3, v3, p4, v4;
            const std::vector<cdouble>& k1p = vel;
            const auto [k1v, energy_now] = accel_energy(pos, vel);
            record(n * step, energy_now);
            advance(k1p, k1v, 0.5, p2, v2);
            const std::vector<cdouble>& k2p = v2;
            const auto k2v = accel_energy(p2, v2).first;
            advance(k2p, k2v, 0.5, p3, v3);
            const std::vector<cdouble>& k3p = v3;
            const auto k3v = accel_energy(p3, v3).first;
            advance(k3p, k3v, 1.0, p4, v4);
            const std::vector<cdouble>& k4p = v4;
            const auto k4v = accel_energy(p4, v4).first;
            for (int i = 0; i < m; ++i) {
                pos[i] += h / 6.0 * (k1p[i] + 2.0 * k2p[i] + 2.0 * k3p[i] + k4p[i]);
                vel[i] += h / 6.0 * (k1v[i] + 2.0 * k2v[i] + 2.0 * k3v[i] + k4v[i]);
            }
            if (!inside(pos)) throw ExitedDomain((n + 1) * step);
        }
        const auto [afinal, efinal] = accel_energy(pos, vel);
        (void)afinal;
        record(nsteps * step, efinal);
    } catch (const EvaluationOutsideDomain&) {
        throw ExitedDomain(traj.t.empty() ? 0.0 : traj.t.back());
    }
    return traj;
}

// -- totally geodesic checks --------------------------------------------------

struct TotallyGeodesicReport {
    double max_violation = 0.0;
    int points_checked = 0;
};

/// Max |Gamma^t_{lj}| over l, j in the retained slot set and t outside it,
/// across the given points.
inline TotallyGeodesicReport totally_geodesic_check(const PotentialKind& kind,
                                                    std::span<const int> retained_slots,
                                                    std::span<const std::vector<cdouble>> points) {
    const int m = kind.ambient_dim();
    TotallyGeodesicReport rep;
    for (const auto& pt : points) {
        const HermitianMetric h = metric_at(kind, pt);
        const LuFactor lu(h.g.conjugated());
        for (std::size_t a = 0; a < retained_slots.size(); ++a)
            for (std::size_t b = a; b < retained_slots.size(); ++b) {
                const int l = retained_slots[a], j = retained_slots[b];
                std::vector<cdouble> d(m);
                for (int k = 0; k < m; ++k) d[k] = metric_derivative_entry(kind, pt, j, k, l);
                const auto x = lu.solve(d);
                for (int t = 0; t < m; ++t) {
                    bool kept = false;
                    for (int r : retained_slots) kept = kept || r == t;
                    if (!kept) rep.max_violation = std::max(rep.max_violation, std::abs(x[t]));
                }
            }
        ++rep.points_checked;
    }
    return rep;
}

} // namespace hartogs
