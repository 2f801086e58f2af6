#include <catch_amalgamated.hpp>

#include <functional>

#include <hartogs/geometry.hpp>
#include <hartogs/sampling.hpp>

using namespace hartogs;

namespace {

SectionalPlane plane_xy(int m, int slot) {
    return coordinate_plane(m, slot, false, slot, true);
}

// ---------------------------------------------------------------------------
// Test-only oracle: full real-coordinate Riemannian curvature by finite
// differences. Independent of the jet/Wirtinger path: the real metric is
// assembled from second differences of the potential, Christoffels and the
// curvature tensor from further differences of it. Coarse but unbiased.
// ---------------------------------------------------------------------------
struct RealFdOracle {
    PotentialKind kind;
    int n; // complex dimension

    double phi(const std::vector<double>& q) const {
        return potential(kind, from_real_coords(q));
    }

    // G_ab = 2 Re sum g_{jk} xi_a^j conj(xi_b^k) with g from Wirtinger FD
    std::vector<double> metric(const std::vector<double>& q, double h = 1e-4) const {
        const int m = 2 * n;
        const auto d2 = [&](int a, int b) {
            auto pp = q, pm = q, mp = q, mm = q;
            pp[a] += h; pp[b] += h;
            pm[a] += h; pm[b] -= h;
            mp[a] -= h; mp[b] += h;
            mm[a] -= h; mm[b] -= h;
            return (phi(pp) - phi(pm) - phi(mp) + phi(mm)) / (4 * h * h);
        };
        std::vector<cdouble> g(n * n);
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                const double xx = d2(2 * j, 2 * k), yy = d2(2 * j + 1, 2 * k + 1);
                const double xy = d2(2 * j, 2 * k + 1), yx = d2(2 * j + 1, 2 * k);
                g[j * n + k] = 0.25 * ((xx + yy) + cdouble(0, 1) * (xy - yx));
            }
        std::vector<double> G(m * m);
        const auto xi = [&](int a) {
            std::vector<cdouble> v(n, 0.0);
            v[a / 2] = a % 2 == 0 ? cdouble(1.0) : cdouble(0.0, 1.0);
            return v;
        };
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b) {
                cdouble acc = 0.0;
                const auto va = xi(a), vb = xi(b);
                for (int j = 0; j < n; ++j)
                    for (int k = 0; k < n; ++k) acc += g[j * n + k] * va[j] * std::conj(vb[k]);
                G[a * m + b] = 2.0 * acc.real();
            }
        return G;
    }

    std::vector<double> christoffel(const std::vector<double>& q, double h = 5e-3) const {
        const int m = 2 * n;
        const auto G0 = metric(q);
        CMat Gm(m, m);
        for (int i = 0; i < m * m; ++i) Gm.a[i] = G0[i];
        const LuFactor lu(Gm);
        std::vector<std::vector<double>> dG(m);
        for (int c = 0; c < m; ++c) {
            auto qp = q, qm = q;
            qp[c] += h;
            qm[c] -= h;
            const auto Gp = metric(qp), Gmn = metric(qm);
            dG[c].resize(m * m);
            for (int i = 0; i < m * m; ++i) dG[c][i] = (Gp[i] - Gmn[i]) / (2 * h);
        }
        std::vector<double> Gam(m * m * m);
        for (int b = 0; b < m; ++b)
            for (int c = 0; c < m; ++c) {
                std::vector<cdouble> rhs(m);
                for (int d = 0; d < m; ++d)
                    rhs[d] = 0.5 * (dG[b][d * m + c] + dG[c][d * m + b] - dG[d][b * m + c]);
                const auto x = lu.solve(rhs);
                for (int a = 0; a < m; ++a) Gam[(a * m + b) * m + c] = x[a].real();
            }
        return Gam;
    }

    double sectional(const std::vector<double>& q, const std::vector<double>& X,
                     const std::vector<double>& Y, double h = 5e-3) const {
        const int m = 2 * n;
        const auto Gam0 = christoffel(q);
        std::vector<std::vector<double>> dGam(m);
        for (int c = 0; c < m; ++c) {
            auto qp = q, qm = q;
            qp[c] += h;
            qm[c] -= h;
            const auto Gp = christoffel(qp), Gmn = christoffel(qm);
            dGam[c].resize(m * m * m);
            for (std::size_t i = 0; i < Gp.size(); ++i) dGam[c][i] = (Gp[i] - Gmn[i]) / (2 * h);
        }
        const auto G0 = metric(q);
        const auto gam = [&](const std::vector<double>& t, int a, int b, int c) {
            return t[(a * m + b) * m + c];
        };
        // R^a_{bcd} = d_c Gam^a_{db} - d_d Gam^a_{cb} + Gam^a_{ce} Gam^e_{db}
        //           - Gam^a_{de} Gam^e_{cb};  K = <R(X,Y)Y, X> / gram
        double num = 0.0;
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b)
                for (int c = 0; c < m; ++c)
                    for (int d = 0; d < m; ++d) {
                        double r = gam(dGam[c], a, d, b) - gam(dGam[d], a, c, b);
                        for (int e = 0; e < m; ++e)
                            r += gam(Gam0, a, c, e) * gam(Gam0, e, d, b) -
                                 gam(Gam0, a, d, e) * gam(Gam0, e, c, b);
                        // lower the first index and contract with X^a' ...
                        for (int ap = 0; ap < m; ++ap)
                            num += G0[ap * m + a] * r * X[ap] * Y[b] * X[c] * Y[d];
                    }
        double xx = 0, yy = 0, xy = 0;
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                xx += G0[i * m + j] * X[i] * X[j];
                yy += G0[i * m + j] * Y[i] * Y[j];
                xy += G0[i * m + j] * X[i] * Y[j];
            }
        return num / (xx * yy - xy * xy);
    }
};

} // namespace

TEST_CASE("christoffel: origin vanishing, symmetry and the disk closed form") {
    const auto pk = PotentialKind::polydisk(2, 1.4);
    std::vector<cdouble> origin(3, 0.0);
    const auto gam0 = christoffel_at(pk, origin);
    for (const auto& v : gam0.v) CHECK(std::abs(v) < 1e-13);

    // base disk at real t: Gamma^1_{11} = 2t/(1-t^2)
    const auto bk = PotentialKind::base_domain(SymmetricDomainSpec::polydisk(1));
    for (double t : {0.2, 0.5, 0.75}) {
        const auto gam = christoffel_at(bk, std::vector<cdouble>{t});
        CHECK(gam.at(0, 0, 0).real() == Catch::Approx(2 * t / (1 - t * t)).epsilon(1e-12));
    }

    // symmetry in the lower pair at generic points
    Rng rng(50);
    const HartogsSpec hs{SymmetricDomainSpec{{{CartanKind::I, 2, 2}}}, 1.2};
    const auto kind = PotentialKind::hartogs(hs);
    const auto p = sample_hartogs_point(hs, rng);
    const auto gam = christoffel_at(kind, p);
    for (int t = 0; t < gam.m; ++t)
        for (int l = 0; l < gam.m; ++l)
            for (int j = 0; j < gam.m; ++j)
                CHECK(std::abs(gam.at(t, l, j) - gam.at(t, j, l)) < 1e-11);
}

TEST_CASE("curvature tensor symmetries at generic points") {
    Rng rng(51);
    const std::vector<PotentialKind> kinds = {
        PotentialKind::polydisk(2, 1.3),
        PotentialKind::dual_polydisk(2, 0.7),
    };
    for (const auto& kind : kinds) {
        const auto p = kind.dual() ? sample_dual_point(kind.ambient_dim(), rng, 0.8)
                                   : sample_hartogs_point({kind.domain, kind.mu}, rng);
        const auto R = curvature_at(kind, p);
        const int m = R.m;
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                for (int k = 0; k < m; ++k)
                    for (int l = 0; l < m; ++l) {
                        CHECK(std::abs(R.at(i, j, k, l) - R.at(k, j, i, l)) < 1e-10);
                        CHECK(std::abs(R.at(i, j, k, l) - std::conj(R.at(j, i, l, k))) < 1e-10);
                    }
    }
}

TEST_CASE("curvature entry matches the full tensor") {
    Rng rng(52);
    const HartogsSpec hs{SymmetricDomainSpec{{{CartanKind::IV, 5, 5}}}, 1.1};
    const auto kind = PotentialKind::hartogs(hs);
    const auto p = sample_hartogs_point(hs, rng);
    const auto R = curvature_at(kind, p);
    for (int it = 0; it < 10; ++it) {
        const int i = int(rng.next_u64() % R.m), j = int(rng.next_u64() % R.m),
                  k = int(rng.next_u64() % R.m), l = int(rng.next_u64() % R.m);
        CHECK(std::abs(curvature_entry(kind, p, i, j, k, l) - R.at(i, j, k, l)) < 1e-11);
    }
}

TEST_CASE("constant holomorphic sectional curvature of the disk and its dual") {
    const auto bk = PotentialKind::base_domain(SymmetricDomainSpec::polydisk(1));
    const auto dk = PotentialKind::dual_base_domain(SymmetricDomainSpec::polydisk(1));
    Rng rng(53);
    const std::vector<cdouble> dir{1.0};
    for (int it = 0; it < 10; ++it) {
        const std::vector<cdouble> p{rng.disk(0.8)};
        CHECK(holomorphic_sectional_curvature(bk, p, dir) == Catch::Approx(-4.0).margin(1e-8));
        const std::vector<cdouble> q{rng.disk(1.4)};
        CHECK(holomorphic_sectional_curvature(dk, q, dir) == Catch::Approx(4.0).margin(1e-8));
        // real sectional curvature of the holomorphic plane is half of that
        CHECK(sectional_curvature(bk, p, plane_xy(1, 0)) == Catch::Approx(-2.0).margin(1e-8));
        CHECK(sectional_curvature(dk, q, plane_xy(1, 0)) == Catch::Approx(2.0).margin(1e-8));
    }
}

TEST_CASE("curvature at the origin of the disk") {
    const auto bk = PotentialKind::base_domain(SymmetricDomainSpec::polydisk(1));
    const auto dk = PotentialKind::dual_base_domain(SymmetricDomainSpec::polydisk(1));
    const std::vector<cdouble> origin{0.0};
    CHECK(curvature_at(bk, origin).at(0, 0, 0, 0).real() == Catch::Approx(-2.0).margin(1e-12));
    CHECK(curvature_at(dk, origin).at(0, 0, 0, 0).real() == Catch::Approx(2.0).margin(1e-12));
}

TEST_CASE("fiber-offset sectional curvature of the dual Hartogs disk") {
    // K(x1 ^ y1) at (w, 0) follows (2 - 2(mu-1)|w|^2)/mu; cross-checked below
    // against the independent real-coordinate FD oracle.
    for (double mu : {0.5, 1.0, 2.0, 3.0}) {
        const auto kind = PotentialKind::dual_polydisk(1, mu);
        for (double w : {0.0, 1.0, 2.0}) {
            const std::vector<cdouble> pt{w, 0.0};
            const double K = sectional_curvature(kind, pt, plane_xy(2, 1));
            const double closed = (2.0 - 2.0 * (mu - 1.0) * w * w) / mu;
            CHECK(K == Catch::Approx(closed).margin(1e-8));
        }
    }
    // independent oracle at two grid corners
    {
        const RealFdOracle oracle{PotentialKind::dual_polydisk(1, 3.0), 2};
        const std::vector<double> q{1.0, 0.0, 0.0, 0.0};
        const std::vector<double> X{0, 0, 1, 0}, Y{0, 0, 0, 1};
        const double kfd = oracle.sectional(q, X, Y);
        CHECK(kfd == Catch::Approx(-2.0 / 3.0).margin(3e-3));
    }
    {
        const RealFdOracle oracle{PotentialKind::dual_polydisk(1, 0.5), 2};
        const std::vector<double> q{1.0, 0.0, 0.0, 0.0};
        const std::vector<double> X{0, 0, 1, 0}, Y{0, 0, 0, 1};
        CHECK(oracle.sectional(q, X, Y) == Catch::Approx(6.0).margin(5e-3));
    }
}

TEST_CASE("rank-2 mixed-plane sectional curvature of the dual") {
    for (double mu : {1.0, 1.7}) {
        const auto kind = PotentialKind::dual_polydisk(2, mu);
        for (double w : {0.0, 1.0, 2.0}) {
            const std::vector<cdouble> pt{w, 0.0, 0.0};
            const double K =
                sectional_curvature(kind, pt, coordinate_plane(3, 1, false, 2, false));
            CHECK(K == Catch::Approx(-w * w / 2.0).margin(1e-8));
        }
    }
}

TEST_CASE("jet curvature agrees with the real-coordinate FD oracle off the symmetry axes") {
    // generic point, generic plane, fibered polydisk
    const auto kind = PotentialKind::polydisk(1, 1.3);
    const std::vector<cdouble> pt{cdouble(0.21, -0.13), cdouble(0.37, 0.29)};
    SectionalPlane pl;
    pl.X = {0.3, -0.2, 1.0, 0.4};
    pl.Y = {0.1, 0.9, -0.5, 0.7};
    const double Kjet = sectional_curvature(kind, pt, pl);
    const RealFdOracle oracle{kind, 2};
    const double Kfd = oracle.sectional(to_real_coords(pt), pl.X, pl.Y);
    CHECK(Kjet == Catch::Approx(Kfd).margin(std::max(5e-3, 5e-3 * std::abs(Kjet))));
}

TEST_CASE("geodesics: constants, the hyperbolic tanh profile, energy") {
    // zero velocity stays put
    const auto pk = PotentialKind::polydisk(2, 1.5);
    const std::vector<cdouble> start{0.1, cdouble(0.2, 0.1), cdouble(-0.3, 0.2)};
    const std::vector<cdouble> zerov(3, 0.0);
    const auto still = geodesic_integrate(pk, start, zerov, 0.5, 1e-2);
    for (const auto& pos : still.position)
        for (int i = 0; i < 3; ++i) CHECK(std::abs(pos[i] - start[i]) < 1e-14);

    // unit-disk geodesic through 0 with real velocity v: x(t) = tanh(v t)
    const auto bk = PotentialKind::base_domain(SymmetricDomainSpec::polydisk(1));
    const double v = 0.8;
    const auto traj = geodesic_integrate(bk, std::vector<cdouble>{0.0}, std::vector<cdouble>{v},
                                         1.0, 1e-3);
    CHECK(traj.position.back()[0].real() == Catch::Approx(std::tanh(v)).margin(1e-9));
    CHECK(std::abs(traj.position.back()[0].imag()) < 1e-12);

    // energy conservation along a generic Hartogs geodesic
    const auto hk = PotentialKind::polydisk(2, 0.9);
    const std::vector<cdouble> s2{0.05, cdouble(0.3, -0.1), cdouble(-0.2, 0.25)};
    const std::vector<cdouble> v2{cdouble(0.1, 0.05), cdouble(-0.15, 0.2), cdouble(0.2, 0.1)};
    const auto t2 = geodesic_integrate(hk, s2, v2, 1.0, 1e-3);
    const double e0 = t2.energy.front();
    for (double e : t2.energy) CHECK(std::abs(e - e0) / e0 < 1e-6);

    // aiming at the boundary exits the domain
    CHECK_THROWS_AS(geodesic_integrate(bk, std::vector<cdouble>{0.95}, std::vector<cdouble>{25.0},
                                       1.0, 1e-2),
                    ExitedDomain);
}

TEST_CASE("curvature entry symmetries on the 27-dim fibered domain") {
    Rng rng(55);
    const HartogsSpec hs{SymmetricDomainSpec{{{CartanKind::VI}}}, 1.2};
    const auto kind = PotentialKind::hartogs(hs);
    const auto p = sample_hartogs_point(hs, rng);
    const int m = kind.ambient_dim();
    for (int it = 0; it < 2; ++it) {
        const int i = int(rng.next_u64() % m), j = int(rng.next_u64() % m),
                  k = int(rng.next_u64() % m), l = int(rng.next_u64() % m);
        const cdouble r = curvature_entry(kind, p, i, j, k, l);
        CHECK(std::abs(r - curvature_entry(kind, p, k, j, i, l)) < 1e-10);
        CHECK(std::abs(r - std::conj(curvature_entry(kind, p, j, i, l, k))) < 1e-10);
    }
}

TEST_CASE("totally geodesic check and its negative control") {
    Rng rng(54);
    // positive: the retained slice of the exceptional 27-dim Hartogs domain
    const HartogsSpec hs{SymmetricDomainSpec{{{CartanKind::VI}}}, 1.5};
    const auto kind = PotentialKind::hartogs(hs);
    const auto emb = standard_polydisk_embedding(hs.base);
    std::vector<std::vector<cdouble>> pts;
    for (int it = 0; it < 2; ++it) pts.push_back(sample_pi_point(emb, hs.mu, rng));
    const std::vector<int> kept{0, 1, 2, 3};
    CHECK(totally_geodesic_check(kind, kept, pts).max_violation < 1e-8);

    // the dual slice in the ambient affine space
    const auto dkind = PotentialKind::dual_hartogs(hs);
    std::vector<std::vector<cdouble>> dpts;
    for (int it = 0; it < 2; ++it) dpts.push_back(sample_dual_pi_point(emb, rng));
    CHECK(totally_geodesic_check(dkind, kept, dpts).max_violation < 1e-8);

    // negative: a slice that is not a subsystem shows an order-one violation
    std::vector<std::vector<cdouble>> bad_pts;
    {
        std::vector<cdouble> p(28, 0.0);
        p[0] = 0.1;
        p[1] = 0.3;
        p[4] = cdouble(0.25, 0.1);
        p[12] = cdouble(0.3, -0.05);
        bad_pts.push_back(std::move(p));
    }
    const std::vector<int> bad_kept{0, 1, 4, 12};
    CHECK(totally_geodesic_check(kind, bad_kept, bad_pts).max_violation > 1e-3);
}
