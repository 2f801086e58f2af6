#include <catch_amalgamated.hpp>

#include <hartogs/geometry.hpp>
#include <hartogs/sampling.hpp>

using namespace hartogs;

// The integrator's nested-dual fast path must agree with the per-entry jet
// tensors; the jets are the reference.

namespace {

const std::vector<PotentialKind> kinds = {
    PotentialKind::polydisk(2, 1.3),
    PotentialKind::dual_polydisk(2, 1.3),
    PotentialKind::hartogs({SymmetricDomainSpec{{{CartanKind::IV, 5, 5}}}, 0.8}),
    PotentialKind::dual_hartogs({SymmetricDomainSpec{{{CartanKind::V}}}, 1.2}),
    // determinant-backed norms drive the LU division over the nested rings
    PotentialKind::hartogs({SymmetricDomainSpec{{{CartanKind::I, 2, 2}}}, 1.4}),
    PotentialKind::hartogs({SymmetricDomainSpec{{{CartanKind::III, 2, 2}}}, 0.9}),
    // and the square-root branch
    PotentialKind::dual_hartogs({SymmetricDomainSpec{{{CartanKind::II, 5, 5}}}, 1.1}),
};

std::vector<cdouble> sample_point(const PotentialKind& kind, Rng& rng) {
    if (kind.dual()) return sample_dual_point(kind.ambient_dim(), rng, 0.9);
    return sample_hartogs_point({kind.domain, kind.mu}, rng);
}

} // namespace

TEST_CASE("nested-dual metric equals the jet metric") {
    Rng rng(90);
    for (const auto& kind : kinds) {
        const GeodesicEvaluator ev(kind);
        for (int it = 0; it < 5; ++it) {
            const auto p = sample_point(kind, rng);
            const CMat fast = ev.metric(p);
            const auto ref = metric_at(kind, p);
            for (int i = 0; i < ref.dim(); ++i)
                for (int j = 0; j < ref.dim(); ++j)
                    CHECK(std::abs(fast(i, j) - ref.g(i, j)) < 1e-12);
        }
    }
}

TEST_CASE("nested-dual hessian contraction equals contracted jet derivatives") {
    Rng rng(91);
    for (const auto& kind : kinds) {
        const GeodesicEvaluator ev(kind);
        const int m = kind.ambient_dim();
        for (int it = 0; it < 3; ++it) {
            const auto p = sample_point(kind, rng);
            const auto v = rng.disk_vector(m, 0.7);
            const auto [b, energy] = ev.hessian_contraction(p, v);

            // reference: b_k = sum_{l,j} (d g_{j kbar} / dz_l) v^l v^j
            for (int k = 0; k < m; ++k) {
                cdouble expect = 0.0;
                for (int l = 0; l < m; ++l)
                    for (int j = 0; j < m; ++j)
                        expect += metric_derivative_entry(kind, p, j, k, l) * v[l] * v[j];
                CHECK(std::abs(b[k] - expect) < 1e-11);
            }
            // energy = sum g_{j kbar} v^j conj(v^k)
            const auto g = metric_at(kind, p);
            cdouble eref = 0.0;
            for (int j = 0; j < m; ++j)
                for (int k = 0; k < m; ++k) eref += g.g(j, k) * v[j] * std::conj(v[k]);
            CHECK(std::abs(energy - eref.real()) < 1e-11);
        }
    }
}

TEST_CASE("Tay and Grad primitives against closed forms") {
    using T2 = Tay<cdouble, 2>;
    // f(t) = log(2 + t): coefficients log 2, 1/2, -1/8
    T2 t(cdouble(2.0));
    t.c[1] = 1.0;
    const T2 f = log(t);
    CHECK(std::abs(f.c[0] - std::log(2.0)) < 1e-15);
    CHECK(std::abs(f.c[1] - 0.5) < 1e-15);
    CHECK(std::abs(f.c[2] - (-0.125)) < 1e-15);

    // pow(1 + t, mu): 1, mu, mu(mu-1)/2
    T2 u(cdouble(1.0));
    u.c[1] = 1.0;
    const double mu = 1.7;
    const T2 g = pow_real(u, mu);
    CHECK(std::abs(g.c[1] - mu) < 1e-14);
    CHECK(std::abs(g.c[2] - mu * (mu - 1) / 2) < 1e-14);

    // pow with nonunit leading value and through a gradient layer
    {
        using GT = Grad<T2>;
        T2 val(cdouble(2.0));
        val.c[1] = 0.5; // x(t, eps) = 2 + t/2 + eps
        GT x{val};
        x.g.assign(1, T2(cdouble(1.0)));
        const GT f = pow_real(x, 1.3);
        CHECK(std::abs(f.v.c[1] - 0.5 * 1.3 * std::pow(2.0, 0.3)) < 1e-13);
        CHECK(std::abs(f.v.c[2] - 0.25 * 1.3 * 0.3 / 2 * std::pow(2.0, -0.7)) < 1e-13);
        CHECK(std::abs(f.g[0].c[1] - 0.5 * 1.3 * 0.3 * std::pow(2.0, -0.7)) < 1e-13);
        CHECK(std::abs(f.g[0].c[2] - 0.25 * 1.3 * 0.3 * (-0.7) / 2 * std::pow(2.0, -1.7)) < 1e-13);
    }

    // gradient dual: d/dx_i of (x0 * x1 + x1^2)
    Grad<cdouble> x0(cdouble(2.0), 2, 0), x1(cdouble(3.0), 2, 1);
    const auto e = x0 * x1 + x1 * x1;
    CHECK(std::abs(e.v - cdouble(15.0)) < 1e-15);
    CHECK(std::abs(e.g[0] - cdouble(3.0)) < 1e-15);
    CHECK(std::abs(e.g[1] - cdouble(8.0)) < 1e-15);

    // chain: log(x0 * x1): gradient (1/x0, 1/x1)
    const auto lg = log(x0 * x1);
    CHECK(std::abs(lg.g[0] - cdouble(0.5)) < 1e-15);
    CHECK(std::abs(lg.g[1] - cdouble(1.0 / 3.0)) < 1e-15);
}

TEST_CASE("bilinear-gradient ring identities") {
    // a fully mixed value: exp(log(x)) = x, sqrt(x)^2 = x, x * inv(x) = 1
    BiGrad x(cdouble(2.0, 0.3));
    x.dz = {cdouble(0.4, 0.1), cdouble(-0.2, 0.0)};
    x.du = {cdouble(0.1, -0.3), cdouble(0.7, 0.2)};
    x.dzdu = {cdouble(0.2, 0.0), cdouble(0.0, 0.5), cdouble(-0.1, 0.1), cdouble(0.3, -0.2)};

    const auto close = [](const BiGrad& a, const BiGrad& b) {
        double m = std::abs(a.v - b.v);
        for (std::size_t i = 0; i < a.dz.size(); ++i) m = std::max(m, std::abs(a.dz[i] - b.dz[i]));
        for (std::size_t i = 0; i < a.du.size(); ++i) m = std::max(m, std::abs(a.du[i] - b.du[i]));
        for (std::size_t i = 0; i < a.dzdu.size(); ++i)
            m = std::max(m, std::abs(a.dzdu[i] - b.dzdu[i]));
        return m;
    };
    CHECK(close(exp(log(x)), x) < 1e-14);
    CHECK(close(sqrt(x) * sqrt(x), x) < 1e-14);
    const BiGrad unit = x * inv(x);
    CHECK(std::abs(unit.v - 1.0) < 1e-14);
    for (const auto& c : unit.dz) CHECK(std::abs(c) < 1e-14);
    for (const auto& c : unit.du) CHECK(std::abs(c) < 1e-14);
    for (const auto& c : unit.dzdu) CHECK(std::abs(c) < 1e-14);
    // pow_real against the multiplicative route
    CHECK(close(pow_real(x, 2.0), x * x) < 1e-13);
}
