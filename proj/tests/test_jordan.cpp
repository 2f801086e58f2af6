#include <catch_amalgamated.hpp>

#include <hartogs/jordan.hpp>
#include <hartogs/rng.hpp>

using namespace hartogs;
using JE = JordanElement<cdouble>;

namespace {

JE random_element(Rng& rng, double radius = 1.0) {
    std::vector<cdouble> v(jordan_dim);
    for (auto& c : v) c = rng.disk(radius);
    return JE::from_flat(v);
}

double max_abs(const JE& a) {
    double m = 0.0;
    for (const auto& c : a.to_flat()) m = std::max(m, std::abs(c));
    return m;
}

JE scalars(cdouble z1, cdouble z2, cdouble z3) {
    JE e = JE::zero(cdouble(0.0));
    e.z = {z1, z2, z3};
    return e;
}

} // namespace

TEST_CASE("flattening is a bijection") {
    Rng rng(5);
    std::vector<cdouble> v(jordan_dim);
    for (auto& c : v) c = rng.disk(1.0);
    const auto e = JE::from_flat(v);
    const auto w = e.to_flat();
    for (int i = 0; i < jordan_dim; ++i) CHECK(w[i] == v[i]);
}

TEST_CASE("hermitian pairing basics") {
    Rng rng(6);
    const JE y = random_element(rng);
    CHECK(std::abs(hermitian_pairing(JE::zero(cdouble(0.0)), y)) == 0.0);

    const JE x = scalars(1.0, 1.0, 1.0);
    CHECK(hermitian_pairing(x, x) == cdouble(3.0));

    // element with Z2 = alpha + beta e1
    const cdouble al = rng.disk(1.0), be = rng.disk(1.0);
    JE w = JE::zero(cdouble(0.0));
    w.Z[1].c[0] = al;
    w.Z[1].c[1] = be;
    CHECK(std::abs(hermitian_pairing(w, w) - cdouble(std::norm(al) + std::norm(be))) < 1e-14);

    // positivity and definiteness
    for (int it = 0; it < 100; ++it) {
        const JE a = random_element(rng);
        const cdouble p = hermitian_pairing(a, a);
        CHECK(std::abs(p.imag()) < 1e-13);
        CHECK(p.real() >= 0.0);
    }
}

TEST_CASE("freudenthal product: hand values and symmetry") {
    CHECK(max_abs(freudenthal_product(scalars(1, 1, 1), JE::zero(cdouble(0.0)))) == 0.0);

    const JE x = scalars(1.0, 1.0, 1.0);
    const JE xx = freudenthal_product(x, x);
    CHECK(max_abs(xx - scalars(2.0, 2.0, 2.0)) == 0.0);

    Rng rng(8);
    for (int it = 0; it < 500; ++it) {
        const JE a = random_element(rng), b = random_element(rng);
        CHECK(max_abs(freudenthal_product(a, b) - freudenthal_product(b, a)) < 1e-13);
    }
}

TEST_CASE("adjoint: explicit formula and half-square identity") {
    CHECK(max_abs(adjoint(JE::zero(cdouble(0.0)))) == 0.0);

    Rng rng(9);
    // scalar-only elements: (z2 z3, z3 z1, z1 z2, 0, 0, 0)
    for (int it = 0; it < 50; ++it) {
        const cdouble z1 = rng.disk(1.0), z2 = rng.disk(1.0), z3 = rng.disk(1.0);
        const JE s = adjoint(scalars(z1, z2, z3));
        CHECK(max_abs(s - scalars(z2 * z3, z3 * z1, z1 * z2)) < 1e-14);
    }

    // Z2-only element: (0, -<Z2,Z2>/2, 0, 0, 0, 0)
    for (int it = 0; it < 50; ++it) {
        const cdouble al = rng.disk(1.0), be = rng.disk(1.0);
        JE w = JE::zero(cdouble(0.0));
        w.Z[1].c[0] = al;
        w.Z[1].c[1] = be;
        const JE s = adjoint(w);
        CHECK(max_abs(s - scalars(0.0, -0.5 * (al * al + be * be), 0.0)) < 1e-14);
    }

    // adjoint = freudenthal_product(z, z) / 2 coefficientwise
    for (int it = 0; it < 1000; ++it) {
        const JE a = random_element(rng);
        CHECK(max_abs(adjoint(a) - freudenthal_product(a, a) * cdouble(0.5)) < 1e-12);
    }
}

TEST_CASE("triple product: hand values, symmetry, linearity") {
    Rng rng(10);
    const JE zero = JE::zero(cdouble(0.0));
    CHECK(max_abs(triple_product(zero, random_element(rng), zero)) == 0.0);

    // x = (1,0,0,...): x^# = 0, (x|x) = 1, so {x,x,x} = 2x
    const JE x1 = scalars(1.0, 0.0, 0.0);
    CHECK(max_abs(triple_product(x1, x1, x1) - x1 * cdouble(2.0)) < 1e-14);

    for (int it = 0; it < 500; ++it) {
        const JE x = random_element(rng), y = random_element(rng), z = random_element(rng);
        CHECK(max_abs(triple_product(x, y, z) - triple_product(z, y, x)) < 1e-12);
        const cdouble al = rng.disk(1.0);
        CHECK(max_abs(triple_product(x * al, y, z) - triple_product(x, y, z) * al) < 1e-12);
        CHECK(max_abs(triple_product(x, y * al, z) - triple_product(x, y, z) * std::conj(al)) <
              1e-12);
    }
}

TEST_CASE("type V subsystem") {
    Rng rng(12);

    // embed(0) = 0 and projection round-trip
    TypeVElement<cdouble> zerov{Octonion<cdouble>::zero(0.0), Octonion<cdouble>::zero(0.0)};
    CHECK(max_abs(embed_type_v(zerov)) == 0.0);

    for (int it = 0; it < 200; ++it) {
        std::vector<cdouble> v(type_v_dim);
        for (auto& c : v) c = rng.disk(1.0);
        const JE e = embed_type_v_flat<cdouble>(v);
        const auto back = project_type_v(e);
        for (int i = 0; i < 8; ++i) {
            CHECK(back.Z2.c[i] == v[i]);
            CHECK(back.Z3.c[i] == v[8 + i]);
        }
        // the cubic pairing (z^# , z) vanishes identically on the subsystem
        CHECK(std::abs(bilinear_dot(adjoint(e), e)) < 1e-13);
    }

    // closure: the triple product of embedded elements stays embedded
    for (int it = 0; it < 500; ++it) {
        std::vector<cdouble> a(type_v_dim), b(type_v_dim), c(type_v_dim);
        for (auto& q : a) q = rng.disk(1.0);
        for (auto& q : b) q = rng.disk(1.0);
        for (auto& q : c) q = rng.disk(1.0);
        const JE t = triple_product(embed_type_v_flat<cdouble>(a), embed_type_v_flat<cdouble>(b),
                                    embed_type_v_flat<cdouble>(c));
        for (int i = 0; i < 3; ++i) CHECK(std::abs(t.z[i]) < 1e-12);
        for (int i = 0; i < 8; ++i) CHECK(std::abs(t.Z[0].c[i]) < 1e-12);
    }

    // projecting an element with nonzero complementary slots fails
    JE bad = JE::zero(cdouble(0.0));
    bad.z[0] = 0.5;
    CHECK_THROWS_AS(project_type_v(bad), StructureViolation);
}
