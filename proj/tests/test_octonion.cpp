#include <catch_amalgamated.hpp>

#include <hartogs/octonion.hpp>
#include <hartogs/rng.hpp>

using namespace hartogs;
using Oct = Octonion<cdouble>;

namespace {

Oct unit(int i) {
    Oct o = Oct::zero(cdouble(0.0));
    o.c[i] = 1.0;
    return o;
}

Oct random_oct(Rng& rng, double radius = 1.0) {
    Oct o;
    for (auto& c : o.c) c = rng.disk(radius);
    return o;
}

double max_abs_diff(const Oct& a, const Oct& b) {
    double m = 0.0;
    for (int i = 0; i < 8; ++i) m = std::max(m, std::abs(a.c[i] - b.c[i]));
    return m;
}

// Independent oracle: the full signed unit-multiplication table written out
// by hand from the seven oriented lines {124, 235, 346, 457, 561, 672, 713}.
// mul_table[i][j] = k means e_i e_j = sign * e_k (k = 0 is the real unit).
struct TableOracle {
    int idx[8][8] = {};
    int sgn[8][8] = {};
    TableOracle() {
        for (int i = 0; i < 8; ++i) {
            idx[0][i] = idx[i][0] = i;
            sgn[0][i] = sgn[i][0] = 1;
        }
        for (int i = 1; i < 8; ++i) {
            idx[i][i] = 0;
            sgn[i][i] = -1;
        }
        const int triples[7][3] = {{1, 2, 4}, {2, 3, 5}, {3, 4, 6}, {4, 5, 7},
                                   {5, 6, 1}, {6, 7, 2}, {7, 1, 3}};
        for (const auto& t : triples) {
            const int a = t[0], b = t[1], c = t[2];
            set(a, b, c, 1);
            set(b, c, a, 1);
            set(c, a, b, 1);
        }
    }
    void set(int a, int b, int c, int s) {
        idx[a][b] = c;
        sgn[a][b] = s;
        idx[b][a] = c;
        sgn[b][a] = -s;
    }
    Oct mul(const Oct& x, const Oct& y) const {
        Oct r = Oct::zero(cdouble(0.0));
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j) r.c[idx[i][j]] += double(sgn[i][j]) * x.c[i] * y.c[j];
        return r;
    }
};

} // namespace

TEST_CASE("unit element and basic products") {
    CHECK(max_abs_diff(oct_mul(unit(0), unit(1)), unit(1)) == 0.0);
    // e1 * e1 = -1
    Oct m1 = Oct::zero(0.0);
    m1.c[0] = -1.0;
    CHECK(max_abs_diff(oct_mul(unit(1), unit(1)), m1) == 0.0);
    // e1 * e2 = e4 in the fixed table convention
    CHECK(max_abs_diff(oct_mul(unit(1), unit(2)), unit(4)) == 0.0);
}

TEST_CASE("product matches the exhaustive table oracle") {
    const TableOracle oracle;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
            CHECK(max_abs_diff(oct_mul(unit(i), unit(j)), oracle.mul(unit(i), unit(j))) == 0.0);

    Rng rng(2024);
    for (int it = 0; it < 50; ++it) {
        const Oct a = random_oct(rng), b = random_oct(rng);
        CHECK(max_abs_diff(oct_mul(a, b), oracle.mul(a, b)) < 1e-14);
    }
}

TEST_CASE("conjugations are involutions") {
    Rng rng(7);
    for (int it = 0; it < 100; ++it) {
        const Oct a = random_oct(rng);
        CHECK(max_abs_diff(cayley_conj(cayley_conj(a)), a) == 0.0);
        CHECK(max_abs_diff(complex_conj(complex_conj(a)), a) == 0.0);
    }
    // cayley_conj(1 + e1) = 1 - e1
    Oct x = unit(0) + unit(1);
    Oct expect = unit(0) - unit(1);
    CHECK(max_abs_diff(cayley_conj(x), expect) == 0.0);
    // complex_conj(i e3) = -i e3
    Oct y = unit(3) * cdouble(0.0, 1.0);
    CHECK(max_abs_diff(complex_conj(y), unit(3) * cdouble(0.0, -1.0)) == 0.0);
}

TEST_CASE("Z * cayley_conj(Z) scalarizes to z0^2 + sum z_j^2") {
    Rng rng(11);
    for (int it = 0; it < 1000; ++it) {
        const Oct z = random_oct(rng);
        const Oct p = oct_mul(z, cayley_conj(z));
        cdouble expect = z.c[0] * z.c[0];
        for (int i = 1; i < 8; ++i) expect += z.c[i] * z.c[i];
        CHECK(std::abs(p.c[0] - expect) < 1e-12);
        for (int i = 1; i < 8; ++i) CHECK(std::abs(p.c[i]) < 1e-12);
        // bilinear form against the Cayley conjugate: z0^2 - sum z_j^2
        const cdouble bf = bilinear_form(z, cayley_conj(z));
        CHECK(std::abs(bf - (2.0 * z.c[0] * z.c[0] - expect)) < 1e-12);
    }
}

TEST_CASE("bilinear form on units") {
    CHECK(bilinear_form(unit(1), unit(1)) == cdouble(1.0));
    CHECK(bilinear_form(unit(1), unit(2)) == cdouble(0.0));
}

TEST_CASE("bilinearity in each slot") {
    Rng rng(13);
    for (int it = 0; it < 200; ++it) {
        const Oct a = random_oct(rng), b = random_oct(rng), c = random_oct(rng);
        const cdouble al = rng.disk(1.0), be = rng.disk(1.0);
        const Oct lhs = oct_mul(a * al + b * be, c);
        const Oct rhs = oct_mul(a, c) * al + oct_mul(b, c) * be;
        CHECK(max_abs_diff(lhs, rhs) < 1e-12);
        const cdouble fl = bilinear_form(a * al + b * be, c);
        const cdouble fr = al * bilinear_form(a, c) + be * bilinear_form(b, c);
        CHECK(std::abs(fl - fr) < 1e-12);
    }
}

TEST_CASE("alternativity holds on the complexification") {
    Rng rng(17);
    for (int it = 0; it < 1000; ++it) {
        const Oct z = random_oct(rng), w = random_oct(rng);
        const Oct l = oct_mul(oct_mul(z, z), w) - oct_mul(z, oct_mul(z, w));
        const Oct r = oct_mul(oct_mul(w, z), z) - oct_mul(w, oct_mul(z, z));
        CHECK(max_abs_diff(l, Oct::zero(0.0)) < 1e-12);
        CHECK(max_abs_diff(r, Oct::zero(0.0)) < 1e-12);
    }
}

TEST_CASE("cross product: antisymmetry and consistency with the product") {
    Rng rng(19);
    for (int it = 0; it < 200; ++it) {
        Oct z = random_oct(rng), w = random_oct(rng);
        z.c[0] = w.c[0] = 0.0; // imaginary parts only
        CHECK(max_abs_diff(cross_product(z, z), Oct::zero(0.0)) < 1e-13);
        CHECK(max_abs_diff(cross_product(z, w) + cross_product(w, z), Oct::zero(0.0)) < 1e-13);
        // z w = (-<z, w>, z x w) on imaginary octonions
        const Oct p = oct_mul(z, w);
        cdouble dot = 0.0;
        for (int i = 1; i < 8; ++i) dot += z.c[i] * w.c[i];
        CHECK(std::abs(p.c[0] + dot) < 1e-13);
        Oct cr = cross_product(z, w);
        for (int i = 1; i < 8; ++i) CHECK(std::abs(p.c[i] - cr.c[i]) < 1e-13);
    }
}
