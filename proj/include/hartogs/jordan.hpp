#pragma once

#include <array>
#include <cmath>
#include <span>
#include <vector>

#include "errors.hpp"
#include "octonion.hpp"
#include "ring.hpp"

// The 27-dimensional Hermitian positive Jordan triple system built on three
// complex scalars and three complexified octonions, together with the
// 16-dimensional subsystem spanned by the last two octonion slots.

namespace hartogs {

inline constexpr int jordan_dim = 27;
inline constexpr int type_v_dim = 16;

template <class S>
struct JordanElement {
    std::array<S, 3> z;            // scalar slots z1, z2, z3
    std::array<Octonion<S>, 3> Z;  // octonion slots Z1, Z2, Z3

    static JordanElement zero(const S& proto) {
        JordanElement e;
        for (auto& s : e.z) s = zero_like(proto);
        for (auto& o : e.Z) o = Octonion<S>::zero(proto);
        return e;
    }

    /// Canonical flattening: [z1, z2, z3, Z1(8), Z2(8), Z3(8)].
    static JordanElement from_flat(std::span<const S> v) {
        JordanElement e;
        for (int i = 0; i < 3; ++i) e.z[i] = v[i];
        for (int j = 0; j < 3; ++j)
            for (int i = 0; i < 8; ++i) e.Z[j].c[i] = v[3 + 8 * j + i];
        return e;
    }

    std::vector<S> to_flat() const {
        std::vector<S> v;
        v.reserve(jordan_dim);
        for (int i = 0; i < 3; ++i) v.push_back(z[i]);
        for (int j = 0; j < 3; ++j)
            for (int i = 0; i < 8; ++i) v.push_back(Z[j].c[i]);
        return v;
    }

    friend JordanElement operator+(const JordanElement& a, const JordanElement& b) {
        JordanElement r;
        for (int i = 0; i < 3; ++i) {
            r.z[i] = a.z[i] + b.z[i];
            r.Z[i] = a.Z[i] + b.Z[i];
        }
        return r;
    }
    friend JordanElement operator-(const JordanElement& a, const JordanElement& b) {
        JordanElement r;
        for (int i = 0; i < 3; ++i) {
            r.z[i] = a.z[i] - b.z[i];
            r.Z[i] = a.Z[i] - b.Z[i];
        }
        return r;
    }
    friend JordanElement operator*(const JordanElement& a, const S& s) {
        JordanElement r;
        for (int i = 0; i < 3; ++i) {
            r.z[i] = a.z[i] * s;
            r.Z[i] = a.Z[i] * s;
        }
        return r;
    }
};

template <class S>
JordanElement<S> complex_conj(const JordanElement<S>& a) {
    JordanElement<S> r;
    for (int i = 0; i < 3; ++i) {
        r.z[i] = conj_like(a.z[i]);
        r.Z[i] = complex_conj(a.Z[i]);
    }
    return r;
}

/// Bilinear pairing sum z_j w_j + sum <Z_j, W_j>; equals the coordinatewise
/// dot product of the flattenings. The Hermitian form is (x | y) =
/// bilinear_dot(x, conj(y)).
template <class S>
S bilinear_dot(const JordanElement<S>& a, const JordanElement<S>& b) {
    S r = a.z[0] * b.z[0] + a.z[1] * b.z[1] + a.z[2] * b.z[2];
    for (int j = 0; j < 3; ++j) r += bilinear_form(a.Z[j], b.Z[j]);
    return r;
}

template <class S>
S hermitian_pairing(const JordanElement<S>& a, const JordanElement<S>& b) {
    return bilinear_dot(a, complex_conj(b));
}

/// Symmetric bilinear Freudenthal product.
template <class S>
JordanElement<S> freudenthal_product(const JordanElement<S>& x, const JordanElement<S>& y) {
    JordanElement<S> r;
    r.z[0] = x.z[1] * y.z[2] + x.z[2] * y.z[1] - bilinear_form(x.Z[0], y.Z[0]);
    r.z[1] = x.z[2] * y.z[0] + x.z[0] * y.z[2] - bilinear_form(x.Z[1], y.Z[1]);
    r.z[2] = x.z[0] * y.z[1] + x.z[1] * y.z[0] - bilinear_form(x.Z[2], y.Z[2]);
    r.Z[0] = oct_mul(x.Z[1], y.Z[2]) + oct_mul(y.Z[1], x.Z[2]) -
             cayley_conj(y.Z[0]) * x.z[0] - cayley_conj(x.Z[0]) * y.z[0];
    r.Z[1] = oct_mul(x.Z[2], y.Z[0]) + oct_mul(y.Z[2], x.Z[0]) -
             cayley_conj(y.Z[1]) * x.z[1] - cayley_conj(x.Z[1]) * y.z[1];
    r.Z[2] = oct_mul(x.Z[0], y.Z[1]) + oct_mul(y.Z[0], x.Z[1]) -
             cayley_conj(y.Z[2]) * x.z[2] - cayley_conj(x.Z[2]) * y.z[2];
    return r;
}

/// Freudenthal adjoint z^# = (1/2) z x z, by its explicit quadratic formula.
template <class S>
JordanElement<S> adjoint(const JordanElement<S>& x) {
    const cdouble half(0.5);
    JordanElement<S> r;
    r.z[0] = x.z[1] * x.z[2] - half * bilinear_form(x.Z[0], x.Z[0]);
    r.z[1] = x.z[2] * x.z[0] - half * bilinear_form(x.Z[1], x.Z[1]);
    r.z[2] = x.z[0] * x.z[1] - half * bilinear_form(x.Z[2], x.Z[2]);
    r.Z[0] = oct_mul(x.Z[1], x.Z[2]) - cayley_conj(x.Z[0]) * x.z[0];
    r.Z[1] = oct_mul(x.Z[2], x.Z[0]) - cayley_conj(x.Z[1]) * x.z[1];
    r.Z[2] = oct_mul(x.Z[0], x.Z[1]) - cayley_conj(x.Z[2]) * x.z[2];
    return r;
}

/// {x, y, z} = (x|y) z + (z|y) x - (x x z) x conj(y); symmetric in x, z.
template <class S>
JordanElement<S> triple_product(const JordanElement<S>& x, const JordanElement<S>& y,
                                const JordanElement<S>& z) {
    const JordanElement<S> ybar = complex_conj(y);
    const S xy = bilinear_dot(x, ybar);
    const S zy = bilinear_dot(z, ybar);
    return z * xy + x * zy - freudenthal_product(freudenthal_product(x, z), ybar);
}

// -- type V subsystem: slots (Z2, Z3), everything else zero ------------------

template <class S>
struct TypeVElement {
    Octonion<S> Z2, Z3;
};

template <class S>
JordanElement<S> embed_type_v(const TypeVElement<S>& v) {
    JordanElement<S> e = JordanElement<S>::zero(v.Z2.c[0]);
    e.Z[1] = v.Z2;
    e.Z[2] = v.Z3;
    return e;
}

/// Inverse of embed_type_v. The complementary slots must vanish.
inline TypeVElement<cdouble> project_type_v(const JordanElement<cdouble>& x, double tol = 1e-12) {
    double off = 0.0;
    for (int i = 0; i < 3; ++i) off = std::max(off, std::abs(x.z[i]));
    for (int i = 0; i < 8; ++i) off = std::max(off, std::abs(x.Z[0].c[i]));
    if (off > tol)
        throw StructureViolation("projection onto the (Z2, Z3) subsystem: complementary slots are nonzero");
    return {x.Z[1], x.Z[2]};
}

/// Flatten a 16-vector (Z2 coords then Z3 coords) into the 27-dim system.
template <class S>
JordanElement<S> embed_type_v_flat(std::span<const S> v) {
    TypeVElement<S> t;
    for (int i = 0; i < 8; ++i) {
        t.Z2.c[i] = v[i];
        t.Z3.c[i] = v[8 + i];
    }
    return embed_type_v(t);
}

} // namespace hartogs
