#pragma once

#include <array>
#include <cstdint>

#include "ring.hpp"

// Complexified octonion algebra over an arbitrary coefficient ring. All
// products here are complex-bilinear; conjugation of coefficients never
// enters, which is what lets the same code run on plain values, jets and
// nested duals.
//
// The multiplication table is the Fano-plane convention with e1 e2 = e4 and
// index-doubling symmetry: lines (1,2,4) (2,3,5) (3,4,6) (4,5,7) (5,6,1)
// (6,7,2) (7,1,3), each oriented cyclically. Only the bilinear form is used
// by the exceptional-domain constructions, so nothing downstream depends on
// this choice.

namespace hartogs {

struct CayleyTable {
    // cross[i][j] = signed unit index of e_i x e_j (1-based; 0 = zero)
    std::array<std::array<std::int8_t, 8>, 8> idx{};
    std::array<std::array<std::int8_t, 8>, 8> sgn{};

    constexpr CayleyTable() {
        constexpr int lines[7][3] = {{1, 2, 4}, {2, 3, 5}, {3, 4, 6}, {4, 5, 7},
                                     {5, 6, 1}, {6, 7, 2}, {7, 1, 3}};
        for (const auto& L : lines)
            for (int s = 0; s < 3; ++s) {
                const int a = L[s], b = L[(s + 1) % 3], c = L[(s + 2) % 3];
                idx[a][b] = static_cast<std::int8_t>(c);
                sgn[a][b] = 1;
                idx[b][a] = static_cast<std::int8_t>(c);
                sgn[b][a] = -1;
            }
    }
};

inline constexpr CayleyTable cayley_table{};

template <class S>
struct Octonion {
    std::array<S, 8> c; // coefficients on {1, e1, ..., e7}

    static Octonion zero(const S& proto) {
        Octonion o;
        for (auto& x : o.c) x = zero_like(proto);
        return o;
    }

    friend Octonion operator+(const Octonion& a, const Octonion& b) {
        Octonion r;
        for (int i = 0; i < 8; ++i) r.c[i] = a.c[i] + b.c[i];
        return r;
    }
    friend Octonion operator-(const Octonion& a, const Octonion& b) {
        Octonion r;
        for (int i = 0; i < 8; ++i) r.c[i] = a.c[i] - b.c[i];
        return r;
    }
    friend Octonion operator*(const Octonion& a, const S& s) {
        Octonion r;
        for (int i = 0; i < 8; ++i) r.c[i] = a.c[i] * s;
        return r;
    }
    friend Octonion operator*(const S& s, const Octonion& a) { return a * s; }
};

/// Cayley conjugation: negate the imaginary part.
template <class S>
Octonion<S> cayley_conj(const Octonion<S>& a) {
    Octonion<S> r;
    r.c[0] = a.c[0];
    for (int i = 1; i < 8; ++i) r.c[i] = -a.c[i];
    return r;
}

/// Coefficientwise complex conjugation (value rings and jets only).
template <class S>
Octonion<S> complex_conj(const Octonion<S>& a) {
    Octonion<S> r;
    for (int i = 0; i < 8; ++i) r.c[i] = conj_like(a.c[i]);
    return r;
}

/// <Z, W> = z0 w0 + sum z_j w_j, bilinear (no conjugation).
template <class S>
S bilinear_form(const Octonion<S>& a, const Octonion<S>& b) {
    S r = a.c[0] * b.c[0];
    for (int i = 1; i < 8; ++i) r += a.c[i] * b.c[i];
    return r;
}

/// Cayley cross product on the imaginary part (slots 1..7 used, slot 0 zero).
template <class S>
Octonion<S> cross_product(const Octonion<S>& a, const Octonion<S>& b) {
    Octonion<S> r = Octonion<S>::zero(a.c[0]);
    for (int i = 1; i < 8; ++i) {
        for (int j = 1; j < 8; ++j) {
            const int k = cayley_table.idx[i][j];
            if (k == 0) continue;
            if (cayley_table.sgn[i][j] > 0)
                r.c[k] += a.c[i] * b.c[j];
            else
                r.c[k] -= a.c[i] * b.c[j];
        }
    }
    return r;
}

/// Octonion product: (z0 w0 - <z,w>, z0 w + w0 z + z x w).
template <class S>
Octonion<S> oct_mul(const Octonion<S>& a, const Octonion<S>& b) {
    Octonion<S> r = cross_product(a, b);
    S dot = a.c[1] * b.c[1];
    for (int i = 2; i < 8; ++i) dot += a.c[i] * b.c[i];
    r.c[0] = a.c[0] * b.c[0] - dot;
    for (int i = 1; i < 8; ++i) {
        r.c[i] += a.c[0] * b.c[i];
        r.c[i] += b.c[0] * a.c[i];
    }
    return r;
}

template <class S>
Octonion<S> operator*(const Octonion<S>& a, const Octonion<S>& b) {
    return oct_mul(a, b);
}

} // namespace hartogs
