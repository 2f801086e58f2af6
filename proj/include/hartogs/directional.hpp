#pragma once

#include <array>
#include <cassert>
#include <type_traits>
#include <vector>

#include "ring.hpp"

// Nested forward-mode types for the geodesic integrator's inner loop.
//
//   Tay<T, K>  -- one-variable truncated Taylor value (order K) over ring T
//   Grad<T>    -- first-order multivariate dual: value + gradient over T
//
// The polarized potential evaluated on Grad<Grad<cdouble>> yields the whole
// metric matrix in a single pass; on Grad<Tay<cdouble, 2>> it yields the
// geodesic Hessian contraction b_k = phi_{z_l z_j u_k} v^l v^j for every k at
// once. Values with an empty gradient are treated as constants, so the
// passive side of each product costs one multiplication in T.

namespace hartogs {

template <class T, int K>
struct Tay {
    std::array<T, K + 1> c{};

    Tay() = default;
    explicit Tay(const T& v) {
        c[0] = v;
        for (int k = 1; k <= K; ++k) c[k] = zero_like(v);
    }

    friend Tay operator+(const Tay& a, const Tay& b) {
        Tay r;
        for (int k = 0; k <= K; ++k) r.c[k] = a.c[k] + b.c[k];
        return r;
    }
    Tay& operator+=(const Tay& o) {
        for (int k = 0; k <= K; ++k) c[k] += o.c[k];
        return *this;
    }
    Tay& operator-=(const Tay& o) {
        for (int k = 0; k <= K; ++k) c[k] -= o.c[k];
        return *this;
    }
    friend Tay operator-(const Tay& a, const Tay& b) {
        Tay r;
        for (int k = 0; k <= K; ++k) r.c[k] = a.c[k] - b.c[k];
        return r;
    }
    friend Tay operator-(const Tay& a) {
        Tay r;
        for (int k = 0; k <= K; ++k) r.c[k] = -a.c[k];
        return r;
    }
    bool constant_term_only() const {
        if constexpr (!std::is_same_v<T, cdouble>) return false;
        for (int k = 1; k <= K; ++k)
            if (!(c[k] == cdouble(0.0))) return false;
        return true;
    }

    friend Tay operator*(const Tay& a, const Tay& b) {
        // constant factors reduce to a scale; the integrator's conjugate-slot
        // seeds are constant in the direction parameter
        if (b.constant_term_only()) {
            Tay r;
            for (int k = 0; k <= K; ++k) r.c[k] = a.c[k] * b.c[0];
            return r;
        }
        if (a.constant_term_only()) {
            Tay r;
            for (int k = 0; k <= K; ++k) r.c[k] = b.c[k] * a.c[0];
            return r;
        }
        Tay r(zero_like(a.c[0]));
        for (int i = 0; i <= K; ++i)
            for (int j = 0; i + j <= K; ++j) r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
        return r;
    }
    friend Tay operator*(const Tay& a, const cdouble& s) {
        Tay r;
        for (int k = 0; k <= K; ++k) r.c[k] = a.c[k] * s;
        return r;
    }
    friend Tay operator*(const cdouble& s, const Tay& a) { return a * s; }
    friend Tay operator+(const Tay& a, const cdouble& s) {
        Tay r = a;
        r.c[0] = r.c[0] + s;
        return r;
    }
    friend Tay operator+(const cdouble& s, const Tay& a) { return a + s; }
    friend Tay operator-(const Tay& a, const cdouble& s) {
        Tay r = a;
        r.c[0] = r.c[0] - s;
        return r;
    }
    friend Tay operator-(const cdouble& s, const Tay& a) { return -a + s; }
};

namespace detail {

// (1 + s)-series helper shared by the analytic functions on Tay.
template <class T, int K, class CoeffFn>
Tay<T, K> tay_series(const Tay<T, K>& a, const T& lead, CoeffFn coeff) {
    const T vinv = inv(a.c[0]);
    Tay<T, K> s = a * cdouble(1.0);
    for (int k = 0; k <= K; ++k) s.c[k] = s.c[k] * vinv;
    s.c[0] = zero_like(a.c[0]);
    Tay<T, K> r(lead);
    Tay<T, K> p = s;
    for (int k = 1; k <= K; ++k) {
        const cdouble ck = coeff(k);
        for (int i = 0; i <= K; ++i) r.c[i] = r.c[i] + p.c[i] * ck;
        if (k < K) p = p * s;
    }
    return r;
}

} // namespace detail

template <class T, int K>
Tay<T, K> inv(const Tay<T, K>& a) {
    const T vinv = inv(a.c[0]);
    auto r = detail::tay_series(a, one_like(a.c[0]), [](int k) { return cdouble(k % 2 == 1 ? -1.0 : 1.0); });
    for (int k = 0; k <= K; ++k) r.c[k] = r.c[k] * vinv;
    return r;
}

template <class T, int K>
Tay<T, K> operator/(const Tay<T, K>& a, const Tay<T, K>& b) {
    return a * inv(b);
}

template <class T, int K>
Tay<T, K> log(const Tay<T, K>& a) {
    return detail::tay_series(a, log(a.c[0]), [](int k) { return cdouble((k % 2 == 1 ? 1.0 : -1.0) / k); });
}

template <class T, int K>
Tay<T, K> exp(const Tay<T, K>& a) {
    Tay<T, K> s = a;
    s.c[0] = zero_like(a.c[0]);
    Tay<T, K> r(one_like(a.c[0]));
    Tay<T, K> p = s;
    double fact = 1.0;
    for (int k = 1; k <= K; ++k) {
        fact *= k;
        for (int i = 0; i <= K; ++i) r.c[i] = r.c[i] + p.c[i] * cdouble(1.0 / fact);
        if (k < K) p = p * s;
    }
    const T lead = exp(a.c[0]);
    for (int k = 0; k <= K; ++k) r.c[k] = r.c[k] * lead;
    return r;
}

template <class T, int K>
Tay<T, K> pow_real(const Tay<T, K>& a, double mu) {
    auto r = detail::tay_series(a, one_like(a.c[0]), [mu](int k) {
        double c = 1.0;
        for (int i = 1; i <= k; ++i) c *= (mu - (i - 1)) / i;
        return cdouble(c);
    });
    const T lead = pow_real(a.c[0], mu);
    for (int k = 0; k <= K; ++k) r.c[k] = r.c[k] * lead;
    return r;
}

template <class T, int K>
Tay<T, K> sqrt(const Tay<T, K>& a) {
    return pow_real(a, 0.5);
}

template <class T, int K>
Tay<T, K> zero_like(const Tay<T, K>& a) {
    return Tay<T, K>(zero_like(a.c[0]));
}
template <class T, int K>
Tay<T, K> one_like(const Tay<T, K>& a) {
    return Tay<T, K>(one_like(a.c[0]));
}
template <class T, int K>
cdouble value_of(const Tay<T, K>& a) {
    return value_of(a.c[0]);
}

template <class T>
struct Grad {
    T v{};
    std::vector<T> g; // empty = constant

    Grad() = default;
    explicit Grad(const T& value) : v(value) {}
    Grad(const T& value, int nvars, int var) : v(value), g(nvars, zero_like(value)) {
        g[var] = one_like(value);
    }

    bool constant() const { return g.empty(); }

    friend Grad operator+(const Grad& a, const Grad& b) {
        Grad r(a.v + b.v);
        if (a.constant() && b.constant()) return r;
        const std::size_t n = a.constant() ? b.g.size() : a.g.size();
        r.g.resize(n, zero_like(r.v));
        for (std::size_t i = 0; i < n; ++i) {
            if (!a.constant()) r.g[i] = r.g[i] + a.g[i];
            if (!b.constant()) r.g[i] = r.g[i] + b.g[i];
        }
        return r;
    }
    friend Grad operator-(const Grad& a, const Grad& b) { return a + (-b); }
    Grad& operator+=(const Grad& o) {
        v += o.v;
        if (o.constant()) return *this;
        if (constant()) {
            g = o.g;
            return *this;
        }
        for (std::size_t i = 0; i < g.size(); ++i) g[i] += o.g[i];
        return *this;
    }
    Grad& operator-=(const Grad& o) {
        v -= o.v;
        if (o.constant()) return *this;
        if (constant()) {
            g.reserve(o.g.size());
            for (const auto& x : o.g) g.push_back(-x);
            return *this;
        }
        for (std::size_t i = 0; i < g.size(); ++i) g[i] -= o.g[i];
        return *this;
    }
    friend Grad operator-(const Grad& a) {
        Grad r(-a.v);
        r.g.reserve(a.g.size());
        for (const auto& x : a.g) r.g.push_back(-x);
        return r;
    }
    friend Grad operator*(const Grad& a, const Grad& b) {
        Grad r(a.v * b.v);
        if (a.constant() && b.constant()) return r;
        const std::size_t n = a.constant() ? b.g.size() : a.g.size();
        r.g.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (a.constant())
                r.g.push_back(a.v * b.g[i]);
            else if (b.constant())
                r.g.push_back(a.g[i] * b.v);
            else
                r.g.push_back(a.g[i] * b.v + a.v * b.g[i]);
        }
        return r;
    }
    friend Grad operator*(const Grad& a, const cdouble& s) {
        Grad r(a.v * s);
        r.g.reserve(a.g.size());
        for (const auto& x : a.g) r.g.push_back(x * s);
        return r;
    }
    friend Grad operator*(const cdouble& s, const Grad& a) { return a * s; }
    friend Grad operator+(const Grad& a, const cdouble& s) {
        Grad r = a;
        r.v = r.v + s;
        return r;
    }
    friend Grad operator+(const cdouble& s, const Grad& a) { return a + s; }
    friend Grad operator-(const Grad& a, const cdouble& s) { return a + (-s); }
    friend Grad operator-(const cdouble& s, const Grad& a) { return -a + s; }
};

/// Chain rule: f(a) = (f(a.v), f'(a.v) * a.g).
template <class T, class F, class DF>
Grad<T> grad_chain(const Grad<T>& a, F f, DF df) {
    Grad<T> r(f(a.v));
    if (a.constant()) return r;
    const T d = df(a.v);
    r.g.reserve(a.g.size());
    for (const auto& x : a.g) r.g.push_back(d * x);
    return r;
}

template <class T>
Grad<T> inv(const Grad<T>& a) {
    const T iv = inv(a.v);
    return grad_chain(a, [&](const T&) { return iv; }, [&](const T&) { return -(iv * iv); });
}
template <class T>
Grad<T> operator/(const Grad<T>& a, const Grad<T>& b) {
    return a * inv(b);
}
template <class T>
Grad<T> log(const Grad<T>& a) {
    return grad_chain(a, [](const T& v) { return log(v); }, [](const T& v) { return inv(v); });
}
template <class T>
Grad<T> exp(const Grad<T>& a) {
    const T e = exp(a.v);
    return grad_chain(a, [&](const T&) { return e; }, [&](const T&) { return e; });
}
template <class T>
Grad<T> pow_real(const Grad<T>& a, double mu) {
    return grad_chain(a, [mu](const T& v) { return pow_real(v, mu); },
                      [mu](const T& v) { return pow_real(v, mu - 1.0) * cdouble(mu); });
}
template <class T>
Grad<T> sqrt(const Grad<T>& a) {
    return pow_real(a, 0.5);
}

template <class T>
Grad<T> zero_like(const Grad<T>& a) {
    return Grad<T>(zero_like(a.v));
}
template <class T>
Grad<T> one_like(const Grad<T>& a) {
    return Grad<T>(one_like(a.v));
}
template <class T>
cdouble value_of(const Grad<T>& a) {
    return value_of(a.v);
}

// ---------------------------------------------------------------------------
// BiGrad: value, holomorphic gradient dz, conjugate-slot gradient du, and the
// full mixed block dzdu (row-major nz x nu). Exactly the data the metric
// matrix needs, in one flat object; empty vectors mark inactive parts, so the
// one-sided algebra (z-side polynomials, u-side polynomials) costs only its
// own gradients and the m x m block materializes at the pairings.
// ---------------------------------------------------------------------------
struct BiGrad {
    cdouble v{};
    std::vector<cdouble> dz, du, dzdu;

    BiGrad() = default;
    explicit BiGrad(cdouble value) : v(value) {}

    friend BiGrad operator+(const BiGrad& a, const BiGrad& b) {
        BiGrad r(a.v + b.v);
        r.dz = add_vec(a.dz, b.dz);
        r.du = add_vec(a.du, b.du);
        r.dzdu = add_vec(a.dzdu, b.dzdu);
        return r;
    }
    friend BiGrad operator-(const BiGrad& a, const BiGrad& b) { return a + (-b); }
    BiGrad& operator+=(const BiGrad& o) {
        v += o.v;
        acc_vec(dz, o.dz, 1.0);
        acc_vec(du, o.du, 1.0);
        acc_vec(dzdu, o.dzdu, 1.0);
        return *this;
    }
    BiGrad& operator-=(const BiGrad& o) {
        v -= o.v;
        acc_vec(dz, o.dz, -1.0);
        acc_vec(du, o.du, -1.0);
        acc_vec(dzdu, o.dzdu, -1.0);
        return *this;
    }
    friend BiGrad operator-(const BiGrad& a) {
        BiGrad r(-a.v);
        r.dz = neg_vec(a.dz);
        r.du = neg_vec(a.du);
        r.dzdu = neg_vec(a.dzdu);
        return r;
    }
    friend BiGrad operator*(const BiGrad& a, const BiGrad& b) {
        BiGrad r(a.v * b.v);
        r.dz = lin_comb(a.dz, b.v, b.dz, a.v);
        r.du = lin_comb(a.du, b.v, b.du, a.v);
        // (ab)_zu = a_zu b + a b_zu + a_z (x) b_u + a_u (x) b_z
        r.dzdu = lin_comb(a.dzdu, b.v, b.dzdu, a.v);
        accumulate_outer(r.dzdu, a.dz, b.du);
        accumulate_outer(r.dzdu, b.dz, a.du);
        return r;
    }
    friend BiGrad operator*(const BiGrad& a, const cdouble& s) {
        BiGrad r(a.v * s);
        r.dz = scale_vec(a.dz, s);
        r.du = scale_vec(a.du, s);
        r.dzdu = scale_vec(a.dzdu, s);
        return r;
    }
    friend BiGrad operator*(const cdouble& s, const BiGrad& a) { return a * s; }
    friend BiGrad operator+(const BiGrad& a, const cdouble& s) {
        BiGrad r = a;
        r.v += s;
        return r;
    }
    friend BiGrad operator+(const cdouble& s, const BiGrad& a) { return a + s; }
    friend BiGrad operator-(const BiGrad& a, const cdouble& s) { return a + (-s); }
    friend BiGrad operator-(const cdouble& s, const BiGrad& a) { return -a + s; }

private:
    static void acc_vec(std::vector<cdouble>& dst, const std::vector<cdouble>& src, double sign) {
        if (src.empty()) return;
        if (dst.empty()) {
            dst.reserve(src.size());
            for (const auto& x : src) dst.push_back(sign * x);
            return;
        }
        for (std::size_t i = 0; i < src.size(); ++i) dst[i] += sign * src[i];
    }
    static std::vector<cdouble> add_vec(const std::vector<cdouble>& a,
                                        const std::vector<cdouble>& b) {
        if (a.empty()) return b;
        if (b.empty()) return a;
        std::vector<cdouble> r(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
        return r;
    }
    static std::vector<cdouble> neg_vec(const std::vector<cdouble>& a) {
        std::vector<cdouble> r(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
        return r;
    }
    static std::vector<cdouble> scale_vec(const std::vector<cdouble>& a, cdouble s) {
        std::vector<cdouble> r(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
        return r;
    }
    static std::vector<cdouble> lin_comb(const std::vector<cdouble>& a, cdouble sa,
                                         const std::vector<cdouble>& b, cdouble sb) {
        if (a.empty()) return scale_vec(b, sb);
        if (b.empty()) return scale_vec(a, sa);
        std::vector<cdouble> r(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * sa + b[i] * sb;
        return r;
    }
    static void accumulate_outer(std::vector<cdouble>& block, const std::vector<cdouble>& x,
                                 const std::vector<cdouble>& y) {
        if (x.empty() || y.empty()) return;
        if (block.empty()) block.assign(x.size() * y.size(), cdouble(0.0));
        for (std::size_t i = 0; i < x.size(); ++i) {
            const cdouble xi = x[i];
            if (xi == 0.0) continue;
            cdouble* row = block.data() + i * y.size();
            for (std::size_t j = 0; j < y.size(); ++j) row[j] += xi * y[j];
        }
    }

    /// f(a) with f'' feeding the mixed block: h_zu = f' a_zu + f'' a_z (x) a_u.
    friend BiGrad bigrad_chain(const BiGrad& a, cdouble f, cdouble fp, cdouble fpp) {
        BiGrad r(f);
        r.dz = scale_vec(a.dz, fp);
        r.du = scale_vec(a.du, fp);
        r.dzdu = scale_vec(a.dzdu, fp);
        accumulate_outer(r.dzdu, a.dz, scale_vec(a.du, fpp));
        return r;
    }

    friend BiGrad inv(const BiGrad& a) {
        const cdouble iv = 1.0 / a.v;
        return bigrad_chain(a, iv, -iv * iv, 2.0 * iv * iv * iv);
    }
    friend BiGrad operator/(const BiGrad& a, const BiGrad& b) { return a * inv(b); }
    friend BiGrad log(const BiGrad& a) {
        const cdouble iv = 1.0 / a.v;
        return bigrad_chain(a, std::log(a.v), iv, -iv * iv);
    }
    friend BiGrad exp(const BiGrad& a) {
        const cdouble e = std::exp(a.v);
        return bigrad_chain(a, e, e, e);
    }
    friend BiGrad pow_real(const BiGrad& a, double mu) {
        const cdouble p = std::pow(a.v, mu);
        return bigrad_chain(a, p, mu * std::pow(a.v, mu - 1.0),
                            mu * (mu - 1.0) * std::pow(a.v, mu - 2.0));
    }
    friend BiGrad sqrt(const BiGrad& a) { return pow_real(a, 0.5); }
};

inline BiGrad zero_like(const BiGrad&) { return BiGrad(cdouble(0.0)); }
inline BiGrad one_like(const BiGrad&) { return BiGrad(cdouble(1.0)); }
inline cdouble value_of(const BiGrad& a) { return a.v; }

} // namespace hartogs
