#pragma once

#include <array>
#include <cassert>
#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "ring.hpp"

// Multivariate truncated Taylor jets with complex coefficients over a small
// set of active real variables. A jet carries the value and every mixed
// partial derivative up to a fixed total order; arithmetic propagates them
// exactly (truncated Leibniz / chain rules), so derivatives of composite
// potentials come out at machine precision with no differencing step.
//
// Coefficients are indexed by multi-indices in graded lexicographic order.
// The shared JetSpace holds the index tables and the (i, j) -> i+j product
// table for a given (variable count, order) pair; spaces are cached.
//
// The `deg` member is an upper bound on the total degree of any nonzero
// coefficient. Products of low-degree jets (constants, seeds) then skip most
// of the convolution, which is what keeps exact differentiation through the
// 27-dimensional algebra affordable.

namespace hartogs {

class JetSpace {
public:
    int nvars = 0;
    int order = 0;
    int ncoef = 0;

    static constexpr int max_vars = 8;
    static constexpr int max_order = 4;

    using Exponents = std::array<std::uint8_t, max_vars>;

    std::vector<Exponents> exps;     // per-coefficient exponents
    std::vector<int> prefix;         // prefix[g] = #coefficients of total degree <= g
    std::vector<std::int32_t> prod;  // ncoef*ncoef; index of alpha+beta or -1

    static std::shared_ptr<const JetSpace> get(int nvars, int order) {
        static std::mutex mu;
        static std::map<std::pair<int, int>, std::shared_ptr<const JetSpace>> cache;
        std::lock_guard<std::mutex> lock(mu);
        auto key = std::make_pair(nvars, order);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        auto sp = std::shared_ptr<const JetSpace>(new JetSpace(nvars, order));
        cache.emplace(key, sp);
        return sp;
    }

    int index_of(const Exponents& e) const {
        auto it = lookup_.find(pack(e));
        assert(it != lookup_.end());
        return it->second;
    }

private:
    JetSpace(int nv, int ord) : nvars(nv), order(ord) {
        assert(nv >= 1 && nv <= max_vars && ord >= 1 && ord <= max_order);
        prefix.assign(ord + 1, 0);
        Exponents cur{};
        for (int g = 0; g <= ord; ++g) {
            enumerate(cur, 0, g, g);
            prefix[g] = static_cast<int>(exps.size());
        }
        ncoef = static_cast<int>(exps.size());
        for (int i = 0; i < ncoef; ++i) lookup_.emplace(pack(exps[i]), i);
        prod.assign(static_cast<std::size_t>(ncoef) * ncoef, -1);
        for (int i = 0; i < ncoef; ++i)
            for (int j = 0; j < ncoef; ++j) {
                int total = 0;
                Exponents s{};
                for (int v = 0; v < nvars; ++v) {
                    s[v] = static_cast<std::uint8_t>(exps[i][v] + exps[j][v]);
                    total += s[v];
                }
                if (total <= order) prod[static_cast<std::size_t>(i) * ncoef + j] = index_of(s);
            }
    }

    void enumerate(Exponents& cur, int var, int remaining, int target) {
        if (var == nvars - 1) {
            cur[var] = static_cast<std::uint8_t>(remaining);
            if (remaining + sum_before(cur, var) == target) exps.push_back(cur);
            cur[var] = 0;
            return;
        }
        for (int e = remaining; e >= 0; --e) {
            cur[var] = static_cast<std::uint8_t>(e);
            enumerate(cur, var + 1, remaining - e, target);
        }
        cur[var] = 0;
    }

    static int sum_before(const Exponents& e, int var) {
        int s = 0;
        for (int v = 0; v < var; ++v) s += e[v];
        return s;
    }

    static std::uint64_t pack(const Exponents& e) {
        std::uint64_t p = 0;
        for (int v = 0; v < max_vars; ++v) p |= static_cast<std::uint64_t>(e[v] & 0xf) << (4 * v);
        return p;
    }

    std::unordered_map<std::uint64_t, int> lookup_;
};

class Jet {
public:
    std::shared_ptr<const JetSpace> sp;
    std::vector<cdouble> c;
    int deg = 0;

    Jet() = default;

    static Jet constant(std::shared_ptr<const JetSpace> space, cdouble v) {
        Jet j;
        j.sp = std::move(space);
        j.c.assign(j.sp->ncoef, cdouble(0.0));
        j.c[0] = v;
        j.deg = 0;
        return j;
    }

    /// Seed for one real active variable: value + unit first-order part.
    static Jet variable(std::shared_ptr<const JetSpace> space, int var, double v) {
        Jet j = constant(std::move(space), v);
        j.set_linear(var, 1.0);
        return j;
    }

    void set_linear(int var, cdouble coeff) {
        JetSpace::Exponents e{};
        e[var] = 1;
        c[sp->index_of(e)] = coeff;
        deg = std::max(deg, 1);
    }

    cdouble value() const { return c[0]; }

    /// Mixed partial derivative for the given exponent vector (includes the
    /// factorial normalization).
    cdouble derivative(const JetSpace::Exponents& e) const {
        double f = 1.0;
        for (int v = 0; v < sp->nvars; ++v)
            for (int k = 2; k <= e[v]; ++k) f *= k;
        return c[sp->index_of(e)] * f;
    }

    Jet& operator+=(const Jet& o) {
        for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
        deg = std::max(deg, o.deg);
        return *this;
    }
    Jet& operator-=(const Jet& o) {
        for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.c[i];
        deg = std::max(deg, o.deg);
        return *this;
    }

    friend Jet operator+(Jet a, const Jet& b) { return a += b; }
    friend Jet operator-(Jet a, const Jet& b) { return a -= b; }

    friend Jet operator-(Jet a) {
        for (auto& x : a.c) x = -x;
        return a;
    }

    friend Jet operator*(const Jet& a, cdouble s) {
        Jet r = a;
        for (auto& x : r.c) x *= s;
        return r;
    }
    friend Jet operator*(cdouble s, const Jet& a) { return a * s; }

    friend Jet operator+(Jet a, cdouble s) {
        a.c[0] += s;
        return a;
    }
    friend Jet operator+(cdouble s, Jet a) { return std::move(a) + s; }
    friend Jet operator-(Jet a, cdouble s) {
        a.c[0] -= s;
        return a;
    }
    friend Jet operator-(cdouble s, const Jet& a) { return -a + s; }

    friend Jet operator*(const Jet& a, const Jet& b) {
        if (a.deg == 0) return b * a.c[0];
        if (b.deg == 0) return a * b.c[0];
        const JetSpace& S = *a.sp;
        Jet r = Jet::constant(a.sp, 0.0);
        r.c[0] = 0.0;
        r.deg = std::min(S.order, a.deg + b.deg);
        const int na = S.prefix[std::min(a.deg, S.order)];
        const int nb = S.prefix[std::min(b.deg, S.order)];
        const std::int32_t* P = S.prod.data();
        for (int i = 0; i < na; ++i) {
            const cdouble ai = a.c[i];
            if (ai == 0.0) continue;
            const std::int32_t* row = P + static_cast<std::size_t>(i) * S.ncoef;
            for (int j = 0; j < nb; ++j) {
                const std::int32_t t = row[j];
                if (t < 0) continue;
                const cdouble bj = b.c[j];
                if (bj == 0.0) continue;
                r.c[t] += ai * bj;
            }
        }
        return r;
    }
};

// Analytic functions via the (1 + s)-series around the leading value; exact
// to the truncation order since order <= 4.

inline Jet inv(const Jet& a) {
    const cdouble v = a.c[0];
    if (v == 0.0) throw std::domain_error("jet: inverse of zero value");
    Jet s = a * (1.0 / v);
    s.c[0] = 0.0;
    Jet r = Jet::constant(a.sp, 1.0);
    Jet p = s;
    double sign = -1.0;
    for (int k = 1; k <= a.sp->order; ++k) {
        r += p * cdouble(sign);
        sign = -sign;
        if (k < a.sp->order) p = p * s;
    }
    return r * (1.0 / v);
}

inline Jet operator/(const Jet& a, const Jet& b) { return a * inv(b); }

inline Jet log(const Jet& a) {
    const cdouble v = a.c[0];
    if (v == 0.0) throw std::domain_error("jet: log of zero value");
    Jet s = a * (1.0 / v);
    s.c[0] = 0.0;
    Jet r = Jet::constant(a.sp, std::log(v));
    Jet p = s;
    for (int k = 1; k <= a.sp->order; ++k) {
        r += p * cdouble((k % 2 == 1 ? 1.0 : -1.0) / k);
        if (k < a.sp->order) p = p * s;
    }
    return r;
}

inline Jet exp(const Jet& a) {
    Jet s = a;
    s.c[0] = 0.0;
    s.deg = a.deg;
    Jet r = Jet::constant(a.sp, 1.0);
    Jet p = s;
    double fact = 1.0;
    for (int k = 1; k <= a.sp->order; ++k) {
        fact *= k;
        r += p * cdouble(1.0 / fact);
        if (k < a.sp->order) p = p * s;
    }
    return r * std::exp(a.c[0]);
}

inline Jet pow_real(const Jet& a, double mu) {
    const cdouble v = a.c[0];
    if (v == 0.0) throw std::domain_error("jet: pow of zero value");
    Jet s = a * (1.0 / v);
    s.c[0] = 0.0;
    Jet r = Jet::constant(a.sp, 1.0);
    Jet p = s;
    double coeff = 1.0;
    for (int k = 1; k <= a.sp->order; ++k) {
        coeff *= (mu - (k - 1)) / k;
        r += p * cdouble(coeff);
        if (k < a.sp->order) p = p * s;
    }
    return r * std::pow(v, mu);
}

inline Jet sqrt(const Jet& a) { return pow_real(a, 0.5); }

/// Coefficientwise conjugation. Valid because the active variables are real:
/// conj(f)(x) has Taylor coefficients conj(c_alpha).
inline Jet conj_like(const Jet& a) {
    Jet r = a;
    for (auto& x : r.c) x = std::conj(x);
    return r;
}

inline Jet zero_like(const Jet& a) { return Jet::constant(a.sp, 0.0); }
inline Jet one_like(const Jet& a) { return Jet::constant(a.sp, 1.0); }
inline cdouble value_of(const Jet& a) { return a.c[0]; }

} // namespace hartogs
