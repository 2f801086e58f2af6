#pragma once

#include <cmath>
#include <complex>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "errors.hpp"
#include "jordan.hpp"
#include "linalg.hpp"
#include "ring.hpp"

// Catalog of the irreducible bounded symmetric domains in their circular
// matrix/vector realizations, their numerical invariants, membership
// predicates, and generic norms. Norm evaluation is templated over the
// coefficient ring and written in polarized form N(z, u) with u standing for
// the conjugated slot, so the same code produces values (u = conj z),
// dual values (u = -conj z) and exact derivatives (jet-seeded u).

namespace hartogs {

enum class CartanKind { I, II, III, IV, V, VI };

inline const char* to_string(CartanKind k) {
    switch (k) {
        case CartanKind::I: return "I";
        case CartanKind::II: return "II";
        case CartanKind::III: return "III";
        case CartanKind::IV: return "IV";
        case CartanKind::V: return "V";
        case CartanKind::VI: return "VI";
    }
    return "?";
}

struct DomainInvariants {
    long d = 0, r = 0, a = 0, b = 0, gamma = 0;

    bool satisfies_identities() const {
        return 2 * d == r * (2 * b + 2 + a * (r - 1)) && gamma == (r - 1) * a + b + 2;
    }
};

struct CartanDomainSpec {
    CartanKind kind = CartanKind::I;
    int n = 1, m = 1;
    // Permits matrix sizes below the classification floors (II, IV require
    // n >= 5); the norm and membership formulas stay well defined there.
    bool relax_bounds = false;

    int dim() const {
        switch (kind) {
            case CartanKind::I: return n * m;
            case CartanKind::II: return n * (n - 1) / 2;
            case CartanKind::III: return n * (n + 1) / 2;
            case CartanKind::IV: return n;
            case CartanKind::V: return type_v_dim;
            case CartanKind::VI: return jordan_dim;
        }
        return 0;
    }

    void validate() const {
        switch (kind) {
            case CartanKind::I:
                if (n < 1 || m < n) throw InvalidSpec("type I requires 1 <= n <= m");
                break;
            case CartanKind::II:
                if (n < (relax_bounds ? 2 : 5)) throw InvalidSpec("type II requires n >= 5");
                break;
            case CartanKind::III:
                if (n < (relax_bounds ? 1 : 2)) throw InvalidSpec("type III requires n >= 2");
                break;
            case CartanKind::IV:
                if (n < (relax_bounds ? 2 : 5)) throw InvalidSpec("type IV requires n >= 5");
                break;
            case CartanKind::V:
            case CartanKind::VI:
                break;
        }
    }
};

inline DomainInvariants invariants_of(const CartanDomainSpec& s) {
    s.validate();
    DomainInvariants v;
    v.d = s.dim();
    switch (s.kind) {
        case CartanKind::I:
            v.r = s.n;
            v.a = s.n >= 2 ? 2 : 0;
            v.b = s.m - s.n;
            v.gamma = s.m + s.n;
            break;
        case CartanKind::II:
            v.r = s.n / 2;
            v.a = 4;
            v.b = (s.n % 2 == 0) ? 0 : 2;
            v.gamma = 2 * s.n - 2;
            break;
        case CartanKind::III:
            v.r = s.n;
            v.a = 1;
            v.b = 0;
            v.gamma = s.n + 1;
            break;
        case CartanKind::IV:
            v.r = 2;
            v.a = s.n - 2;
            v.b = 0;
            v.gamma = s.n;
            break;
        case CartanKind::V:
            v = {16, 2, 6, 4, 12};
            break;
        case CartanKind::VI:
            v = {27, 3, 8, 0, 18};
            break;
    }
    return v;
}

struct SymmetricDomainSpec {
    std::vector<CartanDomainSpec> factors;

    int dim() const {
        int d = 0;
        for (const auto& f : factors) d += f.dim();
        return d;
    }
    long rank() const {
        long r = 0;
        for (const auto& f : factors) r += invariants_of(f).r;
        return r;
    }
    void validate() const {
        if (factors.empty()) throw InvalidSpec("domain needs at least one factor");
        for (const auto& f : factors) f.validate();
    }

    /// The polydisk of rank r as a product of r unit disks.
    static SymmetricDomainSpec polydisk(int r) {
        SymmetricDomainSpec s;
        s.factors.assign(r, CartanDomainSpec{CartanKind::I, 1, 1, false});
        return s;
    }
};

struct HartogsSpec {
    SymmetricDomainSpec base;
    double mu = 1.0;

    void validate() const {
        base.validate();
        if (!(mu > 0.0)) throw InvalidSpec("Hartogs exponent mu must be positive");
    }
};

// -- matrix realizations ------------------------------------------------------

namespace detail {

/// Fill the n x m (type I), antisymmetric n x n (type II) or symmetric n x n
/// (type III) matrix from the flat coordinate vector.
template <class S>
std::vector<S> realize_matrix(const CartanDomainSpec& spec, std::span<const S> z, int& rows, int& cols) {
    const S zero = zero_like(z[0]);
    switch (spec.kind) {
        case CartanKind::I: {
            rows = spec.n;
            cols = spec.m;
            std::vector<S> M(z.begin(), z.end());
            return M;
        }
        case CartanKind::II: {
            rows = cols = spec.n;
            std::vector<S> M(static_cast<std::size_t>(spec.n) * spec.n, zero);
            int k = 0;
            for (int i = 0; i < spec.n; ++i)
                for (int j = i + 1; j < spec.n; ++j, ++k) {
                    M[static_cast<std::size_t>(i) * spec.n + j] = z[k];
                    M[static_cast<std::size_t>(j) * spec.n + i] = -z[k];
                }
            return M;
        }
        case CartanKind::III: {
            rows = cols = spec.n;
            std::vector<S> M(static_cast<std::size_t>(spec.n) * spec.n, zero);
            int k = 0;
            for (int i = 0; i < spec.n; ++i)
                for (int j = i; j < spec.n; ++j, ++k) {
                    M[static_cast<std::size_t>(i) * spec.n + j] = z[k];
                    M[static_cast<std::size_t>(j) * spec.n + i] = z[k];
                }
            return M;
        }
        default:
            throw InvalidSpec("not a matrix realization");
    }
}

/// det(I - Z U^T) over the coefficient ring.
template <class S>
S det_one_minus_zut(const CartanDomainSpec& spec, std::span<const S> z, std::span<const S> u) {
    int rows = 0, cols = 0;
    std::vector<S> Z = realize_matrix(spec, z, rows, cols);
    std::vector<S> U = realize_matrix(spec, u, rows, cols);
    const S zero = zero_like(z[0]);
    std::vector<S> M(static_cast<std::size_t>(rows) * rows, zero);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < rows; ++j) {
            S acc = zero;
            for (int k = 0; k < cols; ++k)
                acc += Z[static_cast<std::size_t>(i) * cols + k] * U[static_cast<std::size_t>(j) * cols + k];
            M[static_cast<std::size_t>(i) * rows + j] = (i == j ? one_like(acc) : zero) - acc;
        }
    return det_lu(M, rows);
}

} // namespace detail

/// Polarized generic norm N(z, u). On the diagonal u = conj(z) this is
/// N(z, conj z); at u = -conj(z) the dual value N(z, -conj z).
template <class S>
S generic_norm_polarized(const CartanDomainSpec& spec, std::span<const S> z, std::span<const S> u) {
    switch (spec.kind) {
        case CartanKind::I:
        case CartanKind::III:
            return detail::det_one_minus_zut(spec, z, u);
        case CartanKind::II:
            return sqrt(detail::det_one_minus_zut(spec, z, u));
        case CartanKind::IV: {
            S zu = z[0] * u[0], zz = z[0] * z[0], uu = u[0] * u[0];
            for (int j = 1; j < spec.n; ++j) {
                zu += z[j] * u[j];
                zz += z[j] * z[j];
                uu += u[j] * u[j];
            }
            return one_like(zu) - cdouble(2.0) * zu + zz * uu;
        }
        case CartanKind::V:
        case CartanKind::VI: {
            const JordanElement<S> x = spec.kind == CartanKind::VI
                                           ? JordanElement<S>::from_flat(z)
                                           : embed_type_v_flat(z);
            const JordanElement<S> y = spec.kind == CartanKind::VI
                                           ? JordanElement<S>::from_flat(u)
                                           : embed_type_v_flat(u);
            const JordanElement<S> xs = adjoint(x);
            const JordanElement<S> ys = adjoint(y);
            const S lin = bilinear_dot(x, y);
            const S quad = bilinear_dot(xs, ys);
            const S cx = bilinear_dot(xs, x); // (z^#, z) pairing, cubic in z
            const S cu = bilinear_dot(ys, y);
            return one_like(lin) - lin + quad - cdouble(1.0 / 9.0) * cx * cu;
        }
    }
    throw InvalidSpec("unknown kind");
}

template <class S>
S generic_norm_polarized(const SymmetricDomainSpec& spec, std::span<const S> z, std::span<const S> u) {
    S prod = one_like(z[0]);
    int off = 0;
    for (const auto& f : spec.factors) {
        const int d = f.dim();
        prod = prod * generic_norm_polarized(f, z.subspan(off, d), u.subspan(off, d));
        off += d;
    }
    return prod;
}

enum class NormMode { diagonal, dual_diagonal };

template <class Spec>
double generic_norm(const Spec& spec, std::span<const cdouble> z, NormMode mode) {
    std::vector<cdouble> u(z.size());
    for (std::size_t i = 0; i < z.size(); ++i)
        u[i] = mode == NormMode::diagonal ? std::conj(z[i]) : -std::conj(z[i]);
    return generic_norm_polarized(spec, z, std::span<const cdouble>(u)).real();
}

// -- membership ---------------------------------------------------------------

inline bool membership(const CartanDomainSpec& spec, std::span<const cdouble> z) {
    switch (spec.kind) {
        case CartanKind::I:
        case CartanKind::II:
        case CartanKind::III: {
            int rows = 0, cols = 0;
            std::vector<cdouble> Zv = detail::realize_matrix(spec, z, rows, cols);
            CMat A(rows, rows);
            for (int i = 0; i < rows; ++i)
                for (int j = 0; j < rows; ++j) {
                    cdouble acc = 0.0;
                    for (int k = 0; k < cols; ++k)
                        acc += Zv[static_cast<std::size_t>(i) * cols + k] *
                               std::conj(Zv[static_cast<std::size_t>(j) * cols + k]);
                    A(i, j) = (i == j ? 1.0 : 0.0) - acc;
                }
            return hermitian_positive_definite(std::move(A));
        }
        case CartanKind::IV: {
            double norm2 = 0.0;
            cdouble zsq = 0.0;
            for (int j = 0; j < spec.n; ++j) {
                norm2 += std::norm(z[j]);
                zsq += z[j] * z[j];
            }
            return norm2 < 1.0 && 1.0 + std::norm(zsq) - 2.0 * norm2 > 0.0;
        }
        case CartanKind::V: {
            const auto x = embed_type_v_flat(z);
            const double zz = hermitian_pairing(x, x).real();
            const auto xs = adjoint(x);
            const double ss = hermitian_pairing(xs, xs).real();
            return 1.0 - zz + ss > 0.0 && 2.0 - zz > 0.0;
        }
        case CartanKind::VI: {
            const auto x = JordanElement<cdouble>::from_flat(z);
            const double zz = hermitian_pairing(x, x).real();
            const auto xs = adjoint(x);
            const double ss = hermitian_pairing(xs, xs).real();
            const cdouble c = bilinear_dot(xs, x);
            return 1.0 - zz + ss - std::norm(c / 3.0) > 0.0 && 3.0 - 2.0 * zz + ss > 0.0 &&
                   3.0 - zz > 0.0;
        }
    }
    return false;
}

inline bool membership(const SymmetricDomainSpec& spec, std::span<const cdouble> z) {
    int off = 0;
    for (const auto& f : spec.factors) {
        const int d = f.dim();
        if (!membership(f, z.subspan(off, d))) return false;
        off += d;
    }
    return true;
}

/// (z0, z) lies in the Hartogs domain: base membership and |z0|^2 < N^mu.
inline bool hartogs_membership(const HartogsSpec& spec, cdouble z0, std::span<const cdouble> z) {
    if (!membership(spec.base, z)) return false;
    const double N = generic_norm(spec.base, z, NormMode::diagonal);
    return std::norm(z0) < std::pow(N, spec.mu);
}

// -- JSON (config fragment {"factors":[{"kind":"I","n":2,"m":3},...],"mu":1.5}) --

inline void to_json(nlohmann::json& j, const CartanDomainSpec& s) {
    j = nlohmann::json{{"kind", to_string(s.kind)}};
    switch (s.kind) {
        case CartanKind::I:
            j["n"] = s.n;
            j["m"] = s.m;
            break;
        case CartanKind::II:
        case CartanKind::III:
        case CartanKind::IV:
            j["n"] = s.n;
            break;
        default:
            break;
    }
    if (s.relax_bounds) j["relaxed"] = true;
}

inline void from_json(const nlohmann::json& j, CartanDomainSpec& s) {
    const std::string k = j.at("kind").get<std::string>();
    if (k == "I") s.kind = CartanKind::I;
    else if (k == "II") s.kind = CartanKind::II;
    else if (k == "III") s.kind = CartanKind::III;
    else if (k == "IV") s.kind = CartanKind::IV;
    else if (k == "V") s.kind = CartanKind::V;
    else if (k == "VI") s.kind = CartanKind::VI;
    else throw ConfigError("unknown Cartan kind '" + k + "'");
    s.n = j.value("n", 1);
    s.m = j.value("m", s.n);
    s.relax_bounds = j.value("relaxed", false);
    s.validate();
}

inline void to_json(nlohmann::json& j, const SymmetricDomainSpec& s) {
    j = nlohmann::json{{"factors", s.factors}};
}

inline void from_json(const nlohmann::json& j, SymmetricDomainSpec& s) {
    s.factors = j.at("factors").get<std::vector<CartanDomainSpec>>();
    s.validate();
}

inline void to_json(nlohmann::json& j, const HartogsSpec& s) {
    to_json(j, s.base);
    j["mu"] = s.mu;
}

inline void from_json(const nlohmann::json& j, HartogsSpec& s) {
    from_json(j, s.base);
    s.mu = j.value("mu", 1.0);
    s.validate();
}

} // namespace hartogs
