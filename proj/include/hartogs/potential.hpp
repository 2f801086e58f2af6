#pragma once

#include <complex>
#include <span>
#include <utility>
#include <vector>

#include "domains.hpp"
#include "errors.hpp"
#include "jet.hpp"
#include "linalg.hpp"

// Kaehler potentials of the Hartogs metrics and their duals, and the exact
// metric tensors obtained from them.
//
// Every potential is the composition of the generic norm with
//   F(x, y) = -log(x^mu - y)         (Hartogs)
//   F(x, y) = +log(x^mu + y)         (dual)
// evaluated at x = N, y = |z0|^2, normalized so the value at the origin is 0.
//
// Derivatives: the potential is evaluated on jets whose active variables are
// the real coordinates (x_j, y_j) of the differentiated complex slots, with
// the conjugate slot u_j seeded as x_j - i y_j. Tensor entries are then
// assembled from the real mixed partials by the Wirtinger rule
//   d/dz = (d/dx - i d/dy) / 2,   d/dzbar = (d/dx + i d/dy) / 2.
// No finite differences anywhere on this path.

namespace hartogs {

enum class PotentialFamily { hartogs, dual_hartogs, base, dual_base };

struct PotentialKind {
    PotentialFamily family = PotentialFamily::hartogs;
    SymmetricDomainSpec domain;
    double mu = 1.0;

    bool fibered() const {
        return family == PotentialFamily::hartogs || family == PotentialFamily::dual_hartogs;
    }
    bool dual() const {
        return family == PotentialFamily::dual_hartogs || family == PotentialFamily::dual_base;
    }
    /// Number of complex coordinates a point carries (fiber slot 0 first).
    int ambient_dim() const { return domain.dim() + (fibered() ? 1 : 0); }

    static PotentialKind hartogs(HartogsSpec h) {
        h.validate();
        return {PotentialFamily::hartogs, std::move(h.base), h.mu};
    }
    static PotentialKind dual_hartogs(HartogsSpec h) {
        h.validate();
        return {PotentialFamily::dual_hartogs, std::move(h.base), h.mu};
    }
    static PotentialKind base_domain(SymmetricDomainSpec s) {
        s.validate();
        return {PotentialFamily::base, std::move(s), 1.0};
    }
    static PotentialKind dual_base_domain(SymmetricDomainSpec s) {
        s.validate();
        return {PotentialFamily::dual_base, std::move(s), 1.0};
    }
    static PotentialKind polydisk(int r, double mu) {
        return hartogs({SymmetricDomainSpec::polydisk(r), mu});
    }
    static PotentialKind dual_polydisk(int r, double mu) {
        return dual_hartogs({SymmetricDomainSpec::polydisk(r), mu});
    }
};

/// Polarized potential; u carries the conjugated coordinates. Throws
/// EvaluationOutsideDomain when the log argument degenerates (value within
/// 1e-12 of its zero set).
template <class S>
S potential_polarized(const PotentialKind& kind, std::span<const S> z, std::span<const S> u) {
    const auto guard = [](const S& arg) {
        if (!(value_of(arg).real() > 1e-12))
            throw EvaluationOutsideDomain("potential log argument is nonpositive");
    };
    const bool fib = kind.fibered();
    std::span<const S> zb = fib ? z.subspan(1) : z;
    std::span<const S> ub = fib ? u.subspan(1) : u;

    std::vector<S> uneg;
    if (kind.dual()) {
        uneg.reserve(ub.size());
        for (const auto& x : ub) uneg.push_back(-x);
        ub = std::span<const S>(uneg);
    }
    S N = generic_norm_polarized(kind.domain, zb, ub);

    switch (kind.family) {
        case PotentialFamily::base: {
            guard(N);
            return -log(N);
        }
        case PotentialFamily::dual_base: {
            guard(N);
            return log(N);
        }
        case PotentialFamily::hartogs: {
            S arg = pow_real(N, kind.mu) - z[0] * u[0];
            guard(arg);
            return -log(arg);
        }
        case PotentialFamily::dual_hartogs: {
            S arg = pow_real(N, kind.mu) + z[0] * u[0];
            guard(arg);
            return log(arg);
        }
    }
    throw InvalidSpec("unknown potential family");
}

/// Potential value at a point (diastasis normalized at the origin).
inline double potential(const PotentialKind& kind, std::span<const cdouble> point) {
    if (static_cast<int>(point.size()) != kind.ambient_dim())
        throw RankMismatch("point dimension does not match the potential kind");
    std::vector<cdouble> u(point.size());
    for (std::size_t i = 0; i < point.size(); ++i) u[i] = std::conj(point[i]);
    return potential_polarized(kind, point, std::span<const cdouble>(u)).real();
}

/// Potential as a jet over the real coordinates of the active complex slots.
/// Active slot p occupies real variables (2p, 2p+1) of the jet space.
inline Jet potential_jet(const PotentialKind& kind, std::span<const cdouble> point,
                         std::span<const int> active_slots, int order) {
    const int m = kind.ambient_dim();
    const auto space = JetSpace::get(2 * static_cast<int>(active_slots.size()), order);
    std::vector<Jet> z, u;
    z.reserve(m);
    u.reserve(m);
    for (int s = 0; s < m; ++s) {
        int pos = -1;
        for (std::size_t p = 0; p < active_slots.size(); ++p)
            if (active_slots[p] == s) pos = static_cast<int>(p);
        Jet zs = Jet::constant(space, point[s]);
        Jet us = Jet::constant(space, std::conj(point[s]));
        if (pos >= 0) {
            zs.set_linear(2 * pos, 1.0);
            zs.set_linear(2 * pos + 1, cdouble(0.0, 1.0));
            us.set_linear(2 * pos, 1.0);
            us.set_linear(2 * pos + 1, cdouble(0.0, -1.0));
        }
        z.push_back(std::move(zs));
        u.push_back(std::move(us));
    }
    return potential_polarized(kind, std::span<const Jet>(z), std::span<const Jet>(u));
}

/// Mixed Wirtinger derivative read off a potential jet. `dirs` lists
/// (position in the active-slot list, conjugated?) factors.
inline cdouble wirtinger_from_jet(const Jet& phi,
                                  std::span<const std::pair<int, bool>> dirs) {
    const int n = static_cast<int>(dirs.size());
    cdouble total = 0.0;
    for (int mask = 0; mask < (1 << n); ++mask) {
        cdouble coeff = 1.0;
        JetSpace::Exponents e{};
        for (int i = 0; i < n; ++i) {
            const auto [pos, conjugated] = dirs[i];
            if (mask & (1 << i)) {
                ++e[2 * pos + 1];
                coeff *= conjugated ? cdouble(0.0, 0.5) : cdouble(0.0, -0.5);
            } else {
                ++e[2 * pos];
                coeff *= 0.5;
            }
        }
        total += coeff * phi.derivative(e);
    }
    return total;
}

struct HermitianMetric {
    CMat g;

    int dim() const { return g.rows; }
    bool positive_definite(double tol = 1e-12) const {
        return hermitian_positive_definite(g, tol);
    }
};

namespace detail {

inline std::vector<int> unique_slots(std::initializer_list<int> slots) {
    std::vector<int> v;
    for (int s : slots) {
        bool seen = false;
        for (int t : v) seen = seen || t == s;
        if (!seen) v.push_back(s);
    }
    return v;
}

inline int slot_pos(const std::vector<int>& active, int slot) {
    for (std::size_t i = 0; i < active.size(); ++i)
        if (active[i] == slot) return static_cast<int>(i);
    return -1;
}

} // namespace detail

/// g_{j kbar} = d^2 phi / dz_j dzbar_k, all entries, conjugate-symmetric by
/// construction.
inline HermitianMetric metric_at(const PotentialKind& kind, std::span<const cdouble> point) {
    const int m = kind.ambient_dim();
    HermitianMetric h;
    h.g = CMat(m, m);
    for (int j = 0; j < m; ++j)
        for (int k = j; k < m; ++k) {
            const auto active = detail::unique_slots({j, k});
            const Jet phi = potential_jet(kind, point, active, 2);
            const std::pair<int, bool> dirs[2] = {{detail::slot_pos(active, j), false},
                                                  {detail::slot_pos(active, k), true}};
            const cdouble v = wirtinger_from_jet(phi, dirs);
            // the diagonal is real; drop the roundoff dust so conjugate
            // symmetry holds exactly as assembled
            h.g(j, k) = j == k ? cdouble(v.real()) : v;
            h.g(k, j) = j == k ? cdouble(v.real()) : std::conj(v);
        }
    return h;
}

/// Metric restricted to a subset of slots (entries g_{j kbar} for j, k in
/// `slots`), in the order given. Saves the full-matrix cost when a pullback
/// only touches a few ambient coordinates.
inline CMat metric_submatrix(const PotentialKind& kind, std::span<const cdouble> point,
                             std::span<const int> slots) {
    const int n = static_cast<int>(slots.size());
    CMat g(n, n);
    for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b) {
            const auto active = detail::unique_slots({slots[a], slots[b]});
            const Jet phi = potential_jet(kind, point, active, 2);
            const std::pair<int, bool> dirs[2] = {{detail::slot_pos(active, slots[a]), false},
                                                  {detail::slot_pos(active, slots[b]), true}};
            const cdouble v = wirtinger_from_jet(phi, dirs);
            g(a, b) = a == b ? cdouble(v.real()) : v;
            g(b, a) = a == b ? cdouble(v.real()) : std::conj(v);
        }
    return g;
}

/// Single third derivative d g_{j kbar} / dz_l.
inline cdouble metric_derivative_entry(const PotentialKind& kind, std::span<const cdouble> point,
                                       int j, int k, int l) {
    const auto active = detail::unique_slots({j, k, l});
    const Jet phi = potential_jet(kind, point, active, 3);
    const std::pair<int, bool> dirs[3] = {{detail::slot_pos(active, j), false},
                                          {detail::slot_pos(active, k), true},
                                          {detail::slot_pos(active, l), false}};
    return wirtinger_from_jet(phi, dirs);
}

/// Full matrix (d g / dz_l)_{j kbar} for a fixed direction l.
inline CMat metric_derivative_at(const PotentialKind& kind, std::span<const cdouble> point, int l) {
    const int m = kind.ambient_dim();
    CMat D(m, m);
    for (int j = 0; j < m; ++j)
        for (int k = 0; k < m; ++k) D(j, k) = metric_derivative_entry(kind, point, j, k, l);
    return D;
}

/// Single fourth derivative d^2 g_{i jbar} / dz_k dzbar_l.
inline cdouble metric_second_derivative_entry(const PotentialKind& kind,
                                              std::span<const cdouble> point, int i, int j, int k,
                                              int l) {
    const auto active = detail::unique_slots({i, j, k, l});
    const Jet phi = potential_jet(kind, point, active, 4);
    const std::pair<int, bool> dirs[4] = {{detail::slot_pos(active, i), false},
                                          {detail::slot_pos(active, j), true},
                                          {detail::slot_pos(active, k), false},
                                          {detail::slot_pos(active, l), true}};
    return wirtinger_from_jet(phi, dirs);
}

/// Full matrix (d^2 g / dz_k dzbar_l)_{i jbar} for fixed (k, l).
inline CMat metric_second_derivative_at(const PotentialKind& kind, std::span<const cdouble> point,
                                        int k, int l) {
    const int m = kind.ambient_dim();
    CMat D(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            D(i, j) = metric_second_derivative_entry(kind, point, i, j, k, l);
    return D;
}

// Real-coordinate view of a point: [x0, y0, x1, y1, ...].
inline std::vector<double> to_real_coords(std::span<const cdouble> point) {
    std::vector<double> r(2 * point.size());
    for (std::size_t i = 0; i < point.size(); ++i) {
        r[2 * i] = point[i].real();
        r[2 * i + 1] = point[i].imag();
    }
    return r;
}

inline std::vector<cdouble> from_real_coords(std::span<const double> r) {
    std::vector<cdouble> p(r.size() / 2);
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = cdouble(r[2 * i], r[2 * i + 1]);
    return p;
}

} // namespace hartogs
