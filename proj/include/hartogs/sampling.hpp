#pragma once

#include <cmath>
#include <vector>

#include "domains.hpp"
#include "embeddings.hpp"
#include "rng.hpp"

// Seeded interior-point samplers. Base points are drawn by rejection:
// coordinates uniform on disks whose radius is scaled by 1/sqrt(dim) and a
// per-sample magnitude, accepted only when membership holds with a norm
// margin. This keeps points comfortably interior so identity tolerances stay
// meaningful.

namespace hartogs {

inline std::vector<cdouble> sample_base_point(const SymmetricDomainSpec& spec, Rng& rng,
                                              double norm_margin = 0.05) {
    const int d = spec.dim();
    const double scale = 1.0 / std::sqrt(static_cast<double>(d));
    for (int attempt = 0; attempt < 1000; ++attempt) {
        const double mag = rng.uniform(0.15, 0.85);
        std::vector<cdouble> z(d);
        for (auto& c : z) c = rng.disk(mag * scale);
        if (!membership(spec, z)) continue;
        if (generic_norm(spec, z, NormMode::diagonal) > norm_margin) return z;
    }
    throw std::runtime_error("interior sampling failed to converge");
}

/// (z0, z) strictly inside the Hartogs domain: |z0|^2 <= 0.81 N^mu.
inline std::vector<cdouble> sample_hartogs_point(const HartogsSpec& spec, Rng& rng) {
    auto z = sample_base_point(spec.base, rng);
    const double N = generic_norm(spec.base, z, NormMode::diagonal);
    const cdouble z0 = rng.disk(0.9 * std::pow(N, spec.mu / 2.0));
    std::vector<cdouble> p;
    p.reserve(z.size() + 1);
    p.push_back(z0);
    p.insert(p.end(), z.begin(), z.end());
    return p;
}

/// Polydisk point with per-coordinate radius bound.
inline std::vector<cdouble> sample_polydisk_point(int r, Rng& rng, double rmax = 0.8) {
    return rng.disk_vector(r, rmax);
}

/// Unconstrained point of C^d for the dual (global) potentials.
inline std::vector<cdouble> sample_dual_point(int d, Rng& rng, double radius = 1.3) {
    return rng.disk_vector(d, radius);
}

/// Point of C x Pi inside M_{Omega, mu}: a Hartogs-polydisk point pushed
/// through the standard embedding.
inline std::vector<cdouble> sample_pi_point(const PolydiskEmbedding& emb, double mu, Rng& rng,
                                            double rmax = 0.8) {
    const auto w = sample_polydisk_point(emb.r, rng, rmax);
    double N = 1.0;
    for (const auto& c : w) N *= 1.0 - std::norm(c);
    const cdouble z0 = rng.disk(0.9 * std::pow(N, mu / 2.0));
    std::vector<cdouble> p;
    p.reserve(emb.A.rows + 1);
    p.push_back(z0);
    const auto img = emb.embed_base(w);
    p.insert(p.end(), img.begin(), img.end());
    return p;
}

/// Point of C x Pi* for the dual metric (fiber and base unconstrained).
inline std::vector<cdouble> sample_dual_pi_point(const PolydiskEmbedding& emb, Rng& rng,
                                                 double radius = 1.2) {
    const auto w = sample_dual_point(emb.r, rng, radius);
    std::vector<cdouble> p;
    p.reserve(emb.A.rows + 1);
    p.push_back(rng.disk(radius));
    const auto img = emb.embed_base(w);
    p.insert(p.end(), img.begin(), img.end());
    return p;
}

} // namespace hartogs
