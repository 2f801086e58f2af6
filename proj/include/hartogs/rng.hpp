#pragma once

#include <complex>
#include <cstdint>
#include <string_view>
#include <vector>

// Reproducible random sampling. The generator is xoshiro256** seeded through
// splitmix64; doubles are built from the top 53 bits. Everything here is
// fully specified arithmetic on uint64, so streams are identical across
// platforms and build modes. Per-check streams are derived from the master
// seed by hashing the check name (FNV-1a) into the splitmix seeding chain.

namespace hartogs {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& w : s_) w = splitmix64(sm);
    }

    /// Independent stream for a named sub-task of a master seed.
    static Rng stream(std::uint64_t master_seed, std::string_view name) {
        return Rng(master_seed ^ fnv1a64(name));
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform on the complex disk of given radius (rejection-free polar draw
    /// with area-correct radial density).
    std::complex<double> disk(double radius = 1.0) {
        const double r = radius * std::sqrt(uniform());
        const double th = 2.0 * 3.14159265358979323846 * uniform();
        return {r * std::cos(th), r * std::sin(th)};
    }

    std::vector<std::complex<double>> disk_vector(int n, double radius = 1.0) {
        std::vector<std::complex<double>> v(n);
        for (auto& z : v) z = disk(radius);
        return v;
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    std::uint64_t s_[4];
};

} // namespace hartogs
