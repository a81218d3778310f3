// rng.hpp - counter-based deterministic randomness
//
// Everything random in this library is a pure function of a 64-bit seed and a
// counter (or a tuple of integers), so identical inputs reproduce identical
// results and trials can be generated independently in any order.
#ifndef TUZA_RNG_HPP
#define TUZA_RNG_HPP

#include <cstdint>
#include <cmath>
#include <stdexcept>

namespace tuza {

// splitmix64 finalizer; good avalanche, cheap.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t hash_combine(std::uint64_t a, std::uint64_t b) {
    return mix64(a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2)));
}

// Sub-seed for trial i under a master seed.
inline std::uint64_t sub_seed(std::uint64_t master, std::uint64_t index) {
    return mix64(hash_combine(master, index));
}

// Uniform double in [0, 1) from 53 high bits.
inline double to_unit(std::uint64_t h) {
    return static_cast<double>(h >> 11) * 0x1.0p-53;
}

// Counter-based bit: uniform in [0,1) as a pure function of (seed, counter).
inline double unit_at(std::uint64_t seed, std::uint64_t counter) {
    return to_unit(mix64(hash_combine(seed, counter)));
}

// Small sequential generator for stream-style sampling (Monte Carlo trials).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(mix64(seed ^ 0x6a09e667f3bcc908ULL)) {}

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix64(state_);
    }
    double next_unit() { return to_unit(next_u64()); }

    // Uniform integer in [0, n).
    std::uint64_t next_below(std::uint64_t n) {
        return static_cast<std::uint64_t>(next_unit() * static_cast<double>(n)) % n;
    }

    // Poisson via inversion; exact for the O(1) means used here.
    int next_poisson(double mean) {
        if (mean < 0) throw std::invalid_argument("poisson mean < 0");
        if (mean == 0) return 0;
        if (mean > 60) {
            // Normal approximation fallback; means in this project are O(1),
            // so this branch is effectively unused.
            double g = next_gaussian();
            double v = mean + std::sqrt(mean) * g;
            return v < 0 ? 0 : static_cast<int>(std::lround(v));
        }
        double u = next_unit();
        double p = std::exp(-mean);
        double cum = p;
        int k = 0;
        while (u > cum && k < 10000) {
            ++k;
            p *= mean / k;
            cum += p;
        }
        return k;
    }

    double next_gaussian() {
        double u1 = next_unit(), u2 = next_unit();
        while (u1 <= 0) u1 = next_unit();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
    }

private:
    std::uint64_t state_;
};

} // namespace tuza

#endif
