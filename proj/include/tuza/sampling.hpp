// sampling.hpp - H_r(n,p): each r-set is an edge independently with
// probability p. Deterministic under (n, r, p, seed).
#ifndef TUZA_SAMPLING_HPP
#define TUZA_SAMPLING_HPP

#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "hypergraph.hpp"
#include "rng.hpp"

namespace tuza {

inline double binom(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    double v = 1.0;
    for (int i = 1; i <= k; ++i) v = v * (n - k + i) / i;
    return v;
}

inline std::uint64_t binom_u64(int n, int k) {
    if (k < 0 || k > n) return 0;
    // exact for the sizes used here (fits in 64 bits)
    unsigned __int128 v = 1;
    for (int i = 1; i <= k; ++i) {
        v = v * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    }
    return static_cast<std::uint64_t>(v);
}

// Colex rank of a canonical r-set: rank = sum_i C(e[i], i+1).
inline std::uint64_t colex_rank(const VSet& e) {
    std::uint64_t rank = 0;
    for (std::size_t i = 0; i < e.size(); ++i)
        rank += binom_u64(e[i], static_cast<int>(i) + 1);
    return rank;
}

// Inverse of colex_rank for r-sets over 0..n-1.
inline VSet colex_unrank(std::uint64_t rank, int n, int r) {
    VSet e(r);
    int hi = n;
    for (int i = r; i >= 1; --i) {
        int v = i - 1;
        // largest v with C(v, i) <= rank
        for (int cand = hi - 1; cand >= i - 1; --cand) {
            if (binom_u64(cand, i) <= rank) {
                v = cand;
                break;
            }
        }
        e[i - 1] = v;
        rank -= binom_u64(v, i);
        hi = v;
    }
    return e;
}

// d = (n - (r-1)) p is the expected co-degree.
inline double p_from_d(double d, int n, int r) { return d / (n - (r - 1)); }
inline double d_from_p(double p, int n, int r) { return p * (n - (r - 1)); }

namespace detail {

// Direct path: the inclusion bit of every edge is a pure function of
// (seed, colex rank).
inline RGraph sample_direct(int n, int r, double p, std::uint64_t seed) {
    RGraph g;
    g.n = n;
    g.r = r;
    g.p = p;
    g.seed = seed;
    if (p <= 0) return g;
    VSet e(r);
    for (int i = 0; i < r; ++i) e[i] = i;
    std::uint64_t rank = 0;
    while (true) {
        if (p >= 1.0 || unit_at(seed, rank) < p) g.edges.push_back(e);
        ++rank;
        int i = r - 1;
        while (i >= 0 && e[i] == n - r + i) --i;
        if (i < 0) break;
        ++e[i];
        for (int j = i + 1; j < r; ++j) e[j] = e[j - 1] + 1;
    }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

// Sparse path: geometric skipping over colex ranks; visits only included
// edges. Distribution-identical to the direct path (tested), though a given
// seed produces a different draw than the direct path would.
inline RGraph sample_sparse(int n, int r, double p, std::uint64_t seed) {
    RGraph g;
    g.n = n;
    g.r = r;
    g.p = p;
    g.seed = seed;
    const std::uint64_t total = binom_u64(n, r);
    // Pascal table for fast unranking.
    std::vector<std::vector<std::uint64_t>> C(n + 1, std::vector<std::uint64_t>(r + 1, 0));
    for (int i = 0; i <= n; ++i) {
        C[i][0] = 1;
        for (int k = 1; k <= r && k <= i; ++k)
            C[i][k] = (i == k) ? 1 : C[i - 1][k - 1] + C[i - 1][k];
    }
    auto unrank = [&](std::uint64_t rank) {
        VSet e(r);
        int hi = n;
        for (int i = r; i >= 1; --i) {
            int v = hi - 1;
            while (v >= i && C[v][i] > rank) --v;
            e[i - 1] = v;
            rank -= C[v][i];
            hi = v;
        }
        return e;
    };
    Rng rng(hash_combine(seed, 0x736b6970ULL));  // tag the skip stream
    const double log1mp = std::log1p(-p);
    double pos = -1.0;
    while (true) {
        double u = rng.next_unit();
        while (u <= 0) u = rng.next_unit();
        pos += 1.0 + std::floor(std::log(u) / log1mp);
        if (pos >= static_cast<double>(total)) break;
        g.edges.push_back(unrank(static_cast<std::uint64_t>(pos)));
    }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

} // namespace detail

// Path choice is a function of (n, r, p) only, so determinism under the seed
// holds regardless of regime.
inline RGraph sample_hypergraph(int n, int r, double p, std::uint64_t seed) {
    if (r < 2 || r > n) throw std::invalid_argument("sample_hypergraph: need 2 <= r <= n");
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("sample_hypergraph: p outside [0,1]");
    const double total = binom(n, r);
    if (p > 0.0 && p < 0.02 && total > 2e6)
        return detail::sample_sparse(n, r, p, seed);
    return detail::sample_direct(n, r, p, seed);
}

} // namespace tuza

#endif
