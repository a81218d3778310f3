// covers.hpp - explicit (r-1)-cover constructions: the r=3,4,5 partition
// covers (basic and improved), the modular-window covers C_j, their parity
// refinement C'_j, and the constant-degree improvement D_j.
#ifndef TUZA_COVERS_HPP
#define TUZA_COVERS_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <stdexcept>

#include "hypergraph.hpp"
#include "matching.hpp"
#include "rng.hpp"

namespace tuza {

// Keyed pseudo-random bit on block tuples (x_0, ..., x_{l-1}); stands in for
// a stored uniformly random table, which would be too large to materialize.
struct ParityFunction {
    std::uint64_t seed = 0;

    int bit(const std::vector<Vertex>& tuple) const {
        std::uint64_t h = hash_combine(seed, 0x70617269ULL);
        for (Vertex v : tuple) h = hash_combine(h, static_cast<std::uint64_t>(v) + 1);
        return static_cast<int>(mix64(h) & 1u);
    }
    int bit(Vertex x, Vertex y) const { return bit(std::vector<Vertex>{x, y}); }
};

struct BlockStats {
    int empty_blocks = 0;   // d(A)
    int weighted_sum = 0;   // w(A) = sum_i i * |A ∩ V_i|
};

inline BlockStats block_stats(const VSet& a, const VertexPartition& p) {
    std::vector<int> cnt(p.l, 0);
    for (Vertex v : a) ++cnt[p.block(v)];
    BlockStats s;
    for (int i = 0; i < p.l; ++i) {
        if (cnt[i] == 0) ++s.empty_blocks;
        s.weighted_sum += i * cnt[i];
    }
    return s;
}

namespace detail {

inline std::vector<int> block_counts(const VSet& a, const VertexPartition& p) {
    std::vector<int> cnt(p.l, 0);
    for (Vertex v : a) ++cnt[p.block(v)];
    return cnt;
}

// all vertices of a in one block; returns that block or -1
inline int mono_block(const VSet& a, const VertexPartition& p) {
    int b = p.block(a[0]);
    for (Vertex v : a)
        if (p.block(v) != b) return -1;
    return b;
}

inline CoverFamily finish(VSetSet&& members, int m) {
    CoverFamily c;
    c.m = m;
    c.sets.assign(members.begin(), members.end());
    std::sort(c.sets.begin(), c.sets.end());
    return c;
}

} // namespace detail

// ---- r = 3 ---------------------------------------------------------------

// basic: shadow pairs with both endpoints in one block. improved: drop the
// pairs all of whose edges stay inside their block, then repair with the
// pairs witnessing an edge whose three pairs were all dropped.
inline CoverFamily cover_r3(const RGraph& g, const VertexPartition& p, bool improved) {
    if (g.r != 3) throw std::invalid_argument("cover_r3: r != 3");
    if (p.l != 2) throw std::invalid_argument("cover_r3: needs l = 2");
    auto smap = shadow_map(g);

    VSetSet c0;  // type-20 shadow pairs
    for (const auto& [sigma, nb] : smap)
        if (detail::mono_block(sigma, p) >= 0) c0.insert(sigma);
    if (!improved) return detail::finish(std::move(c0), 2);

    VSetSet c1;
    for (const auto& sigma : c0) {
        int b = p.block(sigma[0]);
        bool all_inside = true;
        for (Vertex v : smap.at(sigma))
            if (p.block(v) != b) { all_inside = false; break; }
        if (all_inside) c1.insert(sigma);
    }
    VSetSet c2;
    for (const auto& sigma : c1) {
        for (Vertex v : smap.at(sigma)) {
            VSet e = sigma;
            e.push_back(v);
            std::sort(e.begin(), e.end());
            bool all_in_c1 = true;
            for (auto& f : facets(e))
                if (!c1.count(f)) { all_in_c1 = false; break; }
            if (all_in_c1) { c2.insert(sigma); break; }
        }
    }
    VSetSet out;
    for (const auto& s : c0)
        if (!c1.count(s)) out.insert(s);
    for (const auto& s : c2) out.insert(s);
    return detail::finish(std::move(out), 2);
}

// ---- r = 4 ---------------------------------------------------------------

inline bool r4_cyclic_type(const std::vector<int>& cnt) {
    // ordered type in {210, 021, 102}
    return (cnt[0] == 2 && cnt[1] == 1 && cnt[2] == 0) ||
           (cnt[0] == 0 && cnt[1] == 2 && cnt[2] == 1) ||
           (cnt[0] == 1 && cnt[1] == 0 && cnt[2] == 2);
}

inline CoverFamily cover_r4(const RGraph& g, const VertexPartition& p, bool improved) {
    if (g.r != 4) throw std::invalid_argument("cover_r4: r != 4");
    if (p.l != 3) throw std::invalid_argument("cover_r4: needs l = 3");
    auto smap = shadow_map(g);

    VSetSet c01, c02;
    for (const auto& [sigma, nb] : smap) {
        auto cnt = detail::block_counts(sigma, p);
        if (detail::mono_block(sigma, p) >= 0) c01.insert(sigma);
        else if (r4_cyclic_type(cnt)) c02.insert(sigma);
    }
    if (!improved) {
        VSetSet out = c01;
        for (const auto& s : c02) out.insert(s);
        return detail::finish(std::move(out), 3);
    }

    VSetSet c11;
    for (const auto& sigma : c01) {
        int b = p.block(sigma[0]);
        bool all_inside = true;
        for (Vertex v : smap.at(sigma))
            if (p.block(v) != b) { all_inside = false; break; }
        if (all_inside) c11.insert(sigma);
    }
    VSetSet c21;
    for (const auto& sigma : c11) {
        for (Vertex v : smap.at(sigma)) {
            VSet e = sigma;
            e.push_back(v);
            std::sort(e.begin(), e.end());
            bool all_in = true;
            for (auto& f : facets(e))
                if (!c11.count(f)) { all_in = false; break; }
            if (all_in) { c21.insert(sigma); break; }
        }
    }
    VSetSet c12;
    for (const auto& sigma : c02) {
        bool all_310 = true;
        for (Vertex v : smap.at(sigma)) {
            VSet e = sigma;
            e.push_back(v);
            auto cnt = detail::block_counts(e, p);
            std::sort(cnt.begin(), cnt.end(), std::greater<int>());
            if (!(cnt[0] == 3 && cnt[1] == 1 && cnt[2] == 0)) { all_310 = false; break; }
        }
        if (all_310) c12.insert(sigma);
    }
    VSetSet out;
    for (const auto& s : c01)
        if (!c11.count(s)) out.insert(s);
    for (const auto& s : c21) out.insert(s);
    for (const auto& s : c02)
        if (!c12.count(s)) out.insert(s);
    return detail::finish(std::move(out), 3);
}

// ---- r = 5 ---------------------------------------------------------------

namespace detail {

// parity of f(sigma ∩ V0, sigma ∩ V1) for a type-22 set
inline int r5_parity(const VSet& sigma, const VertexPartition& p, const ParityFunction& f) {
    int s = 0;
    for (Vertex x : sigma)
        if (p.block(x) == 0)
            for (Vertex y : sigma)
                if (p.block(y) == 1) s ^= f.bit(x, y);
    return s;
}

inline bool r5_is_type22(const VSet& sigma, const VertexPartition& p) {
    int c0 = 0;
    for (Vertex v : sigma)
        if (p.block(v) == 0) ++c0;
    return c0 == 2;  // |sigma| = 4
}

// e = sigma ∪ {v} with sigma even type-22; compatibility per block of v
inline bool r5_compatible(const VSet& sigma, Vertex v, const VertexPartition& p,
                          const ParityFunction& f) {
    int bv = p.block(v);
    int sv = 0, sx = 0;
    Vertex x = -1;
    for (Vertex u : sigma)
        if (p.block(u) == bv) { x = u; break; }  // any same-side element of sigma
    for (Vertex u : sigma) {
        if (p.block(u) == bv) continue;
        sv ^= (bv == 0) ? f.bit(v, u) : f.bit(u, v);
        sx ^= (bv == 0) ? f.bit(x, u) : f.bit(u, x);
    }
    return sv == sx;
}

} // namespace detail

inline CoverFamily cover_r5(const RGraph& g, const VertexPartition& p,
                            const ParityFunction& f, bool improved) {
    if (g.r != 5) throw std::invalid_argument("cover_r5: r != 5");
    if (p.l != 2) throw std::invalid_argument("cover_r5: needs l = 2");
    auto smap = shadow_map(g);

    VSetSet c01, c02;
    for (const auto& [sigma, nb] : smap) {
        if (detail::mono_block(sigma, p) >= 0) c01.insert(sigma);
        else if (detail::r5_is_type22(sigma, p) && detail::r5_parity(sigma, p, f) == 0)
            c02.insert(sigma);
    }
    if (!improved) {
        VSetSet out = c01;
        for (const auto& s : c02) out.insert(s);
        return detail::finish(std::move(out), 4);
    }

    VSetSet c11;
    for (const auto& sigma : c01) {
        int b = p.block(sigma[0]);
        bool all_inside = true;
        for (Vertex v : smap.at(sigma))
            if (p.block(v) != b) { all_inside = false; break; }
        if (all_inside) c11.insert(sigma);
    }
    VSetSet c21;
    for (const auto& sigma : c11) {
        for (Vertex v : smap.at(sigma)) {
            VSet e = sigma;
            e.push_back(v);
            std::sort(e.begin(), e.end());
            bool all_in = true;
            for (auto& f4 : facets(e))
                if (!c11.count(f4)) { all_in = false; break; }
            if (all_in) { c21.insert(sigma); break; }
        }
    }
    VSetSet c12;
    for (const auto& sigma : c02) {
        bool all_compat = true;
        for (Vertex v : smap.at(sigma))
            if (!detail::r5_compatible(sigma, v, p, f)) { all_compat = false; break; }
        if (all_compat) c12.insert(sigma);
    }
    VSetSet c22;
    for (const auto& sigma : c12) {
        for (Vertex v : smap.at(sigma)) {
            VSet e = sigma;
            e.push_back(v);
            std::sort(e.begin(), e.end());
            bool all_in = true;
            for (auto& f4 : facets(e)) {
                if (!detail::r5_is_type22(f4, p)) continue;
                if (!c12.count(f4)) { all_in = false; break; }
            }
            if (all_in) { c22.insert(sigma); break; }
        }
    }
    VSetSet out;
    for (const auto& s : c01)
        if (!c11.count(s)) out.insert(s);
    for (const auto& s : c21) out.insert(s);
    for (const auto& s : c02)
        if (!c12.count(s)) out.insert(s);
    for (const auto& s : c22) out.insert(s);
    return detail::finish(std::move(out), 4);
}

// ---- modular-window covers (general r, l) --------------------------------

// C_j = { sigma in D(G): (w(sigma)+j) mod l <= d(sigma) }
inline CoverFamily frankl_rodl_cover(const RGraph& g, const ShadowMap& smap,
                                     const VertexPartition& p, int j) {
    if (j < 0 || j >= p.l) throw std::invalid_argument("frankl_rodl_cover: j out of range");
    VSetSet out;
    for (const auto& [sigma, nb] : smap) {
        auto s = block_stats(sigma, p);
        if ((s.weighted_sum + j) % p.l <= s.empty_blocks) out.insert(sigma);
    }
    return detail::finish(std::move(out), g.r - 1);
}

inline CoverFamily frankl_rodl_cover(const RGraph& g, const VertexPartition& p, int j) {
    return frankl_rodl_cover(g, shadow_map(g), p, j);
}

namespace detail {

struct SidorenkoContext {
    const VertexPartition* p;
    const ParityFunction* f;
    const std::vector<int>* rank;  // vertex -> rank (nullptr: identity)

    int vrank(Vertex v) const { return rank && !rank->empty() ? (*rank)[v] : v; }

    // sigma must meet every block at least twice
    bool in_full_type(const VSet& sigma) const {
        auto cnt = block_counts(sigma, *p);
        for (int c : cnt)
            if (c < 2) return false;
        return true;
    }

    // the two maximal elements of sigma in each block, grouped by block
    std::vector<std::array<Vertex, 2>> pi(const VSet& sigma) const {
        std::vector<std::array<Vertex, 2>> top(p->l, {-1, -1});  // [0]=max, [1]=2nd
        for (Vertex v : sigma) {
            auto& t = top[p->block(v)];
            if (t[0] < 0 || vrank(v) > vrank(t[0])) {
                t[1] = t[0];
                t[0] = v;
            } else if (t[1] < 0 || vrank(v) > vrank(t[1])) {
                t[1] = v;
            }
        }
        return top;
    }

    // q over the 2^l tuples drawn from the pairs; parity only
    int q_parity(const std::vector<std::array<Vertex, 2>>& pairs) const {
        const int l = p->l;
        std::vector<Vertex> tuple(l);
        int s = 0;
        for (int mask = 0; mask < (1 << l); ++mask) {
            for (int i = 0; i < l; ++i) tuple[i] = pairs[i][(mask >> i) & 1];
            s ^= f->bit(tuple);
        }
        return s;
    }

    // parity of the partial sum with position i pinned to u
    int pinned_parity(const std::vector<std::array<Vertex, 2>>& pairs, int i, Vertex u) const {
        const int l = p->l;
        std::vector<Vertex> tuple(l);
        tuple[i] = u;
        int s = 0;
        for (int mask = 0; mask < (1 << (l - 1)); ++mask) {
            int bit = 0;
            for (int k = 0; k < l; ++k) {
                if (k == i) continue;
                tuple[k] = pairs[k][(mask >> bit) & 1];
                ++bit;
            }
            s ^= f->bit(tuple);
        }
        return s;
    }
};

} // namespace detail

// C'_j = { sigma in C_j : sigma not of full type, or q(pi(sigma)) even }
inline CoverFamily sidorenko_cover(const RGraph& g, const VertexPartition& p,
                                   const ParityFunction& f, int j,
                                   const std::vector<int>& vertex_rank = {}) {
    if (j < 0 || j >= p.l) throw std::invalid_argument("sidorenko_cover: j out of range");
    if (2 * p.l > g.r) throw std::invalid_argument("sidorenko_cover: needs l <= r/2");
    detail::SidorenkoContext cx{&p, &f, &vertex_rank};
    auto smap = shadow_map(g);
    VSetSet out;
    for (const auto& [sigma, nb] : smap) {
        auto s = block_stats(sigma, p);
        if ((s.weighted_sum + j) % p.l > s.empty_blocks) continue;  // not in C_j
        if (cx.in_full_type(sigma) && cx.q_parity(cx.pi(sigma)) != 0) continue;
        out.insert(sigma);
    }
    return detail::finish(std::move(out), g.r - 1);
}

// D_j: the window applied to E' ∪ C, where C = (C0 \ C1) ∪ C2 refines the
// even full-type sets by edge compatibility.
inline CoverFamily improved_sidorenko_cover(const RGraph& g, const VertexPartition& p,
                                            const ParityFunction& f, int j,
                                            const std::vector<int>& vertex_rank = {}) {
    if (j < 0 || j >= p.l) throw std::invalid_argument("improved_sidorenko_cover: j out of range");
    if (2 * p.l > g.r) throw std::invalid_argument("improved_sidorenko_cover: needs l <= r/2");
    detail::SidorenkoContext cx{&p, &f, &vertex_rank};
    auto smap = shadow_map(g);

    auto compatible = [&](const VSet& sigma, const std::vector<std::array<Vertex, 2>>& pairs,
                          Vertex v) {
        int i = p.block(v);
        int pv = cx.pinned_parity(pairs, i, v);
        return pv == cx.pinned_parity(pairs, i, pairs[i][0]);
    };

    // C0: even full-type shadow sets. C1: those all of whose edges are
    // compatible.
    VSetSet c0, c1;
    for (const auto& [sigma, nb] : smap) {
        if (!cx.in_full_type(sigma)) continue;
        auto pairs = cx.pi(sigma);
        if (cx.q_parity(pairs) != 0) continue;
        c0.insert(sigma);
        bool all_compat = true;
        for (Vertex v : nb)
            if (!compatible(sigma, pairs, v)) { all_compat = false; break; }
        if (all_compat) c1.insert(sigma);
    }
    // C2: sigma in C1 with an edge sigma ∪ {v}, v in V_i, whose two swaps
    // (sigma \ {x}) ∪ {v}, x in pi(sigma) ∩ V_i, both land in C1.
    VSetSet c2;
    for (const auto& sigma : c1) {
        auto pairs = cx.pi(sigma);
        for (Vertex v : smap.at(sigma)) {
            int i = p.block(v);
            bool both = true;
            for (int t = 0; t < 2 && both; ++t) {
                VSet swapped;
                swapped.reserve(sigma.size());
                for (Vertex u : sigma)
                    if (u != pairs[i][t]) swapped.push_back(u);
                swapped.push_back(v);
                std::sort(swapped.begin(), swapped.end());
                if (!c1.count(swapped)) both = false;
            }
            if (both) { c2.insert(sigma); break; }
        }
    }

    VSetSet out;
    for (const auto& [sigma, nb] : smap) {
        auto s = block_stats(sigma, p);
        if ((s.weighted_sum + j) % p.l > s.empty_blocks) continue;
        bool full = cx.in_full_type(sigma);
        bool in_c = c0.count(sigma) && (!c1.count(sigma) || c2.count(sigma));
        if (!full || in_c) out.insert(sigma);
    }
    return detail::finish(std::move(out), g.r - 1);
}

// The pigeonhole step: all l window families, smallest wins.
template <typename Builder>
std::pair<CoverFamily, int> best_over_j(int l, Builder build) {
    CoverFamily best;
    int best_j = 0;
    for (int j = 0; j < l; ++j) {
        CoverFamily c = build(j);
        if (j == 0 || c.sets.size() < best.sets.size()) {
            best = std::move(c);
            best_j = j;
        }
    }
    return {std::move(best), best_j};
}

} // namespace tuza

#endif
