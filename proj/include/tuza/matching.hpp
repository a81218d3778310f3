// matching.hpp - greedy (r-1)-matchings, exact tau/nu oracles for small
// instances, validators, and the heavy-vertex fractional matching value.
#ifndef TUZA_MATCHING_HPP
#define TUZA_MATCHING_HPP

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>

#include "hypergraph.hpp"
#include "rng.hpp"

namespace tuza {

struct WeightedGraph {
    RGraph graph;
    std::vector<double> weight;  // parallel to graph.edges
};

struct MatchingResult {
    std::vector<VSet> edges;
    int m = 0;
};

struct CoverFamily {
    std::vector<VSet> sets;
    int m = 0;
};

inline int intersection_size(const VSet& a, const VSet& b) {
    int cnt = 0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) ++i;
        else if (a[i] > b[j]) ++j;
        else { ++cnt; ++i; ++j; }
    }
    return cnt;
}

// Scan edges in increasing weight (ties broken by canonical edge order); an
// edge joins iff it shares at most r-2 vertices with everything selected.
inline MatchingResult greedy_matching(const WeightedGraph& w) {
    const RGraph& g = w.graph;
    if (w.weight.size() != g.edges.size())
        throw std::invalid_argument("greedy_matching: weight/edge size mismatch");
    std::vector<std::size_t> idx(g.edges.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        if (w.weight[a] != w.weight[b]) return w.weight[a] < w.weight[b];
        return g.edges[a] < g.edges[b];
    });
    MatchingResult res;
    res.m = g.r - 1;
    VSetSet used_facets;
    for (std::size_t i : idx) {
        const VSet& e = g.edges[i];
        bool ok = true;
        for (auto& f : facets(e))
            if (used_facets.count(f)) { ok = false; break; }
        if (!ok) continue;
        for (auto& f : facets(e)) used_facets.insert(std::move(f));
        res.edges.push_back(e);
    }
    std::sort(res.edges.begin(), res.edges.end());
    return res;
}

// Weight of edge i is a pure function of (seed, colex position i in the
// canonical edge ordering of G).
inline MatchingResult random_greedy_matching(const RGraph& g, std::uint64_t seed) {
    WeightedGraph w;
    w.graph = g;
    w.weight.resize(g.edges.size());
    for (std::size_t i = 0; i < g.edges.size(); ++i)
        w.weight[i] = unit_at(hash_combine(seed, 0x77ULL), i);
    return greedy_matching(w);
}

struct OracleLimits {
    std::size_t max_edges = 40;
};

struct TooLargeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

// conflict masks: edges i,j conflict iff |e_i ∩ e_j| >= m
inline std::vector<std::uint64_t> conflict_masks(const RGraph& g, int m) {
    const std::size_t k = g.edges.size();
    std::vector<std::uint64_t> conf(k, 0);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            if (intersection_size(g.edges[i], g.edges[j]) >= m) {
                conf[i] |= 1ULL << j;
                conf[j] |= 1ULL << i;
            }
    return conf;
}

inline int popcount(std::uint64_t x) { return __builtin_popcountll(x); }

inline void nu_search(const std::vector<std::uint64_t>& conf, std::uint64_t cand,
                      int chosen, int& best) {
    if (chosen + popcount(cand) <= best) return;
    if (!cand) {
        if (chosen > best) best = chosen;
        return;
    }
    // branch on the candidate with the most conflicts inside cand
    int pick = -1, worst = -1;
    for (std::uint64_t m = cand; m; m &= m - 1) {
        int i = __builtin_ctzll(m);
        int deg = popcount(conf[i] & cand);
        if (deg > worst) { worst = deg; pick = i; }
    }
    // include pick
    nu_search(conf, cand & ~conf[pick] & ~(1ULL << pick), chosen + 1, best);
    // exclude pick
    nu_search(conf, cand & ~(1ULL << pick), chosen, best);
}

} // namespace detail

// Exact maximum m-matching size via branch and bound over the conflict graph.
inline int exact_nu(const RGraph& g, int m, const OracleLimits& lim = {}) {
    const std::size_t k = g.edges.size();
    if (k > lim.max_edges || k > 63)
        throw TooLargeError("exact_nu: instance too large (" + std::to_string(k) + " edges)");
    if (k == 0) return 0;
    auto conf = detail::conflict_masks(g, m);
    int best = 0;
    std::uint64_t all = (k == 64) ? ~0ULL : ((1ULL << k) - 1);
    detail::nu_search(conf, all, 0, best);
    return best;
}

namespace detail {

struct TauContext {
    std::vector<std::uint64_t> covers;   // candidate -> bitmask of covered edges
    std::vector<std::vector<int>> edge_cands;  // edge -> candidate indices
    std::vector<std::uint64_t> conf;     // edge conflict masks (for the LB)
    std::uint64_t all_edges = 0;
    std::size_t k = 0;
    int best = 0;
};

// lower bound: greedy m-matching among uncovered edges; pairwise
// <m-intersecting edges can never share a cover element.
inline int tau_lower_bound(const TauContext& cx, std::uint64_t uncovered) {
    int lb = 0;
    std::uint64_t avail = uncovered;
    while (avail) {
        int i = __builtin_ctzll(avail);
        avail &= ~cx.conf[i];
        avail &= ~(1ULL << i);
        ++lb;
    }
    return lb;
}

inline void tau_search(TauContext& cx, std::uint64_t uncovered, int chosen) {
    if (!uncovered) {
        if (chosen < cx.best) cx.best = chosen;
        return;
    }
    if (chosen + tau_lower_bound(cx, uncovered) >= cx.best) return;
    // pick the uncovered edge with fewest candidates
    int pick = -1;
    std::size_t fewest = std::numeric_limits<std::size_t>::max();
    for (std::uint64_t m = uncovered; m; m &= m - 1) {
        int i = __builtin_ctzll(m);
        if (cx.edge_cands[i].size() < fewest) {
            fewest = cx.edge_cands[i].size();
            pick = i;
        }
    }
    for (int c : cx.edge_cands[pick])
        tau_search(cx, uncovered & ~cx.covers[c], chosen + 1);
}

} // namespace detail

// Exact minimum m-cover size. Candidate m-sets are the m-subsets of edges
// (any m-set covering an edge is one of these), deduplicated.
inline int exact_tau(const RGraph& g, int m, const OracleLimits& lim = {}) {
    const std::size_t k = g.edges.size();
    if (k > lim.max_edges || k > 63)
        throw TooLargeError("exact_tau: instance too large (" + std::to_string(k) + " edges)");
    if (k == 0) return 0;

    detail::TauContext cx;
    cx.k = k;
    cx.all_edges = (1ULL << k) - 1;
    cx.conf = detail::conflict_masks(g, m);

    std::unordered_map<VSet, int, VSetHash> cand_index;
    for (std::size_t i = 0; i < k; ++i) {
        for (auto& s : subsets_of_size(g.edges[i], m)) {
            auto [it, inserted] = cand_index.emplace(std::move(s), static_cast<int>(cx.covers.size()));
            if (inserted) cx.covers.push_back(0);
            cx.covers[it->second] |= 1ULL << i;
        }
    }
    cx.edge_cands.resize(k);
    for (const auto& [s, c] : cand_index) {
        std::uint64_t mask = cx.covers[c];
        for (std::uint64_t mm = mask; mm; mm &= mm - 1)
            cx.edge_cands[__builtin_ctzll(mm)].push_back(c);
    }

    // greedy upper bound: repeatedly take the candidate covering the most
    std::uint64_t uncovered = cx.all_edges;
    int ub = 0;
    while (uncovered) {
        int bestc = 0, bestcnt = -1;
        for (std::size_t c = 0; c < cx.covers.size(); ++c) {
            int cnt = detail::popcount(cx.covers[c] & uncovered);
            if (cnt > bestcnt) { bestcnt = cnt; bestc = static_cast<int>(c); }
        }
        uncovered &= ~cx.covers[bestc];
        ++ub;
    }
    cx.best = ub;
    detail::tau_search(cx, cx.all_edges, 0);
    return cx.best;
}

// Whole-graph oracles: both invariants are additive over tight components
// (a cover element lies inside an edge, so it can only cover edges of one
// component), so decompose first and solve each piece exactly.
inline int exact_nu_total(const RGraph& g, int m, const OracleLimits& lim = {}) {
    int total = 0;
    for (const auto& comp : connected_components(g)) total += exact_nu(comp, m, lim);
    return total;
}

inline int exact_tau_total(const RGraph& g, int m, const OracleLimits& lim = {}) {
    int total = 0;
    for (const auto& comp : connected_components(g)) total += exact_tau(comp, m, lim);
    return total;
}

// ---- validators ----------------------------------------------------------

struct MatchingViolation {
    VSet a, b;
};
struct CoverViolation {
    VSet edge;
};

inline std::optional<MatchingViolation> validate(const RGraph&, const MatchingResult& m) {
    for (std::size_t i = 0; i < m.edges.size(); ++i)
        for (std::size_t j = i + 1; j < m.edges.size(); ++j)
            if (intersection_size(m.edges[i], m.edges[j]) >= m.m)
                return MatchingViolation{m.edges[i], m.edges[j]};
    return std::nullopt;
}

inline std::optional<CoverViolation> validate(const RGraph& g, const CoverFamily& c) {
    VSetSet members;
    members.reserve(c.sets.size() * 2);
    for (const auto& s : c.sets) members.insert(s);
    for (const auto& e : g.edges) {
        bool covered = false;
        for (auto& s : subsets_of_size(e, c.m))
            if (members.count(s)) { covered = true; break; }
        if (!covered) return CoverViolation{e};
    }
    return std::nullopt;
}

// maximality check: no remaining edge of g can be added to m
inline bool is_maximal_matching(const RGraph& g, const MatchingResult& m) {
    VSetSet used;
    for (const auto& e : m.edges)
        for (auto& f : facets(e)) used.insert(std::move(f));
    VSetSet chosen;
    for (const auto& e : m.edges) chosen.insert(e);
    for (const auto& e : g.edges) {
        if (chosen.count(e)) continue;
        bool conflicts = false;
        for (auto& f : facets(e))
            if (used.count(f)) { conflicts = true; break; }
        if (!conflicts) return false;
    }
    return true;
}

// ---- heavy-vertex fractional matching ------------------------------------

struct FractionalMatching {
    double value = 0;
    std::size_t heavy_count = 0;
    double threshold = 0;  // D = (1+eps) d
};

// Vertices of G^(r-1) are the (r-1)-sets; one is heavy iff its co-degree is
// at least D = (1+eps)d. value = (#edges with no heavy vertex)/D.
inline FractionalMatching fractional_matching_value(const RGraph& g, double eps, double d) {
    if (eps <= 0) throw std::invalid_argument("fractional_matching_value: eps <= 0");
    FractionalMatching out;
    out.threshold = (1 + eps) * d;
    auto smap = shadow_map(g);
    VSetSet heavy;
    for (const auto& [sigma, nb] : smap)
        if (static_cast<double>(nb.size()) >= out.threshold) heavy.insert(sigma);
    out.heavy_count = heavy.size();
    std::size_t clean = 0;
    for (const auto& e : g.edges) {
        bool has_heavy = false;
        for (auto& f : facets(e))
            if (heavy.count(f)) { has_heavy = true; break; }
        if (!has_heavy) ++clean;
    }
    out.value = out.threshold > 0 ? static_cast<double>(clean) / out.threshold : 0.0;
    return out;
}

// Convenience: d from sampling metadata.
inline FractionalMatching fractional_matching_value(const RGraph& g, double eps) {
    if (g.p < 0) throw std::invalid_argument("fractional_matching_value: graph has no sampling metadata");
    return fractional_matching_value(g, eps, g.p * (g.n - (g.r - 1)));
}

} // namespace tuza

#endif
