// hypergraph.hpp - r-uniform hypergraphs on labelled vertices, shadows,
// co-degrees, partitions, set types, connectivity, serialization.
#ifndef TUZA_HYPERGRAPH_HPP
#define TUZA_HYPERGRAPH_HPP

#include <algorithm>
#include <cstdint>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include <json.hpp>

#include "rng.hpp"

namespace tuza {

using Vertex = int;
// A vertex set in canonical ascending order.
using VSet = std::vector<Vertex>;

inline VSet canonical(VSet s) {
    std::sort(s.begin(), s.end());
    return s;
}

struct VSetHash {
    std::size_t operator()(const VSet& s) const {
        std::uint64_t h = 0x51ed270b0a9fcd5fULL;
        for (Vertex v : s) h = hash_combine(h, static_cast<std::uint64_t>(v) + 1);
        return static_cast<std::size_t>(h);
    }
};

using VSetSet = std::unordered_set<VSet, VSetHash>;

// An r-uniform hypergraph on vertices 0..n-1. Edges are canonical ascending
// r-sets kept sorted lexicographically, so equal graphs compare equal.
struct RGraph {
    int n = 0;
    int r = 2;
    std::vector<VSet> edges;

    // Sampling metadata (negative p means "not sampled").
    double p = -1.0;
    std::uint64_t seed = 0;

    bool operator==(const RGraph& o) const {
        return n == o.n && r == o.r && edges == o.edges;
    }

    void normalize() {
        for (auto& e : edges) std::sort(e.begin(), e.end());
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    }

    void check_valid() const {
        for (const auto& e : edges) {
            if (static_cast<int>(e.size()) != r)
                throw std::invalid_argument("edge cardinality != r");
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] < 0 || e[i] >= n) throw std::invalid_argument("vertex out of range");
                if (i > 0 && e[i] <= e[i - 1]) throw std::invalid_argument("edge not canonical");
            }
        }
    }

    VSetSet edge_set() const {
        VSetSet s;
        s.reserve(edges.size() * 2);
        for (const auto& e : edges) s.insert(e);
        return s;
    }
};

// All (r-1)-subsets of an r-set, each obtained by dropping one position.
inline std::vector<VSet> facets(const VSet& e) {
    std::vector<VSet> out;
    out.reserve(e.size());
    for (std::size_t skip = 0; skip < e.size(); ++skip) {
        VSet f;
        f.reserve(e.size() - 1);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (i != skip) f.push_back(e[i]);
        out.push_back(std::move(f));
    }
    return out;
}

// All m-subsets of a canonical set.
inline std::vector<VSet> subsets_of_size(const VSet& e, int m) {
    std::vector<VSet> out;
    const int k = static_cast<int>(e.size());
    if (m < 0 || m > k) return out;
    std::vector<int> idx(m);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        VSet s(m);
        for (int i = 0; i < m; ++i) s[i] = e[idx[i]];
        out.push_back(std::move(s));
        int i = m - 1;
        while (i >= 0 && idx[i] == k - m + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

// D(G): the (r-1)-sets with positive co-degree, with neighbor lists.
// sets are emitted in canonical (sorted) order.
struct Shadow {
    std::vector<VSet> sets;
};

using ShadowMap = std::unordered_map<VSet, std::vector<Vertex>, VSetHash>;

// sigma -> N(sigma), built in one pass over edges.
inline ShadowMap shadow_map(const RGraph& g) {
    ShadowMap m;
    m.reserve(g.edges.size() * (g.r + 1));
    for (const auto& e : g.edges) {
        for (std::size_t skip = 0; skip < e.size(); ++skip) {
            VSet f;
            f.reserve(e.size() - 1);
            for (std::size_t i = 0; i < e.size(); ++i)
                if (i != skip) f.push_back(e[i]);
            m[std::move(f)].push_back(e[skip]);
        }
    }
    for (auto& [k, nb] : m) std::sort(nb.begin(), nb.end());
    return m;
}

inline Shadow shadow(const RGraph& g) {
    auto m = shadow_map(g);
    Shadow s;
    s.sets.reserve(m.size());
    for (auto& [k, v] : m) s.sets.push_back(k);
    std::sort(s.sets.begin(), s.sets.end());
    return s;
}

struct Codegree {
    int count = 0;
    std::vector<Vertex> neighborhood;
};

inline Codegree codegree(const RGraph& g, const VSet& sigma) {
    if (static_cast<int>(sigma.size()) != g.r - 1)
        throw std::invalid_argument("codegree: |sigma| != r-1");
    VSet s = canonical(sigma);
    auto es = g.edge_set();
    Codegree out;
    VSet probe(g.r);
    for (Vertex v = 0; v < g.n; ++v) {
        if (std::binary_search(s.begin(), s.end(), v)) continue;
        probe.assign(s.begin(), s.end());
        probe.push_back(v);
        std::sort(probe.begin(), probe.end());
        if (es.count(probe)) out.neighborhood.push_back(v);
    }
    out.count = static_cast<int>(out.neighborhood.size());
    return out;
}

// A partition of 0..host_n-1 into l blocks.
struct VertexPartition {
    int l = 1;
    std::vector<int> assignment;  // vertex -> block in 0..l-1

    int block(Vertex v) const { return assignment[static_cast<std::size_t>(v)]; }
};

// Each vertex placed uniformly and independently.
inline VertexPartition sample_partition(int n, int l, std::uint64_t seed) {
    if (l < 1) throw std::invalid_argument("partition needs l >= 1");
    VertexPartition p;
    p.l = l;
    p.assignment.resize(n);
    for (int v = 0; v < n; ++v)
        p.assignment[v] = static_cast<int>(unit_at(seed, static_cast<std::uint64_t>(v)) * l) % l;
    return p;
}

struct SetType {
    std::vector<int> ordered;
    std::vector<int> unordered;  // sorted descending
};

inline SetType set_type(const VSet& a, const VertexPartition& p) {
    SetType t;
    t.ordered.assign(p.l, 0);
    for (Vertex v : a) ++t.ordered[p.block(v)];
    t.unordered = t.ordered;
    std::sort(t.unordered.begin(), t.unordered.end(), std::greater<int>());
    return t;
}

// Connectivity: two edges are adjacent iff they share an (r-1)-set, components
// are the transitive closure. Singleton edges are trivial components.
inline std::vector<RGraph> connected_components(const RGraph& g) {
    const std::size_t m = g.edges.size();
    std::vector<std::size_t> parent(m);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](std::size_t a, std::size_t b) { parent[find(a)] = find(b); };

    std::unordered_map<VSet, std::size_t, VSetHash> first_seen;
    for (std::size_t i = 0; i < m; ++i) {
        for (auto& f : facets(g.edges[i])) {
            auto [it, inserted] = first_seen.emplace(std::move(f), i);
            if (!inserted) unite(i, it->second);
        }
    }
    std::unordered_map<std::size_t, std::size_t> comp_index;
    std::vector<RGraph> comps;
    for (std::size_t i = 0; i < m; ++i) {
        std::size_t root = find(i);
        auto [it, inserted] = comp_index.emplace(root, comps.size());
        if (inserted) {
            RGraph c;
            c.n = g.n;
            c.r = g.r;
            comps.push_back(std::move(c));
        }
        comps[it->second].edges.push_back(g.edges[i]);
    }
    for (auto& c : comps) std::sort(c.edges.begin(), c.edges.end());
    return comps;
}

// S_gamma(rho): edges reachable from rho within gamma steps, where step 0
// starts at rho, the first step takes edges containing rho, and consecutive
// edges must share an (r-1)-set. gamma = 0 gives the empty graph.
inline RGraph ball(const RGraph& g, const VSet& rho, int gamma) {
    if (static_cast<int>(rho.size()) != g.r - 1)
        throw std::invalid_argument("ball: |rho| != r-1");
    RGraph out;
    out.n = g.n;
    out.r = g.r;
    if (gamma <= 0) return out;

    const std::size_t m = g.edges.size();
    std::unordered_map<VSet, std::vector<std::size_t>, VSetHash> by_facet;
    for (std::size_t i = 0; i < m; ++i)
        for (auto& f : facets(g.edges[i])) by_facet[std::move(f)].push_back(i);

    VSet root = canonical(rho);
    std::vector<int> depth(m, -1);
    std::vector<std::size_t> frontier;
    auto it = by_facet.find(root);
    if (it != by_facet.end())
        for (auto i : it->second) {
            depth[i] = 1;
            frontier.push_back(i);
        }
    for (int level = 1; level < gamma && !frontier.empty(); ++level) {
        std::vector<std::size_t> next;
        for (auto i : frontier)
            for (auto& f : facets(g.edges[i]))
                for (auto j : by_facet[f])
                    if (depth[j] < 0) {
                        depth[j] = level + 1;
                        next.push_back(j);
                    }
        frontier = std::move(next);
    }
    for (std::size_t i = 0; i < m; ++i)
        if (depth[i] >= 0) out.edges.push_back(g.edges[i]);
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

// ---- serialization -------------------------------------------------------

// Text form: header "n r", one edge per line, ascending indices.
inline std::string to_text(const RGraph& g) {
    std::ostringstream os;
    os << g.n << ' ' << g.r << '\n';
    for (const auto& e : g.edges) {
        for (std::size_t i = 0; i < e.size(); ++i)
            os << (i ? " " : "") << e[i];
        os << '\n';
    }
    return os.str();
}

inline RGraph from_text(std::istream& in) {
    RGraph g;
    if (!(in >> g.n >> g.r)) throw std::runtime_error("bad graph header");
    VSet e;
    Vertex v;
    while (in >> v) {
        e.push_back(v);
        if (static_cast<int>(e.size()) == g.r) {
            g.edges.push_back(e);
            e.clear();
        }
    }
    if (!e.empty()) throw std::runtime_error("trailing partial edge");
    g.normalize();
    g.check_valid();
    return g;
}

inline RGraph from_text(const std::string& s) {
    std::istringstream is(s);
    return from_text(is);
}

inline nlohmann::json to_json(const RGraph& g) {
    return nlohmann::json{{"n", g.n}, {"r", g.r}, {"edges", g.edges}};
}

inline RGraph from_json(const nlohmann::json& j) {
    RGraph g;
    g.n = j.at("n").get<int>();
    g.r = j.at("r").get<int>();
    g.edges = j.at("edges").get<std::vector<VSet>>();
    g.normalize();
    g.check_valid();
    return g;
}

} // namespace tuza

#endif
