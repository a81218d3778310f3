// tree.hpp - rooted r-uniform trees, the breadth-first exploration tree, and
// the tree recognizer.
#ifndef TUZA_TREE_HPP
#define TUZA_TREE_HPP

#include <deque>
#include <functional>
#include <optional>
#include <stdexcept>

#include "hypergraph.hpp"

namespace tuza {

// A rooted r-tree: the first edge extends the root (r-1)-set by a new vertex,
// every later edge extends an (r-1)-subset of an earlier edge by a new vertex.
struct RTree {
    VSet root;
    int r = 2;

    struct Edge {
        VSet verts;      // canonical
        VSet base;       // the (r-1)-set this edge was attached to
        int parent = -1; // index of the edge containing base (-1: base is root)
        int depth = 1;   // path length from the root to this edge
    };
    std::vector<Edge> edges;

    // The (r-1)-subsets of edge e other than its base.
    std::vector<VSet> child_sets(int e) const {
        std::vector<VSet> out;
        for (auto& f : facets(edges[e].verts))
            if (f != edges[e].base) out.push_back(std::move(f));
        return out;
    }

    RGraph as_graph(int n) const {
        RGraph g;
        g.n = n;
        g.r = r;
        for (const auto& e : edges) g.edges.push_back(e.verts);
        g.normalize();
        return g;
    }

    void check_invariants() const {
        VSetSet used_sets;
        std::unordered_set<Vertex> used_verts(root.begin(), root.end());
        used_sets.insert(root);
        for (std::size_t i = 0; i < edges.size(); ++i) {
            const auto& e = edges[i];
            if (!used_sets.count(e.base))
                throw std::logic_error("RTree: base not available at insertion");
            Vertex nv = -1;
            for (Vertex v : e.verts)
                if (!std::binary_search(e.base.begin(), e.base.end(), v)) nv = v;
            if (nv < 0 || used_verts.count(nv))
                throw std::logic_error("RTree: edge does not add a fresh vertex");
            used_verts.insert(nv);
            for (auto& f : facets(e.verts)) used_sets.insert(std::move(f));
        }
    }
};

// Audit trace of the queue procedure: per processed set, the sizes of the
// running edge set, processed set, and queue.
struct BftStep {
    VSet processed;
    std::size_t edges_total = 0;
    std::size_t processed_total = 0;
    std::size_t queue_size = 0;
};

struct BftResult {
    RTree tree;
    std::vector<BftStep> trace;
};

// The breadth-first tree S*(rho): process (r-1)-sets in the order they enter
// the queue (FIFO), ties on simultaneous entry broken by `order` (default:
// lexicographic on canonical sets). Processing sigma adds every edge
// sigma ∪ {v} of G with v not yet in the tree.
inline BftResult breadth_first_tree(
    const RGraph& g, const VSet& rho,
    const std::function<bool(const VSet&, const VSet&)>& order =
        [](const VSet& a, const VSet& b) { return a < b; }) {
    VSet root = canonical(rho);
    if (static_cast<int>(root.size()) != g.r - 1)
        throw std::invalid_argument("breadth_first_tree: |rho| != r-1");
    auto smap = shadow_map(g);
    if (!smap.count(root))
        throw std::invalid_argument("breadth_first_tree: rho not in shadow(G)");

    BftResult res;
    res.tree.root = root;
    res.tree.r = g.r;

    std::vector<bool> in_tree(g.n, false);
    for (Vertex v : root) in_tree[v] = true;
    VSetSet queued;   // sets ever enqueued (or the root)
    queued.insert(root);

    // depth of each known (r-1)-set, and the edge index that introduced it
    std::unordered_map<VSet, std::pair<int, int>, VSetHash> set_info;
    set_info[root] = {0, -1};

    std::deque<VSet> queue;
    std::size_t processed_count = 0;

    auto add_edges_for = [&](const VSet& sigma) {
        auto it = smap.find(sigma);
        auto [sdepth, sedge] = set_info[sigma];
        std::vector<VSet> fresh;
        if (it != smap.end()) {
            for (Vertex v : it->second) {
                if (in_tree[v]) continue;
                in_tree[v] = true;
                RTree::Edge e;
                e.base = sigma;
                e.parent = sedge;
                e.depth = sdepth + 1;
                e.verts = sigma;
                e.verts.push_back(v);
                std::sort(e.verts.begin(), e.verts.end());
                int eidx = static_cast<int>(res.tree.edges.size());
                res.tree.edges.push_back(e);
                for (auto& f : facets(res.tree.edges[eidx].verts)) {
                    if (f == sigma) continue;
                    if (queued.count(f)) continue;
                    set_info[f] = {e.depth, eidx};
                    fresh.push_back(f);
                }
            }
        }
        // new sets from this batch enter the queue together; break ties by order
        std::sort(fresh.begin(), fresh.end(), order);
        for (auto& f : fresh) {
            queued.insert(f);
            queue.push_back(std::move(f));
        }
    };

    add_edges_for(root);
    ++processed_count;
    res.trace.push_back({root, res.tree.edges.size(), processed_count, queue.size()});
    while (!queue.empty()) {
        VSet sigma = std::move(queue.front());
        queue.pop_front();
        add_edges_for(sigma);
        ++processed_count;
        res.trace.push_back({sigma, res.tree.edges.size(), processed_count, queue.size()});
    }
    return res;
}

// True iff the component of rho admits the iterative tree construction.
// Checks the vertex/edge count relation, then greedily realizes an insertion
// order (in a genuine tree any legal order succeeds).
inline bool is_tree(const RGraph& g, const VSet& rho) {
    VSet root = canonical(rho);
    // component of rho = all edges reachable via shared (r-1)-sets
    RGraph comp = ball(g, root, static_cast<int>(g.edges.size()) + 1);
    if (comp.edges.empty()) return true;  // nothing to cover; vacuous

    std::unordered_set<Vertex> verts(root.begin(), root.end());
    for (const auto& e : comp.edges) verts.insert(e.begin(), e.end());
    for (Vertex v : root) verts.insert(v);
    if (verts.size() != root.size() + comp.edges.size()) return false;

    VSetSet avail;
    avail.insert(root);
    std::unordered_set<Vertex> used(root.begin(), root.end());
    std::vector<bool> added(comp.edges.size(), false);
    std::size_t remaining = comp.edges.size();
    bool progress = true;
    while (remaining > 0 && progress) {
        progress = false;
        for (std::size_t i = 0; i < comp.edges.size(); ++i) {
            if (added[i]) continue;
            const auto& e = comp.edges[i];
            int fresh = 0;
            Vertex nv = -1;
            for (Vertex v : e)
                if (!used.count(v)) {
                    ++fresh;
                    nv = v;
                }
            if (fresh != 1) continue;
            VSet base(e.size() - 1);
            std::size_t k = 0;
            for (Vertex v : e)
                if (v != nv) base[k++] = v;
            if (!avail.count(base)) continue;
            added[i] = true;
            used.insert(nv);
            for (auto& f : facets(e)) avail.insert(std::move(f));
            --remaining;
            progress = true;
        }
    }
    return remaining == 0;
}

} // namespace tuza

#endif
