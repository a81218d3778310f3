// branching.hpp - Galton-Watson-style random r-trees, the recursive survival
// rule on weighted trees, Monte Carlo survival estimation, and the exact
// Binomial-Poisson total-variation distance.
#ifndef TUZA_BRANCHING_HPP
#define TUZA_BRANCHING_HPP

#include <cmath>
#include <cstdint>
#include <deque>
#include <stdexcept>
#include <vector>

#include "rng.hpp"

namespace tuza {

// A sampled random tree. Nodes are (r-1)-sets, stored implicitly: node 0 is
// the root; each edge, attached at a base node, creates r-1 fresh child
// nodes. Vertex labels are never needed for survival, only the
// base/children structure.
struct GWTree {
    int r = 3;
    double d = 0;

    struct Node {
        double weight = 1.0;   // weight of the cheapest edge above (root: 1)
        int parent_edge = -1;
        int depth = 0;
    };
    struct Edge {
        int base = 0;          // node index
        double weight = 0;
        int first_child = 0;   // nodes [first_child, first_child + r-1)
        int depth = 1;
    };
    std::vector<Node> nodes;   // node 0 = root
    std::vector<Edge> edges;

    bool truncated_nodes = false;
    bool truncated_depth = false;
    bool truncated() const { return truncated_nodes || truncated_depth; }

    std::vector<std::size_t> edges_per_depth;  // generation bookkeeping
};

struct GWCaps {
    int depth_cap = 1000;
    std::size_t node_cap = 2000000;
};

namespace detail {

template <typename SpawnCount, typename EdgeWeight>
GWTree grow_tree(int r, double d, const GWCaps& caps, std::uint64_t seed,
                 SpawnCount spawn, EdgeWeight edge_weight) {
    if (d < 0) throw std::invalid_argument("grow_tree: d < 0");
    if (caps.depth_cap <= 0 || caps.node_cap == 0)
        throw std::invalid_argument("grow_tree: caps must be positive");
    GWTree t;
    t.r = r;
    t.d = d;
    t.nodes.push_back({1.0, -1, 0});
    Rng rng(seed);
    std::deque<int> queue{0};
    while (!queue.empty()) {
        int ni = queue.front();
        queue.pop_front();
        const double x = t.nodes[ni].weight;
        const int nd = t.nodes[ni].depth;
        int k = spawn(rng, x);
        if (nd >= caps.depth_cap) {
            // generations beyond the cap are cut; flag if anything was lost
            if (k > 0) t.truncated_depth = true;
            continue;
        }
        for (int c = 0; c < k; ++c) {
            if (t.nodes.size() + (r - 1) > caps.node_cap) {
                t.truncated_nodes = true;
                break;
            }
            GWTree::Edge e;
            e.base = ni;
            e.depth = nd + 1;
            e.weight = edge_weight(rng, x);
            e.first_child = static_cast<int>(t.nodes.size());
            int ei = static_cast<int>(t.edges.size());
            t.edges.push_back(e);
            if (t.edges_per_depth.size() < static_cast<std::size_t>(e.depth))
                t.edges_per_depth.resize(e.depth, 0);
            ++t.edges_per_depth[e.depth - 1];
            for (int j = 0; j < r - 1; ++j) {
                t.nodes.push_back({e.weight, ei, e.depth});
                queue.push_back(static_cast<int>(t.nodes.size()) - 1);
            }
        }
        if (t.truncated_nodes) break;
    }
    return t;
}

} // namespace detail

// T^d: every (r-1)-set gives birth to Po(d) edges.
inline GWTree sample_gw_tree(int r, double d, const GWCaps& caps, std::uint64_t seed) {
    return detail::grow_tree(
        r, d, caps, seed,
        [d](Rng& rng, double) { return rng.next_poisson(d); },
        [](Rng&, double) { return 0.0; });
}

// W^d: a set of weight x spawns Po(d*x) edges with weights i.i.d. U[0,x].
// By Poisson thinning this matches pruning T^d to weight-decreasing paths;
// edges with weight >= x cannot affect the survival of their base.
inline GWTree sample_decreasing_tree(int r, double d, const GWCaps& caps, std::uint64_t seed) {
    return detail::grow_tree(
        r, d, caps, seed,
        [d](Rng& rng, double x) { return rng.next_poisson(d * x); },
        [](Rng& rng, double x) { return rng.next_unit() * x; });
}

struct SurvivalOutcome {
    std::vector<bool> survives;  // per node
    bool root_survives = true;
};

// A set dies iff it is the base of an edge whose other r-1 sets all survive.
// Leaves (base of no edge) survive. Evaluated bottom-up.
inline SurvivalOutcome survival(const GWTree& t) {
    if (t.truncated())
        throw std::runtime_error("survival: tree was truncated; verdict undefined (raise caps)");
    SurvivalOutcome out;
    out.survives.assign(t.nodes.size(), true);
    // nodes are created in breadth-first order, so children of any edge have
    // larger indices than its base; scan edges deepest-first
    for (std::size_t ei = t.edges.size(); ei-- > 0;) {
        const auto& e = t.edges[ei];
        bool all_children_survive = true;
        for (int j = 0; j < t.r - 1; ++j)
            if (!out.survives[e.first_child + j]) {
                all_children_survive = false;
                break;
            }
        if (all_children_survive) out.survives[e.base] = false;
    }
    // a node's verdict must not be read before all its edges are processed;
    // deepest-first order guarantees that because edge indices grow with depth
    out.root_survives = out.survives[0];
    return out;
}

struct McEstimate {
    double estimate = 0;
    double stderr_ = 0;
    std::size_t trials = 0;
};

inline McEstimate survival_probability_mc(int r, double d, std::size_t trials,
                                          std::uint64_t seed, const GWCaps& caps = {}) {
    if (trials < 1) throw std::invalid_argument("survival_probability_mc: trials < 1");
    std::size_t surv = 0;
    for (std::size_t i = 0; i < trials; ++i) {
        std::uint64_t s = sub_seed(seed, i);
        GWTree t = sample_decreasing_tree(r, d, caps, s);
        int retry = 0;
        while (t.truncated() && retry < 32) {
            // W^d is a.s. finite; a truncation means the caps bound, retry
            // with a perturbed sub-seed rather than emit an undefined verdict
            t = sample_decreasing_tree(r, d, caps, hash_combine(s, ++retry));
        }
        if (t.truncated())
            throw std::runtime_error("survival_probability_mc: persistent truncation; raise caps");
        if (survival(t).root_survives) ++surv;
    }
    McEstimate e;
    e.trials = trials;
    e.estimate = static_cast<double>(surv) / trials;
    e.stderr_ = std::sqrt(e.estimate * (1 - e.estimate) / trials);
    return e;
}

// f(x) = ((r-1) d x + 1)^(-1/(r-1)): survival probability of a set of
// weight x in W^d.
inline double closed_form_survival(int r, double d, double x) {
    if (x < 0 || x > 1) throw std::invalid_argument("closed_form_survival: x outside [0,1]");
    if (d < 0) throw std::invalid_argument("closed_form_survival: d < 0");
    return std::pow((r - 1) * d * x + 1.0, -1.0 / (r - 1));
}

// ---- Binomial vs Poisson total variation ---------------------------------

struct TvResult {
    double value = 0;
    int window_lo = 0;
    int window_hi = 0;   // support window actually summed
    double tail_bound = 0;
};

// Exact TV distance between Bin(n+c, p) and Po(np): half the l1 distance,
// summed over a window whose excluded tail mass is below 1e-12.
inline TvResult tv_bin_po(int n, int c, double p) {
    if (n + c < 0) throw std::invalid_argument("tv_bin_po: n + c < 0");
    if (p < 0 || p > 1) throw std::invalid_argument("tv_bin_po: p outside [0,1]");
    const int nb = n + c;
    const double lambda = static_cast<double>(n) * p;
    TvResult out;
    if (p == 0) {
        // Bin mass at 0 is 1; Po(0) mass at 0 is 1
        out.value = 0;
        return out;
    }
    auto log_binom_pmf = [&](int k) {
        return std::lgamma(nb + 1.0) - std::lgamma(k + 1.0) - std::lgamma(nb - k + 1.0) +
               k * std::log(p) + (nb - k) * std::log1p(-p);
    };
    auto log_po_pmf = [&](int k) {
        return -lambda + k * std::log(lambda) - std::lgamma(k + 1.0);
    };
    // window: go out until both cumulative tails are below 1e-12
    const double tail = 1e-12;
    double acc_b = 0, acc_p = 0, l1 = 0;
    int k = 0;
    int hi = nb;
    for (k = 0;; ++k) {
        double pb = (k <= nb && p < 1.0) ? std::exp(log_binom_pmf(k))
                  : (k == nb && p >= 1.0 ? 1.0 : 0.0);
        double pp = (lambda > 0) ? std::exp(log_po_pmf(k)) : (k == 0 ? 1.0 : 0.0);
        acc_b += pb;
        acc_p += pp;
        l1 += std::fabs(pb - pp);
        if (k >= nb && 1 - acc_p < tail) { hi = k; break; }
        if (k > nb + 200 && 1 - acc_p < tail) { hi = k; break; }
        if (k > 10 * (nb + static_cast<int>(lambda) + 100)) { hi = k; break; }
    }
    out.value = l1 / 2;
    out.window_lo = 0;
    out.window_hi = hi;
    out.tail_bound = std::max(0.0, 1 - acc_p) + std::max(0.0, 1 - acc_b);
    return out;
}

} // namespace tuza

#endif
