#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "tuza/hypergraph.hpp"
#include "tuza/sampling.hpp"
#include "tuza/tree.hpp"

using namespace tuza;

TEST_CASE("facets and subsets") {
    VSet e{1, 4, 7};
    auto f = facets(e);
    REQUIRE(f.size() == 3);
    CHECK(f[0] == VSet{4, 7});
    CHECK(f[1] == VSet{1, 7});
    CHECK(f[2] == VSet{1, 4});
    CHECK(subsets_of_size(e, 2).size() == 3);
    CHECK(subsets_of_size(e, 0) == std::vector<VSet>{VSet{}});
    CHECK(subsets_of_size(e, 4).empty());
}

TEST_CASE("shadow and codegree") {
    RGraph g;
    g.n = 5;
    g.r = 3;
    g.edges = {{0, 1, 2}, {0, 1, 3}};
    g.normalize();
    auto sm = shadow_map(g);
    CHECK(sm.size() == 5);  // {1,2},{0,2},{0,1},{1,3},{0,3}
    CHECK(sm.at(VSet{0, 1}) == std::vector<Vertex>{2, 3});
    auto cd = codegree(g, VSet{0, 1});
    CHECK(cd.count == 2);
    CHECK(codegree(g, VSet{2, 3}).count == 0);
    CHECK(shadow(g).sets.front() == VSet{0, 1});
}

TEST_CASE("serialization round trips bit-exact") {
    RGraph g = sample_hypergraph(12, 3, 0.4, 99);
    std::string txt = to_text(g);
    RGraph g2 = from_text(txt);
    CHECK(g2 == g);
    CHECK(to_text(g2) == txt);
    auto j = to_json(g);
    RGraph g3 = from_json(j);
    CHECK(g3 == g);
    CHECK(to_json(g3) == j);
}

TEST_CASE("text parser rejects malformed input") {
    CHECK_THROWS(from_text(std::string("5 3\n0 1\n")));
    CHECK_THROWS(from_text(std::string("")));
    RGraph bad;
    bad.n = 3;
    bad.r = 3;
    bad.edges = {{0, 1, 5}};
    CHECK_THROWS(bad.check_valid());
}

TEST_CASE("sampling endpoints and determinism") {
    CHECK(sample_hypergraph(10, 3, 1.0, 7).edges.size() == 120);
    CHECK(sample_hypergraph(10, 3, 0.0, 7).edges.empty());
    RGraph a = sample_hypergraph(25, 4, 0.05, 42);
    RGraph b = sample_hypergraph(25, 4, 0.05, 42);
    CHECK(a == b);
    RGraph c = sample_hypergraph(25, 4, 0.05, 43);
    CHECK(a.edges != c.edges);
    CHECK_THROWS(sample_hypergraph(3, 4, 0.5, 1));
    CHECK_THROWS(sample_hypergraph(10, 3, 1.5, 1));
}

TEST_CASE("edge count matches the binomial law") {
    // C(30,3) = 4060 candidate edges at p = 0.1: mean 406, sd ~= 19.1
    const int trials = 200;
    double sum = 0;
    for (int i = 0; i < trials; ++i)
        sum += static_cast<double>(sample_hypergraph(30, 3, 0.1, sub_seed(5, i)).edges.size());
    double mean = sum / trials;
    double se = 19.1 / std::sqrt(static_cast<double>(trials));
    CHECK(std::fabs(mean - 406.0) < 5 * se);
}

TEST_CASE("sparse sampler agrees with the direct sampler in distribution") {
    const int n = 12, r = 3, trials = 4000;
    const double p = 0.01;
    double direct_mean = 0, sparse_mean = 0;
    int direct_hit = 0, sparse_hit = 0;  // marginal of one fixed edge
    const VSet probe{0, 1, 2};
    for (int i = 0; i < trials; ++i) {
        auto gd = detail::sample_direct(n, r, p, sub_seed(11, i));
        auto gs = detail::sample_sparse(n, r, p, sub_seed(12, i));
        direct_mean += static_cast<double>(gd.edges.size());
        sparse_mean += static_cast<double>(gs.edges.size());
        direct_hit += gd.edge_set().count(probe);
        sparse_hit += gs.edge_set().count(probe);
    }
    direct_mean /= trials;
    sparse_mean /= trials;
    // mean count 2.2, sd sqrt(220 * p * (1-p)) ~= 1.476
    double se = 1.476 / std::sqrt(static_cast<double>(trials));
    CHECK(std::fabs(direct_mean - 2.2) < 5 * se);
    CHECK(std::fabs(sparse_mean - 2.2) < 5 * se);
    // marginal inclusion ~ Bernoulli(p)
    double bse = std::sqrt(p * (1 - p) / trials);
    CHECK(std::fabs(direct_hit / static_cast<double>(trials) - p) < 5 * bse);
    CHECK(std::fabs(sparse_hit / static_cast<double>(trials) - p) < 5 * bse);
}

TEST_CASE("colex rank and unrank invert each other") {
    for (std::uint64_t rank = 0; rank < binom_u64(9, 4); ++rank) {
        VSet e = colex_unrank(rank, 9, 4);
        CHECK(colex_rank(e) == rank);
    }
    CHECK(colex_rank(VSet{0, 1, 2}) == 0);
    CHECK(binom_u64(52, 5) == 2598960);
}

TEST_CASE("components follow shared-(r-1)-set adjacency") {
    RGraph g;
    g.n = 10;
    g.r = 3;
    g.edges = {{0, 1, 2}, {0, 1, 3}, {4, 5, 6}, {2, 7, 8}};  // last shares only 1 vertex
    g.normalize();
    auto comps = connected_components(g);
    CHECK(comps.size() == 3);
}

TEST_CASE("ball radii") {
    RGraph g;
    g.n = 8;
    g.r = 3;
    g.edges = {{0, 1, 2}, {1, 2, 3}, {2, 3, 4}, {5, 6, 7}};
    g.normalize();
    CHECK(ball(g, {1, 2}, 0).edges.empty());
    CHECK(ball(g, {1, 2}, 1).edges.size() == 2);   // the two edges on {1,2}
    CHECK(ball(g, {1, 2}, 2).edges.size() == 3);
    CHECK(ball(g, {0, 1}, 3).edges.size() == 3);   // never reaches {5,6,7}
}

TEST_CASE("breadth-first tree explores in queue order") {
    RGraph g;
    g.n = 7;
    g.r = 3;
    g.edges = {{0, 1, 2}, {1, 2, 3}, {0, 2, 4}, {3, 4, 5}};
    g.normalize();
    auto res = breadth_first_tree(g, {1, 2});
    res.tree.check_invariants();
    CHECK(res.tree.root == VSet{1, 2});
    CHECK(!res.tree.edges.empty());
    // trace is monotone in processed count and consistent in sizes
    for (std::size_t i = 1; i < res.trace.size(); ++i) {
        CHECK(res.trace[i].processed_total == res.trace[i - 1].processed_total + 1);
        CHECK(res.trace[i].edges_total >= res.trace[i - 1].edges_total);
    }
    CHECK_THROWS(breadth_first_tree(g, {5, 6}));  // not in the shadow
}

TEST_CASE("tree recognizer") {
    RGraph tree;
    tree.n = 6;
    tree.r = 3;
    tree.edges = {{0, 1, 2}, {1, 2, 3}, {2, 3, 4}};  // each edge adds one vertex
    tree.normalize();
    CHECK(is_tree(tree, {0, 1}));

    RGraph cyc;
    cyc.n = 5;
    cyc.r = 3;
    // tight cycle: vertex/edge count breaks the tree relation
    cyc.edges = {{0, 1, 2}, {1, 2, 3}, {2, 3, 0}, {3, 0, 1}};
    cyc.normalize();
    CHECK(!is_tree(cyc, {0, 1}));
}

TEST_CASE("breadth-first tree of a tree component recovers every edge") {
    RGraph tree;
    tree.n = 8;
    tree.r = 3;
    tree.edges = {{0, 1, 2}, {0, 1, 3}, {1, 3, 4}, {0, 2, 5}};
    tree.normalize();
    auto res = breadth_first_tree(tree, {0, 1});
    CHECK(res.tree.edges.size() == tree.edges.size());
    CHECK(res.tree.as_graph(tree.n) == tree);
}

TEST_CASE("partitions are deterministic and cover all blocks eventually") {
    auto p = sample_partition(1000, 3, 17);
    auto q = sample_partition(1000, 3, 17);
    CHECK(p.assignment == q.assignment);
    std::vector<int> cnt(3, 0);
    for (int v = 0; v < 1000; ++v) ++cnt[p.block(v)];
    for (int c : cnt) CHECK(c > 250);  // roughly uniform
    auto t = set_type(VSet{0, 1, 2, 3}, p);
    CHECK(t.ordered.size() == 3);
    CHECK(t.unordered[0] >= t.unordered[1]);
}
