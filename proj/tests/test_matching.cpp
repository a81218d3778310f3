#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tuza/matching.hpp"
#include "tuza/sampling.hpp"

using namespace tuza;

namespace {

RGraph complete_graph(int n, int r) {
    RGraph g;
    g.n = n;
    g.r = r;
    VSet all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    g.edges = subsets_of_size(all, r);
    g.normalize();
    return g;
}

} // namespace

TEST_CASE("intersection size on sorted sets") {
    CHECK(intersection_size({0, 1, 2}, {1, 2, 3}) == 2);
    CHECK(intersection_size({0, 1}, {2, 3}) == 0);
    CHECK(intersection_size({}, {1}) == 0);
}

TEST_CASE("greedy matching respects the weight order and is maximal") {
    RGraph g;
    g.n = 6;
    g.r = 3;
    g.edges = {{0, 1, 2}, {0, 1, 3}, {3, 4, 5}};
    g.normalize();
    WeightedGraph w{g, {0.9, 0.1, 0.5}};
    auto m = greedy_matching(w);
    // lightest edge {0,1,3} first; {0,1,2} then conflicts (shares {0,1})
    CHECK(m.edges == std::vector<VSet>{{0, 1, 3}, {3, 4, 5}});
    CHECK(!validate(g, m));
    CHECK(is_maximal_matching(g, m));

    auto rm = random_greedy_matching(g, 7);
    CHECK(rm.edges == random_greedy_matching(g, 7).edges);
    CHECK(is_maximal_matching(g, rm));
}

TEST_CASE("exact oracles on complete graphs") {
    for (int r : {3, 4, 5, 6}) {
        RGraph g = complete_graph(r + 1, r);
        CHECK(exact_nu(g, r - 1) == 1);
        CHECK(exact_tau(g, r - 1) == (r + 2) / 2);  // ceil((r+1)/2)
    }
    // two disjoint complete pieces: both invariants add up
    RGraph g = complete_graph(4, 3);
    RGraph h = complete_graph(4, 3);
    for (auto e : h.edges) {
        for (auto& v : e) v += 4;
        g.edges.push_back(e);
    }
    g.n = 8;
    g.normalize();
    CHECK(exact_nu_total(g, 2) == 2);
    CHECK(exact_tau_total(g, 2) == 4);
}

TEST_CASE("exact oracles on tiny cases") {
    RGraph g;
    g.n = 4;
    g.r = 3;
    CHECK(exact_nu(g, 2) == 0);
    CHECK(exact_tau(g, 2) == 0);
    g.edges = {{0, 1, 2}};
    g.normalize();
    CHECK(exact_nu(g, 2) == 1);
    CHECK(exact_tau(g, 2) == 1);
    g.edges.push_back({1, 2, 3});
    g.normalize();
    CHECK(exact_nu(g, 2) == 1);   // share {1,2}
    CHECK(exact_tau(g, 2) == 1);  // cover with {1,2}
}

TEST_CASE("weak duality nu <= tau on random instances") {
    for (int i = 0; i < 40; ++i) {
        RGraph g = sample_hypergraph(14, 3, 0.02, sub_seed(31, i));
        if (g.edges.size() > 40) continue;
        int nu = exact_nu(g, 2);
        int tau = exact_tau(g, 2);
        CHECK(nu <= tau);
        // any greedy matching is a lower bound for nu
        auto m = random_greedy_matching(g, sub_seed(32, i));
        CHECK(static_cast<int>(m.edges.size()) <= nu);
        // a cover built from one facet per matching edge never beats tau
        CHECK(tau <= static_cast<int>(g.edges.size()));
    }
}

TEST_CASE("size guard throws") {
    RGraph g = complete_graph(10, 3);  // 120 edges
    CHECK_THROWS_AS(exact_nu(g, 2), TooLargeError);
    CHECK_THROWS_AS(exact_tau(g, 2), TooLargeError);
    OracleLimits big;
    big.max_edges = 200;  // still rejected: bitmask width
    CHECK_THROWS_AS(exact_nu(g, 2, big), TooLargeError);
}

TEST_CASE("cover validator catches gaps") {
    RGraph g;
    g.n = 5;
    g.r = 3;
    g.edges = {{0, 1, 2}, {2, 3, 4}};
    g.normalize();
    CoverFamily c;
    c.m = 2;
    c.sets = {{0, 1}};
    auto viol = validate(g, c);
    REQUIRE(viol.has_value());
    CHECK(viol->edge == VSet{2, 3, 4});
    c.sets.push_back({3, 4});
    CHECK(!validate(g, c));
}

TEST_CASE("fractional matching heavy-vertex value") {
    RGraph g = sample_hypergraph(30, 3, p_from_d(1.0, 30, 3), 77);
    auto fm = fractional_matching_value(g, 0.5, 1.0);
    CHECK(fm.threshold == doctest::Approx(1.5));
    CHECK(fm.value >= 0);
    CHECK_THROWS(fractional_matching_value(g, 0.0, 1.0));
    // metadata overload agrees with the explicit-d call
    auto fm2 = fractional_matching_value(g, 0.5);
    CHECK(fm2.value == doctest::Approx(fm.value));
}
