#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tuza/covers.hpp"
#include "tuza/sampling.hpp"

using namespace tuza;

namespace {

// a single-edge graph whose vertices get prescribed blocks
struct OneEdge {
    RGraph g;
    VertexPartition p;
};

OneEdge one_edge(int r, int l, const std::vector<int>& blocks) {
    OneEdge o;
    o.g.n = r;
    o.g.r = r;
    VSet e(r);
    for (int i = 0; i < r; ++i) e[i] = i;
    o.g.edges = {e};
    o.p.l = l;
    o.p.assignment = blocks;
    return o;
}

} // namespace

TEST_CASE("block stats") {
    VertexPartition p;
    p.l = 3;
    p.assignment = {0, 2, 2, 1};
    auto s = block_stats({}, p);
    CHECK(s.empty_blocks == 3);
    CHECK(s.weighted_sum == 0);
    s = block_stats({1}, p);
    CHECK(s.empty_blocks == 2);
    CHECK(s.weighted_sum == 2);
    p.l = 4;
    p.assignment = {0, 1, 2, 3};
    s = block_stats({0, 1, 2, 3}, p);
    CHECK(s.empty_blocks == 0);
    CHECK(s.weighted_sum == 6);
}

TEST_CASE("r=3 covers") {
    RGraph empty;
    empty.n = 6;
    empty.r = 3;
    VertexPartition p;
    p.l = 2;
    p.assignment = {0, 0, 0, 1, 1, 1};
    CHECK(cover_r3(empty, p, false).sets.empty());
    CHECK(cover_r3(empty, p, true).sets.empty());

    // type-30 edge: all three pairs same-block, improved keeps the edge covered
    auto o = one_edge(3, 2, {0, 0, 0});
    auto basic = cover_r3(o.g, o.p, false);
    CHECK(basic.sets.size() == 3);
    CHECK(!validate(o.g, basic));
    auto imp = cover_r3(o.g, o.p, true);
    CHECK(!validate(o.g, imp));
    CHECK(imp.sets.size() <= basic.sets.size());

    CHECK_THROWS(cover_r3(sample_hypergraph(8, 4, 0.2, 1), p, false));
}

TEST_CASE("r=3 covers valid on every single-edge block pattern") {
    for (int mask = 0; mask < 8; ++mask) {
        auto o = one_edge(3, 2, {(mask >> 0) & 1, (mask >> 1) & 1, (mask >> 2) & 1});
        CHECK(!validate(o.g, cover_r3(o.g, o.p, false)));
        CHECK(!validate(o.g, cover_r3(o.g, o.p, true)));
    }
}

TEST_CASE("r=4 covers valid on every single-edge block pattern") {
    // exhaustive ordered-type case check: 3^4 assignments
    for (int a = 0; a < 81; ++a) {
        std::vector<int> blocks{a % 3, (a / 3) % 3, (a / 9) % 3, (a / 27) % 3};
        auto o = one_edge(4, 3, blocks);
        CHECK(!validate(o.g, cover_r4(o.g, o.p, false)));
        CHECK(!validate(o.g, cover_r4(o.g, o.p, true)));
    }
}

TEST_CASE("r=5 covers valid on every single-edge pattern across parity seeds") {
    for (int mask = 0; mask < 32; ++mask) {
        std::vector<int> blocks(5);
        for (int i = 0; i < 5; ++i) blocks[i] = (mask >> i) & 1;
        auto o = one_edge(5, 2, blocks);
        for (std::uint64_t s = 0; s < 8; ++s) {
            ParityFunction f{s};
            CHECK(!validate(o.g, cover_r5(o.g, o.p, f, false)));
            CHECK(!validate(o.g, cover_r5(o.g, o.p, f, true)));
        }
    }
}

TEST_CASE("improved covers never exceed basic covers on random instances") {
    for (int i = 0; i < 25; ++i) {
        std::uint64_t s = sub_seed(0xabc, i);
        {
            RGraph g = sample_hypergraph(20, 3, p_from_d(1.5, 20, 3), s);
            auto p = sample_partition(20, 2, sub_seed(s, 1));
            CHECK(cover_r3(g, p, true).sets.size() <= cover_r3(g, p, false).sets.size());
        }
        {
            RGraph g = sample_hypergraph(18, 4, p_from_d(1.5, 18, 4), s);
            auto p = sample_partition(18, 3, sub_seed(s, 1));
            CHECK(cover_r4(g, p, true).sets.size() <= cover_r4(g, p, false).sets.size());
        }
        {
            RGraph g = sample_hypergraph(16, 5, p_from_d(1.5, 16, 5), s);
            auto p = sample_partition(16, 2, sub_seed(s, 1));
            ParityFunction f{sub_seed(s, 2)};
            CHECK(cover_r5(g, p, f, true).sets.size() <= cover_r5(g, p, f, false).sets.size());
        }
    }
}

TEST_CASE("window cover with one block is the whole shadow") {
    RGraph g = sample_hypergraph(12, 4, 0.1, 3);
    VertexPartition p;
    p.l = 1;
    p.assignment.assign(12, 0);
    auto c = frankl_rodl_cover(g, p, 0);
    CHECK(c.sets.size() == shadow_map(g).size());
    CHECK_THROWS(frankl_rodl_cover(g, p, 1));
}

TEST_CASE("window-family counting identity") {
    for (int i = 0; i < 10; ++i) {
        std::uint64_t s = sub_seed(0x9f, i);
        RGraph g = sample_hypergraph(18, 4, p_from_d(1.0, 18, 4), s);
        auto p = sample_partition(18, 3, sub_seed(s, 1));
        auto smap = shadow_map(g);
        std::size_t total = 0;
        for (int j = 0; j < 3; ++j) {
            auto c = frankl_rodl_cover(g, p, j);
            CHECK(!validate(g, c));
            total += c.sets.size();
        }
        // every shadow set lies in exactly (1 + empty-block count) families
        std::size_t expect = smap.size();
        for (const auto& [sigma, nb] : smap) expect += block_stats(sigma, p).empty_blocks;
        CHECK(total == expect);
    }
}

TEST_CASE("parity-refined covers stay valid, including full-type edges") {
    // adversarial: a single edge meeting both blocks at least twice, plus
    // random graphs; sweep parity seeds and both shifts
    for (int mask = 0; mask < 64; ++mask) {
        std::vector<int> blocks(6);
        for (int i = 0; i < 6; ++i) blocks[i] = (mask >> i) & 1;
        auto o = one_edge(6, 2, blocks);
        for (std::uint64_t s = 0; s < 6; ++s)
            for (int j = 0; j < 2; ++j) {
                CHECK(!validate(o.g, sidorenko_cover(o.g, o.p, ParityFunction{s}, j)));
                CHECK(!validate(o.g, improved_sidorenko_cover(o.g, o.p, ParityFunction{s}, j)));
            }
    }
    for (int i = 0; i < 15; ++i) {
        std::uint64_t s = sub_seed(0x51d, i);
        RGraph g = sample_hypergraph(16, 6, p_from_d(1.0, 16, 6), s);
        auto p = sample_partition(16, 2, sub_seed(s, 1));
        ParityFunction f{sub_seed(s, 2)};
        for (int j = 0; j < 2; ++j) {
            CHECK(!validate(g, sidorenko_cover(g, p, f, j)));
            CHECK(!validate(g, improved_sidorenko_cover(g, p, f, j)));
        }
    }
}

TEST_CASE("without full-type sets the improved family equals the plain window family") {
    RGraph g = sample_hypergraph(14, 6, p_from_d(1.0, 14, 6), 21);
    VertexPartition p;
    p.l = 2;
    p.assignment.assign(14, 0);  // block 1 empty: no set meets it twice
    ParityFunction f{5};
    for (int j = 0; j < 2; ++j) {
        auto a = improved_sidorenko_cover(g, p, f, j);
        auto b = frankl_rodl_cover(g, p, j);
        CHECK(a.sets == b.sets);
    }
}

TEST_CASE("custom vertex order changes pi but preserves validity") {
    RGraph g = sample_hypergraph(16, 6, p_from_d(1.5, 16, 6), 8);
    auto p = sample_partition(16, 2, 9);
    ParityFunction f{10};
    std::vector<int> reversed(16);
    for (int v = 0; v < 16; ++v) reversed[v] = 15 - v;
    for (int j = 0; j < 2; ++j) {
        CHECK(!validate(g, sidorenko_cover(g, p, f, j, reversed)));
        CHECK(!validate(g, improved_sidorenko_cover(g, p, f, j, reversed)));
    }
}

TEST_CASE("best_over_j returns the smallest family and its shift") {
    RGraph g = sample_hypergraph(18, 4, p_from_d(1.0, 18, 4), 44);
    auto p = sample_partition(18, 2, 45);
    auto [best, j] = best_over_j(2, [&](int jj) { return frankl_rodl_cover(g, p, jj); });
    CHECK(j >= 0);
    CHECK(j < 2);
    for (int jj = 0; jj < 2; ++jj)
        CHECK(best.sets.size() <= frankl_rodl_cover(g, p, jj).sets.size());
}

TEST_CASE("parity function is deterministic with balanced marginals") {
    ParityFunction f{123};
    CHECK(f.bit(3, 8) == f.bit(3, 8));
    int ones = 0;
    const int trials = 20000;
    for (int i = 0; i < trials; ++i) ones += f.bit(i, i * 31 + 7);
    double freq = static_cast<double>(ones) / trials;
    CHECK(freq > 0.48);
    CHECK(freq < 0.52);
}
