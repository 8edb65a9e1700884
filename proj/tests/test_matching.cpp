#include <doctest.h>

#include "critset/matching.hpp"
#include "critset/search.hpp"
#include "oracles.hpp"

using namespace critset;

TEST_CASE("blossom matches the DP oracle exhaustively to n=5") {
    for (int n = 0; n <= 5; ++n)
        oracle::for_all_graphs(n, [](const Graph& g) {
            CHECK(max_matching_general(g).size() == oracle::matching_brute(g));
        });
}

TEST_CASE("blossom matches the DP oracle on random graphs to n=12") {
    SplitMix64 rng(11);
    for (int n : {6, 7, 8, 10, 12})
        for (int t = 0; t < 120; ++t) {
            Graph g = generate_gnp(n, 0.1 + 0.08 * (t % 10), rng.next());
            Matching m = max_matching_general(g);
            CHECK(m.size() == oracle::matching_brute(g));
            for (int v = 0; v < n; ++v) CHECK(m.partner(m.partner(v)) == v);
        }
}

TEST_CASE("blossom on odd cycles and fixtures") {
    CHECK(max_matching_general(oracle::p4()).size() == 2);
    CHECK(max_matching_general(oracle::c5()).size() == 2);
    CHECK(max_matching_general(oracle::k1()).size() == 0);
    // blossom stress: C9 plus chords, and the Petersen graph
    Graph c9 = Graph::from_edges(
        9, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {8, 0}, {0, 3}, {2, 6}});
    CHECK(max_matching_general(c9).size() == oracle::matching_brute(c9));
    Graph petersen = Graph::from_edges(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                                            {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5},
                                            {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}});
    CHECK(max_matching_general(petersen).size() == 5);
    CHECK(oracle::matching_brute(petersen) == 5);
}

TEST_CASE("hopcroft-karp agrees with the oracle on double covers") {
    for (int n = 0; n <= 5; ++n)
        oracle::for_all_graphs(n, [](const Graph& g) {
            DoubleCover dc = bipartite_double_cover(g);
            CHECK(max_matching_bipartite(dc.graph, dc.part0, dc.part1).size() ==
                  oracle::matching_brute(dc.graph));
        });
    SplitMix64 rng(12);
    for (int n : {6, 7})
        for (int t = 0; t < 200; ++t) {
            Graph g = generate_gnp(n, 0.15 + 0.07 * (t % 10), rng.next());
            DoubleCover dc = bipartite_double_cover(g);
            CHECK(max_matching_bipartite(dc.graph, dc.part0, dc.part1).size() ==
                  oracle::matching_brute(dc.graph));
        }
}

TEST_CASE("hopcroft-karp fixtures") {
    Graph p4 = oracle::p4();
    CHECK(max_matching_bipartite(p4, VertexSet::of(4, {0, 2}), VertexSet::of(4, {1, 3})).size() == 2);
    Graph star = oracle::star13();
    CHECK(max_matching_bipartite(star, VertexSet::of(4, {0}), VertexSet::of(4, {1, 2, 3})).size() == 1);
    Graph empty4 = Graph::from_edges(4, {});
    CHECK(max_matching_bipartite(empty4, VertexSet::of(4, {0, 1}), VertexSet::of(4, {2, 3})).size() == 0);
}

TEST_CASE("hopcroft-karp rejects invalid bipartitions") {
    Graph k3 = oracle::k3();
    CHECK_THROWS_AS(max_matching_bipartite(k3, VertexSet::of(3, {0, 1}), VertexSet::of(3, {2})),
                    std::invalid_argument);
    Graph p4 = oracle::p4();
    CHECK_THROWS_AS(max_matching_bipartite(p4, VertexSet::of(4, {0, 1}), VertexSet::of(4, {2, 3})),
                    std::invalid_argument);
    CHECK_THROWS_AS(max_matching_bipartite(p4, VertexSet::of(4, {0, 2}), VertexSet::of(4, {1})),
                    std::invalid_argument);
}

TEST_CASE("double cover structure") {
    DoubleCover k1 = bipartite_double_cover(oracle::k1());
    CHECK(k1.graph.vertex_count() == 2);
    CHECK(k1.graph.edge_count() == 0);

    // B(C5) = C10: connected 2-regular on 10 vertices
    DoubleCover c5 = bipartite_double_cover(oracle::c5());
    CHECK(c5.graph.vertex_count() == 10);
    CHECK(c5.graph.edge_count() == 10);
    for (int v = 0; v < 10; ++v) CHECK(c5.graph.degree(v) == 2);
    CHECK(is_bipartite(c5.graph).bipartite);
    // connectivity: BFS cover
    std::vector<int> stack{0};
    VertexSet seen(10);
    seen.insert(0);
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : c5.graph.neighbors(v))
            if (!seen.contains(w)) {
                seen.insert(w);
                stack.push_back(w);
            }
    }
    CHECK(seen.size() == 10);

    // B(K3) = C6
    DoubleCover k3 = bipartite_double_cover(oracle::k3());
    CHECK(k3.graph.vertex_count() == 6);
    CHECK(k3.graph.edge_count() == 6);
    for (int v = 0; v < 6; ++v) CHECK(k3.graph.degree(v) == 2);

    // adjacency law: (u,0)(v,1) iff uv in E
    Graph g = generate_gnp(7, 0.5, 77);
    DoubleCover dc = bipartite_double_cover(g);
    for (int u = 0; u < 7; ++u)
        for (int v = 0; v < 7; ++v)
            CHECK(dc.graph.has_edge(u, v + 7) == g.has_edge(u, v));
}

TEST_CASE("exists_matching_into fixtures") {
    Graph p4 = oracle::p4();
    auto r1 = exists_matching_into(p4, VertexSet::of(4, {1}), VertexSet::of(4, {0, 2}));
    CHECK(r1.exists);
    auto r2 = exists_matching_into(p4, VertexSet::of(4, {1, 2}), VertexSet::of(4, {0, 3}));
    REQUIRE(r2.exists);
    CHECK(r2.matching.partner(1) == 0);
    CHECK(r2.matching.partner(2) == 3);

    Graph star = oracle::star13();
    auto r3 = exists_matching_into(star, VertexSet::of(4, {1, 2}), VertexSet::of(4, {0}));
    REQUIRE_FALSE(r3.exists);
    CHECK(r3.violator == VertexSet::of(4, {1, 2}));

    CHECK_THROWS_AS(exists_matching_into(p4, VertexSet::of(4, {1}), VertexSet::of(4, {1, 2})),
                    std::invalid_argument);
}

TEST_CASE("exists_matching_into against the injection oracle") {
    SplitMix64 rng(13);
    for (int t = 0; t < 600; ++t) {
        int n = 5 + static_cast<int>(rng.next_below(4)); // 5..8
        Graph g = generate_gnp(n, 0.35, rng.next());
        uint64_t smask = rng.next() & ((1ull << n) - 1);
        uint64_t umask = rng.next() & ((1ull << n) - 1) & ~smask;
        VertexSet s = oracle::set_of_mask(n, smask), u = oracle::set_of_mask(n, umask);
        auto res = exists_matching_into(g, s, u);
        CHECK(res.exists == oracle::injection_exists(g, s, u));
        if (res.exists) {
            // saturates s, lands in u, and uses real edges
            s.for_each([&](int x) {
                int w = res.matching.partner(x);
                CHECK(w != x);
                CHECK(u.contains(w));
                CHECK(g.has_edge(x, w));
            });
        } else {
            // Hall violator: W subset of s with |N(W) & u| < |W|
            CHECK(res.violator.is_subset_of(s));
            CHECK_FALSE(res.violator.empty());
            CHECK((neighborhood(g, res.violator) & u).size() < res.violator.size());
        }
    }
}

TEST_CASE("koenig-egervary on bipartite graphs: alpha + mu = n") {
    SplitMix64 rng(14);
    for (int t = 0; t < 150; ++t) {
        Graph g = generate_bipartite(2 + t % 4, 2 + (t / 4) % 4, 0.5, rng.next());
        CHECK(oracle::alpha_brute(g) + max_matching_general(g).size() == g.vertex_count());
    }
}

TEST_CASE("matching validation rejects bad mate vectors") {
    Graph p4 = oracle::p4();
    CHECK_THROWS_AS(Matching::from_mate(p4, {1, 0, 3, 2, 0}), std::invalid_argument); // size
    CHECK_THROWS_AS(Matching::from_mate(p4, {2, 1, 0, 3}), std::invalid_argument);    // not edge
    CHECK_THROWS_AS(Matching::from_mate(p4, {1, 2, 1, 3}), std::invalid_argument);    // not involution
    Matching ok = Matching::from_mate(p4, {1, 0, 3, 2});
    CHECK(ok.size() == 2);
    CHECK(ok.pairs() == std::vector<std::pair<int, int>>{{0, 1}, {2, 3}});
}
