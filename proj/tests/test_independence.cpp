#include <doctest.h>

#include "critset/independence.hpp"
#include "critset/search.hpp"
#include "oracles.hpp"

using namespace critset;

TEST_CASE("alpha fixtures") {
    CHECK(alpha(oracle::c5()) == 2);
    CHECK(alpha(oracle::p4()) == 2);
    CHECK(alpha(Graph::from_edges(6, {})) == 6);
    CHECK(alpha(oracle::k1()) == 1);
    CHECK(alpha(oracle::complete(7)) == 1);
}

TEST_CASE("alpha equals brute force exhaustively to n=5") {
    for (int n = 0; n <= 5; ++n)
        oracle::for_all_graphs(n, [](const Graph& g) { CHECK(alpha(g) == oracle::alpha_brute(g)); });
}

TEST_CASE("alpha equals brute force on random graphs to n=14") {
    SplitMix64 rng(21);
    for (int n : {8, 10, 12, 14})
        for (int t = 0; t < 100; ++t) {
            Graph g = generate_gnp(n, 0.15 + 0.08 * (t % 9), rng.next());
            CHECK(alpha(g) == oracle::alpha_brute(g));
        }
}

TEST_CASE("maximum independent set enumeration: order and content") {
    auto p4 = enumerate_maximum_independent_sets(oracle::p4(), 1000);
    REQUIRE(p4.complete);
    REQUIRE(p4.sets.size() == 3);
    CHECK(p4.sets[0] == VertexSet::of(4, {0, 2}));
    CHECK(p4.sets[1] == VertexSet::of(4, {0, 3}));
    CHECK(p4.sets[2] == VertexSet::of(4, {1, 3}));

    auto c5 = enumerate_maximum_independent_sets(oracle::c5(), 1000);
    REQUIRE(c5.complete);
    REQUIRE(c5.sets.size() == 5);
    CHECK(c5.sets[0] == VertexSet::of(5, {0, 2}));
    CHECK(c5.sets[1] == VertexSet::of(5, {0, 3}));
    CHECK(c5.sets[2] == VertexSet::of(5, {1, 3}));
    CHECK(c5.sets[3] == VertexSet::of(5, {1, 4}));
    CHECK(c5.sets[4] == VertexSet::of(5, {2, 4}));

    auto k1 = enumerate_maximum_independent_sets(oracle::k1(), 1000);
    REQUIRE(k1.complete);
    REQUIRE(k1.sets.size() == 1);
    CHECK(k1.sets[0] == VertexSet::of(1, {0}));
}

TEST_CASE("maximum independent set enumeration matches brute force") {
    SplitMix64 rng(22);
    for (int n = 1; n <= 5; ++n)
        oracle::for_all_graphs(n, [n](const Graph& g) {
            auto e = enumerate_maximum_independent_sets(g, 1u << 20);
            REQUIRE(e.complete);
            auto expect = oracle::maximum_independent_masks(g);
            REQUIRE(e.sets.size() == expect.size());
            std::set<uint64_t> got;
            for (const auto& s : e.sets) got.insert(oracle::mask_of_set(s));
            CHECK(got == std::set<uint64_t>(expect.begin(), expect.end()));
            // emitted in canonical order
            for (size_t i = 1; i < e.sets.size(); ++i)
                CHECK(VertexSet::canonical_less(e.sets[i - 1], e.sets[i]));
        });
    for (int t = 0; t < 60; ++t) {
        Graph g = generate_gnp(10, 0.3, rng.next());
        auto e = enumerate_maximum_independent_sets(g, 1u << 20);
        REQUIRE(e.complete);
        CHECK(e.sets.size() == oracle::maximum_independent_masks(g).size());
    }
}

TEST_CASE("enumeration budget signals instead of truncating silently") {
    auto res = enumerate_maximum_independent_sets(oracle::c5(), 2);
    CHECK_FALSE(res.complete);
    CHECK(res.sets.size() <= 2);
    CHECK_THROWS_AS(enumerate_maximum_independent_sets(oracle::c5(), 0), std::invalid_argument);
}

TEST_CASE("omega_summary fixtures") {
    OmegaSummary p4 = omega_summary(oracle::p4(), 1000);
    CHECK(p4.alpha == 2);
    CHECK(p4.core == VertexSet(4));
    CHECK(p4.corona == VertexSet::of(4, {0, 1, 2, 3}));
    CHECK(*p4.mis_count == 3);

    OmegaSummary star = omega_summary(oracle::star13(), 1000);
    CHECK(star.core == VertexSet::of(4, {1, 2, 3}));
    CHECK(star.corona == VertexSet::of(4, {1, 2, 3}));
    CHECK(*star.mis_count == 1);

    OmegaSummary k3 = omega_summary(oracle::k3(), 1000);
    CHECK(k3.core == VertexSet(3));
    CHECK(k3.corona == VertexSet::of(3, {0, 1, 2}));
    CHECK(*k3.mis_count == 3);
}

TEST_CASE("alpha-query core/corona equals enumeration core/corona") {
    auto check = [](const Graph& g) {
        OmegaSummary s = omega_summary(g);
        auto e = enumerate_maximum_independent_sets(g, 1u << 20);
        REQUIRE(e.complete);
        VertexSet inter = e.sets.front(), uni(g.vertex_count());
        for (const auto& m : e.sets) {
            inter &= m;
            uni |= m;
        }
        CHECK(s.core == inter);
        CHECK(s.corona == uni);
        // containment invariants
        CHECK(s.core.is_subset_of(s.corona));
        for (const auto& m : e.sets) {
            CHECK(s.core.is_subset_of(m));
            CHECK(m.is_subset_of(s.corona));
            CHECK(m.size() == s.alpha);
        }
    };
    for (int n = 1; n <= 5; ++n) oracle::for_all_graphs(n, check);
    SplitMix64 rng(23);
    for (int n : {6, 7, 8})
        for (int t = 0; t < 150; ++t) check(generate_gnp(n, 0.2 + 0.1 * (t % 6), rng.next()));
}

TEST_CASE("is_koenig_egervary") {
    CHECK(is_koenig_egervary(oracle::p4()));
    CHECK_FALSE(is_koenig_egervary(oracle::c5()));
    CHECK(is_koenig_egervary(oracle::k1()));
    // every bipartite graph is KE
    SplitMix64 rng(24);
    for (int t = 0; t < 100; ++t)
        CHECK(is_koenig_egervary(generate_bipartite(1 + t % 5, 1 + (t / 5) % 5, 0.4, rng.next())));
}

TEST_CASE("berge maximality criterion, exhaustive to n=6") {
    // S is maximum iff every independent set disjoint from S can be matched
    // into S.
    SplitMix64 rng(25);
    for (int t = 0; t < 250; ++t) {
        int n = 4 + static_cast<int>(rng.next_below(3)); // 4..6
        Graph g = generate_gnp(n, 0.35, rng.next());
        auto adj = oracle::adjacency_masks(g);
        int a = oracle::alpha_brute(g);
        for (uint64_t smask = 0; smask < (1ull << n); ++smask) {
            if (!oracle::independent_mask(adj, smask)) continue;
            VertexSet s = oracle::set_of_mask(n, smask);
            bool all_matched = true;
            for (uint64_t dmask = 0; dmask < (1ull << n) && all_matched; ++dmask) {
                if (dmask & smask) continue;
                if (!oracle::independent_mask(adj, dmask)) continue;
                if (!exists_matching_into(g, oracle::set_of_mask(n, dmask), s).exists)
                    all_matched = false;
            }
            CHECK(all_matched == (std::popcount(smask) == a));
        }
    }
}
