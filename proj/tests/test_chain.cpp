#include <doctest.h>

#include "critset/chain.hpp"
#include "critset/json_io.hpp"
#include "critset/search.hpp"
#include "oracles.hpp"

using namespace critset;

TEST_CASE("chain_report fixtures") {
    ChainReport p4 = chain_report(oracle::p4());
    CHECK(p4.n == 4);
    CHECK(p4.alpha == 2);
    CHECK(*p4.lower == 4);
    CHECK(p4.mid == 4);
    CHECK(p4.upper == 4);
    CHECK(*p4.bound == 4);
    CHECK(p4.is_ke);

    ChainReport c5 = chain_report(oracle::c5());
    CHECK(*c5.lower == 0);
    CHECK(c5.mid == 4);
    CHECK(c5.upper == 5);
    CHECK(*c5.bound == 5);
    CHECK_FALSE(c5.is_ke);
    CHECK(*c5.k_distinct == 1);

    ChainReport k5 = chain_report(oracle::complete(5));
    CHECK(k5.alpha == 1);
    CHECK(*k5.lower == 0);
    CHECK(k5.mid == 2);
    CHECK(k5.upper == 5); // corona = V, core = {}
    CHECK(*k5.k_distinct == 11);
    CHECK(*k5.bound == 13);
}

TEST_CASE("classify_equalities") {
    ChainReport p4 = chain_report(oracle::p4());
    CHECK(*p4.equality_tags ==
          std::vector<EqualityTag>{EqualityTag::LOWER_EQ, EqualityTag::ORDER_TIGHT,
                                   EqualityTag::UPPER_EQ_BOUND, EqualityTag::UPPER_EQ_MID});

    ChainReport c5 = chain_report(oracle::c5());
    CHECK(*c5.equality_tags ==
          std::vector<EqualityTag>{EqualityTag::ORDER_TIGHT, EqualityTag::UPPER_EQ_BOUND});

    ChainReport k5 = chain_report(oracle::complete(5));
    CHECK(*k5.equality_tags == std::vector<EqualityTag>{EqualityTag::ALL_STRICT});

    // partial reports are refused
    ChainReport partial = chain_report(oracle::complete(5), Budgets{1'000'000, 1'000'000, 3});
    CHECK_FALSE(partial.complete());
    CHECK_FALSE(partial.equality_tags.has_value());
    CHECK_THROWS_AS(classify_equalities(partial), std::invalid_argument);
}

TEST_CASE("partial reports keep what the budgets allowed") {
    ChainReport r = chain_report(oracle::complete(5), Budgets{1'000'000, 1'000'000, 2});
    CHECK(r.alpha == 1);
    CHECK(r.upper == 5);
    CHECK(*r.lower == 0);            // critical enumeration finished
    CHECK_FALSE(r.bound.has_value()); // cycles did not
    CHECK_FALSE(r.k_distinct.has_value());
}

TEST_CASE("chain holds on every small graph and random corpora") {
    auto check = [](const Graph& g) {
        ChainReport r = chain_report(g); // throws InvariantViolation on any failure
        REQUIRE(r.complete());
        CHECK(*r.lower <= r.mid);
        CHECK(r.mid <= r.upper);
        CHECK(r.upper <= *r.bound);
        CHECK(r.n <= *r.bound);
        if (r.is_ke) CHECK(r.upper == r.mid);
    };
    for (int n = 0; n <= 4; ++n) oracle::for_all_graphs(n, check);
    SplitMix64 rng(51);
    for (int n : {8, 10})
        for (int t = 0; t < 60; ++t) check(generate_gnp(n, 0.1 + 0.09 * (t % 8), rng.next()));
}

TEST_CASE("bipartite graphs satisfy the whole chain with equality") {
    SplitMix64 rng(52);
    for (int t = 0; t < 120; ++t) {
        Graph g = generate_bipartite(1 + t % 5, 1 + (t / 5) % 5, 0.45, rng.next());
        ChainReport r = chain_report(g);
        REQUIRE(r.complete());
        CHECK(*r.lower == r.mid);
        CHECK(r.upper == r.mid);
        CHECK(r.upper == *r.bound);
        CHECK(r.is_ke);
    }
}

TEST_CASE("verify_constructive_lemmas fixtures") {
    LemmaReport p4 = verify_constructive_lemmas(oracle::p4(), 100, 7);
    CHECK(p4.pairs_checked == 18); // 6 critical sets x 3 maximum sets
    CHECK(p4.exhaustive);
    CHECK(p4.failures.empty());

    LemmaReport k3 = verify_constructive_lemmas(oracle::k3(), 100, 7);
    CHECK(k3.pairs_checked == 3); // only i_c = {} against three singletons
    CHECK(k3.failures.empty());

    LemmaReport star = verify_constructive_lemmas(oracle::star13(), 100, 7);
    CHECK(star.pairs_checked == 1);
    CHECK(star.failures.empty());

    CHECK_THROWS_AS(verify_constructive_lemmas(oracle::p4(), 0, 7), std::invalid_argument);
}

TEST_CASE("verify_constructive_lemmas on random corpora") {
    SplitMix64 rng(53);
    for (int n : {6, 8, 10})
        for (int t = 0; t < 25; ++t) {
            Graph g = generate_gnp(n, 0.2 + 0.2 * (t % 3), rng.next());
            LemmaReport r = verify_constructive_lemmas(g, 40, rng.next());
            CHECK(r.coverage_complete);
            for (const auto& f : r.failures) FAIL_CHECK(f.lemma << ": " << f.witness);
        }
}

TEST_CASE("chain json is stable and carries the exact field set") {
    nlohmann::json j = chain_report(oracle::p4());
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"alpha", "bound", "core_size", "corona_size",
                                           "diadem_size", "equality_tags", "is_ke", "k_distinct",
                                           "ker_size", "lower", "mid", "n", "nucleus_size",
                                           "odd_cycle_total", "upper"});
    nlohmann::json again = chain_report(oracle::p4());
    CHECK(j.dump() == again.dump());
}

TEST_CASE("fault injection reaches the violation path") {
    setenv("CRITSET_FAULT_INJECT", "chain", 1);
    CHECK_THROWS_AS(chain_report(oracle::p4()), InvariantViolation);
    unsetenv("CRITSET_FAULT_INJECT");
    CHECK_NOTHROW(chain_report(oracle::p4()));
}
