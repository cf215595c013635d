#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "icx/rainbow.hpp"
#include "oracles.hpp"

using namespace icx;

namespace {

SetFamily family_of(const Graph& g, std::vector<VertexSet> sets) {
    return SetFamily{g.vertices(), std::move(sets)};
}

bool witness_is_valid(const Graph& g, const SetFamily& family, int n, const RainbowWitness& w) {
    if (static_cast<int>(w.selections.size()) != n) return false;
    VertexSet chosen;
    int last_index = -1;
    for (auto [i, v] : w.selections) {
        if (i <= last_index) return false;  // indices strictly increasing
        last_index = i;
        if (!family.sets[static_cast<std::size_t>(i)].contains(v)) return false;
        if (chosen.contains(v)) return false;
        chosen = chosen.with(v);
    }
    return g.is_independent(chosen);
}

}  // namespace

TEST_CASE("rainbow search on the square") {
    Graph c4 = cycle_graph(4);
    VertexSet diag02 = VertexSet::of({0, 2}), diag13 = VertexSet::of({1, 3});

    CHECK(!find_rainbow_independent(c4, family_of(c4, {diag02, diag13}), 2).has_value());

    auto found = find_rainbow_independent(c4, family_of(c4, {diag02, diag13, diag02}), 2);
    REQUIRE(found.has_value());
    CHECK(witness_is_valid(c4, family_of(c4, {diag02, diag13, diag02}), 2, *found));

    // n singleton sets forming an independent set: immediate witness.
    auto singles = find_rainbow_independent(c4, family_of(c4, {VertexSet::single(0), VertexSet::single(2)}), 2);
    REQUIRE(singles.has_value());

    // Fewer sets than n: trivially none.
    CHECK(!find_rainbow_independent(c4, family_of(c4, {diag02}), 2).has_value());
}

TEST_CASE("refutations agree with the brute-force oracle") {
    std::mt19937_64 rng(271);
    for (int trial = 0; trial < 60; ++trial) {
        Graph g = random_max_degree(6, 3, rng());
        int n = 2 + static_cast<int>(rng() % 2);
        int count = 1 + static_cast<int>(rng() % 4);
        std::vector<VertexSet> sets;
        for (int i = 0; i < count; ++i) {
            VertexSet s;
            int size = 1 + static_cast<int>(rng() % 3);
            while (s.size() < size) s = s.with(static_cast<int>(rng() % static_cast<std::uint64_t>(6)));
            sets.push_back(s);
        }
        bool fast = find_rainbow_independent(g, family_of(g, sets), n).has_value();
        CHECK(fast == oracle::naive_rainbow_exists(g, sets, n));
    }
}

TEST_CASE("matching fast path agrees with backtracking") {
    std::mt19937_64 rng(997);
    int done = 0;
    for (int trial = 0; trial < 200 && done < 40; ++trial) {
        Graph g = random_max_degree(7, 3, rng());
        int alpha = independence_number(g);
        if (alpha < 2 || alpha > 4) continue;
        std::vector<VertexSet> targets = independent_sets_of_size(g, alpha);
        int count = 2 + static_cast<int>(rng() % (alpha + 2));
        std::vector<VertexSet> sets;
        for (int i = 0; i < count; ++i)
            sets.push_back(targets[rng() % targets.size()]);
        ++done;
        bool by_matching = rainbow_feasibility_by_matching(g, family_of(g, sets), targets);
        bool by_search = find_rainbow_independent(g, family_of(g, sets), alpha).has_value();
        CHECK(by_matching == by_search);
    }
    CHECK(done == 40);

    Graph c6 = cycle_graph(6);
    CHECK_THROWS_AS(
        rainbow_feasibility_by_matching(c6, family_of(c6, {VertexSet::of({0, 2, 4})}),
                                        {VertexSet::of({0, 2, 4})}),
        std::invalid_argument);  // targets incomplete: {1,3,5} missing
}

TEST_CASE("rainbow numbers of small cycles") {
    FNumResult c4 = f_exact(cycle_graph(4), 2);
    CHECK(c4.exact);
    CHECK(c4.f == 3);
    REQUIRE(c4.no_rainbow_family.size() == 2);

    FNumResult c6 = f_exact(cycle_graph(6), 3);
    CHECK(c6.exact);
    CHECK(c6.f == 5);
    // The extremal family doubles each of the two independent triples.
    REQUIRE(c6.no_rainbow_family.size() == 4);
    SetFamily extremal{cycle_graph(6).vertices(), {}};
    for (int i : c6.no_rainbow_family) extremal.sets.push_back(c6.independent_sets[static_cast<std::size_t>(i)]);
    CHECK(!find_rainbow_independent(cycle_graph(6), extremal, 3).has_value());

    FNumResult p2 = f_exact(path_graph(2), 1);
    CHECK(p2.exact);
    CHECK(p2.f == 1);

    // No independent pairs at all: the property holds vacuously.
    FNumResult k4 = f_exact(complete_graph(4), 2);
    CHECK(k4.exact);
    CHECK(k4.f == 1);

    FNumResult capped = f_exact(cycle_graph(6), 3, 3);
    CHECK(!capped.exact);
    CHECK(capped.certificate == "cap");
    CHECK(capped.f == 4);  // lower bound from the no-rainbow family of size 3
}

TEST_CASE("cycle powers are tight for the even-degree bound") {
    // Three pairwise-disjoint independent pairs, each offered once: no rainbow.
    Graph g42 = circulant(6, {1, 2});
    std::vector<VertexSet> pairs = independent_sets_of_size(g42, 2);
    REQUIRE(pairs.size() == 3);
    CHECK(!find_rainbow_independent(g42, family_of(g42, pairs), 2).has_value());
    FNumResult f42 = f_exact(g42, 2);
    CHECK(f42.exact);
    CHECK(f42.f == 4);  // floor((4/2+1)(2-1)) + 1

    FNumResult f22 = f_exact(cycle_graph(4), 2);
    CHECK(f22.f == 3);  // floor((2/2+1)(2-1)) + 1
}

TEST_CASE("appending a set preserves rainbows") {
    std::mt19937_64 rng(131);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = random_max_degree(6, 3, rng());
        int n = 2;
        std::vector<VertexSet> sets;
        for (int i = 0; i < 3; ++i) {
            VertexSet s;
            while (s.size() < 2) s = s.with(static_cast<int>(rng() % 6));
            sets.push_back(s);
        }
        if (!find_rainbow_independent(g, family_of(g, sets), n).has_value()) continue;
        VertexSet extra;
        while (extra.size() < 2) extra = extra.with(static_cast<int>(rng() % 6));
        sets.push_back(extra);
        CHECK(find_rainbow_independent(g, family_of(g, sets), n).has_value());
    }
}

TEST_CASE("helly-type bound") {
    HellyReport c4 = check_helly_bound(cycle_graph(4), 2);
    CHECK(c4.conclusive);
    CHECK(c4.f.f == 3);
    CHECK(c4.c.value == 2);
    CHECK(c4.holds);

    HellyReport c6 = check_helly_bound(cycle_graph(6), 3);
    CHECK(c6.conclusive);
    CHECK(c6.f.f == 5);
    CHECK(c6.c.value == 4);
    CHECK(c6.holds);

    // Chordal graphs: f <= (n-1) + 1 = 2 at n = 2.
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Graph g = random_chordal(7, seed);
        HellyReport r = check_helly_bound(g, 2);
        CHECK(r.conclusive);
        CHECK(r.holds);
        CHECK(r.f.f <= 2);
    }
}

TEST_CASE("claw-free graphs meet the even-degree rainbow bound") {
    // f_G(n) <= floor((D/2 + 1)(n-1)) + 1 for claw-free G with max degree D.
    std::mt19937_64 rng(61);
    int done = 0;
    for (int trial = 0; trial < 400 && done < 60; ++trial) {
        Graph g = random_max_degree(7, 3, rng());
        if (!is_claw_free(g)) continue;
        int n = 2 + static_cast<int>(rng() % 2);
        FNumResult f = f_exact(g, n, 12);
        if (!f.exact) continue;
        ++done;
        int delta = g.max_degree();
        CHECK(f.f <= (delta + 2) * (n - 1) / 2 + 1);
    }
    CHECK(done >= 50);

    for (int m : {3, 4, 5, 6, 7}) {  // cycles are claw-free with max degree 2
        FNumResult f = f_exact(cycle_graph(m), 2, 12);
        REQUIRE(f.exact);
        CHECK(f.f <= 3);
    }
}

TEST_CASE("matching path accepts n copies of one target") {
    Graph c6 = cycle_graph(6);
    std::vector<VertexSet> targets = independent_sets_of_size(c6, 3);
    SetFamily family{c6.vertices(), {targets[0], targets[0], targets[0]}};
    CHECK(rainbow_feasibility_by_matching(c6, family, targets));

    SetFamily split{c6.vertices(), {targets[0], targets[0], targets[1], targets[1]}};
    CHECK(!rainbow_feasibility_by_matching(c6, split, targets));  // needs 3 sets meeting one triple
}

TEST_CASE("disjoint union rainbow bound") {
    Graph p2 = path_graph(2);
    auto same = check_union_f_bound(p2, p2);
    REQUIRE(same.ok());
    CHECK(same->f1 == 1);
    CHECK(same->f2 == 1);
    CHECK(same->f_union <= 2);
    CHECK(same->holds);

    auto mixed = check_union_f_bound(cycle_graph(4), p2);
    REQUIRE(mixed.ok());
    CHECK(mixed->holds);
    auto swapped = check_union_f_bound(p2, cycle_graph(4));
    REQUIRE(swapped.ok());
    CHECK(swapped->holds);
}
