#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "icx/homology.hpp"
#include "oracles.hpp"

using namespace icx;

namespace {

Complex random_complex(std::mt19937_64& rng, int max_vertices = 6) {
    int n = 3 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_vertices - 2));
    std::vector<VertexSet> missing;
    for (int t = 0; t < 1 + static_cast<int>(rng() % 3); ++t) {
        VertexSet m;
        int size = 2 + static_cast<int>(rng() % 2);
        while (m.size() < std::min(size, n)) m = m.with(static_cast<int>(rng() % static_cast<std::uint64_t>(n)));
        missing.push_back(m);
    }
    return Complex::from_missing_faces(VertexSet::range(n), missing);
}

BettiVector single(int degree, std::int64_t value) {
    BettiVector b;
    b.set(degree, value);
    return b;
}

}  // namespace

TEST_CASE("extremal independence complexes have one-dimensional homology") {
    auto b1 = reduced_betti(independence_complex(cycle_graph(4), 2));
    REQUIRE(b1.ok());
    CHECK(*b1 == single(1, 1));

    auto b2 = reduced_betti(independence_complex(cycle_graph(6), 3));
    REQUIRE(b2.ok());
    CHECK(*b2 == single(3, 1));
}

TEST_CASE("simplex boundaries are spheres") {
    for (int d = 1; d <= 4; ++d) {
        auto betti = reduced_betti(Complex::simplex_boundary(VertexSet::range(d + 2)));
        REQUIRE(betti.ok());
        CHECK(*betti == single(d, 1));
    }
}

TEST_CASE("empty and void complexes") {
    auto b_empty = reduced_betti(Complex::empty_complex(VertexSet::range(3)));
    REQUIRE(b_empty.ok());
    CHECK(*b_empty == single(-1, 1));
    auto b_void = reduced_betti(Complex::void_complex(VertexSet::range(3)));
    REQUIRE(b_void.ok());
    CHECK(*b_void == BettiVector{});
    auto b_full = reduced_betti(Complex::complete(VertexSet::range(4)));
    REQUIRE(b_full.ok());
    CHECK(*b_full == BettiVector{});
}

TEST_CASE("agreement with the dense Bareiss oracle") {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 40; ++i) {
        Complex x = random_complex(rng);
        auto fast = reduced_betti(x);
        REQUIRE(fast.ok());
        CHECK(*fast == oracle::naive_betti(x));
    }
}

TEST_CASE("single-degree computation matches the full vector") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 25; ++i) {
        Complex x = random_complex(rng);
        auto full = reduced_betti(x);
        REQUIRE(full.ok());
        for (int degree = -1; degree <= x.dimension() + 1; ++degree) {
            auto one = betti_in_degree(x, degree);
            REQUIRE(one.ok());
            CHECK(*one == full->get(degree));
        }
    }
    CHECK(*betti_in_degree(Complex::complete(VertexSet::range(5)), 2) == 0);
}

TEST_CASE("boundary maps compose to zero") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 20; ++i) {
        Complex x = random_complex(rng);
        std::vector<std::vector<VertexSet>> layers;
        for (int c = 0; c <= x.ground_set().size(); ++c) {
            auto layer = x.faces_of_cardinality(c);
            if (c > 0 && layer.empty()) break;
            layers.push_back(layer);
        }
        for (std::size_t c = 1; c + 1 < layers.size(); ++c) {
            BoundaryMatrix lower = boundary_matrix(layers[c - 1], layers[c]);
            BoundaryMatrix upper = boundary_matrix(layers[c], layers[c + 1]);
            for (const auto& col : upper.columns) {
                std::vector<int> acc(static_cast<std::size_t>(lower.rows), 0);
                for (auto [mid, sign] : col)
                    for (auto [row, s2] : lower.columns[static_cast<std::size_t>(mid)])
                        acc[static_cast<std::size_t>(row)] += sign * s2;
                for (int v : acc) CHECK(v == 0);
            }
        }
    }
}

TEST_CASE("dual nerve route") {
    auto c4 = betti_via_dual_nerve(cycle_graph(4), 2);
    REQUIRE(c4.ok());
    CHECK(*c4 == single(1, 1));

    auto c6 = betti_via_dual_nerve(cycle_graph(6), 3);
    REQUIRE(c6.ok());
    CHECK(*c6 == single(3, 1));

    auto dodec = betti_via_dual_nerve(dodecahedral_graph(), 8);
    REQUIRE(dodec.ok());
    CHECK(*dodec == single(15, 4));

    CHECK_THROWS_AS(betti_via_dual_nerve(cycle_graph(4), 3), std::invalid_argument);

    // Agreement with the direct computation on random graphs.
    std::mt19937_64 rng(17);
    int done = 0;
    for (int i = 0; i < 60 && done < 20; ++i) {
        Graph g = random_max_degree(6, 3, rng());
        int n = 2 + static_cast<int>(rng() % 2);
        if (independence_number(g) < n) continue;
        ++done;
        auto via_nerve = betti_via_dual_nerve(g, n);
        auto direct = reduced_betti(independence_complex(g, n));
        REQUIRE(via_nerve.ok());
        REQUIRE(direct.ok());
        CHECK(*via_nerve == *direct);
    }
    CHECK(done == 20);
}

TEST_CASE("Kuenneth convolution for joins") {
    Complex s1a = Complex::simplex_boundary(VertexSet::range(3));
    VertexSet other;
    for (int v = 3; v < 6; ++v) other = other.with(v);
    Complex s1b = Complex::simplex_boundary(other);
    auto joined = reduced_betti(join(s1a, s1b));
    REQUIRE(joined.ok());
    CHECK(*joined == single(3, 1));  // S^1 * S^1 = S^3

    std::mt19937_64 rng(31);
    for (int i = 0; i < 20; ++i) {
        Complex x = random_complex(rng, 4);
        Complex y = random_complex(rng, 4).relabeled({8, 9, 10, 11, 12, 13});
        auto bx = reduced_betti(x);
        auto by = reduced_betti(y);
        auto bj = reduced_betti(join(x, y));
        REQUIRE(bj.ok());
        CHECK(betti_convolution(*bx, *by, 1) == *bj);
    }
}

TEST_CASE("leray numbers") {
    auto l1 = leray_number(independence_complex(cycle_graph(4), 2));
    REQUIRE(l1.ok());
    CHECK(*l1 == 2);

    auto l2 = leray_number(Complex::complete(VertexSet::range(5)));
    REQUIRE(l2.ok());
    CHECK(*l2 == 0);

    auto l3 = leray_number(independence_complex(cycle_graph(6), 3));
    REQUIRE(l3.ok());
    CHECK(*l3 == 4);

    CHECK(!leray_number(Complex::complete(VertexSet::range(16)), 14).ok());  // refusal
}

TEST_CASE("leray lower bounds") {
    CHECK(leray_lower_bound(independence_complex(dodecahedral_graph(), 8)) == 16);
    CHECK(leray_lower_bound(Complex::complete(VertexSet::range(4))) == 0);
    CHECK(leray_lower_bound(Complex::empty_complex(VertexSet::range(3))) == 0);
    // Restricted to an independent pair, I_2 looks like a 0-sphere.
    Complex x = independence_complex(cycle_graph(4), 2);
    CHECK(leray_lower_bound(x, {VertexSet::of({0, 2})}) == 1);
}

TEST_CASE("disjoint unions") {
    Graph p2 = path_graph(2);
    auto two_edges = union_leray_check({p2, p2});
    REQUIRE(two_edges.ok());
    CHECK(two_edges->union_leray == 1);
    CHECK(two_edges->predicted == 1);
    CHECK(two_edges->equality);
    CHECK(two_edges->betti_identity);

    auto mixed = union_leray_check({p2, cycle_graph(4)});
    REQUIRE(mixed.ok());
    CHECK(mixed->union_leray == 3);
    CHECK(mixed->equality);
    CHECK(mixed->betti_identity);

    auto solo = union_leray_check({cycle_graph(4)});
    REQUIRE(solo.ok());
    CHECK(solo->union_leray == solo->predicted);  // formula degenerates to l_1
}

TEST_CASE("disjoint dodecahedra lower bounds compose") {
    // The k = 1 base is computational; for k >= 2 the union theorem turns
    // per-part bounds l_i >= 16 into l >= sum l_i + k - 1 = 17k - 1.
    int base = leray_lower_bound(independence_complex(dodecahedral_graph(), 8));
    CHECK(base == 16);
    for (int k = 2; k <= 4; ++k) {
        int predicted = k * base + k - 1;
        CHECK(predicted == 17 * k - 1);
        CHECK(predicted > 2 * (8 * k - 1));  // violates the degree-3 conjecture bound
    }
}

TEST_CASE("independence numbers agree with enumeration on subsets") {
    std::mt19937_64 rng(77);
    for (int i = 0; i < 20; ++i) {
        Graph g = random_max_degree(9, 4, rng());
        VertexSet u;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (rng() & 1) u = u.with(v);
        int alpha = independence_number(g, u);
        if (alpha > 0) CHECK(!independent_sets_of_size(g, alpha, u).empty());
        CHECK(independent_sets_of_size(g, alpha + 1, u).empty());
    }
}

TEST_CASE("face limits refuse politely") {
    HomologyOptions tight;
    tight.max_faces = 10;
    auto refused = reduced_betti(Complex::complete(VertexSet::range(6)), tight);
    CHECK(!refused.ok());
    CHECK(refused.refusal_reason().find("limit") != std::string::npos);
}
