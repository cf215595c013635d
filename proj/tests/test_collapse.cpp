#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "icx/collapse.hpp"
#include "icx/homology.hpp"

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

}  // namespace

TEST_CASE("free faces") {
    Complex full2 = Complex::complete(VertexSet::range(2));
    auto at0 = free_faces(full2, 0);
    REQUIRE(at0.size() == 1);
    CHECK(at0[0].free_face == VertexSet{});
    CHECK(at0[0].carrier == VertexSet::range(2));

    Complex x = independence_complex(cycle_graph(4), 2);
    CHECK(free_faces(x, 1).empty());  // every vertex lies in two edges

    auto at2 = free_faces(x, 2);
    REQUIRE(at2.size() == 4);  // the four edges, each its own carrier
    for (const CollapseStep& s : at2) CHECK(s.free_face == s.carrier);

    CHECK_THROWS_AS(free_faces(Complex::void_complex(VertexSet::range(2)), 0), std::invalid_argument);
}

TEST_CASE("applying collapses") {
    Complex point = Complex::empty_complex(VertexSet::range(1));
    Complex collapsed = apply_collapse(point, {VertexSet{}, VertexSet{}});
    CHECK(collapsed.is_void());

    Complex full2 = Complex::complete(VertexSet::range(2));
    CHECK(apply_collapse(full2, {VertexSet{}, VertexSet::range(2)}).is_void());

    Complex x = independence_complex(cycle_graph(4), 2);
    Complex after = apply_collapse(x, {VertexSet::of({0, 1}), VertexSet::of({0, 1})});
    CHECK(after.facets() == std::vector<VertexSet>{VertexSet::of({1, 2}), VertexSet::of({0, 3}),
                                                   VertexSet::of({2, 3})});

    CHECK_THROWS_AS(apply_collapse(x, {VertexSet::single(0), VertexSet::of({0, 1})}),
                    std::invalid_argument);  // vertex 0 also lies in {0,3}
    CHECK_THROWS_AS(apply_collapse(x, {VertexSet::single(0), VertexSet::of({0, 2})}),
                    std::invalid_argument);  // carrier is not a facet
}

TEST_CASE("verifying collapse sequences") {
    Complex full3 = Complex::complete(VertexSet::range(3));
    CollapseSequence one{0, {{VertexSet{}, VertexSet::range(3)}}};
    CHECK(verify_sequence(full3, one).ok);

    // Reusing a removed face is illegal, and the index points at the culprit.
    Complex x = independence_complex(cycle_graph(4), 2);
    CollapseSequence bad{2,
                         {{VertexSet::of({0, 1}), VertexSet::of({0, 1})},
                          {VertexSet::of({0, 1}), VertexSet::of({0, 1})}}};
    SequenceCheck check = verify_sequence(x, bad);
    CHECK(!check.ok);
    CHECK(check.failing_step == 1);

    // A sequence that stops early is not a witness.
    CollapseSequence partial{2, {{VertexSet::of({0, 1}), VertexSet::of({0, 1})}}};
    CHECK(!verify_sequence(x, partial).ok);
}

TEST_CASE("collapsibility search on the extremal examples") {
    Complex square = independence_complex(cycle_graph(4), 2);
    CHECK(is_d_collapsible(square, 1).status == CollapseStatus::refuted);
    CollapseSearchResult w2 = is_d_collapsible(square, 2);
    REQUIRE(w2.status == CollapseStatus::witness);
    CHECK(verify_sequence(square, w2.witness).ok);

    Complex i3c6 = independence_complex(cycle_graph(6), 3);
    CHECK(is_d_collapsible(i3c6, 3).status == CollapseStatus::refuted);
    CollapseSearchResult w4 = is_d_collapsible(i3c6, 4);
    REQUIRE(w4.status == CollapseStatus::witness);
    CHECK(verify_sequence(i3c6, w4.witness).ok);

    Complex point = Complex::empty_complex(VertexSet::range(1));
    CollapseSearchResult w0 = is_d_collapsible(point, 0);
    REQUIRE(w0.status == CollapseStatus::witness);
    CHECK(w0.witness.steps.size() == 1);
}

TEST_CASE("refutation after a dead-end branch") {
    // Triangle with a pendant edge: the only size-1 move strands the bare
    // triangle, so 1-collapsibility is refuted only after backtracking.
    Complex x = Complex::from_facets(VertexSet::range(4),
                                     {VertexSet::of({0, 1}), VertexSet::of({1, 2}), VertexSet::of({0, 2}),
                                      VertexSet::of({2, 3})});
    CollapseSearchResult refute = is_d_collapsible(x, 1);
    CHECK(refute.status == CollapseStatus::refuted);
    CHECK(refute.nodes > 2);  // more than the instant dead end
    CHECK(is_d_collapsible(x, 2).status == CollapseStatus::witness);
    CollapsibilityNumber c = collapsibility_number(x);
    CHECK(c.exact);
    CHECK(c.value == 2);
}

TEST_CASE("witness validity depends on the declared d") {
    Complex x = independence_complex(cycle_graph(4), 2);
    CollapseSearchResult found = is_d_collapsible(x, 2);
    REQUIRE(found.status == CollapseStatus::witness);
    CHECK(verify_sequence(x, found.witness).ok);
    CollapseSequence understated = found.witness;
    understated.d = 1;  // steps of size 2 are now illegal
    CHECK(!verify_sequence(x, understated).ok);
}

TEST_CASE("collapsibility numbers") {
    CollapsibilityNumber square = collapsibility_number(independence_complex(cycle_graph(4), 2));
    CHECK(square.exact);
    CHECK(square.value == 2);
    REQUIRE(square.witness.has_value());
    CHECK(verify_sequence(independence_complex(cycle_graph(4), 2), *square.witness).ok);

    // Chordal graph with alpha >= 3: the collapsibility number is n-1 = 2.
    Graph chordal = random_chordal(8, 3);
    REQUIRE(is_chordal(chordal).chordal);
    REQUIRE(independence_number(chordal) >= 3);
    CollapsibilityNumber c = collapsibility_number(independence_complex(chordal, 3));
    CHECK(c.exact);
    CHECK(c.value == 2);

    CollapsibilityNumber trivial = collapsibility_number(Complex::complete(VertexSet::range(5)));
    CHECK(trivial.exact);
    CHECK(trivial.value == 0);

    CollapsibilityNumber v = collapsibility_number(Complex::void_complex(VertexSet::range(2)));
    CHECK(v.exact);
    CHECK(v.value == 0);
}

TEST_CASE("dodecahedral complex reports a bracket") {
    Complex i8 = independence_complex(dodecahedral_graph(), 8);
    CollapsibilityNumber c = collapsibility_number(i8, 200'000);
    CHECK(!c.exact);
    CHECK(c.lower == 16);
    CHECK(c.upper == 17);
}

TEST_CASE("witnesses stay valid one level up") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 15; ++i) {
        Complex x = random_complex(rng, 5);
        for (int d = 0; d <= x.dimension() + 1; ++d) {
            CollapseSearchResult res = is_d_collapsible(x, d, 500'000);
            if (res.status != CollapseStatus::witness) continue;
            CollapseSearchResult up = is_d_collapsible(x, d + 1, 500'000);
            CHECK(up.status == CollapseStatus::witness);
            break;
        }
    }
}

TEST_CASE("proper collapse steps preserve homology") {
    // Only steps with free_face strictly below the carrier are deformation
    // retractions; deleting a whole free facet (size <= d) is a legal
    // d-collapse move but can change the homotopy type.
    std::mt19937_64 rng(29);
    int done = 0;
    for (int i = 0; i < 60 && done < 25; ++i) {
        Complex x = random_complex(rng, 5);
        std::vector<CollapseStep> proper;
        for (const CollapseStep& s : free_faces(x, x.dimension() + 1))
            if (s.free_face != s.carrier) proper.push_back(s);
        if (proper.empty()) continue;
        ++done;
        const CollapseStep& step = proper[rng() % proper.size()];
        auto before = reduced_betti(x);
        auto after = reduced_betti(apply_collapse(x, step));
        REQUIRE(before.ok());
        REQUIRE(after.ok());
        CHECK(*before == *after);
    }
    CHECK(done >= 20);

    // The facet-deletion counterexample: removing the free facet {0,2} from
    // the path 0-2-1 disconnects it.
    Complex path = Complex::from_missing_faces(VertexSet::range(3), {VertexSet::of({0, 1})});
    Complex cut = apply_collapse(path, {VertexSet::of({0, 2}), VertexSet::of({0, 2})});
    auto before = reduced_betti(path);
    auto after = reduced_betti(cut);
    CHECK(before->get(0) == 0);
    CHECK(after->get(0) == 1);
}

TEST_CASE("links never exceed the ambient collapsibility") {
    std::mt19937_64 rng(41);
    int done = 0;
    for (int i = 0; i < 40 && done < 15; ++i) {
        Complex x = random_complex(rng, 5);
        CollapsibilityNumber cx = collapsibility_number(x, 500'000);
        if (!cx.exact) continue;
        // Pick a face: a facet works, and so does a vertex of it.
        VertexSet facet = x.facets().front();
        if (facet.empty()) continue;
        Complex link = x.link(VertexSet::single(facet.lowest()));
        CollapsibilityNumber cl = collapsibility_number(link, 500'000);
        if (!cl.exact) continue;
        ++done;
        CHECK(cl.value <= cx.value);
    }
    CHECK(done >= 10);
}

TEST_CASE("joining a complete complex changes nothing") {
    std::mt19937_64 rng(43);
    for (int i = 0; i < 10; ++i) {
        Complex x = random_complex(rng, 5);
        VertexSet extra;
        for (int v = 8; v < 10; ++v) extra = extra.with(v);
        Complex padded = join(x, Complex::complete(extra));
        CollapsibilityNumber cx = collapsibility_number(x, 500'000);
        CollapsibilityNumber cp = collapsibility_number(padded, 500'000);
        if (cx.exact && cp.exact) CHECK(cx.value == cp.value);
    }
}

TEST_CASE("missing-face size bound with equality at disjoint covers") {
    // Two disjoint missing pairs on four vertices: C = floor(1*4/2) = 2.
    Complex tight = Complex::from_missing_faces(VertexSet::range(4),
                                                {VertexSet::of({0, 1}), VertexSet::of({2, 3})});
    CollapsibilityNumber c_tight = collapsibility_number(tight);
    CHECK(c_tight.exact);
    CHECK(c_tight.value == 2);

    // Overlapping pairs: strictly below the bound.
    Complex loose = Complex::from_missing_faces(VertexSet::range(4),
                                                {VertexSet::of({0, 1}), VertexSet::of({1, 2})});
    CollapsibilityNumber c_loose = collapsibility_number(loose);
    CHECK(c_loose.exact);
    CHECK(c_loose.value < 2);

    // The join of r disjoint simplex boundaries attains floor(d|V|/(d+1)).
    std::vector<VertexSet> parts;
    for (int r = 0; r < 2; ++r) {
        VertexSet m;
        for (int v = 3 * r; v < 3 * r + 3; ++v) m = m.with(v);
        parts.push_back(m);
    }
    Complex joined = Complex::from_missing_faces(VertexSet::range(6), parts);
    CollapsibilityNumber c_join = collapsibility_number(joined);
    CHECK(c_join.exact);
    CHECK(c_join.value == 4);  // floor(2*6/3)
}
