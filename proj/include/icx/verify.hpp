#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "icx/collapse.hpp"
#include "icx/complex.hpp"
#include "icx/graph.hpp"
#include "icx/vertex_set.hpp"

namespace icx {

enum class Verdict { pass, fail, inconclusive };

std::string to_string(Verdict v);

// One bound check or reproduction run. A `fail` verdict is only issued when
// both sides of the comparison were computed exactly; brackets that cannot
// settle the claim yield `inconclusive`.
struct CheckReport {
    std::string check;
    std::string instance;
    std::string claimed;
    std::string computed;
    Verdict verdict = Verdict::inconclusive;
    double seconds = 0.0;
};

nlohmann::json report_to_json(const CheckReport& r);

// C(I_n(G)) <= n-1 for chordal G, with equality when alpha(G) >= n.
// Throws std::invalid_argument on non-chordal input.
CheckReport check_chordal_bound(const Graph& g, int n, std::uint64_t budget = 10'000'000);

// C(I_n(G)) <= max_degree(G) * (n-1).
CheckReport check_max_degree_bound(const Graph& g, int n, std::uint64_t budget = 10'000'000);

// C(I_2(G)) <= ceil((max_degree + 1) / 2).
CheckReport check_n2_bound(const Graph& g, std::uint64_t budget = 10'000'000);

// C(I_3(G)) <= max_degree + 2 when the degree bound is even, else + 1.
CheckReport check_n3_bound(const Graph& g, std::uint64_t budget = 10'000'000);

// C(lk(I_n(G), A)) <= floor((n-1) * max_degree / 2) for claw-free G and an
// independent (n-1)-set A. Throws on a claw or a bad A.
CheckReport check_clawfree_link_bound(const Graph& g, int n, VertexSet a, std::uint64_t budget = 10'000'000);

// C(X) <= floor(d |V| / (d+1)) when every missing face has at most d+1
// vertices, with equality when the missing faces are |V|/(d+1) disjoint
// (d+1)-sets covering the ground set. Throws on an oversized missing face.
CheckReport check_vertexset_bound(const Complex& x, int d, std::uint64_t budget = 10'000'000);

enum class Profile { quick, full };

// The reproduction suite: one report per criterion. `quick` establishes the
// dodecahedral homology through the dual nerve only; `full` also runs the
// direct exact elimination in degrees 14..16.
std::vector<CheckReport> verify_paper(Profile profile);

}  // namespace icx
