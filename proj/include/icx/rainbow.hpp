#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "icx/collapse.hpp"
#include "icx/complex.hpp"
#include "icx/graph.hpp"
#include "icx/outcome.hpp"

namespace icx {

// A rainbow independent set: strictly increasing family indices with one
// vertex chosen from each, all distinct and pairwise non-adjacent.
struct RainbowWitness {
    std::vector<std::pair<int, int>> selections;  // (family index, vertex)
};

// Exhaustive search for a rainbow independent set of size n. `none` is a
// certified refutation. Family members need not be independent sets.
std::optional<RainbowWitness> find_rainbow_independent(const Graph& g, const SetFamily& family, int n);

// Fast path when alpha(G) = n and `targets` lists every independent n-set:
// any rainbow independent n-set must equal one of the targets, so existence
// reduces to a bipartite matching saturating some target. Throws when the
// precondition fails.
bool rainbow_feasibility_by_matching(const Graph& g, const SetFamily& family,
                                     const std::vector<VertexSet>& targets);

struct FNumResult {
    bool exact = false;  // false: f is only a lower bound (cap reached)
    int f = 0;
    std::vector<int> no_rainbow_family;     // indices into `independent_sets`, size f-1 (or cap)
    std::vector<VertexSet> independent_sets;  // the canonical ordering of S
    std::string certificate;                // "exhaustive" or "cap"
};

// f_G(n): the least t such that every multiset of t independent n-sets has a
// rainbow independent n-set, by exhaustive multiset enumeration up to t_cap.
FNumResult f_exact(const Graph& g, int n, int t_cap = 20);

struct HellyReport {
    FNumResult f;
    CollapsibilityNumber c;  // of I_n(G)
    bool holds = false;      // f <= C + 1, conservatively from the bracket
    bool conclusive = false;
};

// Checks f_G(n) <= C(I_n(G)) + 1. A C-bracket passes only through its lower
// end; anything else is inconclusive.
HellyReport check_helly_bound(const Graph& g, int n, std::uint64_t budget = 10'000'000, int t_cap = 20);

struct UnionFReport {
    int alpha1 = 0, alpha2 = 0;
    int f1 = 0, f2 = 0, f_union = 0;
    int bound = 0;  // max(f1, f2 + alpha1)
    bool holds = false;
    bool conclusive = false;
};

// f_{G1+G2}(t1 + t2) <= max(f_{G1}(t1), f_{G2}(t2) + t1).
Outcome<UnionFReport> check_union_f_bound(const Graph& g1, const Graph& g2, int t_cap = 20);

}  // namespace icx
