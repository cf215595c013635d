#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "icx/outcome.hpp"
#include "icx/vertex_set.hpp"

namespace icx {

// Simple undirected graph on vertices {0, ..., n-1}, n <= 64.
// Immutable after construction; all queries are pure.
class Graph {
public:
    Graph() = default;

    // Builds a graph from an (unordered) edge list. Duplicate edges are
    // merged; self-loops and out-of-range endpoints are rejected.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    VertexSet vertices() const { return VertexSet::range(n_); }

    bool adjacent(int u, int v) const { return adj_[static_cast<std::size_t>(u)].contains(v); }
    VertexSet neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    VertexSet closed_neighborhood(int v) const { return adj_[static_cast<std::size_t>(v)].with(v); }
    VertexSet neighbors_of_set(VertexSet a) const;

    int degree(int v) const { return adj_[static_cast<std::size_t>(v)].size(); }
    int max_degree() const;
    int edge_count() const;
    std::vector<std::pair<int, int>> edges() const;

    bool is_independent(VertexSet s) const;
    bool is_clique(VertexSet s) const;

private:
    int n_ = 0;
    std::vector<VertexSet> adj_;
};

// alpha(G[U]): size of a maximum independent set inside U, by branch and bound.
int independence_number(const Graph& g, VertexSet u);
inline int independence_number(const Graph& g) { return independence_number(g, g.vertices()); }

// All independent sets of cardinality exactly n inside `within`, listed in
// increasing bit-mask order (equivalently, colex on sorted vertex lists).
std::vector<VertexSet> independent_sets_of_size(const Graph& g, int n, VertexSet within);
inline std::vector<VertexSet> independent_sets_of_size(const Graph& g, int n) {
    return independent_sets_of_size(g, n, g.vertices());
}

struct ChordalityResult {
    bool chordal = false;
    // Perfect elimination order (repeated simplicial-vertex deletion), valid
    // only when chordal.
    std::vector<int> elimination_order;
};

ChordalityResult is_chordal(const Graph& g);

// True iff g has no induced K_{1,3}.
bool is_claw_free(const Graph& g);

struct Coloring {
    int colors = 0;
    std::vector<int> classes;  // classes[v] in [0, colors)
};

// Exact chromatic number with a witness coloring. Refuses graphs larger than
// exact_limit vertices.
Outcome<Coloring> chromatic_number(const Graph& g, int exact_limit = 32);

// --- generators -----------------------------------------------------------

Graph cycle_graph(int m);                // m >= 3
Graph path_graph(int m);                 // m >= 1
Graph complete_graph(int m);
Graph complete_multipartite(const std::vector<int>& part_sizes);
Graph circulant(int m, const std::vector<int>& distances);  // distances in [1, m/2]
Graph generalized_petersen(int m, int j);                   // m >= 3, 1 <= j < m/2

// The dodecahedral graph as the generalized Petersen graph GP(10, 2).
// Outer vertices a_1..a_10 map to 0..9, inner vertices b_1..b_10 to 10..19;
// edges are {a_i, b_i}, {a_i, a_{i+1}}, {b_i, b_{i+2}} with indices mod 10.
Graph dodecahedral_graph();

Graph disjoint_union(const std::vector<Graph>& parts);

// Random graph with max degree <= max_deg: uniform edge proposals, rejecting
// any that would exceed the cap. Reproducible from the seed.
Graph random_max_degree(int m, int max_deg, std::uint64_t seed);

// Random chordal graph built by inserting simplicial vertices: each new
// vertex is joined to a random subset of a random existing clique.
Graph random_chordal(int m, std::uint64_t seed);

}  // namespace icx
