#include "icx/graph.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

namespace icx {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0 || n > kMaxVertices)
        throw std::invalid_argument("graph size must be in [0, 64], got " + std::to_string(n));
    Graph g;
    g.n_ = n;
    g.adj_.assign(static_cast<std::size_t>(n), VertexSet{});
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) + "," +
                                        std::to_string(v) + ")");
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        g.adj_[static_cast<std::size_t>(u)] = g.adj_[static_cast<std::size_t>(u)].with(v);
        g.adj_[static_cast<std::size_t>(v)] = g.adj_[static_cast<std::size_t>(v)].with(u);
    }
    return g;
}

VertexSet Graph::neighbors_of_set(VertexSet a) const {
    VertexSet out;
    for (int v : a) out = out | neighbors(v);
    return out;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

int Graph::edge_count() const {
    int total = 0;
    for (int v = 0; v < n_; ++v) total += degree(v);
    return total / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

bool Graph::is_independent(VertexSet s) const {
    for (int v : s)
        if (neighbors(v).intersects(s)) return false;
    return true;
}

bool Graph::is_clique(VertexSet s) const {
    for (int v : s)
        if (!(s.without(v)).subset_of(neighbors(v))) return false;
    return true;
}

namespace {

// Branch and bound for maximum independent set on the candidate mask.
int alpha_search(const Graph& g, VertexSet candidates, int chosen, int& best) {
    if (chosen + candidates.size() <= best) return best;
    if (candidates.empty()) {
        best = std::max(best, chosen);
        return best;
    }
    // Branch on a vertex of maximum degree within the candidate set.
    int pivot = -1, pivot_deg = -1;
    for (int v : candidates) {
        int d = (g.neighbors(v) & candidates).size();
        if (d > pivot_deg) {
            pivot_deg = d;
            pivot = v;
        }
    }
    alpha_search(g, candidates - g.closed_neighborhood(pivot), chosen + 1, best);
    alpha_search(g, candidates.without(pivot), chosen, best);
    return best;
}

}  // namespace

int independence_number(const Graph& g, VertexSet u) {
    if (!u.subset_of(g.vertices())) throw std::invalid_argument("independence_number: U not within graph");
    int best = 0;
    return alpha_search(g, u, 0, best);
}

namespace {

void enumerate_independent(const Graph& g, VertexSet allowed, int start, int remaining, VertexSet current,
                           std::vector<VertexSet>& out) {
    if (remaining == 0) {
        out.push_back(current);
        return;
    }
    for (int v = start; v < g.vertex_count(); ++v) {
        if (!allowed.contains(v)) continue;
        if (g.neighbors(v).intersects(current)) continue;
        if (g.vertex_count() - v < remaining) break;
        enumerate_independent(g, allowed, v + 1, remaining - 1, current.with(v), out);
    }
}

}  // namespace

std::vector<VertexSet> independent_sets_of_size(const Graph& g, int n, VertexSet within) {
    if (n < 0) throw std::invalid_argument("independent_sets_of_size: n must be >= 0");
    std::vector<VertexSet> out;
    enumerate_independent(g, within & g.vertices(), 0, n, VertexSet{}, out);
    std::sort(out.begin(), out.end());
    return out;
}

ChordalityResult is_chordal(const Graph& g) {
    ChordalityResult res;
    VertexSet active = g.vertices();
    res.elimination_order.reserve(static_cast<std::size_t>(g.vertex_count()));
    while (!active.empty()) {
        int found = -1;
        for (int v : active) {
            if (g.is_clique(g.neighbors(v) & active)) {
                found = v;
                break;
            }
        }
        if (found < 0) return {false, {}};  // no simplicial vertex left
        res.elimination_order.push_back(found);
        active = active.without(found);
    }
    res.chordal = true;
    return res;
}

bool is_claw_free(const Graph& g) {
    for (int c = 0; c < g.vertex_count(); ++c) {
        VertexSet nb = g.neighbors(c);
        std::vector<int> nbs = nb.to_vector();
        for (std::size_t i = 0; i < nbs.size(); ++i)
            for (std::size_t j = i + 1; j < nbs.size(); ++j) {
                if (g.adjacent(nbs[i], nbs[j])) continue;
                for (std::size_t k = j + 1; k < nbs.size(); ++k) {
                    if (g.adjacent(nbs[i], nbs[k]) || g.adjacent(nbs[j], nbs[k])) continue;
                    return false;
                }
            }
    }
    return true;
}

namespace {

// DSATUR-style backtracking k-colorability test. `forbidden[v]` has bit c set
// when some neighbor of v already carries color c.
bool color_rec(const Graph& g, int k, std::vector<int>& assigned, const std::vector<std::uint64_t>& forbidden,
               int colored, int used_colors) {
    const int n = g.vertex_count();
    if (colored == n) return true;
    int v = -1, best_sat = -1, best_deg = -1;
    for (int u = 0; u < n; ++u) {
        if (assigned[static_cast<std::size_t>(u)] >= 0) continue;
        int sat = std::popcount(forbidden[static_cast<std::size_t>(u)]);
        int deg = g.degree(u);
        if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
            v = u;
            best_sat = sat;
            best_deg = deg;
        }
    }
    // Trying one fresh color is enough: unused colors are interchangeable.
    const int limit = std::min(k, used_colors + 1);
    for (int c = 0; c < limit; ++c) {
        if (forbidden[static_cast<std::size_t>(v)] >> c & 1) continue;
        assigned[static_cast<std::size_t>(v)] = c;
        std::vector<std::uint64_t> next = forbidden;
        for (int u : g.neighbors(v)) next[static_cast<std::size_t>(u)] |= (std::uint64_t{1} << c);
        if (color_rec(g, k, assigned, next, colored + 1, std::max(used_colors, c + 1))) return true;
        assigned[static_cast<std::size_t>(v)] = -1;
    }
    return false;
}

bool color_with(const Graph& g, int k, std::vector<int>& classes) {
    const int n = g.vertex_count();
    std::vector<int> assigned(static_cast<std::size_t>(n), -1);
    std::vector<std::uint64_t> forbidden(static_cast<std::size_t>(n), 0);
    if (!color_rec(g, k, assigned, forbidden, 0, 0)) return false;
    classes = assigned;
    return true;
}

}  // namespace

Outcome<Coloring> chromatic_number(const Graph& g, int exact_limit) {
    if (g.vertex_count() > exact_limit)
        return Outcome<Coloring>::refusal("exact search refused: " + std::to_string(g.vertex_count()) +
                                          " vertices exceeds limit " + std::to_string(exact_limit));
    if (g.vertex_count() == 0) return Outcome<Coloring>::value(Coloring{0, {}});
    for (int k = 1; k <= g.vertex_count(); ++k) {
        std::vector<int> classes;
        if (color_with(g, k, classes)) return Outcome<Coloring>::value(Coloring{k, std::move(classes)});
    }
    throw std::logic_error("chromatic_number: unreachable");
}

// --- generators -------------------------------------------------------------

Graph cycle_graph(int m) {
    if (m < 3) throw std::invalid_argument("cycle_graph: need m >= 3");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < m; ++i) e.emplace_back(i, (i + 1) % m);
    return Graph::from_edges(m, e);
}

Graph path_graph(int m) {
    if (m < 1) throw std::invalid_argument("path_graph: need m >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < m; ++i) e.emplace_back(i, i + 1);
    return Graph::from_edges(m, e);
}

Graph complete_graph(int m) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) e.emplace_back(i, j);
    return Graph::from_edges(m, e);
}

Graph complete_multipartite(const std::vector<int>& part_sizes) {
    int n = 0;
    for (int s : part_sizes) {
        if (s <= 0) throw std::invalid_argument("complete_multipartite: part sizes must be positive");
        n += s;
    }
    std::vector<int> part_of;
    for (std::size_t p = 0; p < part_sizes.size(); ++p)
        for (int i = 0; i < part_sizes[p]; ++i) part_of.push_back(static_cast<int>(p));
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (part_of[static_cast<std::size_t>(u)] != part_of[static_cast<std::size_t>(v)]) e.emplace_back(u, v);
    return Graph::from_edges(n, e);
}

Graph circulant(int m, const std::vector<int>& distances) {
    if (m < 1) throw std::invalid_argument("circulant: need m >= 1");
    std::vector<std::pair<int, int>> e;
    for (int d : distances) {
        if (d < 1 || 2 * d > m) throw std::invalid_argument("circulant: distance must be in [1, m/2]");
        for (int i = 0; i < m; ++i) e.emplace_back(i, (i + d) % m);
    }
    return Graph::from_edges(m, e);
}

Graph generalized_petersen(int m, int j) {
    if (m < 3 || j < 1 || 2 * j >= m) throw std::invalid_argument("generalized_petersen: need m >= 3, 1 <= j < m/2");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < m; ++i) {
        e.emplace_back(i, (i + 1) % m);          // outer cycle
        e.emplace_back(i, m + i);                // spokes
        e.emplace_back(m + i, m + (i + j) % m);  // inner star polygon
    }
    return Graph::from_edges(2 * m, e);
}

Graph dodecahedral_graph() { return generalized_petersen(10, 2); }

Graph disjoint_union(const std::vector<Graph>& parts) {
    int n = 0;
    std::vector<std::pair<int, int>> e;
    for (const Graph& g : parts) {
        for (auto [u, v] : g.edges()) e.emplace_back(n + u, n + v);
        n += g.vertex_count();
    }
    return Graph::from_edges(n, e);
}

Graph random_max_degree(int m, int max_deg, std::uint64_t seed) {
    if (m < 0 || max_deg < 0) throw std::invalid_argument("random_max_degree: bad parameters");
    std::mt19937_64 rng(seed);
    std::vector<int> deg(static_cast<std::size_t>(m), 0);
    std::vector<std::vector<bool>> present(static_cast<std::size_t>(m),
                                           std::vector<bool>(static_cast<std::size_t>(m), false));
    std::vector<std::pair<int, int>> e;
    if (m >= 2) {
        const int proposals = 3 * m * std::max(max_deg, 1);
        for (int t = 0; t < proposals; ++t) {
            int u = static_cast<int>(rng() % static_cast<std::uint64_t>(m));
            int v = static_cast<int>(rng() % static_cast<std::uint64_t>(m));
            if (u == v) continue;
            if (present[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]) continue;
            if (deg[static_cast<std::size_t>(u)] >= max_deg || deg[static_cast<std::size_t>(v)] >= max_deg) continue;
            present[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = true;
            present[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = true;
            ++deg[static_cast<std::size_t>(u)];
            ++deg[static_cast<std::size_t>(v)];
            e.emplace_back(u, v);
        }
    }
    return Graph::from_edges(m, e);
}

Graph random_chordal(int m, std::uint64_t seed) {
    if (m < 0) throw std::invalid_argument("random_chordal: need m >= 0");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> e;
    std::vector<VertexSet> cliques;
    for (int v = 0; v < m; ++v) {
        if (cliques.empty()) {
            cliques.push_back(VertexSet::single(v));
            continue;
        }
        VertexSet base = cliques[rng() % cliques.size()];
        VertexSet chosen;
        for (int u : base)
            if (rng() & 1) chosen = chosen.with(u);
        for (int u : chosen) e.emplace_back(u, v);
        cliques.push_back(chosen.with(v));
    }
    return Graph::from_edges(m, e);
}

}  // namespace icx
