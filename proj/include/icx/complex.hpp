#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "icx/graph.hpp"
#include "icx/outcome.hpp"
#include "icx/vertex_set.hpp"

namespace icx {

inline constexpr std::uint64_t kDefaultFaceLimit = 2'000'000;

// Finite simplicial complex on a ground set of at most 64 labelled vertices.
//
// The canonical representation is the antichain of missing faces (minimal
// non-faces): a set sigma inside the ground set is a face iff no missing face
// is contained in it. Complexes like I_n(G) have a handful of missing faces
// but astronomically many faces, so everything down-stream works from this
// side. Facets (maximal faces) are recovered on demand by hypergraph
// dualization and cached.
//
// The void complex (no faces at all) is distinguished from the empty complex
// {emptyset} by an explicit flag; it is the target of collapsing sequences.
//
// Complexes are immutable. The facet cache is filled idempotently under a
// lock, so concurrent readers are safe.
class Complex {
public:
    Complex() = default;  // the empty complex {emptyset} on an empty ground set

    static Complex void_complex(VertexSet ground);
    static Complex empty_complex(VertexSet ground);  // {emptyset}: every vertex is a missing face
    static Complex complete(VertexSet ground);       // 2^ground
    static Complex simplex_boundary(VertexSet u);    // |u| >= 1; the single missing face is u

    // `missing` is minimalized to an antichain; the empty set is rejected
    // (use void_complex). Members must lie inside the ground set.
    static Complex from_missing_faces(VertexSet ground, std::vector<VertexSet> missing);

    // Non-maximal entries are dropped. An empty facet list yields the void
    // complex; the facet list {emptyset} yields {emptyset}.
    static Complex from_facets(VertexSet ground, std::vector<VertexSet> facets);

    bool is_void() const { return void_; }
    VertexSet ground_set() const { return ground_; }

    // Minimal non-faces, sorted by bit-mask value.
    const std::vector<VertexSet>& missing_faces() const { return missing_; }

    // Maximal faces, sorted by bit-mask value. Computed lazily and cached.
    const std::vector<VertexSet>& facets() const;

    bool is_face(VertexSet sigma) const;

    // True iff every facet contains v; equivalently v lies in no missing face.
    bool is_cone_over(int v) const;

    // Dimension of the complex: -1 for {emptyset}, -2 for the void complex.
    int dimension() const;

    // lk(X, tau) = { sigma : sigma cap tau = emptyset, sigma cup tau in X }.
    // Void when tau is not a face. Ground vertices that are not faces of the
    // link are dropped from its ground set.
    Complex link(VertexSet tau) const;

    Complex delete_vertex(int v) const;

    // X[U]: faces of X contained in U, on ground set U.
    Complex induced(VertexSet u) const;

    // D(X) = { sigma : ground \ sigma not in X }, on the same ground set.
    Complex alexander_dual() const;

    // Same face set with ground-set vertices that are not faces removed.
    Complex normalized() const;

    // Relabels vertex v to image[v]; image must be injective on the ground set.
    Complex relabeled(const std::vector<int>& image) const;

    // Equality of face sets (ignores non-face ground vertices).
    bool same_faces(const Complex& other) const;

    // Identical representation: ground set, void flag and missing faces.
    bool operator==(const Complex& other) const {
        return void_ == other.void_ && ground_ == other.ground_ && missing_ == other.missing_;
    }

    // All faces with exactly c vertices, in increasing bit-mask order.
    // c == 0 yields {emptyset} for a non-void complex; c < 0 yields nothing.
    std::vector<VertexSet> faces_of_cardinality(int c) const;

    // Total number of faces (including the empty face), refusing once the
    // running count exceeds max_faces.
    Outcome<std::uint64_t> count_faces(std::uint64_t max_faces = kDefaultFaceLimit) const;

    // Face counts per dimension starting at f_{-1} = 1; the void complex has
    // an empty f-vector.
    Outcome<std::vector<std::int64_t>> f_vector(std::uint64_t max_faces = kDefaultFaceLimit) const;

private:
    VertexSet ground_{};
    bool void_ = false;
    std::vector<VertexSet> missing_{};
    mutable std::shared_ptr<const std::vector<VertexSet>> facet_cache_{};
};

// Join of complexes on disjoint ground sets: missing faces are the union of
// the two missing-face antichains. Throws on overlapping ground sets.
Complex join(const Complex& x, const Complex& y);

// I_n(G) restricted to `within`: the complex whose missing faces are exactly
// the independent sets of size n in G[within]. I_1 is the empty complex.
Complex independence_complex(const Graph& g, int n, VertexSet within);
inline Complex independence_complex(const Graph& g, int n) {
    return independence_complex(g, n, g.vertices());
}

// Ordered family of vertex sets over a common ground set; repetition allowed.
struct SetFamily {
    VertexSet ground{};
    std::vector<VertexSet> sets{};
};

// N(F): the complex on the index set {0, ..., m-1} whose faces are the index
// sets with non-empty common intersection. Requires m <= 64.
Complex nerve(const SetFamily& family);

// All minimal transversals (hitting sets) of `sets` within `ground`.
// Returns an empty list when some input set is empty (no transversal), and
// the single empty transversal when `sets` is empty.
std::vector<VertexSet> minimal_transversals(const std::vector<VertexSet>& sets, VertexSet ground);

}  // namespace icx
