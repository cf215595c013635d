#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "icx/complex.hpp"
#include "icx/graph.hpp"
#include "icx/outcome.hpp"

namespace icx {

using Rational = mpq_class;

// Reduced rational Betti numbers, indexed from degree -1 upward. Only the
// degrees actually computed are stored; absent degrees read as zero.
class BettiVector {
public:
    void set(int degree, std::int64_t value) { values_[degree] = value; }
    std::int64_t get(int degree) const {
        auto it = values_.find(degree);
        return it == values_.end() ? 0 : it->second;
    }
    const std::map<int, std::int64_t>& entries() const { return values_; }

    std::optional<int> top_nonzero() const {
        for (auto it = values_.rbegin(); it != values_.rend(); ++it)
            if (it->second != 0) return it->first;
        return std::nullopt;
    }

    // Equality of the underlying homology: zero entries are immaterial.
    bool operator==(const BettiVector& o) const;

    std::string to_string() const;

private:
    std::map<int, std::int64_t> values_;
};

struct HomologyOptions {
    std::uint64_t max_faces = kDefaultFaceLimit;
};

// Boundary map between two face layers. Rows are indexed by `lower` (faces
// with one vertex fewer), columns by `upper`; entries are +-1 with the usual
// alternating signs for vertices in ascending order.
struct BoundaryMatrix {
    std::int64_t rows = 0;
    std::int64_t cols = 0;
    std::vector<std::vector<std::pair<std::int32_t, std::int8_t>>> columns;
};

BoundaryMatrix boundary_matrix(const std::vector<VertexSet>& lower, const std::vector<VertexSet>& upper);

// Exact rank over the rationals: sparse elimination with a Markowitz-style
// pivot rule (fewest-entry column, then shortest row, unit pivots preferred).
std::int64_t rank_exact(const BoundaryMatrix& m);

// Full reduced Betti vector by exact elimination; refuses when the total face
// count exceeds options.max_faces.
Outcome<BettiVector> reduced_betti(const Complex& x, const HomologyOptions& options = {});

// A single Betti number, enumerating exactly the three face layers involved.
Outcome<std::int64_t> betti_in_degree(const Complex& x, int degree, const HomologyOptions& options = {});

// Betti vector of I_n(G) computed through the nerve of the Alexander dual's
// facets and re-indexed by i -> |V| - i - 3. Requires alpha(G) >= n (throws
// std::invalid_argument otherwise).
Outcome<BettiVector> betti_via_dual_nerve(const Graph& g, int n, const HomologyOptions& options = {});

// Exact Leray number by exhausting every induced subcomplex. Refuses ground
// sets larger than vertex_limit.
Outcome<int> leray_number(const Complex& x, int vertex_limit = 14, const HomologyOptions& options = {});

// Lower bound for L(X): the top non-vanishing homology degree plus one, taken
// over the given induced subcomplexes (default: X itself). Falls back to the
// dual-nerve route when direct enumeration is infeasible, and to 0 when no
// route is; never errs.
int leray_lower_bound(const Complex& x, const std::vector<VertexSet>& subsets = {},
                      const HomologyOptions& options = {});

struct UnionLerayReport {
    std::vector<int> part_leray;  // l_i = L(I_{alpha(G_i)}(G_i))
    int union_leray = 0;          // l = L(I_t(G_1 + ... + G_m))
    int predicted = 0;            // sum l_i + m - 1
    bool equality = false;
    bool betti_identity = false;  // union Betti vector == shifted convolution of parts
};

Outcome<UnionLerayReport> union_leray_check(const std::vector<Graph>& parts, int vertex_limit = 14,
                                            const HomologyOptions& options = {});

// Shifted convolution used by joins and disjoint unions of duals:
// out[k] = sum over k_1 + k_2 = k - shift of a[k_1] * b[k_2].
BettiVector betti_convolution(const BettiVector& a, const BettiVector& b, int shift);

}  // namespace icx
