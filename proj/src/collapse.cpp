#include "icx/collapse.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <unordered_set>

#include "icx/homology.hpp"

namespace icx {

namespace {

using FacetList = std::vector<std::uint64_t>;  // sorted facet masks

FacetList facet_list(const Complex& x) {
    FacetList out;
    if (x.is_void()) return out;
    out.reserve(x.facets().size());
    for (VertexSet f : x.facets()) out.push_back(f.bits());
    std::sort(out.begin(), out.end());
    return out;
}

bool is_free_in(const FacetList& facets, std::uint64_t sigma, std::uint64_t carrier) {
    for (std::uint64_t f : facets) {
        if (f == carrier) continue;
        if ((sigma & f) == sigma) return false;
    }
    return true;
}

// State after removing the interval [sigma, tau]: tau goes away and the
// maximal proper subsets tau \ {x}, x in sigma, survive when no other facet
// swallows them.
FacetList successor(const FacetList& facets, std::uint64_t sigma, std::uint64_t tau) {
    FacetList out;
    out.reserve(facets.size() + static_cast<std::size_t>(std::popcount(sigma)));
    for (std::uint64_t f : facets)
        if (f != tau) out.push_back(f);
    std::uint64_t rest = sigma;
    while (rest) {
        std::uint64_t bit = rest & (~rest + 1);
        rest ^= bit;
        std::uint64_t candidate = tau ^ bit;
        bool covered = false;
        for (std::uint64_t f : facets)
            if (f != tau && (candidate & f) == candidate) {
                covered = true;
                break;
            }
        if (!covered) out.push_back(candidate);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Candidate moves with |sigma| == size, ordered by (sigma, tau).
std::vector<std::pair<std::uint64_t, std::uint64_t>> moves_of_size(const FacetList& facets, int size) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> moves;
    std::vector<int> verts;
    for (std::uint64_t tau : facets) {
        int k = std::popcount(tau);
        if (size > k) continue;
        verts.clear();
        for (std::uint64_t rest = tau; rest;) {
            std::uint64_t bit = rest & (~rest + 1);
            verts.push_back(std::countr_zero(bit));
            rest ^= bit;
        }
        std::vector<int> idx(static_cast<std::size_t>(size));
        auto rec = [&](auto&& self, int start, int depth, std::uint64_t sigma) -> void {
            if (depth == size) {
                if (is_free_in(facets, sigma, tau)) moves.emplace_back(sigma, tau);
                return;
            }
            for (int i = start; i <= k - (size - depth); ++i)
                self(self, i + 1, depth + 1, sigma | (std::uint64_t{1} << verts[static_cast<std::size_t>(i)]));
        };
        rec(rec, 0, 0, 0);
    }
    std::sort(moves.begin(), moves.end());
    return moves;
}

std::uint64_t binomial_clamped(int n, int k, std::uint64_t cap) {
    if (k < 0 || k > n) return 0;
    unsigned __int128 r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
        if (r > cap) return cap + 1;
    }
    return static_cast<std::uint64_t>(r);
}

// Number of size-`size` subsets across all facets, clamped at cap.
std::uint64_t tier_size(const FacetList& facets, int size, std::uint64_t cap) {
    std::uint64_t total = 0;
    for (std::uint64_t tau : facets) {
        total += binomial_clamped(std::popcount(tau), size, cap);
        if (total > cap) return cap + 1;
    }
    return total;
}

struct FacetListHash {
    std::size_t operator()(const FacetList& v) const {
        std::size_t h = 1469598103934665603ull;
        for (std::uint64_t x : v) {
            h ^= static_cast<std::size_t>(x);
            h *= 1099511628211ull;
        }
        return h;
    }
};

struct BudgetExhausted {};

struct CollapseSearcher {
    int d = 0;
    std::uint64_t budget = 0;
    std::uint64_t used = 0;
    std::unordered_set<FacetList, FacetListHash> refuted{};
    std::vector<CollapseStep> path{};

    void charge(std::uint64_t amount) {
        used += amount;
        if (used > budget) throw BudgetExhausted{};
    }

    bool search(const FacetList& facets) {
        if (facets.empty()) return true;  // reached the void complex
        if (refuted.contains(facets)) {
            charge(1);
            return false;
        }
        charge(1);
        int max_size = 0;
        for (std::uint64_t f : facets) max_size = std::max(max_size, std::popcount(f));
        // Small free faces first; deeper tiers are only generated when the
        // cheap ones run out, which keeps greedy-friendly instances cheap.
        for (int size = 0; size <= std::min(d, max_size); ++size) {
            charge(tier_size(facets, size, budget));
            for (auto [sigma, tau] : moves_of_size(facets, size)) {
                path.push_back({VertexSet(sigma), VertexSet(tau)});
                if (search(successor(facets, sigma, tau))) return true;
                path.pop_back();
            }
        }
        refuted.insert(facets);
        return false;
    }
};

}  // namespace

std::vector<CollapseStep> free_faces(const Complex& x, int d) {
    if (x.is_void()) throw std::invalid_argument("free_faces: void complex has no faces");
    if (d < 0) throw std::invalid_argument("free_faces: need d >= 0");
    FacetList facets = facet_list(x);
    std::vector<CollapseStep> out;
    int max_size = 0;
    for (std::uint64_t f : facets) max_size = std::max(max_size, std::popcount(f));
    for (int size = 0; size <= std::min(d, max_size); ++size)
        for (auto [sigma, tau] : moves_of_size(facets, size)) out.push_back({VertexSet(sigma), VertexSet(tau)});
    return out;
}

Complex apply_collapse(const Complex& x, const CollapseStep& step) {
    if (x.is_void()) throw std::invalid_argument("apply_collapse: void complex");
    if (!step.free_face.subset_of(step.carrier))
        throw std::invalid_argument("apply_collapse: free face not inside carrier");
    FacetList facets = facet_list(x);
    if (!std::binary_search(facets.begin(), facets.end(), step.carrier.bits()))
        throw std::invalid_argument("apply_collapse: carrier is not a facet");
    if (!is_free_in(facets, step.free_face.bits(), step.carrier.bits()))
        throw std::invalid_argument("apply_collapse: face is not free (contained in another facet)");
    FacetList next = successor(facets, step.free_face.bits(), step.carrier.bits());
    std::vector<VertexSet> next_facets;
    next_facets.reserve(next.size());
    for (std::uint64_t f : next) next_facets.push_back(VertexSet(f));
    return Complex::from_facets(x.ground_set(), std::move(next_facets));
}

SequenceCheck verify_sequence(const Complex& x, const CollapseSequence& seq) {
    FacetList facets = facet_list(x);
    for (std::size_t i = 0; i < seq.steps.size(); ++i) {
        const CollapseStep& step = seq.steps[i];
        std::uint64_t sigma = step.free_face.bits();
        std::uint64_t tau = step.carrier.bits();
        bool legal = step.free_face.subset_of(step.carrier) && step.free_face.size() <= seq.d &&
                     std::binary_search(facets.begin(), facets.end(), tau) && is_free_in(facets, sigma, tau);
        if (!legal) return {false, static_cast<int>(i)};
        facets = successor(facets, sigma, tau);
    }
    if (!facets.empty()) return {false, static_cast<int>(seq.steps.size())};
    return {true, -1};
}

CollapseSearchResult is_d_collapsible(const Complex& x, int d, std::uint64_t budget) {
    if (d < 0) throw std::invalid_argument("is_d_collapsible: need d >= 0");
    CollapseSearchResult result;
    CollapseSearcher searcher{.d = d, .budget = budget};
    try {
        bool ok = searcher.search(facet_list(x));
        result.status = ok ? CollapseStatus::witness : CollapseStatus::refuted;
        if (ok) result.witness = CollapseSequence{d, searcher.path};
    } catch (const BudgetExhausted&) {
        result.status = CollapseStatus::budget_exhausted;
    }
    result.nodes = searcher.used;
    return result;
}

std::string CollapsibilityNumber::to_string() const {
    if (exact) return std::to_string(value);
    return "[" + std::to_string(lower) + ", " + std::to_string(upper) + "]";
}

CollapsibilityNumber collapsibility_number(const Complex& x, std::uint64_t budget,
                                           const std::vector<VertexSet>& lower_bound_subsets) {
    CollapsibilityNumber r;
    if (x.is_void()) {
        r.exact = true;
        r.value = r.lower = r.upper = 0;
        r.lower_provenance = r.upper_provenance = "void complex";
        r.witness = CollapseSequence{0, {}};
        return r;
    }
    constexpr int kExactLerayVertices = 8;
    int lo = 0;
    if (x.ground_set().size() <= kExactLerayVertices) {
        auto leray = leray_number(x, kExactLerayVertices);
        lo = *leray;
        r.lower_provenance = "exact Leray number";
    } else {
        lo = leray_lower_bound(x, lower_bound_subsets);
        r.lower_provenance = "homology lower bound over induced subcomplexes";
    }
    const int hi = x.dimension() + 1;
    if (lo > hi) throw std::logic_error("collapsibility_number: lower bound exceeds dimension bound");
    r.lower = lo;
    r.upper = hi;
    r.upper_provenance = "dimension bound dim(X) + 1";
    for (int d = lo; d < hi; ++d) {
        CollapseSearchResult search = is_d_collapsible(x, d, budget);
        if (search.status == CollapseStatus::witness) {
            r.exact = true;
            r.value = r.lower = r.upper = d;
            r.lower_provenance = (d == lo) ? r.lower_provenance : "exhaustive refutation below";
            r.upper_provenance = "collapse witness";
            r.witness = std::move(search.witness);
            return r;
        }
        if (search.status == CollapseStatus::refuted) {
            r.lower = d + 1;
            r.lower_provenance = "exhaustive refutation";
            continue;
        }
        return r;  // budget exhausted: report the bracket collected so far
    }
    // Every level below dim(X) + 1 is refuted; the dimension bound closes it.
    r.exact = true;
    r.value = r.upper = r.lower;
    CollapseSearchResult top = is_d_collapsible(x, r.value, budget);
    if (top.status == CollapseStatus::witness) {
        r.witness = std::move(top.witness);
        r.upper_provenance = "collapse witness";
    } else if (top.status == CollapseStatus::refuted) {
        throw std::logic_error("collapsibility_number: refutation above the dimension bound");
    }
    return r;
}

}  // namespace icx
