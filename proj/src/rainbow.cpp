#include "icx/rainbow.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace icx {

namespace {

struct RainbowSearch {
    const Graph& g;
    const std::vector<VertexSet>& sets;
    std::vector<int> order;  // positions into sets, smallest sets first
    int n;
    std::vector<std::pair<int, int>> chosen;
    VertexSet used;
    VertexSet blocked;  // used vertices and their neighborhoods

    bool dfs(std::size_t pos) {
        if (static_cast<int>(chosen.size()) == n) return true;
        if (order.size() - pos < static_cast<std::size_t>(n) - chosen.size()) return false;
        int idx = order[pos];
        // Either pick a compatible vertex from this member or skip it.
        for (int v : sets[static_cast<std::size_t>(idx)] - blocked) {
            chosen.emplace_back(idx, v);
            VertexSet prev_used = used, prev_blocked = blocked;
            used = used.with(v);
            blocked = blocked | g.closed_neighborhood(v);
            if (dfs(pos + 1)) return true;
            used = prev_used;
            blocked = prev_blocked;
            chosen.pop_back();
        }
        return dfs(pos + 1);
    }
};

}  // namespace

std::optional<RainbowWitness> find_rainbow_independent(const Graph& g, const SetFamily& family, int n) {
    if (n < 0) throw std::invalid_argument("find_rainbow_independent: need n >= 0");
    if (n == 0) return RainbowWitness{};
    if (n > static_cast<int>(family.sets.size())) return std::nullopt;
    for (VertexSet a : family.sets)
        if (!a.subset_of(g.vertices())) throw std::invalid_argument("find_rainbow_independent: set outside V(G)");
    RainbowSearch search{g, family.sets, {}, n, {}, {}, {}};
    search.order.resize(family.sets.size());
    std::iota(search.order.begin(), search.order.end(), 0);
    std::stable_sort(search.order.begin(), search.order.end(), [&](int a, int b) {
        return family.sets[static_cast<std::size_t>(a)].size() < family.sets[static_cast<std::size_t>(b)].size();
    });
    if (!search.dfs(0)) return std::nullopt;
    RainbowWitness w;
    w.selections = std::move(search.chosen);
    std::sort(w.selections.begin(), w.selections.end());
    return w;
}

namespace {

// Kuhn's augmenting paths: can every vertex of the target be matched to a
// distinct family member offering it?
bool matching_saturates(const std::vector<VertexSet>& sets, VertexSet target) {
    std::vector<int> verts = target.to_vector();
    const int n = static_cast<int>(verts.size());
    const int m = static_cast<int>(sets.size());
    std::vector<int> matched_set_of(static_cast<std::size_t>(n), -1);  // target position -> set index
    std::vector<int> matched_pos_of(static_cast<std::size_t>(m), -1);
    std::vector<char> visited;
    auto try_augment = [&](auto&& self, int set_idx) -> bool {
        for (int p = 0; p < n; ++p) {
            if (visited[static_cast<std::size_t>(p)]) continue;
            if (!sets[static_cast<std::size_t>(set_idx)].contains(verts[static_cast<std::size_t>(p)])) continue;
            visited[static_cast<std::size_t>(p)] = 1;
            if (matched_set_of[static_cast<std::size_t>(p)] < 0 ||
                self(self, matched_set_of[static_cast<std::size_t>(p)])) {
                matched_set_of[static_cast<std::size_t>(p)] = set_idx;
                matched_pos_of[static_cast<std::size_t>(set_idx)] = p;
                return true;
            }
        }
        return false;
    };
    int size = 0;
    for (int s = 0; s < m && size < n; ++s) {
        visited.assign(static_cast<std::size_t>(n), 0);
        if (try_augment(try_augment, s)) ++size;
    }
    return size == n;
}

}  // namespace

bool rainbow_feasibility_by_matching(const Graph& g, const SetFamily& family,
                                     const std::vector<VertexSet>& targets) {
    const int n = targets.empty() ? -1 : targets.front().size();
    if (targets.empty() || independence_number(g) != n)
        throw std::invalid_argument("rainbow_feasibility_by_matching: requires alpha(G) = n and targets given");
    std::vector<VertexSet> expected = independent_sets_of_size(g, n);
    std::vector<VertexSet> sorted_targets = targets;
    std::sort(sorted_targets.begin(), sorted_targets.end());
    if (sorted_targets != expected)
        throw std::invalid_argument("rainbow_feasibility_by_matching: targets must be all independent n-sets");
    if (static_cast<int>(family.sets.size()) < n) return false;
    for (VertexSet t : sorted_targets)
        if (matching_saturates(family.sets, t)) return true;
    return false;
}

namespace {

bool family_has_rainbow(const Graph& g, const std::vector<VertexSet>& all_sets, const std::vector<int>& family_idx,
                        int n, bool maximal_case, const std::vector<VertexSet>& targets) {
    SetFamily family;
    family.ground = g.vertices();
    family.sets.reserve(family_idx.size());
    for (int i : family_idx) family.sets.push_back(all_sets[static_cast<std::size_t>(i)]);
    if (maximal_case) {
        // alpha(G) = n: a rainbow independent n-set must equal one of the
        // maximal independent sets, so a saturating matching decides it.
        if (static_cast<int>(family.sets.size()) < n) return false;
        for (VertexSet t : targets)
            if (matching_saturates(family.sets, t)) return true;
        return false;
    }
    return find_rainbow_independent(g, family, n).has_value();
}

// Multisets of {0..count-1} of the given size, as nondecreasing index lists.
bool next_multiset(std::vector<int>& idx, int count) {
    int k = static_cast<int>(idx.size());
    for (int i = k - 1; i >= 0; --i) {
        if (idx[static_cast<std::size_t>(i)] + 1 < count) {
            int v = idx[static_cast<std::size_t>(i)] + 1;
            for (int j = i; j < k; ++j) idx[static_cast<std::size_t>(j)] = v;
            return true;
        }
    }
    return false;
}

}  // namespace

FNumResult f_exact(const Graph& g, int n, int t_cap) {
    if (n < 1) throw std::invalid_argument("f_exact: need n >= 1");
    FNumResult result;
    result.independent_sets = independent_sets_of_size(g, n);
    const int count = static_cast<int>(result.independent_sets.size());
    if (count == 0) {
        // No independent n-sets, hence no families to defeat the property.
        result.exact = true;
        result.f = 1;
        result.certificate = "exhaustive";
        return result;
    }
    const bool maximal_case = (independence_number(g) == n);
    // Sizes below n never admit a rainbow of size n, so the scan starts at n.
    for (int t = std::max(n, 1); t <= t_cap; ++t) {
        std::vector<int> idx(static_cast<std::size_t>(t), 0);
        bool found_bad = false;
        do {
            if (!family_has_rainbow(g, result.independent_sets, idx, n, maximal_case, result.independent_sets)) {
                found_bad = true;
                result.no_rainbow_family = idx;
                break;
            }
        } while (next_multiset(idx, count));
        if (!found_bad) {
            result.exact = true;
            result.f = t;
            result.certificate = "exhaustive";
            return result;
        }
    }
    result.exact = false;
    result.f = t_cap + 1;  // lower bound: a no-rainbow family of size t_cap exists
    result.certificate = "cap";
    return result;
}

HellyReport check_helly_bound(const Graph& g, int n, std::uint64_t budget, int t_cap) {
    HellyReport report;
    report.f = f_exact(g, n, t_cap);
    Complex x = independence_complex(g, n);
    std::vector<VertexSet> hint;
    if (!report.f.independent_sets.empty()) hint.push_back(report.f.independent_sets.front());
    report.c = collapsibility_number(x, budget, hint);
    if (report.f.exact && report.c.exact) {
        report.conclusive = true;
        report.holds = report.f.f <= report.c.value + 1;
    } else if (report.f.exact) {
        // A bracket passes only through its guaranteed side.
        report.conclusive = report.f.f <= report.c.lower + 1;
        report.holds = report.conclusive;
    }
    return report;
}

Outcome<UnionFReport> check_union_f_bound(const Graph& g1, const Graph& g2, int t_cap) {
    using Result = Outcome<UnionFReport>;
    UnionFReport report;
    report.alpha1 = independence_number(g1);
    report.alpha2 = independence_number(g2);
    FNumResult f1 = f_exact(g1, std::max(report.alpha1, 1), t_cap);
    FNumResult f2 = f_exact(g2, std::max(report.alpha2, 1), t_cap);
    Graph whole = disjoint_union({g1, g2});
    FNumResult fu = f_exact(whole, std::max(report.alpha1 + report.alpha2, 1), t_cap);
    report.f1 = f1.f;
    report.f2 = f2.f;
    report.f_union = fu.f;
    report.bound = std::max(f1.f, f2.f + report.alpha1);
    if (!f1.exact || !f2.exact || !fu.exact)
        return Result::refusal("f_exact hit the enumeration cap; the comparison is inconclusive");
    report.conclusive = true;
    report.holds = report.f_union <= report.bound;
    return Result::value(report);
}

}  // namespace icx
