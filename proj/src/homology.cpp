#include "icx/homology.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <unordered_map>

namespace icx {

bool BettiVector::operator==(const BettiVector& o) const {
    for (const auto& [k, v] : values_)
        if (v != 0 && o.get(k) != v) return false;
    for (const auto& [k, v] : o.values_)
        if (v != 0 && get(k) != v) return false;
    return true;
}

std::string BettiVector::to_string() const {
    std::string s = "{";
    bool first = true;
    for (const auto& [k, v] : values_) {
        if (v == 0) continue;
        if (!first) s += ", ";
        s += std::to_string(k) + ": " + std::to_string(v);
        first = false;
    }
    return s + "}";
}

BoundaryMatrix boundary_matrix(const std::vector<VertexSet>& lower, const std::vector<VertexSet>& upper) {
    BoundaryMatrix m;
    m.rows = static_cast<std::int64_t>(lower.size());
    m.cols = static_cast<std::int64_t>(upper.size());
    m.columns.resize(upper.size());
    std::unordered_map<std::uint64_t, std::int32_t> row_index;
    row_index.reserve(lower.size() * 2);
    for (std::size_t i = 0; i < lower.size(); ++i) row_index.emplace(lower[i].bits(), static_cast<std::int32_t>(i));
    for (std::size_t j = 0; j < upper.size(); ++j) {
        std::int8_t sign = 1;
        for (int v : upper[j]) {  // ascending vertex order fixes the orientation
            auto it = row_index.find(upper[j].without(v).bits());
            if (it == row_index.end())
                throw std::logic_error("boundary_matrix: sub-face missing from lower layer");
            m.columns[j].emplace_back(it->second, sign);
            sign = static_cast<std::int8_t>(-sign);
        }
    }
    return m;
}

std::int64_t rank_exact(const BoundaryMatrix& m) {
    const std::size_t rows = static_cast<std::size_t>(m.rows);
    const std::size_t cols = static_cast<std::size_t>(m.cols);
    if (rows == 0 || cols == 0) return 0;

    // Row-major working copy; each row sorted by column index.
    std::vector<std::vector<std::pair<std::int32_t, Rational>>> row(rows);
    std::vector<std::int32_t> col_count(cols, 0);
    std::vector<std::vector<std::int32_t>> col_rows(cols);  // may hold stale row ids
    for (std::size_t j = 0; j < cols; ++j)
        for (auto [i, s] : m.columns[j]) {
            row[static_cast<std::size_t>(i)].emplace_back(static_cast<std::int32_t>(j), Rational(s));
            ++col_count[j];
            col_rows[j].push_back(i);
        }

    std::vector<char> row_active(rows, 1), col_active(cols, 1);

    auto find_entry = [&](std::int32_t i, std::int32_t j) -> Rational* {
        auto& r = row[static_cast<std::size_t>(i)];
        auto it = std::lower_bound(r.begin(), r.end(), j,
                                   [](const auto& e, std::int32_t col) { return e.first < col; });
        if (it != r.end() && it->first == j) return &it->second;
        return nullptr;
    };

    using HeapEntry = std::pair<std::int32_t, std::int32_t>;  // (count, col)
    std::priority_queue<HeapEntry, std::vector<HeapEntry>, std::greater<>> heap;
    for (std::size_t j = 0; j < cols; ++j) heap.push({col_count[j], static_cast<std::int32_t>(j)});

    // row[target] -= factor * row[source], maintaining column counts.
    auto row_axpy = [&](std::int32_t target, const Rational& factor, const std::vector<std::pair<std::int32_t, Rational>>& source) {
        const auto& t = row[static_cast<std::size_t>(target)];
        std::vector<std::pair<std::int32_t, Rational>> merged;
        merged.reserve(t.size() + source.size());
        std::size_t a = 0, b = 0;
        while (a < t.size() || b < source.size()) {
            if (b == source.size() || (a < t.size() && t[a].first < source[b].first)) {
                merged.push_back(t[a]);
                ++a;
            } else if (a == t.size() || source[b].first < t[a].first) {
                Rational v = -factor * source[b].second;
                if (v != 0) {
                    ++col_count[static_cast<std::size_t>(source[b].first)];
                    col_rows[static_cast<std::size_t>(source[b].first)].push_back(target);
                    heap.push({col_count[static_cast<std::size_t>(source[b].first)], source[b].first});
                    merged.emplace_back(source[b].first, std::move(v));
                }
                ++b;
            } else {
                Rational v = t[a].second - factor * source[b].second;
                if (v == 0) {
                    --col_count[static_cast<std::size_t>(t[a].first)];
                    heap.push({col_count[static_cast<std::size_t>(t[a].first)], t[a].first});
                } else {
                    merged.emplace_back(t[a].first, std::move(v));
                }
                ++a;
                ++b;
            }
        }
        row[static_cast<std::size_t>(target)] = std::move(merged);
    };

    std::int64_t rank = 0;
    while (!heap.empty()) {
        auto [count, j] = heap.top();
        heap.pop();
        if (!col_active[static_cast<std::size_t>(j)] || col_count[static_cast<std::size_t>(j)] != count)
            continue;  // stale snapshot
        if (count == 0) {
            col_active[static_cast<std::size_t>(j)] = 0;
            continue;
        }
        // Compact the row list for this column.
        std::vector<std::int32_t> live;
        live.reserve(static_cast<std::size_t>(count));
        {
            auto& cr = col_rows[static_cast<std::size_t>(j)];
            std::sort(cr.begin(), cr.end());
            cr.erase(std::unique(cr.begin(), cr.end()), cr.end());
            for (std::int32_t i : cr)
                if (row_active[static_cast<std::size_t>(i)] && find_entry(i, j)) live.push_back(i);
            cr = live;
        }
        // Pivot: shortest row, units preferred on ties.
        std::int32_t pivot = -1;
        std::size_t best_len = 0;
        bool best_unit = false;
        for (std::int32_t i : live) {
            std::size_t len = row[static_cast<std::size_t>(i)].size();
            const Rational& v = *find_entry(i, j);
            bool unit = (v == 1 || v == -1);
            if (pivot < 0 || len < best_len || (len == best_len && unit && !best_unit)) {
                pivot = i;
                best_len = len;
                best_unit = unit;
            }
        }
        const Rational pivot_value = *find_entry(pivot, j);
        std::vector<std::pair<std::int32_t, Rational>> pivot_row = row[static_cast<std::size_t>(pivot)];
        for (std::int32_t i : live) {
            if (i == pivot) continue;
            Rational factor = *find_entry(i, j) / pivot_value;
            row_axpy(i, factor, pivot_row);
        }
        // Retire the pivot row and column.
        for (const auto& [c, v] : pivot_row) {
            --col_count[static_cast<std::size_t>(c)];
            heap.push({col_count[static_cast<std::size_t>(c)], c});
        }
        row_active[static_cast<std::size_t>(pivot)] = 0;
        row[static_cast<std::size_t>(pivot)].clear();
        row[static_cast<std::size_t>(pivot)].shrink_to_fit();
        col_active[static_cast<std::size_t>(j)] = 0;
        ++rank;
    }
    return rank;
}

namespace {

// Faces grouped by cardinality, from 0 up to the top non-empty layer.
Outcome<std::vector<std::vector<VertexSet>>> face_layers(const Complex& x, std::uint64_t max_faces) {
    using Result = Outcome<std::vector<std::vector<VertexSet>>>;
    std::vector<std::vector<VertexSet>> layers;
    std::uint64_t total = 0;
    for (int c = 0; c <= x.ground_set().size(); ++c) {
        std::vector<VertexSet> layer = x.faces_of_cardinality(c);
        if (c > 0 && layer.empty()) break;
        total += layer.size();
        if (total > max_faces)
            return Result::refusal("face count exceeds limit " + std::to_string(max_faces));
        layers.push_back(std::move(layer));
    }
    return Result::value(std::move(layers));
}

}  // namespace

Outcome<BettiVector> reduced_betti(const Complex& x, const HomologyOptions& options) {
    using Result = Outcome<BettiVector>;
    BettiVector out;
    if (x.is_void()) return Result::value(out);
    auto layers_result = face_layers(x, options.max_faces);
    if (!layers_result) return Result::refusal(layers_result.refusal_reason());
    const auto& layers = *layers_result;
    const int top = static_cast<int>(layers.size()) - 1;  // top cardinality present
    std::vector<std::int64_t> rank_card(static_cast<std::size_t>(top) + 2, 0);
    for (int c = 1; c <= top; ++c)
        rank_card[static_cast<std::size_t>(c)] =
            rank_exact(boundary_matrix(layers[static_cast<std::size_t>(c - 1)], layers[static_cast<std::size_t>(c)]));
    for (int c = 0; c <= top; ++c) {
        std::int64_t beta = static_cast<std::int64_t>(layers[static_cast<std::size_t>(c)].size()) -
                            rank_card[static_cast<std::size_t>(c)] - rank_card[static_cast<std::size_t>(c) + 1];
        out.set(c - 1, beta);
    }
    return Result::value(out);
}

Outcome<std::int64_t> betti_in_degree(const Complex& x, int degree, const HomologyOptions& options) {
    using Result = Outcome<std::int64_t>;
    if (x.is_void() || degree < -1 || degree + 1 > x.ground_set().size()) return Result::value(0);
    std::vector<VertexSet> lower = x.faces_of_cardinality(degree);
    std::vector<VertexSet> mid = x.faces_of_cardinality(degree + 1);
    std::vector<VertexSet> upper = x.faces_of_cardinality(degree + 2);
    std::uint64_t total = lower.size() + mid.size() + upper.size();
    if (total > options.max_faces)
        return Result::refusal("face count exceeds limit " + std::to_string(options.max_faces) + " (" +
                               std::to_string(total) + " faces in three layers)");
    std::int64_t down = rank_exact(boundary_matrix(lower, mid));
    std::int64_t up = rank_exact(boundary_matrix(mid, upper));
    return Result::value(static_cast<std::int64_t>(mid.size()) - down - up);
}

Outcome<BettiVector> betti_via_dual_nerve(const Graph& g, int n, const HomologyOptions& options) {
    using Result = Outcome<BettiVector>;
    std::vector<VertexSet> missing = independent_sets_of_size(g, n);
    if (missing.empty())
        throw std::invalid_argument("betti_via_dual_nerve: alpha(G) < n, Alexander duality does not apply");
    if (missing.size() > static_cast<std::size_t>(kMaxVertices))
        return Result::refusal("dual nerve has " + std::to_string(missing.size()) + " facets (limit 64)");
    const int vertex_count = g.vertex_count();
    SetFamily family;
    family.ground = g.vertices();
    family.sets.reserve(missing.size());
    for (VertexSet m : missing) family.sets.push_back(g.vertices() - m);
    auto nerve_betti = reduced_betti(nerve(family), options);
    if (!nerve_betti) return Result::refusal(nerve_betti.refusal_reason());
    BettiVector out;
    for (const auto& [j, b] : nerve_betti->entries()) {
        if (b == 0) continue;
        if (j < -1 || j > vertex_count - 2)
            throw std::logic_error("betti_via_dual_nerve: dual homology outside the duality range");
        out.set(vertex_count - j - 3, b);
    }
    return Result::value(out);
}

Outcome<int> leray_number(const Complex& x, int vertex_limit, const HomologyOptions& options) {
    using Result = Outcome<int>;
    if (x.ground_set().size() > vertex_limit)
        return Result::refusal("ground set has " + std::to_string(x.ground_set().size()) +
                               " vertices, exhaustive limit is " + std::to_string(vertex_limit));
    if (x.is_void()) return Result::value(0);
    int best = 0;
    const std::uint64_t ground_bits = x.ground_set().bits();
    std::uint64_t sub = ground_bits;
    while (true) {
        auto betti = reduced_betti(x.induced(VertexSet(sub)), options);
        if (!betti) return Result::refusal(betti.refusal_reason());
        if (auto top = betti->top_nonzero()) best = std::max(best, *top + 1);
        if (sub == 0) break;
        sub = (sub - 1) & ground_bits;
    }
    return Result::value(best);
}

int leray_lower_bound(const Complex& x, const std::vector<VertexSet>& subsets, const HomologyOptions& options) {
    if (x.is_void()) return 0;
    std::vector<VertexSet> candidates = subsets.empty() ? std::vector<VertexSet>{x.ground_set()} : subsets;
    int best = 0;
    for (VertexSet u : candidates) {
        Complex y = x.induced(u);
        if (y.is_void()) continue;
        bool computed = false;
        std::optional<int> top;
        // The dual-nerve route goes first: it only touches the missing-face
        // antichain, while direct enumeration walks the full face lattice.
        if (!y.is_face(y.ground_set()) && !y.missing_faces().empty() &&
            y.missing_faces().size() <= static_cast<std::size_t>(kMaxVertices)) {
            SetFamily family;
            family.ground = y.ground_set();
            for (VertexSet m : y.missing_faces()) family.sets.push_back(y.ground_set() - m);
            auto nerve_betti = reduced_betti(nerve(family), options);
            if (nerve_betti) {
                const int nv = y.ground_set().size();
                BettiVector mapped;
                for (const auto& [j, b] : nerve_betti->entries())
                    if (b != 0) mapped.set(nv - j - 3, b);
                top = mapped.top_nonzero();
                computed = true;
            }
        }
        if (!computed) {
            auto direct = reduced_betti(y, options);
            if (direct) top = direct->top_nonzero();
        }
        if (top) best = std::max(best, *top + 1);
    }
    return best;
}

BettiVector betti_convolution(const BettiVector& a, const BettiVector& b, int shift) {
    BettiVector out;
    for (const auto& [i, va] : a.entries()) {
        if (va == 0) continue;
        for (const auto& [j, vb] : b.entries()) {
            if (vb == 0) continue;
            out.set(i + j + shift, out.get(i + j + shift) + va * vb);
        }
    }
    return out;
}

Outcome<UnionLerayReport> union_leray_check(const std::vector<Graph>& parts, int vertex_limit,
                                            const HomologyOptions& options) {
    using Result = Outcome<UnionLerayReport>;
    if (parts.empty()) return Result::refusal("union_leray_check: empty graph list");
    UnionLerayReport report;
    std::vector<BettiVector> part_betti;
    int total_alpha = 0;
    for (const Graph& g : parts) {
        int alpha = independence_number(g);
        total_alpha += alpha;
        Complex x = independence_complex(g, alpha);
        auto leray = leray_number(x, vertex_limit, options);
        if (!leray) return Result::refusal(leray.refusal_reason());
        report.part_leray.push_back(*leray);
        auto betti = reduced_betti(x, options);
        if (!betti) return Result::refusal(betti.refusal_reason());
        part_betti.push_back(*betti);
    }
    int total_vertices = 0;
    for (const Graph& g : parts) total_vertices += g.vertex_count();
    if (total_vertices > kMaxVertices)
        return Result::refusal("union has " + std::to_string(total_vertices) + " vertices (limit 64)");
    Graph whole = disjoint_union(parts);
    Complex x = independence_complex(whole, total_alpha);
    auto leray = leray_number(x, vertex_limit, options);
    if (!leray) return Result::refusal(leray.refusal_reason());
    report.union_leray = *leray;
    report.predicted = 0;
    for (int l : report.part_leray) report.predicted += l;
    report.predicted += static_cast<int>(parts.size()) - 1;
    report.equality = (report.union_leray == report.predicted);

    auto union_betti = reduced_betti(x, options);
    if (!union_betti) return Result::refusal(union_betti.refusal_reason());
    BettiVector conv = part_betti.front();
    for (std::size_t i = 1; i < part_betti.size(); ++i) conv = betti_convolution(conv, part_betti[i], 2);
    report.betti_identity = (conv == *union_betti);
    return Result::value(report);
}

}  // namespace icx
