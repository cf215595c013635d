#include "icx/complex.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace icx {

namespace {

// Keeps only inclusion-minimal sets, deduplicated, sorted by mask.
std::vector<VertexSet> minimalize(std::vector<VertexSet> sets) {
    std::sort(sets.begin(), sets.end(),
              [](VertexSet a, VertexSet b) { return a.size() != b.size() ? a.size() < b.size() : a < b; });
    std::vector<VertexSet> out;
    for (VertexSet s : sets) {
        bool dominated = false;
        for (VertexSet kept : out)
            if (kept.subset_of(s)) {
                dominated = true;
                break;
            }
        if (!dominated) out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<VertexSet> maximalize(std::vector<VertexSet> sets) {
    std::sort(sets.begin(), sets.end(),
              [](VertexSet a, VertexSet b) { return a.size() != b.size() ? a.size() > b.size() : a < b; });
    std::vector<VertexSet> out;
    for (VertexSet s : sets) {
        bool dominated = false;
        for (VertexSet kept : out)
            if (s.subset_of(kept)) {
                dominated = true;
                break;
            }
        if (!dominated) out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

void transversal_search(const std::vector<VertexSet>& sets, VertexSet chosen, std::size_t covered_upto,
                        std::vector<char>& covered, std::vector<VertexSet>& out) {
    // Find the first uncovered set.
    std::size_t idx = covered_upto;
    while (idx < sets.size() && covered[idx]) ++idx;
    if (idx == sets.size()) {
        out.push_back(chosen);
        return;
    }
    for (int v : sets[idx]) {
        if (chosen.contains(v)) continue;
        std::vector<std::size_t> newly;
        for (std::size_t i = idx; i < sets.size(); ++i)
            if (!covered[i] && sets[i].contains(v)) {
                covered[i] = 1;
                newly.push_back(i);
            }
        transversal_search(sets, chosen.with(v), idx, covered, out);
        for (std::size_t i : newly) covered[i] = 0;
    }
}

}  // namespace

std::vector<VertexSet> minimal_transversals(const std::vector<VertexSet>& sets_in, VertexSet ground) {
    for (VertexSet s : sets_in) {
        if (!s.subset_of(ground)) throw std::invalid_argument("minimal_transversals: set outside ground");
        if (s.empty()) return {};  // nothing can hit the empty set
    }
    if (sets_in.empty()) return {VertexSet{}};
    std::vector<VertexSet> sets = minimalize(sets_in);
    std::vector<char> covered(sets.size(), 0);
    std::vector<VertexSet> raw;
    transversal_search(sets, VertexSet{}, 0, covered, raw);
    // Branching can emit supersets of other transversals; minimalize once.
    return minimalize(std::move(raw));
}

Complex Complex::void_complex(VertexSet ground) {
    Complex x;
    x.ground_ = ground;
    x.void_ = true;
    return x;
}

Complex Complex::empty_complex(VertexSet ground) {
    std::vector<VertexSet> missing;
    for (int v : ground) missing.push_back(VertexSet::single(v));
    return from_missing_faces(ground, std::move(missing));
}

Complex Complex::complete(VertexSet ground) { return from_missing_faces(ground, {}); }

Complex Complex::simplex_boundary(VertexSet u) {
    if (u.empty()) throw std::invalid_argument("simplex_boundary: need at least one vertex");
    return from_missing_faces(u, {u});
}

Complex Complex::from_missing_faces(VertexSet ground, std::vector<VertexSet> missing) {
    for (VertexSet m : missing) {
        if (m.empty())
            throw std::invalid_argument("from_missing_faces: empty missing face (use void_complex)");
        if (!m.subset_of(ground)) throw std::invalid_argument("from_missing_faces: missing face outside ground");
    }
    Complex x;
    x.ground_ = ground;
    x.missing_ = minimalize(std::move(missing));
    return x;
}

Complex Complex::from_facets(VertexSet ground, std::vector<VertexSet> facets) {
    if (facets.empty()) return void_complex(ground);
    for (VertexSet f : facets)
        if (!f.subset_of(ground)) throw std::invalid_argument("from_facets: facet outside ground");
    std::vector<VertexSet> maximal = maximalize(std::move(facets));
    // Minimal non-faces are the minimal transversals of the facet complements.
    std::vector<VertexSet> complements;
    complements.reserve(maximal.size());
    for (VertexSet f : maximal) complements.push_back(ground - f);
    Complex x;
    x.ground_ = ground;
    x.missing_ = minimal_transversals(complements, ground);
    x.facet_cache_ = std::make_shared<const std::vector<VertexSet>>(std::move(maximal));
    return x;
}

const std::vector<VertexSet>& Complex::facets() const {
    static std::mutex cache_mutex;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        if (facet_cache_) return *facet_cache_;
    }
    std::vector<VertexSet> result;
    if (!void_) {
        // Maximal faces are the complements of minimal transversals of the
        // missing-face hypergraph.
        std::vector<VertexSet> transversals = minimal_transversals(missing_, ground_);
        result.reserve(transversals.size());
        for (VertexSet t : transversals) result.push_back(ground_ - t);
        std::sort(result.begin(), result.end());
    }
    std::lock_guard<std::mutex> lock(cache_mutex);
    if (!facet_cache_) facet_cache_ = std::make_shared<const std::vector<VertexSet>>(std::move(result));
    return *facet_cache_;
}

bool Complex::is_face(VertexSet sigma) const {
    if (void_) return false;
    if (!sigma.subset_of(ground_)) return false;
    for (VertexSet m : missing_)
        if (m.subset_of(sigma)) return false;
    return true;
}

bool Complex::is_cone_over(int v) const {
    if (void_ || !ground_.contains(v)) return false;
    for (VertexSet m : missing_)
        if (m.contains(v)) return false;
    return true;
}

int Complex::dimension() const {
    if (void_) return -2;
    int best = -1;
    for (VertexSet f : facets()) best = std::max(best, f.size() - 1);
    return best;
}

Complex Complex::link(VertexSet tau) const {
    VertexSet rest = ground_ - tau;
    if (!is_face(tau)) return void_complex(rest);
    std::vector<VertexSet> candidates;
    candidates.reserve(missing_.size());
    for (VertexSet m : missing_) candidates.push_back(m - tau);
    std::vector<VertexSet> missing = minimalize(std::move(candidates));
    // Vertices whose singleton became a missing face are not part of the link.
    VertexSet ground = rest;
    std::vector<VertexSet> kept;
    for (VertexSet m : missing) {
        if (m.size() == 1)
            ground = ground.without(m.lowest());
        else
            kept.push_back(m);
    }
    Complex x;
    x.ground_ = ground;
    x.missing_ = std::move(kept);
    return x;
}

Complex Complex::delete_vertex(int v) const { return induced(ground_.without(v)); }

Complex Complex::induced(VertexSet u) const {
    if (!u.subset_of(ground_)) throw std::invalid_argument("induced: U not within ground set");
    if (void_) return void_complex(u);
    Complex x;
    x.ground_ = u;
    for (VertexSet m : missing_)
        if (m.subset_of(u)) x.missing_.push_back(m);
    return x;
}

Complex Complex::alexander_dual() const {
    if (void_) return complete(ground_);
    if (missing_.empty()) return void_complex(ground_);
    std::vector<VertexSet> dual_facets;
    dual_facets.reserve(missing_.size());
    for (VertexSet m : missing_) dual_facets.push_back(ground_ - m);
    return from_facets(ground_, std::move(dual_facets));
}

Complex Complex::normalized() const {
    if (void_) return void_complex(VertexSet{});
    VertexSet ground = ground_;
    std::vector<VertexSet> kept;
    for (VertexSet m : missing_) {
        if (m.size() == 1)
            ground = ground.without(m.lowest());
        else
            kept.push_back(m);
    }
    Complex x;
    x.ground_ = ground;
    x.missing_ = std::move(kept);
    return x;
}

Complex Complex::relabeled(const std::vector<int>& image) const {
    auto map_set = [&](VertexSet s) {
        VertexSet out;
        for (int v : s) {
            if (v >= static_cast<int>(image.size()))
                throw std::invalid_argument("relabeled: image does not cover ground set");
            out = out.with(image[static_cast<std::size_t>(v)]);
        }
        return out;
    };
    VertexSet ground = map_set(ground_);
    if (ground.size() != ground_.size()) throw std::invalid_argument("relabeled: image not injective");
    if (void_) return void_complex(ground);
    std::vector<VertexSet> missing;
    missing.reserve(missing_.size());
    for (VertexSet m : missing_) missing.push_back(map_set(m));
    return from_missing_faces(ground, std::move(missing));
}

bool Complex::same_faces(const Complex& other) const {
    if (void_ || other.void_) return void_ == other.void_;
    Complex a = normalized();
    Complex b = other.normalized();
    return a.ground_ == b.ground_ && a.missing_ == b.missing_;
}

std::vector<VertexSet> Complex::faces_of_cardinality(int c) const {
    std::vector<VertexSet> out;
    if (void_ || c < 0 || c > ground_.size()) return out;
    if (c == 0) {
        out.push_back(VertexSet{});
        return out;
    }
    std::vector<int> verts = ground_.to_vector();
    const int n = static_cast<int>(verts.size());
    std::vector<int> pick;
    // Combinations in increasing vertex order; partial sets containing a
    // missing face cannot extend to a face, so prune there.
    auto rec = [&](auto&& self, int start, VertexSet current) -> void {
        if (static_cast<int>(pick.size()) == c) {
            out.push_back(current);
            return;
        }
        int needed = c - static_cast<int>(pick.size());
        for (int i = start; i <= n - needed; ++i) {
            VertexSet next = current.with(verts[static_cast<std::size_t>(i)]);
            bool dead = false;
            for (VertexSet m : missing_)
                if (m.subset_of(next)) {
                    dead = true;
                    break;
                }
            if (dead) continue;
            pick.push_back(verts[static_cast<std::size_t>(i)]);
            self(self, i + 1, next);
            pick.pop_back();
        }
    };
    rec(rec, 0, VertexSet{});
    std::sort(out.begin(), out.end());
    return out;
}

Outcome<std::uint64_t> Complex::count_faces(std::uint64_t max_faces) const {
    if (void_) return Outcome<std::uint64_t>::value(0);
    std::uint64_t total = 0;
    for (int c = 0; c <= ground_.size(); ++c) {
        std::vector<VertexSet> layer = faces_of_cardinality(c);
        if (c > 0 && layer.empty()) break;
        total += layer.size();
        if (total > max_faces)
            return Outcome<std::uint64_t>::refusal("face count exceeds limit " + std::to_string(max_faces));
    }
    return Outcome<std::uint64_t>::value(total);
}

Outcome<std::vector<std::int64_t>> Complex::f_vector(std::uint64_t max_faces) const {
    using Result = Outcome<std::vector<std::int64_t>>;
    std::vector<std::int64_t> f;
    if (void_) return Result::value(f);
    std::uint64_t total = 0;
    for (int c = 0; c <= ground_.size(); ++c) {
        std::vector<VertexSet> layer = faces_of_cardinality(c);
        if (c > 0 && layer.empty()) break;
        total += layer.size();
        if (total > max_faces) return Result::refusal("face count exceeds limit " + std::to_string(max_faces));
        f.push_back(static_cast<std::int64_t>(layer.size()));
    }
    return Result::value(f);
}

Complex join(const Complex& x, const Complex& y) {
    if (x.ground_set().intersects(y.ground_set()))
        throw std::invalid_argument("join: ground sets overlap");
    VertexSet ground = x.ground_set() | y.ground_set();
    if (x.is_void() || y.is_void()) return Complex::void_complex(ground);
    std::vector<VertexSet> missing = x.missing_faces();
    missing.insert(missing.end(), y.missing_faces().begin(), y.missing_faces().end());
    return Complex::from_missing_faces(ground, std::move(missing));
}

Complex independence_complex(const Graph& g, int n, VertexSet within) {
    if (n < 1) throw std::invalid_argument("independence_complex: need n >= 1");
    if (!within.subset_of(g.vertices()))
        throw std::invalid_argument("independence_complex: ground set not within V(G)");
    return Complex::from_missing_faces(within, independent_sets_of_size(g, n, within));
}

Complex nerve(const SetFamily& family) {
    const std::size_t m = family.sets.size();
    if (m > static_cast<std::size_t>(kMaxVertices))
        throw std::invalid_argument("nerve: more than 64 sets in the family");
    for (VertexSet a : family.sets)
        if (!a.subset_of(family.ground)) throw std::invalid_argument("nerve: set outside family ground");
    VertexSet index_ground = VertexSet::range(static_cast<int>(m));
    // An index set I fails to be a face iff its members' sets have empty
    // intersection, i.e. iff I hits S_v = { i : v not in A_i } for every v.
    // Minimal non-faces are therefore the minimal transversals of { S_v }.
    std::vector<VertexSet> constraints;
    for (int v : family.ground) {
        VertexSet sv;
        for (std::size_t i = 0; i < m; ++i)
            if (!family.sets[i].contains(v)) sv = sv.with(static_cast<int>(i));
        constraints.push_back(sv);
    }
    return Complex::from_missing_faces(index_ground, minimal_transversals(constraints, index_ground));
}

}  // namespace icx
