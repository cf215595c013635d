#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace icx {

// Ground sets are capped at 64 vertices so that every set operation is a
// single word operation.
inline constexpr int kMaxVertices = 64;

// A subset of {0, ..., 63} stored as a bit mask.
class VertexSet {
public:
    constexpr VertexSet() = default;
    explicit constexpr VertexSet(std::uint64_t bits) : bits_(bits) {}

    static VertexSet of(std::initializer_list<int> vertices) {
        VertexSet s;
        for (int v : vertices) s = s.with(v);
        return s;
    }

    // The first n vertices {0, ..., n-1}.
    static constexpr VertexSet range(int n) {
        if (n < 0 || n > kMaxVertices) throw std::invalid_argument("VertexSet::range: n out of range");
        if (n == kMaxVertices) return VertexSet(~std::uint64_t{0});
        return VertexSet((std::uint64_t{1} << n) - 1);
    }

    static constexpr VertexSet single(int v) { return VertexSet{}.with(v); }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }

    constexpr bool contains(int v) const { return v >= 0 && v < kMaxVertices && (bits_ >> v & 1); }

    constexpr VertexSet with(int v) const {
        check_vertex(v);
        return VertexSet(bits_ | (std::uint64_t{1} << v));
    }
    constexpr VertexSet without(int v) const {
        check_vertex(v);
        return VertexSet(bits_ & ~(std::uint64_t{1} << v));
    }

    constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
    constexpr bool proper_subset_of(VertexSet o) const { return subset_of(o) && bits_ != o.bits_; }
    constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }

    constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
    constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
    constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }

    constexpr bool operator==(const VertexSet&) const = default;
    constexpr bool operator<(VertexSet o) const { return bits_ < o.bits_; }

    // Smallest element; the set must be non-empty.
    constexpr int lowest() const {
        if (bits_ == 0) throw std::logic_error("VertexSet::lowest: empty set");
        return std::countr_zero(bits_);
    }

    class iterator {
    public:
        explicit constexpr iterator(std::uint64_t rest) : rest_(rest) {}
        constexpr int operator*() const { return std::countr_zero(rest_); }
        constexpr iterator& operator++() {
            rest_ &= rest_ - 1;
            return *this;
        }
        constexpr bool operator!=(const iterator& o) const { return rest_ != o.rest_; }

    private:
        std::uint64_t rest_;
    };
    constexpr iterator begin() const { return iterator(bits_); }
    constexpr iterator end() const { return iterator(0); }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (int v : *this) out.push_back(v);
        return out;
    }

    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for (int v : *this) {
            if (!first) s += ",";
            s += std::to_string(v);
            first = false;
        }
        return s + "}";
    }

private:
    static constexpr void check_vertex(int v) {
        if (v < 0 || v >= kMaxVertices) throw std::invalid_argument("vertex index out of range [0,64)");
    }

    std::uint64_t bits_ = 0;
};

}  // namespace icx
