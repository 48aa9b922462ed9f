#pragma once

#include <bit>
#include <cassert>
#include <cstdint>

namespace cpg {

// Vertex labels live in [0, kMaxN); two 64-bit words cover the whole range.
inline constexpr int kMaxN = 70;

struct VertexSet {
    uint64_t lo = 0;
    uint64_t hi = 0;

    static VertexSet full(int n) {
        assert(n >= 0 && n <= kMaxN);
        VertexSet s;
        if (n >= 64) {
            s.lo = ~0ull;
            s.hi = (n == 64) ? 0 : (~0ull >> (128 - n));
        } else if (n > 0) {
            s.lo = ~0ull >> (64 - n);
        }
        return s;
    }

    void add(int v) {
        assert(v >= 0 && v < kMaxN);
        if (v < 64)
            lo |= 1ull << v;
        else
            hi |= 1ull << (v - 64);
    }

    void remove(int v) {
        assert(v >= 0 && v < kMaxN);
        if (v < 64)
            lo &= ~(1ull << v);
        else
            hi &= ~(1ull << (v - 64));
    }

    bool contains(int v) const {
        if (v < 64) return (lo >> v) & 1;
        return (hi >> (v - 64)) & 1;
    }

    int count() const { return std::popcount(lo) + std::popcount(hi); }
    bool empty() const { return (lo | hi) == 0; }

    bool intersects(const VertexSet& o) const { return (lo & o.lo) != 0 || (hi & o.hi) != 0; }
    bool is_subset_of(const VertexSet& o) const { return (lo & ~o.lo) == 0 && (hi & ~o.hi) == 0; }

    friend VertexSet operator&(const VertexSet& a, const VertexSet& b) { return {a.lo & b.lo, a.hi & b.hi}; }
    friend VertexSet operator|(const VertexSet& a, const VertexSet& b) { return {a.lo | b.lo, a.hi | b.hi}; }
    friend VertexSet operator-(const VertexSet& a, const VertexSet& b) { return {a.lo & ~b.lo, a.hi & ~b.hi}; }

    bool operator==(const VertexSet&) const = default;

    // Lowest element, or -1 when empty.
    int first() const {
        if (lo) return std::countr_zero(lo);
        if (hi) return 64 + std::countr_zero(hi);
        return -1;
    }

    template <class F>
    void for_each(F&& f) const {
        uint64_t w = lo;
        while (w) {
            f(std::countr_zero(w));
            w &= w - 1;
        }
        w = hi;
        while (w) {
            f(64 + std::countr_zero(w));
            w &= w - 1;
        }
    }
};

}  // namespace cpg
