#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>

namespace wedge {

// Fixed 128-bit set, used for edge masks (the engines cap at 128 edges).
struct Bits128 {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;

    static Bits128 one(int i) {
        Bits128 b;
        b.set(i);
        return b;
    }
    // Mask with bits 0..n-1 set.
    static Bits128 low(int n) {
        Bits128 b;
        if (n >= 128) {
            b.lo = b.hi = ~0ull;
        } else if (n > 64) {
            b.lo = ~0ull;
            b.hi = (1ull << (n - 64)) - 1;
        } else if (n == 64) {
            b.lo = ~0ull;
        } else if (n > 0) {
            b.lo = (1ull << n) - 1;
        }
        return b;
    }

    bool test(int i) const {
        return i < 64 ? (lo >> i) & 1 : (hi >> (i - 64)) & 1;
    }
    void set(int i) {
        if (i < 64)
            lo |= 1ull << i;
        else
            hi |= 1ull << (i - 64);
    }
    void reset(int i) {
        if (i < 64)
            lo &= ~(1ull << i);
        else
            hi &= ~(1ull << (i - 64));
    }

    int count() const { return std::popcount(lo) + std::popcount(hi); }
    bool any() const { return lo | hi; }
    bool none() const { return !any(); }
    // Index of the lowest set bit; undefined when empty.
    int lowest() const {
        return lo ? std::countr_zero(lo) : 64 + std::countr_zero(hi);
    }

    friend Bits128 operator&(Bits128 a, Bits128 b) {
        return {a.lo & b.lo, a.hi & b.hi};
    }
    friend Bits128 operator|(Bits128 a, Bits128 b) {
        return {a.lo | b.lo, a.hi | b.hi};
    }
    friend Bits128 operator^(Bits128 a, Bits128 b) {
        return {a.lo ^ b.lo, a.hi ^ b.hi};
    }
    // a minus b as sets.
    friend Bits128 andnot(Bits128 a, Bits128 b) {
        return {a.lo & ~b.lo, a.hi & ~b.hi};
    }
    Bits128& operator&=(Bits128 b) { lo &= b.lo; hi &= b.hi; return *this; }
    Bits128& operator|=(Bits128 b) { lo |= b.lo; hi |= b.hi; return *this; }

    friend bool operator==(Bits128 a, Bits128 b) = default;
    bool is_subset_of(Bits128 b) const { return andnot(*this, b).none(); }

    template <typename F>
    void for_each(F&& f) const {
        std::uint64_t w = lo;
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

struct Bits128Hash {
    std::size_t operator()(const Bits128& b) const {
        std::uint64_t x = b.lo * 0x9e3779b97f4a7c15ull;
        x ^= b.hi + 0x9e3779b97f4a7c15ull + (x << 6) + (x >> 2);
        return static_cast<std::size_t>(x);
    }
};

}  // namespace wedge
