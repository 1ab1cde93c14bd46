#pragma once

#include <array>
#include <bit>
#include <cstdint>

namespace ramsey {

// Fixed 512-bit set. Graphs in this toolkit never exceed 512 vertices, so a
// flat array of eight words keeps every row operation branch-free.
class Bits512 {
public:
    static constexpr int capacity = 512;
    static constexpr int words = 8;

    constexpr Bits512() = default;

    // Mask with bits 0..n-1 set.
    static Bits512 first_n(int n) {
        Bits512 b;
        for (int i = 0; i < words; ++i) {
            int lo = i * 64;
            if (n >= lo + 64)
                b.w_[i] = ~0ULL;
            else if (n > lo)
                b.w_[i] = (~0ULL) >> (64 - (n - lo));
        }
        return b;
    }

    void set(int i) { w_[i >> 6] |= 1ULL << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(1ULL << (i & 63)); }
    void flip(int i) { w_[i >> 6] ^= 1ULL << (i & 63); }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1ULL; }

    int count() const {
        int c = 0;
        for (auto x : w_) c += std::popcount(x);
        return c;
    }

    bool any() const {
        for (auto x : w_)
            if (x) return true;
        return false;
    }
    bool none() const { return !any(); }

    bool intersects(const Bits512& o) const {
        for (int i = 0; i < words; ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    bool is_subset_of(const Bits512& o) const {
        for (int i = 0; i < words; ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    // Index of lowest set bit, -1 when empty.
    int find_first() const {
        for (int i = 0; i < words; ++i)
            if (w_[i]) return i * 64 + std::countr_zero(w_[i]);
        return -1;
    }

    // Lowest set bit strictly above `after`, -1 when none.
    int find_next(int after) const {
        int i = (after + 1) >> 6;
        if (i >= words) return -1;
        std::uint64_t x = w_[i] & (~0ULL << ((after + 1) & 63));
        while (true) {
            if (x) return i * 64 + std::countr_zero(x);
            if (++i >= words) return -1;
            x = w_[i];
        }
    }

    Bits512& operator&=(const Bits512& o) {
        for (int i = 0; i < words; ++i) w_[i] &= o.w_[i];
        return *this;
    }
    Bits512& operator|=(const Bits512& o) {
        for (int i = 0; i < words; ++i) w_[i] |= o.w_[i];
        return *this;
    }
    Bits512& operator^=(const Bits512& o) {
        for (int i = 0; i < words; ++i) w_[i] ^= o.w_[i];
        return *this;
    }

    friend Bits512 operator&(Bits512 a, const Bits512& b) { return a &= b; }
    friend Bits512 operator|(Bits512 a, const Bits512& b) { return a |= b; }
    friend Bits512 operator^(Bits512 a, const Bits512& b) { return a ^= b; }

    // this & ~o
    Bits512 and_not(const Bits512& o) const {
        Bits512 r;
        for (int i = 0; i < words; ++i) r.w_[i] = w_[i] & ~o.w_[i];
        return r;
    }

    bool operator==(const Bits512&) const = default;

private:
    std::array<std::uint64_t, words> w_{};
};

// Visit set bits in ascending order.
template <class F>
inline void for_each_bit(const Bits512& b, F&& f) {
    for (int v = b.find_first(); v >= 0; v = b.find_next(v)) f(v);
}

}  // namespace ramsey
