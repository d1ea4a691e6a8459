#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>

#ifndef MAINSPECTRA_MAX_VERTICES
#define MAINSPECTRA_MAX_VERTICES 256
#endif

namespace mainspectra {

/// Fixed-width bitset over vertex ids, iterable in increasing order.
template <int Bits>
class BasicVertexSet {
    static_assert(Bits > 0 && Bits % 64 == 0);
    static constexpr int kWords = Bits / 64;

public:
    static constexpr int kCapacity = Bits;

    constexpr BasicVertexSet() = default;

    static constexpr BasicVertexSet single(int v) {
        BasicVertexSet s;
        s.set(v);
        return s;
    }
    /// {0, ..., n-1}
    static constexpr BasicVertexSet range(int n) {
        BasicVertexSet s;
        for (int w = 0; w < kWords && n > 0; ++w, n -= 64) s.w_[w] = n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
        return s;
    }
    static constexpr BasicVertexSet from_word(std::uint64_t low) {
        BasicVertexSet s;
        s.w_[0] = low;
        return s;
    }

    constexpr bool test(int v) const { return (w_[static_cast<std::size_t>(v >> 6)] >> (v & 63)) & 1U; }
    constexpr void set(int v) { w_[static_cast<std::size_t>(v >> 6)] |= std::uint64_t{1} << (v & 63); }
    constexpr void reset(int v) { w_[static_cast<std::size_t>(v >> 6)] &= ~(std::uint64_t{1} << (v & 63)); }
    constexpr std::uint64_t word(int i) const { return w_[static_cast<std::size_t>(i)]; }

    constexpr int count() const {
        int c = 0;
        for (auto x : w_) c += std::popcount(x);
        return c;
    }
    constexpr bool empty() const {
        for (auto x : w_)
            if (x != 0) return false;
        return true;
    }
    constexpr bool any() const { return !empty(); }
    /// Smallest member, or -1.
    constexpr int lowest() const { return next_from(0); }
    /// Smallest member >= v, or -1.
    constexpr int next_from(int v) const {
        if (v >= Bits) return -1;
        int w = v >> 6;
        std::uint64_t cur = w_[static_cast<std::size_t>(w)] & (~std::uint64_t{0} << (v & 63));
        while (true) {
            if (cur != 0) return w * 64 + std::countr_zero(cur);
            if (++w == kWords) return -1;
            cur = w_[static_cast<std::size_t>(w)];
        }
    }

    constexpr BasicVertexSet& operator&=(const BasicVertexSet& o) {
        for (int i = 0; i < kWords; ++i) w_[i] &= o.w_[i];
        return *this;
    }
    constexpr BasicVertexSet& operator|=(const BasicVertexSet& o) {
        for (int i = 0; i < kWords; ++i) w_[i] |= o.w_[i];
        return *this;
    }
    constexpr BasicVertexSet& operator^=(const BasicVertexSet& o) {
        for (int i = 0; i < kWords; ++i) w_[i] ^= o.w_[i];
        return *this;
    }
    constexpr BasicVertexSet operator~() const {
        BasicVertexSet s;
        for (int i = 0; i < kWords; ++i) s.w_[i] = ~w_[i];
        return s;
    }
    friend constexpr BasicVertexSet operator&(BasicVertexSet a, const BasicVertexSet& b) { return a &= b; }
    friend constexpr BasicVertexSet operator|(BasicVertexSet a, const BasicVertexSet& b) { return a |= b; }
    friend constexpr BasicVertexSet operator^(BasicVertexSet a, const BasicVertexSet& b) { return a ^= b; }
    friend constexpr bool operator==(const BasicVertexSet&, const BasicVertexSet&) = default;

    /// a \ b
    constexpr BasicVertexSet minus(const BasicVertexSet& b) const { return *this & ~b; }
    constexpr bool subset_of(const BasicVertexSet& b) const { return minus(b).empty(); }
    friend constexpr int intersection_count(const BasicVertexSet& a, const BasicVertexSet& b) {
        int c = 0;
        for (int i = 0; i < kWords; ++i) c += std::popcount(a.w_[i] & b.w_[i]);
        return c;
    }

    class iterator {
    public:
        using value_type = int;
        using difference_type = std::ptrdiff_t;
        constexpr iterator() = default;
        constexpr iterator(const BasicVertexSet* s, int v) : s_(s), v_(v) {}
        constexpr int operator*() const { return v_; }
        constexpr iterator& operator++() {
            v_ = s_->next_from(v_ + 1);
            return *this;
        }
        constexpr iterator operator++(int) {
            iterator t = *this;
            ++*this;
            return t;
        }
        friend constexpr bool operator==(const iterator& a, const iterator& b) { return a.v_ == b.v_; }

    private:
        const BasicVertexSet* s_ = nullptr;
        int v_ = -1;
    };
    constexpr iterator begin() const { return iterator(this, lowest()); }
    constexpr iterator end() const { return iterator(this, -1); }

private:
    std::array<std::uint64_t, kWords> w_{};
};

using VertexSet = BasicVertexSet<MAINSPECTRA_MAX_VERTICES>;

}  // namespace mainspectra
