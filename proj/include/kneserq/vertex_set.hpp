#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace kq {

// Fixed-capacity bitset over vertex ids 0..capacity-1.
class VertexSet {
  public:
    VertexSet() = default;
    explicit VertexSet(int capacity) : capacity_(capacity), words_((static_cast<std::size_t>(capacity) + 63) / 64, 0) {}

    static VertexSet all(int capacity)
    {
        VertexSet s(capacity);
        for (int v = 0; v < capacity; ++v)
            s.set(v);
        return s;
    }

    int capacity() const noexcept { return capacity_; }

    bool test(int v) const { return (words_[word(v)] >> bit(v)) & 1u; }
    void set(int v) { words_[word(v)] |= std::uint64_t{1} << bit(v); }
    void reset(int v) { words_[word(v)] &= ~(std::uint64_t{1} << bit(v)); }

    int count() const
    {
        int c = 0;
        for (auto w : words_)
            c += std::popcount(w);
        return c;
    }

    bool any() const
    {
        for (auto w : words_)
            if (w)
                return true;
        return false;
    }
    bool none() const { return !any(); }

    // Lowest member >= from, or -1.
    int next(int from = 0) const
    {
        if (from >= capacity_)
            return -1;
        std::size_t wi = word(from);
        std::uint64_t w = words_[wi] & (~std::uint64_t{0} << bit(from));
        while (true) {
            if (w)
                return static_cast<int>(wi * 64 + static_cast<std::size_t>(std::countr_zero(w)));
            if (++wi == words_.size())
                return -1;
            w = words_[wi];
        }
    }
    int first() const { return next(0); }

    VertexSet &operator&=(const VertexSet &o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= o.words_[i];
        return *this;
    }
    VertexSet &operator|=(const VertexSet &o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] |= o.words_[i];
        return *this;
    }
    VertexSet &subtract(const VertexSet &o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= ~o.words_[i];
        return *this;
    }
    friend VertexSet operator&(VertexSet a, const VertexSet &b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet &b) { return a |= b; }
    friend VertexSet minus(VertexSet a, const VertexSet &b) { return a.subtract(b); }

    bool intersects(const VertexSet &o) const
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i])
                return true;
        return false;
    }

    int count_and(const VertexSet &o) const
    {
        int c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += std::popcount(words_[i] & o.words_[i]);
        return c;
    }

    std::vector<int> members() const
    {
        std::vector<int> out;
        for (int v = first(); v >= 0; v = next(v + 1))
            out.push_back(v);
        return out;
    }

    friend bool operator==(const VertexSet &, const VertexSet &) = default;

  private:
    static std::size_t word(int v) { return static_cast<std::size_t>(v) / 64; }
    static unsigned bit(int v) { return static_cast<unsigned>(v) % 64; }

    int capacity_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace kq
