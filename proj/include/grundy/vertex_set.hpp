#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace grundy {

// Set of vertex indices 0..capacity-1 backed by 64-bit words.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int capacity)
        : capacity_(capacity), words_((capacity + 63) / 64, 0) {}

    int capacity() const { return capacity_; }

    bool contains(int v) const {
        return (words_[static_cast<size_t>(v) >> 6] >> (v & 63)) & 1u;
    }
    void add(int v) { words_[static_cast<size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63); }
    void remove(int v) { words_[static_cast<size_t>(v) >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

    int count() const {
        int c = 0;
        for (std::uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    bool empty() const {
        for (std::uint64_t w : words_)
            if (w) return false;
        return true;
    }

    bool intersects(const VertexSet& o) const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    bool is_subset_of(const VertexSet& o) const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    VertexSet& operator|=(const VertexSet& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    // this \ o
    VertexSet& subtract(const VertexSet& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    void clear() {
        for (std::uint64_t& w : words_) w = 0;
    }

    void fill() {
        for (int i = 0; i < capacity_; ++i) add(i);
    }

    // Smallest element, or -1 when empty.
    int first() const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return static_cast<int>(i * 64) + std::countr_zero(words_[i]);
        return -1;
    }

    // Smallest element greater than v, or -1 when none.
    int next(int v) const {
        ++v;
        if (v >= capacity_) return -1;
        size_t wi = static_cast<size_t>(v) >> 6;
        std::uint64_t w = words_[wi] >> (v & 63);
        if (w) return v + std::countr_zero(w);
        for (++wi; wi < words_.size(); ++wi)
            if (words_[wi]) return static_cast<int>(wi * 64) + std::countr_zero(words_[wi]);
        return -1;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (int v = first(); v >= 0; v = next(v)) f(v);
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<size_t>(count()));
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    int capacity_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace grundy
