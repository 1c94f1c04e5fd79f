#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace olp::detail {

// Fixed-universe dynamic bitset used for rule sets and literal sets.
class Bits {
public:
    Bits() = default;
    explicit Bits(std::size_t universe) : size_(universe), words_((universe + 63) / 64, 0) {}

    std::size_t universe() const { return size_; }

    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
    void clear() { std::fill(words_.begin(), words_.end(), 0); }

    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    std::size_t count() const {
        std::size_t n = 0;
        for (auto w : words_) n += std::popcount(w);
        return n;
    }

    Bits& operator|=(const Bits& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    Bits& operator&=(const Bits& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    Bits& subtract(const Bits& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend Bits operator|(Bits a, const Bits& b) { return a |= b; }
    friend Bits operator&(Bits a, const Bits& b) { return a &= b; }
    friend Bits difference(Bits a, const Bits& b) { return a.subtract(b); }

    bool subset_of(const Bits& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }
    bool intersects(const Bits& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    bool operator==(const Bits& o) const { return words_ == o.words_; }
    auto operator<=>(const Bits& o) const { return words_ <=> o.words_; }

    // Calls f(i) for every set bit, in increasing order.
    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w) {
                f(wi * 64 + std::countr_zero(w));
                w &= w - 1;
            }
        }
    }

    std::size_t lowest() const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi)
            if (words_[wi]) return wi * 64 + std::countr_zero(words_[wi]);
        return size_;
    }

    static Bits full(std::size_t universe) {
        Bits b(universe);
        for (std::size_t i = 0; i < universe; ++i) b.set(i);
        return b;
    }

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace olp::detail
