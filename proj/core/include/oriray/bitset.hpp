#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace oriray {

/// Fixed-size bit set over 64-bit words. Sized at construction, value type.
class Bits {
public:
    Bits() = default;
    explicit Bits(int size) : size_(size), words_((size + 63) / 64, 0) {}

    int size() const { return size_; }

    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(int i) { words_[i >> 6] |= uint64_t{1} << (i & 63); }
    void reset(int i) { words_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
    void assign(int i, bool v) { v ? set(i) : reset(i); }

    int count() const {
        int c = 0;
        for (uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    bool any() const {
        for (uint64_t w : words_)
            if (w) return true;
        return false;
    }

    int count_and(const Bits& other) const {
        int c = 0;
        for (size_t i = 0; i < words_.size(); ++i) c += std::popcount(words_[i] & other.words_[i]);
        return c;
    }

    Bits& operator|=(const Bits& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    Bits& operator&=(const Bits& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    bool operator==(const Bits&) const = default;

    /// Calls fn(i) for every set bit in ascending order.
    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (size_t wi = 0; wi < words_.size(); ++wi) {
            uint64_t w = words_[wi];
            while (w) {
                int b = std::countr_zero(w);
                fn(int(wi * 64 + b));
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for_each([&](int i) { out.push_back(i); });
        return out;
    }

    const std::vector<uint64_t>& words() const { return words_; }

private:
    int size_ = 0;
    std::vector<uint64_t> words_;
};

} // namespace oriray
