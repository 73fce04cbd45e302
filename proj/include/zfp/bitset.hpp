#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "zfp/error.hpp"

namespace zfp {

// Fixed-size bitset with runtime length. Used for positive-membership masks.
class DynamicBitset {
public:
    DynamicBitset() = default;
    explicit DynamicBitset(std::size_t size)
        : size_(size), words_((size + 63) / 64, 0) {}

    std::size_t size() const { return size_; }

    bool test(std::size_t i) const {
        check(i);
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }

    void set(std::size_t i) {
        check(i);
        words_[i >> 6] |= (std::uint64_t{1} << (i & 63));
    }

    void reset(std::size_t i) {
        check(i);
        words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }

    void set_all() {
        for (auto& w : words_) w = ~std::uint64_t{0};
        trim();
    }

    std::int64_t count() const {
        std::int64_t c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    bool any() const {
        for (auto w : words_) if (w) return true;
        return false;
    }

    // Calls fn(index) for every set bit, in ascending order.
    template <class Fn>
    void for_each_set(Fn&& fn) const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w) {
                const int b = std::countr_zero(w);
                fn(wi * 64 + static_cast<std::size_t>(b));
                w &= w - 1;
            }
        }
    }

    friend bool operator==(const DynamicBitset& a, const DynamicBitset& b) {
        return a.size_ == b.size_ && a.words_ == b.words_;
    }

private:
    void check(std::size_t i) const {
        if (i >= size_) throw Error("bitset index out of range");
    }
    void trim() {
        if (size_ % 64 != 0 && !words_.empty())
            words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
    }

    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace zfp
