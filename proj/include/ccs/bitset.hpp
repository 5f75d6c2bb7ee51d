#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace ccs {

// Fixed-capacity bitset over 64-bit blocks; capacity chosen at construction.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t bits)
        : bits_(bits), blocks_((bits + 63) / 64, 0) {}

    std::size_t size() const { return bits_; }

    void set(std::size_t i) { blocks_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { blocks_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(std::size_t i) const {
        return (blocks_[i >> 6] >> (i & 63)) & 1;
    }

    void set_all() {
        for (auto& b : blocks_) b = ~std::uint64_t{0};
        trim();
    }

    bool any() const {
        for (auto b : blocks_)
            if (b) return true;
        return false;
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto b : blocks_) c += std::popcount(b);
        return c;
    }

    bool intersects(const Bitset& other) const {
        for (std::size_t i = 0; i < blocks_.size(); ++i)
            if (blocks_[i] & other.blocks_[i]) return true;
        return false;
    }

    std::size_t count_and(const Bitset& other) const {
        std::size_t c = 0;
        for (std::size_t i = 0; i < blocks_.size(); ++i)
            c += std::popcount(blocks_[i] & other.blocks_[i]);
        return c;
    }

    // this ⊆ other
    bool is_subset_of(const Bitset& other) const {
        for (std::size_t i = 0; i < blocks_.size(); ++i)
            if (blocks_[i] & ~other.blocks_[i]) return false;
        return true;
    }

    // (this & a & b) nonempty
    bool intersects_and(const Bitset& a, const Bitset& b) const {
        for (std::size_t i = 0; i < blocks_.size(); ++i)
            if (blocks_[i] & a.blocks_[i] & b.blocks_[i]) return true;
        return false;
    }

    void or_and(const Bitset& a, const Bitset& b) {
        // *this |= (a & b)
        for (std::size_t i = 0; i < blocks_.size(); ++i)
            blocks_[i] |= a.blocks_[i] & b.blocks_[i];
    }

    bool operator==(const Bitset&) const = default;

    template <typename Fn>
    void for_each_and(const Bitset& other, Fn&& fn) const {
        for (std::size_t i = 0; i < blocks_.size(); ++i) {
            std::uint64_t w = blocks_[i] & other.blocks_[i];
            while (w) {
                unsigned bit = std::countr_zero(w);
                fn(i * 64 + bit);
                w &= w - 1;
            }
        }
    }

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t i = 0; i < blocks_.size(); ++i) {
            std::uint64_t w = blocks_[i];
            while (w) {
                unsigned bit = std::countr_zero(w);
                fn(i * 64 + bit);
                w &= w - 1;
            }
        }
    }

private:
    void trim() {
        if (bits_ & 63)
            blocks_.back() &= (std::uint64_t{1} << (bits_ & 63)) - 1;
    }

    std::size_t bits_ = 0;
    std::vector<std::uint64_t> blocks_;
};

} // namespace ccs
