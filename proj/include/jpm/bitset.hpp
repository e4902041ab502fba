#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace jpm {

/// Dynamically sized bit set stored as 64-bit words. Bits past size() are
/// always zero so word-wise operations never leak phantom members.
class Bitset {
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    Bitset() = default;
    explicit Bitset(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    std::size_t size() const noexcept { return size_; }
    std::span<const std::uint64_t> words() const noexcept { return words_; }
    std::span<std::uint64_t> words() noexcept { return words_; }

    void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1U; }

    void set_all() noexcept;
    void clear() noexcept;

    std::size_t count() const noexcept;
    bool none() const noexcept;
    bool any() const noexcept { return !none(); }

    /// First set bit at index >= from, or npos.
    std::size_t find_next(std::size_t from) const noexcept;
    std::size_t find_first() const noexcept { return find_next(0); }

    Bitset& operator&=(const Bitset& other) noexcept;
    Bitset& operator|=(const Bitset& other) noexcept;
    Bitset& and_not(const Bitset& other) noexcept;
    bool intersects(const Bitset& other) const noexcept;

    friend bool operator==(const Bitset&, const Bitset&) = default;

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits != 0) {
                fn(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
                bits &= bits - 1;
            }
        }
    }

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace jpm
