#include "jpm/bitset.hpp"

namespace jpm {

void Bitset::set_all() noexcept {
    for (auto& w : words_) w = ~std::uint64_t{0};
    if (size_ % 64 != 0 && !words_.empty()) {
        words_.back() = (std::uint64_t{1} << (size_ % 64)) - 1;
    }
}

void Bitset::clear() noexcept {
    for (auto& w : words_) w = 0;
}

std::size_t Bitset::count() const noexcept {
    std::size_t total = 0;
    for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

bool Bitset::none() const noexcept {
    for (auto w : words_) {
        if (w != 0) return false;
    }
    return true;
}

std::size_t Bitset::find_next(std::size_t from) const noexcept {
    if (from >= size_) return npos;
    std::size_t w = from >> 6;
    std::uint64_t bits = words_[w] & (~std::uint64_t{0} << (from & 63));
    while (true) {
        if (bits != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        if (++w == words_.size()) return npos;
        bits = words_[w];
    }
}

Bitset& Bitset::operator&=(const Bitset& other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
}

Bitset& Bitset::operator|=(const Bitset& other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
}

Bitset& Bitset::and_not(const Bitset& other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    return *this;
}

bool Bitset::intersects(const Bitset& other) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if ((words_[i] & other.words_[i]) != 0) return true;
    }
    return false;
}

}  // namespace jpm
