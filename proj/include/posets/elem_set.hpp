#pragma once

#include <bit>
#include <cstdint>

namespace posets {

// A subset of the carrier of one poset, one bit per element index.
// Posets are capped at 64 elements so a single word always suffices.
class ElemSet {
public:
    constexpr ElemSet() = default;
    constexpr explicit ElemSet(std::uint64_t bits) : bits_(bits) {}

    static constexpr ElemSet single(int e) { return ElemSet(std::uint64_t{1} << e); }
    static constexpr ElemSet full(int n) {
        return ElemSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }

    constexpr bool contains(int e) const { return bits_ >> e & 1; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool is_singleton() const { return bits_ != 0 && (bits_ & (bits_ - 1)) == 0; }

    // Lowest element index, -1 when empty.
    constexpr int first() const { return bits_ ? std::countr_zero(bits_) : -1; }

    constexpr ElemSet& add(int e) { bits_ |= std::uint64_t{1} << e; return *this; }
    constexpr ElemSet& remove(int e) { bits_ &= ~(std::uint64_t{1} << e); return *this; }

    constexpr bool subset_of(ElemSet o) const { return (bits_ & ~o.bits_) == 0; }
    constexpr bool intersects(ElemSet o) const { return (bits_ & o.bits_) != 0; }

    constexpr std::uint64_t bits() const { return bits_; }

    friend constexpr ElemSet operator&(ElemSet a, ElemSet b) { return ElemSet(a.bits_ & b.bits_); }
    friend constexpr ElemSet operator|(ElemSet a, ElemSet b) { return ElemSet(a.bits_ | b.bits_); }
    friend constexpr ElemSet operator-(ElemSet a, ElemSet b) { return ElemSet(a.bits_ & ~b.bits_); }
    constexpr ElemSet& operator&=(ElemSet o) { bits_ &= o.bits_; return *this; }
    constexpr ElemSet& operator|=(ElemSet o) { bits_ |= o.bits_; return *this; }
    constexpr bool operator==(const ElemSet&) const = default;

    // Iterates the member indices in ascending order.
    class iterator {
    public:
        using value_type = int;
        constexpr int operator*() const { return std::countr_zero(rest_); }
        constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
        constexpr bool operator==(const iterator&) const = default;

    private:
        friend class ElemSet;
        constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
        std::uint64_t rest_;
    };

    constexpr iterator begin() const { return iterator(bits_); }
    constexpr iterator end() const { return iterator(0); }

private:
    std::uint64_t bits_ = 0;
};

}  // namespace posets
