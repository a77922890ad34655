#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "rough/kernels.hpp"

namespace rough {

// Dynamic bit set over a fixed-size carrier. Objects, properties and worlds
// are all addressed by their canonical index, so one type serves every
// module. Binary operations require both operands to share a carrier size.
// Invariant: bits beyond size() are always zero.
class BitSet {
public:
    BitSet() = default;

    explicit BitSet(std::size_t bits) : nbits_(bits), words_(word_count(bits), 0) {}

    static BitSet full(std::size_t bits) {
        BitSet s(bits);
        for (auto& w : s.words_) w = ~std::uint64_t{0};
        s.trim();
        return s;
    }

    static BitSet of(std::size_t bits, std::initializer_list<std::size_t> members) {
        BitSet s(bits);
        for (std::size_t i : members) s.set(i);
        return s;
    }

    std::size_t size() const { return nbits_; }

    std::size_t count() const {
        return kernels::active().popcount(words_.data(), words_.size());
    }

    bool none() const { return count() == 0; }
    bool any() const { return !none(); }

    bool test(std::size_t i) const {
        assert(i < nbits_);
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }

    BitSet& set(std::size_t i) {
        assert(i < nbits_);
        words_[i >> 6] |= std::uint64_t{1} << (i & 63);
        return *this;
    }

    BitSet& reset(std::size_t i) {
        assert(i < nbits_);
        words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
        return *this;
    }

    BitSet& operator&=(const BitSet& o) {
        assert(nbits_ == o.nbits_);
        kernels::active().bit_and(words_.data(), words_.data(), o.words_.data(), words_.size());
        return *this;
    }

    BitSet& operator|=(const BitSet& o) {
        assert(nbits_ == o.nbits_);
        kernels::active().bit_or(words_.data(), words_.data(), o.words_.data(), words_.size());
        return *this;
    }

    // Set difference.
    BitSet& operator-=(const BitSet& o) {
        assert(nbits_ == o.nbits_);
        kernels::active().bit_andnot(words_.data(), words_.data(), o.words_.data(), words_.size());
        return *this;
    }

    BitSet operator&(const BitSet& o) const { BitSet r(*this); r &= o; return r; }
    BitSet operator|(const BitSet& o) const { BitSet r(*this); r |= o; return r; }
    BitSet operator-(const BitSet& o) const { BitSet r(*this); r -= o; return r; }

    // Complement within the carrier.
    BitSet operator~() const {
        BitSet r(nbits_);
        kernels::active().bit_not(r.words_.data(), words_.data(), words_.size());
        r.trim();
        return r;
    }

    bool is_subset_of(const BitSet& o) const {
        assert(nbits_ == o.nbits_);
        return kernels::active().subset(words_.data(), o.words_.data(), words_.size());
    }

    bool intersects(const BitSet& o) const {
        assert(nbits_ == o.nbits_);
        return kernels::active().intersects(words_.data(), o.words_.data(), words_.size());
    }

    bool operator==(const BitSet& o) const {
        return nbits_ == o.nbits_ &&
               kernels::active().equal(words_.data(), o.words_.data(), words_.size());
    }

    bool operator!=(const BitSet& o) const { return !(*this == o); }

    // Index of the lowest set bit, or size() when empty.
    std::size_t find_first() const {
        for (std::size_t w = 0; w < words_.size(); ++w)
            if (words_[w]) return (w << 6) + static_cast<std::size_t>(std::countr_zero(words_[w]));
        return nbits_;
    }

    template <typename F>
    void for_each(F&& fn) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t word = words_[w];
            while (word) {
                std::size_t bit = static_cast<std::size_t>(std::countr_zero(word));
                fn((w << 6) + bit);
                word &= word - 1;
            }
        }
    }

    std::vector<std::size_t> members() const {
        std::vector<std::size_t> out;
        out.reserve(count());
        for_each([&](std::size_t i) { out.push_back(i); });
        return out;
    }

private:
    static std::size_t word_count(std::size_t bits) { return (bits + 63) >> 6; }

    void trim() {
        if (nbits_ & 63) words_.back() &= (~std::uint64_t{0}) >> (64 - (nbits_ & 63));
    }

    std::size_t nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

// Renders a set as "{name,name,...}" using the carrier's canonical names.
inline std::string format_set(std::span<const std::string> names, const BitSet& s) {
    assert(names.size() == s.size());
    std::string out = "{";
    bool first = true;
    s.for_each([&](std::size_t i) {
        if (!first) out += ',';
        out += names[i];
        first = false;
    });
    out += '}';
    return out;
}

}  // namespace rough
