#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace pgcodes {

/// Set of point indices of a fixed ambient space, stored as a packed bitset.
/// Also doubles as the support of an F_2 code vector.
class PointSet {
public:
    PointSet() = default;
    explicit PointSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}
    PointSet(std::size_t universe, std::span<const std::uint32_t> members) : PointSet(universe) {
        for (auto m : members) insert(m);
    }
    PointSet(std::size_t universe, std::initializer_list<std::uint32_t> members) : PointSet(universe) {
        for (auto m : members) insert(m);
    }

    static PointSet full(std::size_t universe) {
        PointSet s(universe);
        for (std::size_t i = 0; i < universe; ++i) s.insert(static_cast<std::uint32_t>(i));
        return s;
    }

    std::size_t universe() const noexcept { return universe_; }

    void insert(std::uint32_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void erase(std::uint32_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    void flip(std::uint32_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }
    bool contains(std::uint32_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

    std::size_t size() const noexcept {
        std::size_t n = 0;
        for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
        return n;
    }
    bool empty() const noexcept {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    /// |this ∩ other| without materialising the intersection.
    std::size_t intersection_size(const PointSet& other) const noexcept {
        std::size_t n = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            n += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
        return n;
    }
    bool intersects(const PointSet& other) const noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & other.words_[i]) return true;
        return false;
    }
    bool is_subset_of(const PointSet& other) const noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~other.words_[i]) return false;
        return true;
    }

    PointSet& operator|=(const PointSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    PointSet& operator&=(const PointSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    PointSet& operator^=(const PointSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
        return *this;
    }
    /// Set difference.
    PointSet& operator-=(const PointSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }
    friend PointSet operator|(PointSet a, const PointSet& b) { return a |= b; }
    friend PointSet operator&(PointSet a, const PointSet& b) { return a &= b; }
    friend PointSet operator^(PointSet a, const PointSet& b) { return a ^= b; }
    friend PointSet operator-(PointSet a, const PointSet& b) { return a -= b; }

    PointSet complement() const {
        PointSet c(universe_);
        for (std::size_t i = 0; i < words_.size(); ++i) c.words_[i] = ~words_[i];
        c.mask_tail();
        return c;
    }

    /// Members in ascending order.
    std::vector<std::uint32_t> members() const {
        std::vector<std::uint32_t> out;
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            for (std::uint64_t w = words_[wi]; w; w &= w - 1)
                out.push_back(static_cast<std::uint32_t>(wi * 64 + std::countr_zero(w)));
        }
        return out;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi)
            for (std::uint64_t w = words_[wi]; w; w &= w - 1)
                f(static_cast<std::uint32_t>(wi * 64 + std::countr_zero(w)));
    }

    std::span<const std::uint64_t> words() const noexcept { return words_; }
    std::span<std::uint64_t> words() noexcept { return words_; }

    bool operator==(const PointSet& o) const = default;
    auto operator<=>(const PointSet& o) const { return members() <=> o.members(); }

private:
    void mask_tail() {
        if (universe_ % 64 && !words_.empty()) words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
    }

    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace pgcodes
