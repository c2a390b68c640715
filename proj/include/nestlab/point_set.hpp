#pragma once

#include <nestlab/error.hpp>

#include <boost/container/small_vector.hpp>

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace nestlab {

/// A universe of `size` unlabeled points, identified by the indices 0..size-1.
class FiniteSpace
{
public:
    explicit FiniteSpace(std::size_t size) : size_(size)
    {
        if (size == 0) {
            throw InputError("a finite space needs at least one point");
        }
    }

    [[nodiscard]] std::size_t size() const noexcept { return size_; }

    friend bool operator==(FiniteSpace, FiniteSpace) = default;

private:
    std::size_t size_;
};

/// Subset of a finite space, stored as a packed bit vector.
///
/// Sets are totally ordered by the integer value of their bitmask (point i
/// contributes 2^i); this is the canonical order used by families and
/// enumeration.
class PointSet
{
public:
    using Word = std::uint64_t;
    static constexpr std::size_t kWordBits = 64;

    PointSet() = default;
    explicit PointSet(FiniteSpace space);

    static PointSet full(FiniteSpace space);
    static PointSet of(FiniteSpace space, std::initializer_list<std::size_t> points);
    static PointSet of(FiniteSpace space, const std::vector<std::size_t>& points);
    /// Requires space.size() <= 64.
    static PointSet from_mask(FiniteSpace space, Word mask);

    [[nodiscard]] std::size_t universe() const noexcept { return n_; }
    [[nodiscard]] FiniteSpace space() const { return FiniteSpace(n_); }

    [[nodiscard]] bool contains(std::size_t point) const noexcept
    {
        return point < n_ && ((words_[point / kWordBits] >> (point % kWordBits)) & 1U) != 0;
    }
    void insert(std::size_t point);
    void erase(std::size_t point);

    [[nodiscard]] std::size_t count() const noexcept;
    [[nodiscard]] bool empty() const noexcept;
    [[nodiscard]] bool is_full() const noexcept;
    [[nodiscard]] bool is_subset_of(const PointSet& other) const;
    [[nodiscard]] bool is_proper_subset_of(const PointSet& other) const
    {
        return is_subset_of(other) && *this != other;
    }
    [[nodiscard]] bool intersects(const PointSet& other) const;
    [[nodiscard]] bool comparable_with(const PointSet& other) const
    {
        return is_subset_of(other) || other.is_subset_of(*this);
    }

    [[nodiscard]] PointSet complement() const;
    [[nodiscard]] std::vector<std::size_t> members() const;
    /// Lowest member, or universe() when empty.
    [[nodiscard]] std::size_t first() const noexcept;
    /// Bitmask value; requires universe() <= 64.
    [[nodiscard]] Word mask() const;
    [[nodiscard]] std::size_t hash() const noexcept;
    [[nodiscard]] std::string to_string() const;

    PointSet& operator&=(const PointSet& other);
    PointSet& operator|=(const PointSet& other);
    PointSet& operator-=(const PointSet& other);
    PointSet& operator^=(const PointSet& other);

    friend PointSet operator&(PointSet a, const PointSet& b) { return a &= b; }
    friend PointSet operator|(PointSet a, const PointSet& b) { return a |= b; }
    friend PointSet operator-(PointSet a, const PointSet& b) { return a -= b; }
    friend PointSet operator^(PointSet a, const PointSet& b) { return a ^= b; }

    friend bool operator==(const PointSet& a, const PointSet& b)
    {
        return a.n_ == b.n_ && a.words_ == b.words_;
    }
    friend std::strong_ordering operator<=>(const PointSet& a, const PointSet& b);

    template <class Fn>
    void for_each(Fn&& fn) const
    {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            Word bits = words_[w];
            while (bits != 0) {
                fn(w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits)));
                bits &= bits - 1;
            }
        }
    }

private:
    void check_same_universe(const PointSet& other) const;
    void trim() noexcept;

    std::uint32_t n_ = 0;
    boost::container::small_vector<Word, 1> words_;
};

struct PointSetHash
{
    std::size_t operator()(const PointSet& s) const noexcept { return s.hash(); }
};

} // namespace nestlab
