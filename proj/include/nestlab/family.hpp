#pragma once

#include <nestlab/point_set.hpp>

#include <cstddef>
#include <vector>

namespace nestlab {

/// How the degenerate members (the empty set and the whole space) are treated.
///
/// Several results change truth value depending on these choices, so they are
/// explicit everywhere:
///   - allow_empty: keep the empty set when it appears in a family (default: dropped).
///   - include_universe: adjoin the whole space X to the family before a
///     convention-sensitive check (scattering, the cardinal corollary).
///
/// Fixed conventions used throughout: an intersection over no sets is X, a
/// union over no sets is the empty set.
struct FamilyConvention
{
    bool allow_empty = false;
    bool include_universe = false;
};

/// Duplicate-free collection of subsets of one finite space.
///
/// Members are kept sorted in the canonical PointSet order, so two families are
/// equal exactly when they hold the same sets. Duplicates passed to the
/// constructor are collapsed and counted.
class SubsetFamily
{
public:
    using const_iterator = std::vector<PointSet>::const_iterator;

    explicit SubsetFamily(FiniteSpace space) : n_(space.size()) {}
    SubsetFamily(FiniteSpace space, std::vector<PointSet> sets);

    static SubsetFamily from_lists(FiniteSpace space,
                                   const std::vector<std::vector<std::size_t>>& lists);

    [[nodiscard]] FiniteSpace space() const { return FiniteSpace(n_); }
    [[nodiscard]] std::size_t size() const noexcept { return sets_.size(); }
    [[nodiscard]] bool empty() const noexcept { return sets_.empty(); }
    [[nodiscard]] const PointSet& operator[](std::size_t i) const { return sets_[i]; }
    [[nodiscard]] const std::vector<PointSet>& sets() const noexcept { return sets_; }
    [[nodiscard]] const_iterator begin() const noexcept { return sets_.begin(); }
    [[nodiscard]] const_iterator end() const noexcept { return sets_.end(); }

    [[nodiscard]] bool contains(const PointSet& s) const;
    /// Number of duplicate sets dropped at construction.
    [[nodiscard]] std::size_t collapsed_duplicates() const noexcept { return collapsed_; }

    [[nodiscard]] SubsetFamily with(const PointSet& s) const;
    [[nodiscard]] SubsetFamily united(const SubsetFamily& other) const;
    [[nodiscard]] SubsetFamily without(const PointSet& s) const;

    [[nodiscard]] std::vector<std::vector<std::size_t>> to_lists() const;
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const SubsetFamily& a, const SubsetFamily& b)
    {
        return a.n_ == b.n_ && a.sets_ == b.sets_;
    }
    friend auto operator<=>(const SubsetFamily& a, const SubsetFamily& b)
    {
        return a.sets_ <=> b.sets_;
    }

private:
    std::size_t n_;
    std::vector<PointSet> sets_;
    std::size_t collapsed_ = 0;
};

/// Applies a convention: drops the empty set unless allowed, adjoins X when requested.
SubsetFamily apply_convention(const SubsetFamily& family, FamilyConvention convention);

/// Intersection of all members; X for the empty family.
PointSet intersection_of(const SubsetFamily& family);
/// Union of all members; the empty set for the empty family.
PointSet union_of(const SubsetFamily& family);

} // namespace nestlab
