#pragma once

// Finite powers X^I and the nest transfer maps between X and X^I.
//
// A tuple (x_0, ..., x_{I-1}) is the point sum x_j * b^j of the product space,
// where b = |X|: coordinate 0 is the least significant digit.

#include <nestlab/error.hpp>
#include <nestlab/family.hpp>
#include <nestlab/nest.hpp>
#include <nestlab/topology.hpp>

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace nestlab {

inline constexpr std::size_t kMaxProductPoints = 4096;

class ProductSpace
{
public:
    /// Throws InputError for index_count == 0 and CapacityError past kMaxProductPoints.
    ProductSpace(FiniteSpace base, std::size_t index_count);

    [[nodiscard]] FiniteSpace base() const noexcept { return base_; }
    [[nodiscard]] std::size_t index_count() const noexcept { return index_count_; }
    [[nodiscard]] FiniteSpace space() const noexcept { return space_; }
    [[nodiscard]] std::size_t size() const noexcept { return space_.size(); }

    [[nodiscard]] std::size_t encode(std::span<const std::size_t> tuple) const;
    [[nodiscard]] std::vector<std::size_t> decode(std::size_t point) const;
    [[nodiscard]] std::size_t coordinate(std::size_t point, std::size_t j) const;

    /// Throws InputError unless j < index_count.
    void check_coordinate(std::size_t j) const;

    friend bool operator==(const ProductSpace& a, const ProductSpace& b)
    {
        return a.base_ == b.base_ && a.index_count_ == b.index_count_;
    }

private:
    FiniteSpace base_;
    std::size_t index_count_;
    FiniteSpace space_;
    std::vector<std::size_t> place_;
};

/// π_j(S).
PointSet project(const ProductSpace& p, const PointSet& s, std::size_t j);
/// π_j⁻¹(S).
PointSet preimage(const ProductSpace& p, const PointSet& s, std::size_t j);

/// {π_j(L) : L ∈ f}, duplicates collapsed. Throws InputError unless f is a nest.
SubsetFamily project_nest(const ProductSpace& p, const SubsetFamily& f, std::size_t j);
/// {π_j⁻¹(L) : L ∈ f}. Throws InputError unless f is a nest.
SubsetFamily preimage_nest(const ProductSpace& p, const SubsetFamily& f, std::size_t j);

/// Weak separation with respect to coordinate j. Without r the answer is t0
/// or none. With r, t1 means every pair of tuples differing at j is split
/// both ways by l and r: some L holds one and misses the other while some R
/// does the opposite.
SeparationKind weak_separation_kind(const ProductSpace& p, const SubsetFamily& l,
                                    const SubsetFamily* r, std::size_t j);
/// Throws InputError when t1 is requested without r.
bool is_weakly_separating(const ProductSpace& p, const SubsetFamily& l, const SubsetFamily* r,
                          std::size_t j, SeparationKind level);

/// Every tuple outside a member L has its j-th coordinate outside π_j(L).
bool projection_condition(const ProductSpace& p, const SubsetFamily& f, std::size_t j);

/// A pair of tuples differing at j with y ◁_f z but not y_j ◁ z_j in the projected nest.
std::optional<std::pair<std::size_t, std::size_t>>
projected_order_violation(const ProductSpace& p, const SubsetFamily& f, std::size_t j);

/// F(X, Y) = Y^X: index_count = |X|, base = Y.
ProductSpace function_space(std::size_t domain_size, FiniteSpace codomain);

/// {(x, L) : L ∈ l} with (x, L) the functions sending x into L. Throws InputError unless l is a nest.
SubsetFamily point_nest(const ProductSpace& fs, std::size_t x, const SubsetFamily& l);

/// Union over every x of the point nests of ls and rs.
SubsetFamily point_open_subbase(const ProductSpace& fs, const SubsetFamily& ls,
                                const SubsetFamily& rs);

/// Product-base reading: sets ⋂_{j ∈ J} π_j⁻¹(L_j ∩ R_j) over J ⊆ I with
/// independent choices L_j ∈ l ∪ {X}, R_j ∈ r ∪ {X} per coordinate.
SubsetFamily product_base(const ProductSpace& p, const SubsetFamily& l, const SubsetFamily& r);
/// The same expression with one pair L, R shared by every coordinate in J.
SubsetFamily shared_pair_base(const ProductSpace& p, const SubsetFamily& l,
                              const SubsetFamily& r);
/// Covers the space and each pairwise intersection is a union of members.
bool is_base_of_some_topology(const SubsetFamily& base);

/// Topology generated by the coordinate preimages of every member of l and r.
Topology product_topology(const ProductSpace& p, const SubsetFamily& l, const SubsetFamily& r);

struct TransferCoordinate
{
    std::size_t j = 0;
    SubsetFamily left;
    SubsetFamily right;
    SeparationKind weak_kind = SeparationKind::none;
    bool projection_condition = false;
    bool projections_recover = false;
    bool interlocking_preserved = false;
};

/// Lifts nests l, r on X to every coordinate of X^I and checks the transfer
/// statements on the lifted nests.
struct TransferReport
{
    bool base_t1 = false;
    bool base_interlocking = false;
    std::vector<TransferCoordinate> coordinates;
    bool product_base_is_base = false;
    bool product_base_generates = false;

    [[nodiscard]] bool all_hold() const;
};

TransferReport product_transfer(const ProductSpace& p, const SubsetFamily& l,
                                const SubsetFamily& r);

} // namespace nestlab
