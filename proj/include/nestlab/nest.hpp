#pragma once

#include <nestlab/family.hpp>
#include <nestlab/relation.hpp>

#include <optional>
#include <string_view>
#include <utility>

namespace nestlab {

/// Every pair of members is comparable under inclusion.
[[nodiscard]] bool is_nest(const SubsetFamily& f);
/// Two members neither of which contains the other.
std::optional<std::pair<PointSet, PointSet>> incomparable_pair(const SubsetFamily& f);

/// Ordered so that t1 > t0 > none; a t1 family is t0 in particular.
enum class SeparationKind { none = 0, t0 = 1, t1 = 2 };

std::string_view to_string(SeparationKind k);

/// t1: every ordered pair x != y has a member containing x but not y.
/// t0: every unordered pair has a member containing exactly one of them.
SeparationKind separation_kind(const SubsetFamily& f);
/// A pair x != y that is not separated at the requested level (ordered for t1).
std::optional<Relation::Pair> separation_failure(const SubsetFamily& f, SeparationKind level);

/// x ◁ y iff some member contains x but not y. Irreflexive; legal for any family.
Relation induced_order(const SubsetFamily& f);

/// Intersection of the members strictly containing `t` (X when there are none).
PointSet strict_superset_intersection(const SubsetFamily& f, const PointSet& t);
/// Union of the members strictly contained in `t` (empty when there are none).
PointSet strict_subset_union(const SubsetFamily& f, const PointSet& t);

/// t equals the intersection of its strict supersets in f. Throws if t is not a member.
bool intersection_trigger(const SubsetFamily& f, const PointSet& t);
/// t equals the union of its strict subsets in f. Throws if t is not a member.
bool union_witness(const SubsetFamily& f, const PointSet& t);

/// Every member that triggers also has a union witness.
[[nodiscard]] bool is_interlocking(const SubsetFamily& f);
/// A member that triggers but has no union witness.
std::optional<PointSet> interlocking_violation(const SubsetFamily& f);

inline constexpr std::size_t kScatterBound = 20;

/// Every nonempty A ⊆ X meets some member in exactly one point.
[[nodiscard]] bool scatters(const SubsetFamily& f);
/// A nonempty subset no member traces in a single point.
std::optional<PointSet> unscattered_subset(const SubsetFamily& f);

/// For every x != y there are members L ⊊ M with (x ∈ L, y ∉ M) or (y ∈ L, x ∉ M).
/// Throws InputError on a non-nest.
bool dense_nest_criterion(const SubsetFamily& f);

/// Every nonempty subfamily has a ⊆-least member.
[[nodiscard]] bool is_well_ordered_by_inclusion(const SubsetFamily& f);
/// Every nonempty A ⊆ X has a ∈ A lying in every member that meets A.
[[nodiscard]] bool has_minimal_witness_property(const SubsetFamily& f);

/// The four conditions of the well-order characterization of a nest, each
/// evaluated independently.
struct WellOrderConditions
{
    bool scatters = false;
    bool well_order = false;
    bool t0_and_well_ordered_by_inclusion = false;
    bool t0_and_minimal_witness = false;

    [[nodiscard]] bool agree() const
    {
        return scatters == well_order && well_order == t0_and_well_ordered_by_inclusion
               && t0_and_well_ordered_by_inclusion == t0_and_minimal_witness;
    }
};

/// With `convention.include_universe` X is adjoined before the scattering test;
/// the other three conditions are unaffected by adjoining X.
WellOrderConditions well_order_conditions(const SubsetFamily& f, FamilyConvention convention);

} // namespace nestlab
