#pragma once

// Topologies from orders and the nest-based orderability verifiers.
//
// Finite-ordinal reduction used by ordinal_profile: a finite ordinal n carries
// the order topology of a finite linear order, which is discrete; conversely a
// discrete space on n points is homeomorphic to n (any bijection works). So
// "homeomorphic to an ordinal" is evaluated as "discrete".

#include <nestlab/family.hpp>
#include <nestlab/relation.hpp>
#include <nestlab/topology.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace nestlab {

/// Topology generated by the strict rays {y : y < x} and {y : x < y}; r must be linear.
Topology order_topology(const Relation& r);

/// Same generator for an arbitrary relation: rays of its strict part. This is
/// the reading of T_< used for bare transitive relations.
Topology ray_topology(const Relation& r);

/// Closed subbase {y : y <= x}, {y : x <= y} over the reflexive closure;
/// opens are generated by the complements. r must be transitive.
Topology interval_topology(const Relation& r);

/// Strict down-rays (left) and strict up-rays (right), empty rays dropped; r must be linear.
std::pair<SubsetFamily, SubsetFamily> ray_nests(const Relation& r);

struct VdwVerdict
{
    Topology generated;
    Relation order;
    OrderClass order_class;
    /// Ray topology of `order` (the order topology when the order is linear).
    Topology order_topology;
    /// The union of the nests is T1-separating.
    bool union_t1 = false;

    /// Every order-open set is open in the generated topology.
    bool claim1 = false;
    std::optional<PointSet> claim1_witness{};
    /// The generated topology equals the one generated by the order's rays
    /// that are members of the subbase (GO form).
    bool claim2 = false;
    std::optional<PointSet> claim2_witness{};
    /// Both nests interlock and the generated topology is the order topology (LOTS form).
    bool claim3 = false;
    bool left_interlocking = false;
    bool right_interlocking = false;
    std::optional<PointSet> claim3_witness{};
    /// Claim 3 changes when the empty set and X are stripped from both nests.
    bool convention_sensitive = false;
};

/// Throws InputError unless both families are nests over `space`.
VdwVerdict vdw_verdict(FiniteSpace space, const SubsetFamily& left, const SubsetFamily& right);

inline constexpr std::size_t kOrdinalProfileBound = 5;
inline constexpr std::size_t kDefaultSearchBudget = std::size_t{1} << 24;

using NestPair = std::pair<SubsetFamily, SubsetFamily>;

/// The five conditions of the ordinal characterization, each decided by
/// exhaustive search over nests of open (2, 3) or clopen (4, 5) sets.
struct OrdinalProfile
{
    /// 1: homeomorphic to an ordinal (discrete, see the module note).
    bool homeomorphic_to_ordinal = false;
    /// 2: interlocking open nests L, R with T1 union generating the topology, L ∪ {X} scattering X.
    bool interlocking_pair_scattering = false;
    std::optional<NestPair> scattering_pair;
    /// 3: as 2, with one nest well-ordered by ⊂ or ⊃ instead of scattering.
    bool interlocking_pair_well_ordered = false;
    std::optional<NestPair> well_ordered_pair;
    /// 4: a clopen nest scattering X with L ≠ ⋃{M ⊊ L} for each member and
    /// {L − M : L ∈ 𝓛, M ∈ 𝓛 ∪ {∅}} a base.
    bool clopen_nest_with_base = false;
    std::optional<SubsetFamily> base_nest;
    /// 5: a clopen nest scattering X (every subset of a finite space is compact).
    bool clopen_nest_scatters = false;
    std::optional<SubsetFamily> scattering_nest;
    /// False when the search budget ran out before the pair search finished.
    bool search_complete = true;

    [[nodiscard]] bool equivalent() const
    {
        return homeomorphic_to_ordinal == interlocking_pair_scattering
               && interlocking_pair_scattering == interlocking_pair_well_ordered
               && interlocking_pair_well_ordered == clopen_nest_with_base
               && clopen_nest_with_base == clopen_nest_scatters;
    }
};

OrdinalProfile ordinal_profile(const Topology& t, std::size_t search_budget = kDefaultSearchBudget);

/// Some clopen nest whose members are all strictly smaller than X scatters X.
/// With `include_universe` X is adjoined to the nest before the scattering test.
bool cardinal_scatter_check(const Topology& t, FamilyConvention convention = {});

inline constexpr std::size_t kNeightBound = 4;

struct NeightResult
{
    std::size_t k = 0;
    std::vector<SubsetFamily> nests;
};

/// Least k such that k nests of open sets form a subbase. The indiscrete
/// topology reports k = 0 (the empty subbase generates it).
NeightResult minimal_neight(const Topology& t);
/// Some k nests of open sets form a subbase.
bool neight_search(const Topology& t, std::size_t k);

struct ProbeFeatures
{
    bool antisymmetric = false;
    bool total = false;
    bool dense = false;

    [[nodiscard]] std::string signature() const;
};

/// Compares the strict-ray topology of a transitive relation with the interval
/// topology of its reflexive closure.
struct ProbeReport
{
    static constexpr const char* kAssumption =
        "T_< is taken as the topology generated by the strict rays of the relation";

    Relation relation;
    Topology ray;
    Topology interval;
    bool equal = false;
    std::vector<PointSet> only_in_ray{};
    std::vector<PointSet> only_in_interval{};
    ProbeFeatures features{};
};

ProbeReport transitive_probe(const Relation& r);

struct ProbeBucket
{
    std::size_t equal = 0;
    std::size_t not_equal = 0;
};

struct ProbeBatch
{
    std::size_t points = 0;
    std::size_t relations = 0;
    std::size_t equal = 0;
    std::size_t not_equal = 0;
    /// Keyed by ProbeFeatures::signature().
    std::map<std::string, ProbeBucket> by_features;
};

/// Probes every transitive relation (self-pairs allowed) on the space, n <= 4.
ProbeBatch probe_batch(FiniteSpace space);

} // namespace nestlab
