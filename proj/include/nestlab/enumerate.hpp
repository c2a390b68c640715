#pragma once

#include <nestlab/family.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string_view>
#include <vector>

namespace nestlab {

enum class FamilyFilter {
    none,
    nest,
    t0,
    t1,
    t0_nest,
    interlocking,
    interlocking_nest,
};

/// Parses "none", "nest", "t0", "t1", "t0-nest", "interlocking", "interlocking-nest".
FamilyFilter parse_family_filter(std::string_view name);
std::string_view to_string(FamilyFilter filter);
bool passes(FamilyFilter filter, const SubsetFamily& family);

inline constexpr std::size_t kDefaultExhaustiveBound = 4;
inline constexpr std::size_t kMaxExhaustiveBound = 6;
inline constexpr std::size_t kDefaultSampleBound = 6;
inline constexpr std::size_t kMaxSampleBound = 16;

struct EnumerationOptions
{
    std::size_t bound = kDefaultExhaustiveBound;
    /// Put the empty set in the candidate pool.
    bool allow_empty = false;
    /// Put the whole space in the candidate pool.
    bool include_universe = true;
};

/// Streams every duplicate-free family drawn from the candidate pool, exactly
/// once, in lexicographic order of the sorted bitmask lists:
/// [] < [1] < [1,2] < [1,2,3] < ... < [1,3] < ...
///
/// Filters that are inherited by subfamilies (nest) prune whole subtrees.
class FamilyEnumerator
{
public:
    FamilyEnumerator(FiniteSpace space, FamilyFilter filter, EnumerationOptions options = {});

    std::optional<SubsetFamily> next();

private:
    bool advance();

    FiniteSpace space_;
    FamilyFilter filter_;
    std::vector<PointSet> pool_;
    std::vector<std::size_t> stack_; // indices into pool_
    bool started_ = false;
    bool done_ = false;
};

std::size_t for_each_family(FiniteSpace space, FamilyFilter filter,
                            const std::function<void(const SubsetFamily&)>& visit,
                            EnumerationOptions options = {});
std::vector<SubsetFamily> enumerate_families(FiniteSpace space, FamilyFilter filter,
                                             EnumerationOptions options = {});
std::size_t count_families(FiniteSpace space, FamilyFilter filter, EnumerationOptions options = {});

/// Deterministic pseudo-random families for spaces beyond the exhaustive bound.
/// Half of the draws are random chains so that nest-only properties get exercised.
std::vector<SubsetFamily> sample_families(FiniteSpace space, std::size_t count, std::uint64_t seed,
                                          FamilyFilter filter = FamilyFilter::none,
                                          std::size_t bound = kDefaultSampleBound);

/// Random chain of nonempty subsets (possibly including X).
SubsetFamily random_nest(FiniteSpace space, std::mt19937_64& rng);

/// Every nest (chain) whose members are drawn from `pool`, including the empty nest.
std::vector<SubsetFamily> nests_from_pool(FiniteSpace space, const std::vector<PointSet>& pool);

} // namespace nestlab
