#include <nestlab/enumerate.hpp>
#include <nestlab/nest.hpp>

#include <algorithm>
#include <numeric>

namespace nestlab {

namespace {

bool prunes_to_nests(FamilyFilter f)
{
    return f == FamilyFilter::nest || f == FamilyFilter::t0_nest
           || f == FamilyFilter::interlocking_nest;
}

} // namespace

FamilyFilter parse_family_filter(std::string_view name)
{
    if (name == "none") return FamilyFilter::none;
    if (name == "nest") return FamilyFilter::nest;
    if (name == "t0") return FamilyFilter::t0;
    if (name == "t1") return FamilyFilter::t1;
    if (name == "t0-nest") return FamilyFilter::t0_nest;
    if (name == "interlocking") return FamilyFilter::interlocking;
    if (name == "interlocking-nest") return FamilyFilter::interlocking_nest;
    throw InputError("unknown family filter '" + std::string(name) + "'");
}

std::string_view to_string(FamilyFilter filter)
{
    switch (filter) {
    case FamilyFilter::none: return "none";
    case FamilyFilter::nest: return "nest";
    case FamilyFilter::t0: return "t0";
    case FamilyFilter::t1: return "t1";
    case FamilyFilter::t0_nest: return "t0-nest";
    case FamilyFilter::interlocking: return "interlocking";
    case FamilyFilter::interlocking_nest: return "interlocking-nest";
    }
    return "none";
}

bool passes(FamilyFilter filter, const SubsetFamily& family)
{
    switch (filter) {
    case FamilyFilter::none: return true;
    case FamilyFilter::nest: return is_nest(family);
    case FamilyFilter::t0: return separation_kind(family) >= SeparationKind::t0;
    case FamilyFilter::t1: return separation_kind(family) == SeparationKind::t1;
    case FamilyFilter::t0_nest:
        return is_nest(family) && separation_kind(family) >= SeparationKind::t0;
    case FamilyFilter::interlocking: return is_interlocking(family);
    case FamilyFilter::interlocking_nest: return is_nest(family) && is_interlocking(family);
    }
    return false;
}

FamilyEnumerator::FamilyEnumerator(FiniteSpace space, FamilyFilter filter, EnumerationOptions options)
    : space_(space), filter_(filter)
{
    if (options.bound > kMaxExhaustiveBound) {
        throw CapacityError("exhaustive enumeration bound exceeds the hard ceiling", kMaxExhaustiveBound);
    }
    if (space.size() > options.bound) {
        throw CapacityError("exhaustive family enumeration over a space of "
                                + std::to_string(space.size()) + " points",
                            options.bound);
    }
    const std::uint64_t full = (std::uint64_t{1} << space.size()) - 1;
    for (std::uint64_t m = options.allow_empty ? 0 : 1; m <= full; ++m) {
        if (m == full && !options.include_universe) {
            continue;
        }
        pool_.push_back(PointSet::from_mask(space, m));
    }
}

bool FamilyEnumerator::advance()
{
    const bool prune = prunes_to_nests(filter_);
    auto fits = [&](std::size_t candidate) {
        if (!prune) {
            return true;
        }
        return std::all_of(stack_.begin(), stack_.end(), [&](std::size_t i) {
            return pool_[i].comparable_with(pool_[candidate]);
        });
    };

    std::size_t start = stack_.empty() ? 0 : stack_.back() + 1;
    while (true) {
        for (std::size_t i = start; i < pool_.size(); ++i) {
            if (fits(i)) {
                stack_.push_back(i);
                return true;
            }
        }
        if (stack_.empty()) {
            return false;
        }
        start = stack_.back() + 1;
        stack_.pop_back();
    }
}

std::optional<SubsetFamily> FamilyEnumerator::next()
{
    if (done_) {
        return std::nullopt;
    }
    auto current = [&] {
        std::vector<PointSet> sets;
        sets.reserve(stack_.size());
        for (auto i : stack_) {
            sets.push_back(pool_[i]);
        }
        return SubsetFamily(space_, std::move(sets));
    };
    if (!started_) {
        started_ = true;
        SubsetFamily f = current();
        if (passes(filter_, f)) {
            return f;
        }
    }
    while (advance()) {
        SubsetFamily f = current();
        if (passes(filter_, f)) {
            return f;
        }
    }
    done_ = true;
    return std::nullopt;
}

std::size_t for_each_family(FiniteSpace space, FamilyFilter filter,
                            const std::function<void(const SubsetFamily&)>& visit,
                            EnumerationOptions options)
{
    FamilyEnumerator e(space, filter, options);
    std::size_t count = 0;
    while (auto f = e.next()) {
        visit(*f);
        ++count;
    }
    return count;
}

std::vector<SubsetFamily> enumerate_families(FiniteSpace space, FamilyFilter filter,
                                             EnumerationOptions options)
{
    std::vector<SubsetFamily> out;
    for_each_family(space, filter, [&](const SubsetFamily& f) { out.push_back(f); }, options);
    return out;
}

std::size_t count_families(FiniteSpace space, FamilyFilter filter, EnumerationOptions options)
{
    return for_each_family(space, filter, [](const SubsetFamily&) {}, options);
}

SubsetFamily random_nest(FiniteSpace space, std::mt19937_64& rng)
{
    const auto n = space.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);

    // Any chain is a set of initial segments of some ordering of the points.
    std::vector<PointSet> sets;
    PointSet prefix(space);
    std::bernoulli_distribution keep(0.5);
    for (std::size_t k = 0; k < n; ++k) {
        prefix.insert(order[k]);
        if (keep(rng)) {
            sets.push_back(prefix);
        }
    }
    return SubsetFamily(space, std::move(sets));
}

std::vector<SubsetFamily> sample_families(FiniteSpace space, std::size_t count, std::uint64_t seed,
                                          FamilyFilter filter, std::size_t bound)
{
    if (bound > kMaxSampleBound) {
        throw CapacityError("sampling bound exceeds the hard ceiling", kMaxSampleBound);
    }
    if (space.size() > bound) {
        throw CapacityError("sampled family generation over a space of "
                                + std::to_string(space.size()) + " points",
                            bound);
    }
    std::mt19937_64 rng(seed);
    const std::uint64_t full = (std::uint64_t{1} << space.size()) - 1;
    std::uniform_int_distribution<std::uint64_t> pick_mask(1, full);
    std::uniform_int_distribution<std::size_t> pick_size(0, 2 * space.size());

    std::vector<SubsetFamily> out;
    out.reserve(count);
    std::size_t attempts = 0;
    const std::size_t max_attempts = 1000 * (count + 1);
    while (out.size() < count) {
        if (++attempts > max_attempts) {
            throw CapacityError("filter rejected too many random families", max_attempts);
        }
        SubsetFamily f(space);
        if (attempts % 2 == 0) {
            f = random_nest(space, rng);
        } else {
            std::vector<PointSet> sets;
            const std::size_t k = pick_size(rng);
            for (std::size_t i = 0; i < k; ++i) {
                sets.push_back(PointSet::from_mask(space, pick_mask(rng)));
            }
            f = SubsetFamily(space, std::move(sets));
        }
        if (passes(filter, f)) {
            out.push_back(std::move(f));
        }
    }
    return out;
}

std::vector<SubsetFamily> nests_from_pool(FiniteSpace space, const std::vector<PointSet>& pool)
{
    std::vector<PointSet> sorted = SubsetFamily(space, pool).sets();
    std::vector<SubsetFamily> out;
    std::vector<PointSet> chain;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        out.emplace_back(space, chain);
        for (std::size_t i = start; i < sorted.size(); ++i) {
            const bool ok = std::all_of(chain.begin(), chain.end(), [&](const PointSet& c) {
                return c.comparable_with(sorted[i]);
            });
            if (ok) {
                chain.push_back(sorted[i]);
                self(self, i + 1);
                chain.pop_back();
            }
        }
    };
    rec(rec, 0);
    return out;
}

} // namespace nestlab
