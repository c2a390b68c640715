#include <nestlab/nest.hpp>

#include <algorithm>

namespace nestlab {

bool is_nest(const SubsetFamily& f)
{
    return !incomparable_pair(f).has_value();
}

std::optional<std::pair<PointSet, PointSet>> incomparable_pair(const SubsetFamily& f)
{
    for (std::size_t i = 0; i < f.size(); ++i) {
        for (std::size_t j = i + 1; j < f.size(); ++j) {
            if (!f[i].comparable_with(f[j])) {
                return std::pair{f[i], f[j]};
            }
        }
    }
    return std::nullopt;
}

std::string_view to_string(SeparationKind k)
{
    switch (k) {
    case SeparationKind::none: return "none";
    case SeparationKind::t0: return "t0";
    case SeparationKind::t1: return "t1";
    }
    return "none";
}

Relation induced_order(const SubsetFamily& f)
{
    Relation r(f.space());
    for (const auto& member : f) {
        const PointSet outside = member.complement();
        member.for_each([&](std::size_t x) {
            outside.for_each([&](std::size_t y) { r.set(x, y); });
        });
    }
    return r;
}

std::optional<Relation::Pair> separation_failure(const SubsetFamily& f, SeparationKind level)
{
    if (level == SeparationKind::none) {
        return std::nullopt;
    }
    const Relation order = induced_order(f);
    const auto n = f.space().size();
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = x + 1; y < n; ++y) {
            const bool xy = order.holds(x, y);
            const bool yx = order.holds(y, x);
            if (level == SeparationKind::t0 && !xy && !yx) {
                return Relation::Pair{x, y};
            }
            if (level == SeparationKind::t1 && (!xy || !yx)) {
                return xy ? Relation::Pair{y, x} : Relation::Pair{x, y};
            }
        }
    }
    return std::nullopt;
}

SeparationKind separation_kind(const SubsetFamily& f)
{
    if (!separation_failure(f, SeparationKind::t1)) {
        return SeparationKind::t1;
    }
    if (!separation_failure(f, SeparationKind::t0)) {
        return SeparationKind::t0;
    }
    return SeparationKind::none;
}

PointSet strict_superset_intersection(const SubsetFamily& f, const PointSet& t)
{
    PointSet acc = PointSet::full(f.space());
    for (const auto& s : f) {
        if (t.is_proper_subset_of(s)) {
            acc &= s;
        }
    }
    return acc;
}

PointSet strict_subset_union(const SubsetFamily& f, const PointSet& t)
{
    PointSet acc(f.space());
    for (const auto& s : f) {
        if (s.is_proper_subset_of(t)) {
            acc |= s;
        }
    }
    return acc;
}

namespace {

void require_member(const SubsetFamily& f, const PointSet& t)
{
    if (!f.contains(t)) {
        throw InputError("set " + t.to_string() + " is not a member of the family");
    }
}

} // namespace

bool intersection_trigger(const SubsetFamily& f, const PointSet& t)
{
    require_member(f, t);
    return strict_superset_intersection(f, t) == t;
}

bool union_witness(const SubsetFamily& f, const PointSet& t)
{
    require_member(f, t);
    return strict_subset_union(f, t) == t;
}

std::optional<PointSet> interlocking_violation(const SubsetFamily& f)
{
    for (const auto& t : f) {
        if (strict_superset_intersection(f, t) == t && strict_subset_union(f, t) != t) {
            return t;
        }
    }
    return std::nullopt;
}

bool is_interlocking(const SubsetFamily& f)
{
    return !interlocking_violation(f).has_value();
}

std::optional<PointSet> unscattered_subset(const SubsetFamily& f)
{
    const auto n = f.space().size();
    if (n > kScatterBound) {
        throw CapacityError("scattering check over a space that is too large", kScatterBound);
    }
    std::vector<std::uint64_t> masks;
    masks.reserve(f.size());
    for (const auto& s : f) {
        masks.push_back(s.mask());
    }
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    for (std::uint64_t a = 1; a <= full; ++a) {
        const bool traced = std::any_of(masks.begin(), masks.end(), [a](std::uint64_t s) {
            return std::popcount(a & s) == 1;
        });
        if (!traced) {
            return PointSet::from_mask(f.space(), a);
        }
    }
    return std::nullopt;
}

bool scatters(const SubsetFamily& f)
{
    return !unscattered_subset(f).has_value();
}

bool dense_nest_criterion(const SubsetFamily& f)
{
    if (!is_nest(f)) {
        throw InputError("the density criterion is defined for nests only");
    }
    const auto n = f.space().size();
    auto separated = [&](std::size_t x, std::size_t y) {
        for (const auto& l : f) {
            if (!l.contains(x)) {
                continue;
            }
            for (const auto& m : f) {
                if (l.is_proper_subset_of(m) && !m.contains(y)) {
                    return true;
                }
            }
        }
        return false;
    };
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = x + 1; y < n; ++y) {
            if (!separated(x, y) && !separated(y, x)) {
                return false;
            }
        }
    }
    return true;
}

bool is_well_ordered_by_inclusion(const SubsetFamily& f)
{
    if (f.size() > 20) {
        throw CapacityError("subfamily scan over a family that is too large", 20);
    }
    const std::uint64_t subfamilies = std::uint64_t{1} << f.size();
    for (std::uint64_t sub = 1; sub < subfamilies; ++sub) {
        bool has_least = false;
        for (std::size_t i = 0; i < f.size() && !has_least; ++i) {
            if (((sub >> i) & 1U) == 0) {
                continue;
            }
            bool least = true;
            for (std::size_t j = 0; j < f.size(); ++j) {
                if (((sub >> j) & 1U) != 0 && !f[i].is_subset_of(f[j])) {
                    least = false;
                    break;
                }
            }
            has_least = least;
        }
        if (!has_least) {
            return false;
        }
    }
    return true;
}

bool has_minimal_witness_property(const SubsetFamily& f)
{
    const auto n = f.space().size();
    if (n > kScatterBound) {
        throw CapacityError("minimal-witness scan over a space that is too large", kScatterBound);
    }
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    for (std::uint64_t a = 1; a <= full; ++a) {
        bool found = false;
        for (std::size_t cand = 0; cand < n && !found; ++cand) {
            if (((a >> cand) & 1U) == 0) {
                continue;
            }
            found = std::all_of(f.begin(), f.end(), [&](const PointSet& l) {
                return (l.mask() & a) == 0 || l.contains(cand);
            });
        }
        if (!found) {
            return false;
        }
    }
    return true;
}

WellOrderConditions well_order_conditions(const SubsetFamily& f, FamilyConvention convention)
{
    const SubsetFamily scattering_family =
        convention.include_universe ? f.with(PointSet::full(f.space())) : f;
    const bool t0 = separation_kind(f) >= SeparationKind::t0;
    WellOrderConditions c;
    c.scatters = scatters(scattering_family);
    // Finite: a linear order is a well-order.
    c.well_order = classify_order(induced_order(f)) == OrderClass::well;
    c.t0_and_well_ordered_by_inclusion = t0 && is_well_ordered_by_inclusion(f);
    c.t0_and_minimal_witness = t0 && has_minimal_witness_property(f);
    return c;
}

} // namespace nestlab
