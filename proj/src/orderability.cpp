#include <nestlab/orderability.hpp>

#include <nestlab/enumerate.hpp>
#include <nestlab/nest.hpp>

#include <algorithm>

namespace nestlab {

namespace {

void require_linear(const Relation& r, const char* op)
{
    if (!is_linear_class(classify_order(r))) {
        throw InputError(std::string(op) + " requires a linear order");
    }
}

void require_transitive(const Relation& r, const char* op)
{
    if (!is_transitive(r)) {
        throw InputError(std::string(op) + " requires a transitive relation");
    }
}

SubsetFamily strict_rays(const Relation& strict)
{
    std::vector<PointSet> rays;
    for (std::size_t x = 0; x < strict.size(); ++x) {
        rays.push_back(strict.predecessors(x));
        rays.push_back(strict.successors(x));
    }
    return SubsetFamily(strict.space(), std::move(rays));
}

std::optional<PointSet> first_missing(const Topology& from, const Topology& in)
{
    for (const auto& u : from.opens()) {
        if (!in.is_open(u)) {
            return u;
        }
    }
    return std::nullopt;
}

std::optional<PointSet> first_difference(const Topology& a, const Topology& b)
{
    if (auto w = first_missing(a, b)) {
        return w;
    }
    return first_missing(b, a);
}

SubsetFamily strip_degenerate(const SubsetFamily& f)
{
    return f.without(PointSet(f.space())).without(PointSet::full(f.space()));
}

} // namespace

Topology ray_topology(const Relation& r)
{
    const Relation strict = strict_part(r);
    return generate_topology(r.space(), strict_rays(strict));
}

Topology order_topology(const Relation& r)
{
    require_linear(r, "order_topology");
    return ray_topology(r);
}

Topology interval_topology(const Relation& r)
{
    require_transitive(r, "interval_topology");
    const Relation leq = reflexive_closure(r);
    std::vector<PointSet> open_subbase;
    for (std::size_t x = 0; x < leq.size(); ++x) {
        open_subbase.push_back(leq.predecessors(x).complement());
        open_subbase.push_back(leq.successors(x).complement());
    }
    return generate_topology(r.space(), SubsetFamily(r.space(), std::move(open_subbase)));
}

std::pair<SubsetFamily, SubsetFamily> ray_nests(const Relation& r)
{
    require_linear(r, "ray_nests");
    const Relation strict = strict_part(r);
    std::vector<PointSet> down;
    std::vector<PointSet> up;
    for (std::size_t x = 0; x < strict.size(); ++x) {
        if (auto d = strict.predecessors(x); !d.empty()) {
            down.push_back(std::move(d));
        }
        if (auto u = strict.successors(x); !u.empty()) {
            up.push_back(u);
        }
    }
    return {SubsetFamily(r.space(), std::move(down)), SubsetFamily(r.space(), std::move(up))};
}

VdwVerdict vdw_verdict(FiniteSpace space, const SubsetFamily& left, const SubsetFamily& right)
{
    if (left.space() != space || right.space() != space) {
        throw InputError("vdw_verdict: nests must be over the given space");
    }
    if (!is_nest(left)) {
        throw InputError("vdw_verdict: left family " + left.to_string() + " is not a nest");
    }
    if (!is_nest(right)) {
        throw InputError("vdw_verdict: right family " + right.to_string() + " is not a nest");
    }

    const SubsetFamily subbase = left.united(right);
    Relation order = induced_order(left);
    VdwVerdict v{
        .generated = generate_topology(space, subbase),
        .order = order,
        .order_class = classify_order(order),
        .order_topology = ray_topology(order),
    };
    v.union_t1 = separation_kind(subbase) == SeparationKind::t1;

    v.claim1_witness = first_missing(v.order_topology, v.generated);
    v.claim1 = !v.claim1_witness.has_value();

    // Rays of the order (down-rays on the left, up-rays on the right) that
    // actually occur in the subbase.
    std::vector<PointSet> restricted;
    for (std::size_t x = 0; x < order.size(); ++x) {
        const PointSet down = order.predecessors(x);
        const PointSet up = order.successors(x);
        if (left.contains(down)) {
            restricted.push_back(down);
        }
        if (right.contains(up)) {
            restricted.push_back(up);
        }
    }
    const Topology go = generate_topology(space, SubsetFamily(space, std::move(restricted)));
    v.claim2_witness = first_difference(v.generated, go);
    v.claim2 = !v.claim2_witness.has_value();

    auto left_violation = interlocking_violation(left);
    auto right_violation = interlocking_violation(right);
    v.left_interlocking = !left_violation.has_value();
    v.right_interlocking = !right_violation.has_value();
    if (left_violation) {
        v.claim3_witness = left_violation;
    } else if (right_violation) {
        v.claim3_witness = right_violation;
    } else {
        v.claim3_witness = first_difference(v.generated, v.order_topology);
    }
    v.claim3 = !v.claim3_witness.has_value();

    const bool stripped_interlocking =
        is_interlocking(strip_degenerate(left)) && is_interlocking(strip_degenerate(right));
    const bool topologies_equal = v.generated == v.order_topology;
    v.convention_sensitive = (stripped_interlocking && topologies_equal) != v.claim3;
    return v;
}

namespace {

std::uint64_t ordered_pair_bit(std::size_t x, std::size_t y, std::size_t n)
{
    return std::uint64_t{1} << (x * n + y);
}

/// Bit (x, y) is set when some member contains x and not y.
std::uint64_t separation_mask(const SubsetFamily& f)
{
    const auto n = f.space().size();
    std::uint64_t mask = 0;
    for (const auto& s : f) {
        const auto in = s.mask();
        for (std::size_t x = 0; x < n; ++x) {
            if (((in >> x) & 1U) == 0) {
                continue;
            }
            for (std::size_t y = 0; y < n; ++y) {
                if (((in >> y) & 1U) == 0) {
                    mask |= ordered_pair_bit(x, y, n);
                }
            }
        }
    }
    return mask;
}

std::uint64_t all_pairs_mask(std::size_t n)
{
    std::uint64_t mask = 0;
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            if (x != y) {
                mask |= ordered_pair_bit(x, y, n);
            }
        }
    }
    return mask;
}

/// Every nonempty subfamily has a ⊆-greatest member.
bool is_well_ordered_by_containment(const SubsetFamily& f)
{
    std::vector<PointSet> complements;
    for (const auto& s : f) {
        complements.push_back(s.complement());
    }
    return is_well_ordered_by_inclusion(SubsetFamily(f.space(), std::move(complements)));
}

struct NestInfo
{
    SubsetFamily nest;
    std::uint64_t separation;
    bool interlocking;
    bool scatters_with_universe;
    bool well_ordered_either_way;
};

std::vector<PointSet> nonempty_opens(const Topology& t, bool clopen_only, bool allow_universe)
{
    std::vector<PointSet> pool;
    for (const auto& u : t.opens()) {
        if (u.empty() || (u.is_full() && !allow_universe)) {
            continue;
        }
        if (clopen_only && !t.is_closed(u)) {
            continue;
        }
        pool.push_back(u);
    }
    return pool;
}

bool has_union_gap_everywhere(const SubsetFamily& nest)
{
    return std::all_of(nest.begin(), nest.end(), [&](const PointSet& l) {
        return strict_subset_union(nest, l) != l;
    });
}

SubsetFamily difference_family(const SubsetFamily& nest)
{
    std::vector<PointSet> diffs;
    for (const auto& l : nest) {
        diffs.push_back(l);
        for (const auto& m : nest) {
            diffs.push_back(l - m);
        }
    }
    return SubsetFamily(nest.space(), std::move(diffs));
}

} // namespace

OrdinalProfile ordinal_profile(const Topology& t, std::size_t search_budget)
{
    const FiniteSpace space = t.space();
    const auto n = space.size();
    if (n > kOrdinalProfileBound) {
        throw CapacityError("ordinal profile over a space that is too large", kOrdinalProfileBound);
    }

    OrdinalProfile p;
    p.homeomorphic_to_ordinal = is_discrete(t);

    std::vector<NestInfo> infos;
    for (auto& nest : nests_from_pool(space, nonempty_opens(t, false, true))) {
        NestInfo info{
            .nest = nest,
            .separation = separation_mask(nest),
            .interlocking = is_interlocking(nest),
            .scatters_with_universe = scatters(nest.with(PointSet::full(space))),
            .well_ordered_either_way =
                is_well_ordered_by_inclusion(nest) || is_well_ordered_by_containment(nest),
        };
        if (info.interlocking) {
            infos.push_back(std::move(info));
        }
    }

    const std::uint64_t all = all_pairs_mask(n);
    std::size_t examined = 0;
    for (const auto& l : infos) {
        if (p.scattering_pair && p.well_ordered_pair) {
            break;
        }
        for (const auto& r : infos) {
            if (++examined > search_budget) {
                p.search_complete = false;
                break;
            }
            if ((l.separation | r.separation) != all) {
                continue;
            }
            const bool want_scatter = !p.scattering_pair && l.scatters_with_universe;
            const bool want_wellorder = !p.well_ordered_pair
                                        && (l.well_ordered_either_way || r.well_ordered_either_way);
            if (!want_scatter && !want_wellorder) {
                continue;
            }
            if (generate_topology(space, l.nest.united(r.nest)) != t) {
                continue;
            }
            if (want_scatter) {
                p.scattering_pair = NestPair{l.nest, r.nest};
            }
            if (want_wellorder) {
                p.well_ordered_pair = NestPair{l.nest, r.nest};
            }
            if (p.scattering_pair && p.well_ordered_pair) {
                break;
            }
        }
        if (!p.search_complete) {
            break;
        }
    }
    p.interlocking_pair_scattering = p.scattering_pair.has_value();
    p.interlocking_pair_well_ordered = p.well_ordered_pair.has_value();

    for (const auto& nest : nests_from_pool(space, nonempty_opens(t, true, true))) {
        if (!scatters(nest)) {
            continue;
        }
        if (!p.scattering_nest) {
            p.scattering_nest = nest;
        }
        if (!p.base_nest && has_union_gap_everywhere(nest) && is_base_for(difference_family(nest), t)) {
            p.base_nest = nest;
        }
        if (p.base_nest) {
            break;
        }
    }
    p.clopen_nest_scatters = p.scattering_nest.has_value();
    p.clopen_nest_with_base = p.base_nest.has_value();
    return p;
}

bool cardinal_scatter_check(const Topology& t, FamilyConvention convention)
{
    const FiniteSpace space = t.space();
    if (space.size() > kOrdinalProfileBound) {
        throw CapacityError("cardinal scattering check over a space that is too large",
                            kOrdinalProfileBound);
    }
    std::vector<PointSet> pool;
    for (const auto& u : t.opens()) {
        if (!u.is_full() && t.is_closed(u)) {
            pool.push_back(u);
        }
    }
    for (const auto& nest : nests_from_pool(space, pool)) {
        const SubsetFamily tested =
            convention.include_universe ? nest.with(PointSet::full(space)) : nest;
        if (scatters(tested)) {
            return true;
        }
    }
    return false;
}

namespace {

std::vector<SubsetFamily> maximal_chains(const Topology& t)
{
    std::vector<PointSet> pool;
    for (const auto& u : t.opens()) {
        if (!u.empty() && !u.is_full()) {
            pool.push_back(u);
        }
    }
    std::vector<SubsetFamily> out;
    for (auto& chain : nests_from_pool(t.space(), pool)) {
        const bool extendable = std::any_of(pool.begin(), pool.end(), [&](const PointSet& s) {
            return !chain.contains(s)
                   && std::all_of(chain.begin(), chain.end(),
                                  [&](const PointSet& c) { return c.comparable_with(s); });
        });
        if (!extendable) {
            out.push_back(std::move(chain));
        }
    }
    return out;
}

void require_neight_bound(const Topology& t)
{
    if (t.space().size() > kNeightBound) {
        throw CapacityError("neight search over a space that is too large", kNeightBound);
    }
}

/// Tries every k-subset of the maximal chains; any subbase made of k nests of
/// opens can be enlarged chain by chain to one made of k maximal chains.
std::optional<std::vector<SubsetFamily>> neight_witness(const Topology& t,
                                                        const std::vector<SubsetFamily>& chains,
                                                        std::size_t k)
{
    const FiniteSpace space = t.space();
    if (k == 0) {
        if (generate_topology(space, SubsetFamily(space)) == t) {
            return std::vector<SubsetFamily>{};
        }
        return std::nullopt;
    }
    if (chains.empty() || k > chains.size()) {
        return std::nullopt;
    }
    std::vector<std::size_t> pick(k);
    for (std::size_t i = 0; i < k; ++i) {
        pick[i] = i;
    }
    while (true) {
        SubsetFamily subbase(space);
        for (auto i : pick) {
            subbase = subbase.united(chains[i]);
        }
        if (generate_topology(space, subbase) == t) {
            std::vector<SubsetFamily> nests;
            for (auto i : pick) {
                nests.push_back(chains[i]);
            }
            return nests;
        }
        std::size_t pos = k;
        while (pos > 0 && pick[pos - 1] == chains.size() - k + pos - 1) {
            --pos;
        }
        if (pos == 0) {
            return std::nullopt;
        }
        ++pick[pos - 1];
        for (std::size_t i = pos; i < k; ++i) {
            pick[i] = pick[i - 1] + 1;
        }
    }
}

} // namespace

NeightResult minimal_neight(const Topology& t)
{
    require_neight_bound(t);
    const auto chains = maximal_chains(t);
    for (std::size_t k = 0; k <= chains.size(); ++k) {
        if (auto w = neight_witness(t, chains, k)) {
            return NeightResult{k, std::move(*w)};
        }
    }
    // The union of all maximal chains is every nontrivial open, so this is unreachable.
    throw std::logic_error("minimal_neight: no subbase found");
}

bool neight_search(const Topology& t, std::size_t k)
{
    require_neight_bound(t);
    return minimal_neight(t).k <= k;
}

std::string ProbeFeatures::signature() const
{
    std::string s;
    s += antisymmetric ? "antisymmetric" : "not-antisymmetric";
    s += total ? ",total" : ",not-total";
    s += dense ? ",dense" : ",not-dense";
    return s;
}

ProbeReport transitive_probe(const Relation& r)
{
    require_transitive(r, "transitive_probe");
    ProbeReport report{
        .relation = r,
        .ray = ray_topology(r),
        .interval = interval_topology(r),
    };
    report.equal = report.ray == report.interval;
    for (const auto& u : report.ray.opens()) {
        if (!report.interval.is_open(u)) {
            report.only_in_ray.push_back(u);
        }
    }
    for (const auto& u : report.interval.opens()) {
        if (!report.ray.is_open(u)) {
            report.only_in_interval.push_back(u);
        }
    }
    report.features.antisymmetric = is_antisymmetric(r);
    report.features.total = is_total(r);
    report.features.dense = is_dense_order(r);
    return report;
}

ProbeBatch probe_batch(FiniteSpace space)
{
    ProbeBatch batch;
    batch.points = space.size();
    for (const auto& r : transitive_relations(space, 4)) {
        const ProbeReport report = transitive_probe(r);
        ++batch.relations;
        auto& bucket = batch.by_features[report.features.signature()];
        if (report.equal) {
            ++batch.equal;
            ++bucket.equal;
        } else {
            ++batch.not_equal;
            ++bucket.not_equal;
        }
    }
    return batch;
}

} // namespace nestlab
