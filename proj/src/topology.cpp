#include <nestlab/topology.hpp>

#include <algorithm>
#include <unordered_set>

namespace nestlab {

namespace {

using SetPool = std::unordered_set<PointSet, PointSetHash>;

void require_same_space(FiniteSpace space, const SubsetFamily& f, const char* what)
{
    if (f.space() != space) {
        throw InputError(std::string(what) + " is over a space of " + std::to_string(f.space().size())
                         + " points, expected " + std::to_string(space.size()));
    }
}

} // namespace

Topology Topology::from_opens(SubsetFamily opens)
{
    const FiniteSpace space = opens.space();
    if (!opens.contains(PointSet(space))) {
        throw InputError("topology is missing the empty set");
    }
    if (!opens.contains(PointSet::full(space))) {
        throw InputError("topology is missing the whole space");
    }
    for (std::size_t i = 0; i < opens.size(); ++i) {
        for (std::size_t j = i + 1; j < opens.size(); ++j) {
            if (!opens.contains(opens[i] & opens[j])) {
                throw InputError("opens " + opens[i].to_string() + " and " + opens[j].to_string()
                                 + " have a non-open intersection");
            }
            if (!opens.contains(opens[i] | opens[j])) {
                throw InputError("opens " + opens[i].to_string() + " and " + opens[j].to_string()
                                 + " have a non-open union");
            }
        }
    }
    return Topology(std::move(opens));
}

Topology Topology::discrete(FiniteSpace space)
{
    std::vector<PointSet> singletons;
    for (std::size_t p = 0; p < space.size(); ++p) {
        singletons.push_back(PointSet::of(space, {p}));
    }
    return generate_topology(space, SubsetFamily(space, std::move(singletons)));
}

Topology Topology::indiscrete(FiniteSpace space)
{
    return Topology(SubsetFamily(space, {PointSet(space), PointSet::full(space)}));
}

bool Topology::is_finer_than(const Topology& coarser) const
{
    return std::all_of(coarser.opens().begin(), coarser.opens().end(),
                       [&](const PointSet& s) { return is_open(s); });
}

Topology generate_topology(FiniteSpace space, const SubsetFamily& subbase, std::size_t max_opens)
{
    require_same_space(space, subbase, "subbase");

    // Finite intersections, seeded with the empty intersection X.
    std::vector<PointSet> base{PointSet::full(space)};
    SetPool seen(base.begin(), base.end());
    for (const auto& s : subbase) {
        const std::size_t current = base.size();
        for (std::size_t i = 0; i < current; ++i) {
            PointSet m = base[i] & s;
            if (seen.insert(m).second) {
                base.push_back(std::move(m));
            }
        }
    }

    // All unions of base sets, seeded with the empty union.
    std::vector<PointSet> opens{PointSet(space)};
    SetPool open_seen(opens.begin(), opens.end());
    for (const auto& b : base) {
        const std::size_t current = opens.size();
        for (std::size_t i = 0; i < current; ++i) {
            PointSet u = opens[i] | b;
            if (open_seen.insert(u).second) {
                opens.push_back(std::move(u));
                if (opens.size() > max_opens) {
                    throw CapacityError("generated topology has too many open sets", max_opens);
                }
            }
        }
    }
    return Topology(SubsetFamily(space, std::move(opens)));
}

bool is_discrete(const Topology& t)
{
    const auto n = t.space().size();
    for (std::size_t p = 0; p < n; ++p) {
        if (!t.is_open(PointSet::of(t.space(), {p}))) {
            return false;
        }
    }
    return true;
}

bool is_clopen(const Topology& t, const PointSet& s)
{
    return t.is_open(s) && t.is_closed(s);
}

bool is_connected(const Topology& t)
{
    for (const auto& u : t.opens()) {
        if (!u.empty() && !u.is_full() && t.is_closed(u)) {
            return false;
        }
    }
    return true;
}

bool is_base_for(const SubsetFamily& base, const Topology& t)
{
    for (const auto& b : base) {
        if (!t.is_open(b)) {
            return false;
        }
    }
    for (const auto& u : t.opens()) {
        PointSet covered(t.space());
        for (const auto& b : base) {
            if (b.is_subset_of(u)) {
                covered |= b;
            }
        }
        if (covered != u) {
            return false;
        }
    }
    return true;
}

PointSet minimal_neighbourhood(const Topology& t, std::size_t point)
{
    PointSet acc = PointSet::full(t.space());
    for (const auto& u : t.opens()) {
        if (u.contains(point)) {
            acc &= u;
        }
    }
    return acc;
}

namespace {

struct PointProfile
{
    std::vector<PointSet> neighbourhood; // minimal open neighbourhood per point
    std::vector<std::size_t> degree;     // number of opens containing the point
};

PointProfile profile_of(const Topology& t)
{
    const auto n = t.space().size();
    PointProfile p;
    p.degree.assign(n, 0);
    for (std::size_t x = 0; x < n; ++x) {
        p.neighbourhood.push_back(minimal_neighbourhood(t, x));
    }
    for (const auto& u : t.opens()) {
        u.for_each([&](std::size_t x) { ++p.degree[x]; });
    }
    return p;
}

std::vector<std::size_t> open_size_multiset(const Topology& t)
{
    std::vector<std::size_t> sizes;
    for (const auto& u : t.opens()) {
        sizes.push_back(u.count());
    }
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

bool maps_opens_exactly(const Topology& a, const Topology& b, const std::vector<std::size_t>& image)
{
    for (const auto& u : a.opens()) {
        PointSet mapped(b.space());
        u.for_each([&](std::size_t x) { mapped.insert(image[x]); });
        if (!b.is_open(mapped)) {
            return false;
        }
    }
    return true;
}

class BijectionSearch
{
public:
    BijectionSearch(const Topology& a, const Topology& b)
        : a_(a), b_(b), pa_(profile_of(a)), pb_(profile_of(b)), n_(a.space().size()),
          image_(n_, 0), used_(n_, false)
    {
    }

    bool run() { return extend(0); }

private:
    bool consistent(std::size_t x, std::size_t fx) const
    {
        if (pa_.degree[x] != pb_.degree[fx]
            || pa_.neighbourhood[x].count() != pb_.neighbourhood[fx].count()) {
            return false;
        }
        for (std::size_t y = 0; y < x; ++y) {
            const std::size_t fy = image_[y];
            if (pa_.neighbourhood[x].contains(y) != pb_.neighbourhood[fx].contains(fy)
                || pa_.neighbourhood[y].contains(x) != pb_.neighbourhood[fy].contains(fx)) {
                return false;
            }
        }
        return true;
    }

    bool extend(std::size_t x)
    {
        if (x == n_) {
            return maps_opens_exactly(a_, b_, image_);
        }
        for (std::size_t fx = 0; fx < n_; ++fx) {
            if (used_[fx] || !consistent(x, fx)) {
                continue;
            }
            used_[fx] = true;
            image_[x] = fx;
            if (extend(x + 1)) {
                return true;
            }
            used_[fx] = false;
        }
        return false;
    }

    const Topology& a_;
    const Topology& b_;
    PointProfile pa_;
    PointProfile pb_;
    std::size_t n_;
    std::vector<std::size_t> image_;
    std::vector<bool> used_;
};

} // namespace

bool are_homeomorphic(const Topology& a, const Topology& b, std::size_t bound)
{
    const auto n = a.space().size();
    if (n > bound || b.space().size() > bound) {
        throw CapacityError("homeomorphism search over a space that is too large", bound);
    }
    if (n != b.space().size() || a.open_count() != b.open_count()) {
        return false;
    }
    if (open_size_multiset(a) != open_size_multiset(b)) {
        return false;
    }
    return BijectionSearch(a, b).run();
}

std::vector<Topology> enumerate_topologies(FiniteSpace space, std::size_t bound)
{
    const auto n = space.size();
    if (n > bound) {
        throw CapacityError("topology enumeration over a space that is too large", bound);
    }
    // Each finite topology corresponds to exactly one preorder (x <= y iff every
    // open containing x contains y); its opens are the up-closed sets.
    std::vector<std::pair<std::size_t, std::size_t>> off_diagonal;
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            if (x != y) {
                off_diagonal.emplace_back(x, y);
            }
        }
    }
    const std::size_t subsets = std::size_t{1} << n;
    std::vector<Topology> out;
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    const std::uint64_t relations = std::uint64_t{1} << off_diagonal.size();
    for (std::uint64_t code = 0; code < relations; ++code) {
        for (std::size_t x = 0; x < n; ++x) {
            for (std::size_t y = 0; y < n; ++y) {
                leq[x][y] = (x == y);
            }
        }
        for (std::size_t k = 0; k < off_diagonal.size(); ++k) {
            if ((code >> k) & 1U) {
                leq[off_diagonal[k].first][off_diagonal[k].second] = true;
            }
        }
        bool transitive = true;
        for (std::size_t x = 0; x < n && transitive; ++x) {
            for (std::size_t y = 0; y < n && transitive; ++y) {
                if (!leq[x][y]) {
                    continue;
                }
                for (std::size_t z = 0; z < n; ++z) {
                    if (leq[y][z] && !leq[x][z]) {
                        transitive = false;
                        break;
                    }
                }
            }
        }
        if (!transitive) {
            continue;
        }
        std::vector<PointSet> opens;
        for (std::size_t m = 0; m < subsets; ++m) {
            bool up_closed = true;
            for (std::size_t x = 0; x < n && up_closed; ++x) {
                if (((m >> x) & 1U) == 0) {
                    continue;
                }
                for (std::size_t y = 0; y < n; ++y) {
                    if (leq[x][y] && ((m >> y) & 1U) == 0) {
                        up_closed = false;
                        break;
                    }
                }
            }
            if (up_closed) {
                opens.push_back(PointSet::from_mask(space, m));
            }
        }
        out.push_back(Topology(SubsetFamily(space, std::move(opens))));
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace nestlab
