#include <nestlab/relation.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>

namespace nestlab {

Relation::Relation(FiniteSpace space, bool allow_self_pairs)
    : rows_(space.size(), PointSet(space)), allow_self_(allow_self_pairs)
{
}

Relation Relation::from_pairs(FiniteSpace space, const std::vector<Pair>& pairs, bool allow_self_pairs)
{
    Relation r(space, allow_self_pairs);
    for (const auto& [x, y] : pairs) {
        r.set(x, y);
    }
    return r;
}

Relation Relation::linear(FiniteSpace space, const std::vector<std::size_t>& ranking)
{
    if (ranking.size() != space.size()) {
        throw InputError("a linear ranking must list every point exactly once");
    }
    PointSet seen(space);
    for (auto p : ranking) {
        if (seen.contains(p)) {
            throw InputError("point " + std::to_string(p) + " repeated in ranking");
        }
        seen.insert(p);
    }
    Relation r(space);
    for (std::size_t i = 0; i < ranking.size(); ++i) {
        for (std::size_t j = i + 1; j < ranking.size(); ++j) {
            r.set(ranking[i], ranking[j]);
        }
    }
    return r;
}

void Relation::set(std::size_t x, std::size_t y, bool value)
{
    if (x >= rows_.size() || y >= rows_.size()) {
        throw InputError("pair (" + std::to_string(x) + "," + std::to_string(y)
                         + ") outside a space of " + std::to_string(rows_.size()) + " points");
    }
    if (x == y && value && !allow_self_) {
        throw InputError("self-pair (" + std::to_string(x) + "," + std::to_string(x)
                         + ") in a relation not flagged reflexive");
    }
    if (value) {
        rows_[x].insert(y);
    } else {
        rows_[x].erase(y);
    }
}

PointSet Relation::predecessors(std::size_t y) const
{
    PointSet out(space());
    for (std::size_t x = 0; x < rows_.size(); ++x) {
        if (rows_[x].contains(y)) {
            out.insert(x);
        }
    }
    return out;
}

std::vector<Relation::Pair> Relation::pairs() const
{
    std::vector<Pair> out;
    for (std::size_t x = 0; x < rows_.size(); ++x) {
        rows_[x].for_each([&](std::size_t y) { out.emplace_back(x, y); });
    }
    return out;
}

bool Relation::empty() const
{
    return std::all_of(rows_.begin(), rows_.end(), [](const PointSet& s) { return s.empty(); });
}

std::string Relation::to_string() const
{
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (const auto& [x, y] : pairs()) {
        if (!first) {
            os << ',';
        }
        os << x << '<' << y;
        first = false;
    }
    os << '}';
    return os.str();
}

std::string_view to_string(OrderClass c)
{
    switch (c) {
    case OrderClass::not_transitive: return "not-transitive";
    case OrderClass::partial: return "partial";
    case OrderClass::linear: return "linear";
    case OrderClass::well: return "well";
    }
    return "not-transitive";
}

bool is_transitive(const Relation& r)
{
    for (std::size_t x = 0; x < r.size(); ++x) {
        const PointSet& succ = r.successors(x);
        bool ok = true;
        succ.for_each([&](std::size_t y) {
            if (ok && !r.successors(y).is_subset_of(succ)) {
                ok = false;
            }
        });
        if (!ok) {
            return false;
        }
    }
    return true;
}

bool is_antisymmetric(const Relation& r)
{
    for (std::size_t x = 0; x < r.size(); ++x) {
        for (std::size_t y = x + 1; y < r.size(); ++y) {
            if (r.holds(x, y) && r.holds(y, x)) {
                return false;
            }
        }
    }
    return true;
}

bool is_irreflexive(const Relation& r)
{
    for (std::size_t x = 0; x < r.size(); ++x) {
        if (r.holds(x, x)) {
            return false;
        }
    }
    return true;
}

bool is_total(const Relation& r)
{
    for (std::size_t x = 0; x < r.size(); ++x) {
        for (std::size_t y = x + 1; y < r.size(); ++y) {
            if (!r.holds(x, y) && !r.holds(y, x)) {
                return false;
            }
        }
    }
    return true;
}

Relation reverse(const Relation& r)
{
    Relation out(r.space(), r.allows_self_pairs());
    for (const auto& [x, y] : r.pairs()) {
        out.set(y, x);
    }
    return out;
}

Relation reflexive_closure(const Relation& r)
{
    Relation out(r.space(), true);
    for (const auto& [x, y] : r.pairs()) {
        out.set(x, y);
    }
    for (std::size_t x = 0; x < r.size(); ++x) {
        out.set(x, x);
    }
    return out;
}

Relation strict_part(const Relation& r)
{
    Relation out(r.space());
    for (const auto& [x, y] : r.pairs()) {
        if (x != y) {
            out.set(x, y);
        }
    }
    return out;
}

OrderClass classify_order(const Relation& r)
{
    if (!is_transitive(r)) {
        return OrderClass::not_transitive;
    }
    const Relation s = strict_part(r);
    if (!is_transitive(s)) {
        return OrderClass::not_transitive;
    }
    return is_total(s) ? OrderClass::well : OrderClass::partial;
}

bool is_dense_order(const Relation& r)
{
    if (!is_transitive(r)) {
        throw InputError("density is defined for transitive relations only");
    }
    for (std::size_t x = 0; x < r.size(); ++x) {
        const PointSet& above_x = r.successors(x);
        bool ok = true;
        above_x.for_each([&](std::size_t y) {
            if (ok && !above_x.intersects(r.predecessors(y))) {
                ok = false;
            }
        });
        if (!ok) {
            return false;
        }
    }
    return true;
}

std::optional<std::size_t> minimal_element(const Relation& r, const PointSet& subset)
{
    for (auto x : subset.members()) {
        if (!(r.predecessors(x) - PointSet::of(r.space(), {x})).intersects(subset)) {
            return x;
        }
    }
    return std::nullopt;
}

std::optional<std::size_t> maximal_element(const Relation& r, const PointSet& subset)
{
    for (auto x : subset.members()) {
        if (!(r.successors(x) - PointSet::of(r.space(), {x})).intersects(subset)) {
            return x;
        }
    }
    return std::nullopt;
}

std::vector<Relation> linear_orders(FiniteSpace space, std::size_t bound)
{
    if (space.size() > bound) {
        throw CapacityError("linear order enumeration over a space that is too large", bound);
    }
    std::vector<std::size_t> ranking(space.size());
    std::iota(ranking.begin(), ranking.end(), 0);
    std::vector<Relation> out;
    do {
        out.push_back(Relation::linear(space, ranking));
    } while (std::next_permutation(ranking.begin(), ranking.end()));
    return out;
}

std::vector<Relation> transitive_relations(FiniteSpace space, std::size_t bound)
{
    const auto n = space.size();
    if (n > bound || n > 5) {
        throw CapacityError("transitive relation enumeration over a space that is too large",
                            std::min<std::size_t>(bound, 5));
    }
    const std::size_t cells = n * n;
    std::vector<Relation> out;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << cells); ++code) {
        Relation r(space, true);
        for (std::size_t k = 0; k < cells; ++k) {
            if ((code >> k) & 1U) {
                r.set(k / n, k % n);
            }
        }
        if (is_transitive(r)) {
            out.push_back(std::move(r));
        }
    }
    return out;
}

} // namespace nestlab
