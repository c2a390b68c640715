#include <nestlab/family.hpp>

#include <algorithm>
#include <sstream>

namespace nestlab {

SubsetFamily::SubsetFamily(FiniteSpace space, std::vector<PointSet> sets)
    : n_(space.size()), sets_(std::move(sets))
{
    for (const auto& s : sets_) {
        if (s.universe() != n_) {
            throw InputError("family member " + s.to_string() + " belongs to a space of "
                             + std::to_string(s.universe()) + " points, expected "
                             + std::to_string(n_));
        }
    }
    std::sort(sets_.begin(), sets_.end());
    const auto before = sets_.size();
    sets_.erase(std::unique(sets_.begin(), sets_.end()), sets_.end());
    collapsed_ = before - sets_.size();
}

SubsetFamily SubsetFamily::from_lists(FiniteSpace space,
                                      const std::vector<std::vector<std::size_t>>& lists)
{
    std::vector<PointSet> sets;
    sets.reserve(lists.size());
    for (const auto& l : lists) {
        sets.push_back(PointSet::of(space, l));
    }
    return SubsetFamily(space, std::move(sets));
}

bool SubsetFamily::contains(const PointSet& s) const
{
    return std::binary_search(sets_.begin(), sets_.end(), s);
}

SubsetFamily SubsetFamily::with(const PointSet& s) const
{
    auto sets = sets_;
    sets.push_back(s);
    return SubsetFamily(space(), std::move(sets));
}

SubsetFamily SubsetFamily::united(const SubsetFamily& other) const
{
    if (other.n_ != n_) {
        throw InputError("cannot unite families over different spaces");
    }
    auto sets = sets_;
    sets.insert(sets.end(), other.sets_.begin(), other.sets_.end());
    return SubsetFamily(space(), std::move(sets));
}

SubsetFamily SubsetFamily::without(const PointSet& s) const
{
    SubsetFamily out(space());
    for (const auto& m : sets_) {
        if (m != s) {
            out.sets_.push_back(m);
        }
    }
    return out;
}

std::vector<std::vector<std::size_t>> SubsetFamily::to_lists() const
{
    std::vector<std::vector<std::size_t>> out;
    out.reserve(sets_.size());
    for (const auto& s : sets_) {
        out.push_back(s.members());
    }
    return out;
}

std::string SubsetFamily::to_string() const
{
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < sets_.size(); ++i) {
        if (i != 0) {
            os << ',';
        }
        os << sets_[i].to_string();
    }
    os << ']';
    return os.str();
}

SubsetFamily apply_convention(const SubsetFamily& family, FamilyConvention convention)
{
    SubsetFamily out = family;
    if (!convention.allow_empty) {
        out = out.without(PointSet(family.space()));
    }
    if (convention.include_universe) {
        out = out.with(PointSet::full(family.space()));
    }
    return out;
}

PointSet intersection_of(const SubsetFamily& family)
{
    PointSet acc = PointSet::full(family.space());
    for (const auto& s : family) {
        acc &= s;
    }
    return acc;
}

PointSet union_of(const SubsetFamily& family)
{
    PointSet acc(family.space());
    for (const auto& s : family) {
        acc |= s;
    }
    return acc;
}

} // namespace nestlab
