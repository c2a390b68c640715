#include <nestlab/product.hpp>

#include <algorithm>
#include <string>

namespace nestlab {

namespace {

FiniteSpace product_size(FiniteSpace base, std::size_t index_count)
{
    if (index_count == 0) {
        throw InputError("a product space needs at least one coordinate");
    }
    std::size_t size = 1;
    for (std::size_t i = 0; i < index_count; ++i) {
        if (size > kMaxProductPoints / base.size()) {
            throw CapacityError("product space has too many points", kMaxProductPoints);
        }
        size *= base.size();
    }
    return FiniteSpace(size);
}

void require_space(const SubsetFamily& f, FiniteSpace space, const char* what)
{
    if (f.space() != space) {
        throw InputError(std::string(what) + " is over " + std::to_string(f.space().size())
                         + " points, expected " + std::to_string(space.size()));
    }
}

void require_nest(const SubsetFamily& f, const char* op)
{
    if (!is_nest(f)) {
        throw InputError(std::string(op) + ": family " + f.to_string() + " is not a nest");
    }
}

bool differ_at(const ProductSpace& p, std::size_t x, std::size_t y, std::size_t j)
{
    return p.coordinate(x, j) != p.coordinate(y, j);
}

} // namespace

ProductSpace::ProductSpace(FiniteSpace base, std::size_t index_count)
    : base_(base), index_count_(index_count), space_(product_size(base, index_count))
{
    std::size_t place = 1;
    for (std::size_t i = 0; i < index_count_; ++i) {
        place_.push_back(place);
        place *= base_.size();
    }
}

void ProductSpace::check_coordinate(std::size_t j) const
{
    if (j >= index_count_) {
        throw InputError("coordinate " + std::to_string(j) + " out of range for "
                         + std::to_string(index_count_) + " coordinates");
    }
}

std::size_t ProductSpace::encode(std::span<const std::size_t> tuple) const
{
    if (tuple.size() != index_count_) {
        throw InputError("tuple has " + std::to_string(tuple.size()) + " coordinates, expected "
                         + std::to_string(index_count_));
    }
    std::size_t point = 0;
    for (std::size_t i = 0; i < index_count_; ++i) {
        if (tuple[i] >= base_.size()) {
            throw InputError("tuple coordinate " + std::to_string(tuple[i]) + " out of range");
        }
        point += tuple[i] * place_[i];
    }
    return point;
}

std::vector<std::size_t> ProductSpace::decode(std::size_t point) const
{
    if (point >= size()) {
        throw InputError("point " + std::to_string(point) + " out of range");
    }
    std::vector<std::size_t> tuple(index_count_);
    for (std::size_t i = 0; i < index_count_; ++i) {
        tuple[i] = point % base_.size();
        point /= base_.size();
    }
    return tuple;
}

std::size_t ProductSpace::coordinate(std::size_t point, std::size_t j) const
{
    return (point / place_[j]) % base_.size();
}

PointSet project(const ProductSpace& p, const PointSet& s, std::size_t j)
{
    p.check_coordinate(j);
    PointSet image(p.base());
    s.for_each([&](std::size_t x) { image.insert(p.coordinate(x, j)); });
    return image;
}

PointSet preimage(const ProductSpace& p, const PointSet& s, std::size_t j)
{
    p.check_coordinate(j);
    PointSet cylinder(p.space());
    for (std::size_t x = 0; x < p.size(); ++x) {
        if (s.contains(p.coordinate(x, j))) {
            cylinder.insert(x);
        }
    }
    return cylinder;
}

SubsetFamily project_nest(const ProductSpace& p, const SubsetFamily& f, std::size_t j)
{
    p.check_coordinate(j);
    require_space(f, p.space(), "projected family");
    require_nest(f, "project_nest");
    std::vector<PointSet> images;
    for (const auto& l : f) {
        images.push_back(project(p, l, j));
    }
    return SubsetFamily(p.base(), std::move(images));
}

SubsetFamily preimage_nest(const ProductSpace& p, const SubsetFamily& f, std::size_t j)
{
    p.check_coordinate(j);
    require_space(f, p.base(), "lifted family");
    require_nest(f, "preimage_nest");
    std::vector<PointSet> cylinders;
    for (const auto& l : f) {
        cylinders.push_back(preimage(p, l, j));
    }
    return SubsetFamily(p.space(), std::move(cylinders));
}

SeparationKind weak_separation_kind(const ProductSpace& p, const SubsetFamily& l,
                                    const SubsetFamily* r, std::size_t j)
{
    p.check_coordinate(j);
    require_space(l, p.space(), "left family");
    if (r != nullptr) {
        require_space(*r, p.space(), "right family");
    }
    const Relation lo = induced_order(l);
    bool t0 = true;
    bool t1 = r != nullptr;
    const Relation ro = r != nullptr ? induced_order(*r) : Relation(p.space());
    for (std::size_t x = 0; x < p.size() && (t0 || t1); ++x) {
        for (std::size_t y = x + 1; y < p.size(); ++y) {
            if (!differ_at(p, x, y, j)) {
                continue;
            }
            const bool xy = lo.holds(x, y);
            const bool yx = lo.holds(y, x);
            t0 = t0 && (xy || yx);
            t1 = t1 && ((xy && ro.holds(y, x)) || (yx && ro.holds(x, y)));
        }
    }
    if (t1) {
        return SeparationKind::t1;
    }
    return t0 ? SeparationKind::t0 : SeparationKind::none;
}

bool is_weakly_separating(const ProductSpace& p, const SubsetFamily& l, const SubsetFamily* r,
                          std::size_t j, SeparationKind level)
{
    if (level == SeparationKind::t1 && r == nullptr) {
        throw InputError("weak t1 separation needs a right family");
    }
    return weak_separation_kind(p, l, r, j) >= level;
}

bool projection_condition(const ProductSpace& p, const SubsetFamily& f, std::size_t j)
{
    require_space(f, p.space(), "family");
    for (const auto& l : f) {
        const PointSet image = project(p, l, j);
        for (std::size_t x = 0; x < p.size(); ++x) {
            if (!l.contains(x) && image.contains(p.coordinate(x, j))) {
                return false;
            }
        }
    }
    return true;
}

std::optional<std::pair<std::size_t, std::size_t>>
projected_order_violation(const ProductSpace& p, const SubsetFamily& f, std::size_t j)
{
    const Relation tuples = induced_order(f);
    const Relation coords = induced_order(project_nest(p, f, j));
    for (std::size_t y = 0; y < p.size(); ++y) {
        for (std::size_t z = 0; z < p.size(); ++z) {
            if (differ_at(p, y, z, j) && tuples.holds(y, z)
                && !coords.holds(p.coordinate(y, j), p.coordinate(z, j))) {
                return std::pair{y, z};
            }
        }
    }
    return std::nullopt;
}

ProductSpace function_space(std::size_t domain_size, FiniteSpace codomain)
{
    return ProductSpace(codomain, domain_size);
}

SubsetFamily point_nest(const ProductSpace& fs, std::size_t x, const SubsetFamily& l)
{
    fs.check_coordinate(x);
    require_space(l, fs.base(), "point-nest family");
    require_nest(l, "point_nest");
    std::vector<PointSet> members;
    for (const auto& set : l) {
        PointSet sent(fs.space());
        for (std::size_t f = 0; f < fs.size(); ++f) {
            if (set.contains(fs.decode(f)[x])) {
                sent.insert(f);
            }
        }
        members.push_back(std::move(sent));
    }
    return SubsetFamily(fs.space(), std::move(members));
}

SubsetFamily point_open_subbase(const ProductSpace& fs, const SubsetFamily& ls,
                                const SubsetFamily& rs)
{
    SubsetFamily out(fs.space());
    for (std::size_t x = 0; x < fs.index_count(); ++x) {
        out = out.united(point_nest(fs, x, ls)).united(point_nest(fs, x, rs));
    }
    return out;
}

SubsetFamily product_base(const ProductSpace& p, const SubsetFamily& l, const SubsetFamily& r)
{
    require_space(l, p.base(), "left family");
    require_space(r, p.base(), "right family");
    std::vector<PointSet> factors;
    for (const auto& a : l.with(PointSet::full(p.base()))) {
        for (const auto& b : r.with(PointSet::full(p.base()))) {
            factors.push_back(a & b);
        }
    }
    const SubsetFamily choices(p.base(), std::move(factors));

    std::vector<PointSet> base{PointSet::full(p.space())};
    for (std::size_t j = 0; j < p.index_count(); ++j) {
        std::vector<PointSet> next;
        for (const auto& partial : base) {
            for (const auto& c : choices) {
                next.push_back(partial & preimage(p, c, j));
            }
        }
        base = SubsetFamily(p.space(), std::move(next)).sets();
    }
    return SubsetFamily(p.space(), std::move(base));
}

SubsetFamily shared_pair_base(const ProductSpace& p, const SubsetFamily& l,
                              const SubsetFamily& r)
{
    require_space(l, p.base(), "left family");
    require_space(r, p.base(), "right family");
    std::vector<PointSet> members;
    const std::size_t subsets = std::size_t{1} << p.index_count();
    for (const auto& a : l) {
        for (const auto& b : r) {
            const PointSet c = a & b;
            for (std::size_t coords = 0; coords < subsets; ++coords) {
                PointSet acc = PointSet::full(p.space());
                for (std::size_t j = 0; j < p.index_count(); ++j) {
                    if ((coords >> j) & 1U) {
                        acc &= preimage(p, c, j);
                    }
                }
                members.push_back(std::move(acc));
            }
        }
    }
    return SubsetFamily(p.space(), std::move(members));
}

bool is_base_of_some_topology(const SubsetFamily& base)
{
    PointSet cover(base.space());
    for (const auto& b : base) {
        cover |= b;
    }
    if (!cover.is_full()) {
        return false;
    }
    for (std::size_t i = 0; i < base.size(); ++i) {
        for (std::size_t k = i + 1; k < base.size(); ++k) {
            const PointSet meet = base[i] & base[k];
            PointSet covered(base.space());
            for (const auto& b : base) {
                if (b.is_subset_of(meet)) {
                    covered |= b;
                }
            }
            if (covered != meet) {
                return false;
            }
        }
    }
    return true;
}

Topology product_topology(const ProductSpace& p, const SubsetFamily& l, const SubsetFamily& r)
{
    SubsetFamily subbase(p.space());
    for (std::size_t j = 0; j < p.index_count(); ++j) {
        subbase = subbase.united(preimage_nest(p, l, j)).united(preimage_nest(p, r, j));
    }
    return generate_topology(p.space(), subbase);
}

bool TransferReport::all_hold() const
{
    const bool coordinates_hold =
        std::all_of(coordinates.begin(), coordinates.end(), [&](const TransferCoordinate& c) {
            return (!base_t1 || c.weak_kind == SeparationKind::t1) && c.projection_condition
                   && c.projections_recover && c.interlocking_preserved;
        });
    return coordinates_hold && product_base_is_base && product_base_generates;
}

TransferReport product_transfer(const ProductSpace& p, const SubsetFamily& l,
                                const SubsetFamily& r)
{
    require_nest(l, "product_transfer");
    require_nest(r, "product_transfer");
    TransferReport report;
    report.base_t1 = separation_kind(l.united(r)) == SeparationKind::t1;
    report.base_interlocking = is_interlocking(l) && is_interlocking(r);
    for (std::size_t j = 0; j < p.index_count(); ++j) {
        TransferCoordinate c{
            .j = j,
            .left = preimage_nest(p, l, j),
            .right = preimage_nest(p, r, j),
        };
        c.weak_kind = weak_separation_kind(p, c.left, &c.right, j);
        c.projection_condition =
            projection_condition(p, c.left, j) && projection_condition(p, c.right, j);
        c.projections_recover = project_nest(p, c.left, j) == l && project_nest(p, c.right, j) == r;
        c.interlocking_preserved = is_interlocking(c.left) == is_interlocking(l)
                                   && is_interlocking(c.right) == is_interlocking(r);
        report.coordinates.push_back(std::move(c));
    }
    const SubsetFamily base = product_base(p, l, r);
    report.product_base_is_base = is_base_of_some_topology(base);
    report.product_base_generates = generate_topology(p.space(), base) == product_topology(p, l, r);
    return report;
}

} // namespace nestlab
