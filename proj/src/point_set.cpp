#include <nestlab/point_set.hpp>

#include <algorithm>
#include <sstream>

namespace nestlab {

namespace {

std::size_t words_for(std::size_t n)
{
    return (n + PointSet::kWordBits - 1) / PointSet::kWordBits;
}

} // namespace

PointSet::PointSet(FiniteSpace space)
    : n_(static_cast<std::uint32_t>(space.size())), words_(words_for(space.size()), 0)
{
}

PointSet PointSet::full(FiniteSpace space)
{
    PointSet s(space);
    std::fill(s.words_.begin(), s.words_.end(), ~Word{0});
    s.trim();
    return s;
}

PointSet PointSet::of(FiniteSpace space, std::initializer_list<std::size_t> points)
{
    PointSet s(space);
    for (auto p : points) {
        s.insert(p);
    }
    return s;
}

PointSet PointSet::of(FiniteSpace space, const std::vector<std::size_t>& points)
{
    PointSet s(space);
    for (auto p : points) {
        s.insert(p);
    }
    return s;
}

PointSet PointSet::from_mask(FiniteSpace space, Word mask)
{
    if (space.size() > kWordBits) {
        throw InputError("from_mask requires a space of at most 64 points");
    }
    PointSet s(space);
    s.words_[0] = mask;
    if (s != (s & full(space))) {
        throw InputError("mask has bits outside the space");
    }
    return s;
}

void PointSet::insert(std::size_t point)
{
    if (point >= n_) {
        throw InputError("point " + std::to_string(point) + " outside a space of "
                         + std::to_string(n_) + " points");
    }
    words_[point / kWordBits] |= Word{1} << (point % kWordBits);
}

void PointSet::erase(std::size_t point)
{
    if (point < n_) {
        words_[point / kWordBits] &= ~(Word{1} << (point % kWordBits));
    }
}

std::size_t PointSet::count() const noexcept
{
    std::size_t c = 0;
    for (auto w : words_) {
        c += static_cast<std::size_t>(std::popcount(w));
    }
    return c;
}

bool PointSet::empty() const noexcept
{
    return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

bool PointSet::is_full() const noexcept
{
    return count() == n_;
}

bool PointSet::is_subset_of(const PointSet& other) const
{
    check_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if ((words_[i] & ~other.words_[i]) != 0) {
            return false;
        }
    }
    return true;
}

bool PointSet::intersects(const PointSet& other) const
{
    check_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if ((words_[i] & other.words_[i]) != 0) {
            return true;
        }
    }
    return false;
}

PointSet PointSet::complement() const
{
    PointSet s = *this;
    for (auto& w : s.words_) {
        w = ~w;
    }
    s.trim();
    return s;
}

std::vector<std::size_t> PointSet::members() const
{
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each([&](std::size_t p) { out.push_back(p); });
    return out;
}

std::size_t PointSet::first() const noexcept
{
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if (words_[w] != 0) {
            return w * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[w]));
        }
    }
    return n_;
}

PointSet::Word PointSet::mask() const
{
    if (n_ > kWordBits) {
        throw InputError("mask() requires a space of at most 64 points");
    }
    return words_.empty() ? 0 : words_[0];
}

std::size_t PointSet::hash() const noexcept
{
    // FNV-1a over the words and the universe size.
    std::uint64_t h = 1469598103934665603ULL ^ n_;
    for (auto w : words_) {
        h ^= w;
        h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
}

std::string PointSet::to_string() const
{
    std::ostringstream os;
    os << '{';
    bool first_member = true;
    for_each([&](std::size_t p) {
        if (!first_member) {
            os << ',';
        }
        os << p;
        first_member = false;
    });
    os << '}';
    return os.str();
}

PointSet& PointSet::operator&=(const PointSet& other)
{
    check_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) {
        words_[i] &= other.words_[i];
    }
    return *this;
}

PointSet& PointSet::operator|=(const PointSet& other)
{
    check_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) {
        words_[i] |= other.words_[i];
    }
    return *this;
}

PointSet& PointSet::operator-=(const PointSet& other)
{
    check_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) {
        words_[i] &= ~other.words_[i];
    }
    return *this;
}

PointSet& PointSet::operator^=(const PointSet& other)
{
    check_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) {
        words_[i] ^= other.words_[i];
    }
    return *this;
}

std::strong_ordering operator<=>(const PointSet& a, const PointSet& b)
{
    if (a.n_ != b.n_) {
        return a.n_ <=> b.n_;
    }
    for (std::size_t i = a.words_.size(); i-- > 0;) {
        if (a.words_[i] != b.words_[i]) {
            return a.words_[i] <=> b.words_[i];
        }
    }
    return std::strong_ordering::equal;
}

void PointSet::check_same_universe(const PointSet& other) const
{
    if (n_ != other.n_) {
        throw InputError("point sets belong to different spaces (" + std::to_string(n_) + " vs "
                         + std::to_string(other.n_) + " points)");
    }
}

void PointSet::trim() noexcept
{
    const std::size_t rem = n_ % kWordBits;
    if (rem != 0 && !words_.empty()) {
        words_.back() &= (Word{1} << rem) - 1;
    }
}

} // namespace nestlab
