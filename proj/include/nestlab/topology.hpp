#pragma once

#include <nestlab/family.hpp>

#include <cstddef>
#include <vector>

namespace nestlab {

/// A topology on a finite space, given by its complete (sorted) list of opens.
///
/// The empty set and X are always present and the opens are closed under
/// pairwise union and intersection; on a finite space that is the whole
/// definition.
class Topology
{
public:
    /// Validates every topology axiom; throws InputError naming the first failure.
    static Topology from_opens(SubsetFamily opens);
    static Topology discrete(FiniteSpace space);
    static Topology indiscrete(FiniteSpace space);

    [[nodiscard]] FiniteSpace space() const { return opens_.space(); }
    [[nodiscard]] const SubsetFamily& opens() const noexcept { return opens_; }
    [[nodiscard]] std::size_t open_count() const noexcept { return opens_.size(); }
    [[nodiscard]] bool is_open(const PointSet& s) const { return opens_.contains(s); }
    [[nodiscard]] bool is_closed(const PointSet& s) const { return opens_.contains(s.complement()); }
    /// True when every open of `coarser` is open here.
    [[nodiscard]] bool is_finer_than(const Topology& coarser) const;

    friend bool operator==(const Topology& a, const Topology& b) { return a.opens_ == b.opens_; }
    friend auto operator<=>(const Topology& a, const Topology& b) { return a.opens_ <=> b.opens_; }

private:
    friend Topology generate_topology(FiniteSpace, const SubsetFamily&, std::size_t);
    friend std::vector<Topology> enumerate_topologies(FiniteSpace, std::size_t);
    explicit Topology(SubsetFamily opens) : opens_(std::move(opens)) {}

    SubsetFamily opens_;
};

inline constexpr std::size_t kDefaultMaxOpens = std::size_t{1} << 20;

/// Smallest topology containing every subbase set: all unions of finite
/// intersections (the empty intersection being X).
Topology generate_topology(FiniteSpace space, const SubsetFamily& subbase,
                           std::size_t max_opens = kDefaultMaxOpens);

[[nodiscard]] bool is_discrete(const Topology& t);
[[nodiscard]] bool is_clopen(const Topology& t, const PointSet& s);
/// No clopen set besides the empty set and X.
[[nodiscard]] bool is_connected(const Topology& t);

/// `base` consists of opens and every open is the union of the base sets it contains.
[[nodiscard]] bool is_base_for(const SubsetFamily& base, const Topology& t);

/// Smallest open set containing `point`.
PointSet minimal_neighbourhood(const Topology& t, std::size_t point);

inline constexpr std::size_t kDefaultHomeomorphismBound = 7;

/// Backtracking search for a point bijection carrying the opens of `a` onto the
/// opens of `b`. Candidates are pruned by open-set counts, the multiset of
/// open sizes, per-point degree (number of opens containing the point), and
/// consistency of the specialization preorder on the partial assignment.
bool are_homeomorphic(const Topology& a, const Topology& b,
                      std::size_t bound = kDefaultHomeomorphismBound);

/// Every topology on the labeled space, in canonical order (sorted by their
/// open lists). Built from the specialization preorders. n <= bound.
std::vector<Topology> enumerate_topologies(FiniteSpace space, std::size_t bound = 5);

} // namespace nestlab
