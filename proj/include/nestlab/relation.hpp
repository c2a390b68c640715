#pragma once

#include <nestlab/point_set.hpp>

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace nestlab {

/// Binary relation on a finite space, one successor set per point.
///
/// Self-pairs (x, x) are accepted only when the relation is created with
/// `allow_self_pairs`; strict orders such as the induced order of a family
/// never carry them.
class Relation
{
public:
    using Pair = std::pair<std::size_t, std::size_t>;

    explicit Relation(FiniteSpace space, bool allow_self_pairs = false);
    static Relation from_pairs(FiniteSpace space, const std::vector<Pair>& pairs,
                               bool allow_self_pairs = false);
    /// Strict linear order listing the points from least to greatest.
    static Relation linear(FiniteSpace space, const std::vector<std::size_t>& ranking);

    [[nodiscard]] FiniteSpace space() const { return FiniteSpace(rows_.size()); }
    [[nodiscard]] std::size_t size() const noexcept { return rows_.size(); }
    [[nodiscard]] bool allows_self_pairs() const noexcept { return allow_self_; }

    [[nodiscard]] bool holds(std::size_t x, std::size_t y) const { return rows_.at(x).contains(y); }
    void set(std::size_t x, std::size_t y, bool value = true);

    /// {y : x R y}
    [[nodiscard]] const PointSet& successors(std::size_t x) const { return rows_.at(x); }
    /// {x : x R y}
    [[nodiscard]] PointSet predecessors(std::size_t y) const;

    [[nodiscard]] std::vector<Pair> pairs() const;
    [[nodiscard]] bool empty() const;
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const Relation& a, const Relation& b) { return a.rows_ == b.rows_; }

private:
    std::vector<PointSet> rows_;
    bool allow_self_;
};

enum class OrderClass { not_transitive, partial, linear, well };

std::string_view to_string(OrderClass c);

/// Classifies the strict part of a transitive relation. A finite linear order
/// is always reported as `well`; `linear` is kept for fidelity to the infinite
/// setting and is never produced here.
OrderClass classify_order(const Relation& r);
[[nodiscard]] inline bool is_linear_class(OrderClass c)
{
    return c == OrderClass::linear || c == OrderClass::well;
}

[[nodiscard]] bool is_transitive(const Relation& r);
[[nodiscard]] bool is_antisymmetric(const Relation& r);
[[nodiscard]] bool is_irreflexive(const Relation& r);
/// For all x != y, x R y or y R x.
[[nodiscard]] bool is_total(const Relation& r);

Relation reverse(const Relation& r);
Relation reflexive_closure(const Relation& r);
/// The relation without its diagonal.
Relation strict_part(const Relation& r);

/// For every x R y there is z with x R z and z R y. Throws InputError on a
/// non-transitive relation.
bool is_dense_order(const Relation& r);

/// A point of `subset` with no strict predecessor inside `subset`.
std::optional<std::size_t> minimal_element(const Relation& r, const PointSet& subset);
/// A point of `subset` with no strict successor inside `subset`.
std::optional<std::size_t> maximal_element(const Relation& r, const PointSet& subset);

/// All strict linear orders on the space, n <= bound.
std::vector<Relation> linear_orders(FiniteSpace space, std::size_t bound = 6);
/// All transitive relations (self-pairs allowed) on the space, n <= bound.
std::vector<Relation> transitive_relations(FiniteSpace space, std::size_t bound = 4);

} // namespace nestlab
