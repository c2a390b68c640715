#pragma once

#include <nestlab/family.hpp>
#include <nestlab/fermat.hpp>
#include <nestlab/relation.hpp>
#include <nestlab/topology.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nestlab::cli {

/// Contents of an instance file:
///
///   {"space": 3,
///    "families": {"L": [[0], [0, 1]], "R": [[2], [1, 2]]},
///    "relation": [[0, 1], [1, 2]],
///    "topology": [[0], [0, 1]],
///    "fermat": ["t^(1/2)", "1 - t"]}
///
/// Every field is optional except that sets and pairs need `space`. The
/// topology may omit the empty set and X; both are added before validation.
struct Instance
{
    std::optional<std::size_t> space;
    std::map<std::string, SubsetFamily> families;
    std::optional<Relation> relation;
    std::optional<Topology> topology;
    std::vector<FermatReal> fermat;
    /// Load-time notes such as collapsed duplicate sets; not part of equality.
    std::vector<std::string> warnings;

    [[nodiscard]] FiniteSpace finite_space() const;
    [[nodiscard]] const SubsetFamily& family(const std::string& name) const;

    friend bool operator==(const Instance& a, const Instance& b)
    {
        return a.space == b.space && a.families == b.families && a.relation == b.relation
               && a.topology == b.topology && a.fermat == b.fermat;
    }
};

/// Throws InputError with a line:column position for malformed JSON and a
/// field path (for example `families.L[1][0]`) for schema violations.
Instance parse_instance(std::string_view text);

/// Canonical JSON text: sorted family names, sets in canonical order, the
/// topology's full open list, Fermat reals in canonical form.
std::string print_instance(const Instance& inst);

/// FNV-1a of the canonical text.
std::uint64_t instance_digest(const Instance& inst);
std::string digest_hex(std::uint64_t digest);

} // namespace nestlab::cli
