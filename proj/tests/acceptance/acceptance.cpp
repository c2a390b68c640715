// Acceptance gate: ten criteria, one PASS/FAIL line each.
//
//   nestlab_acceptance [--seed N] [--out DIR]
//
// Writes DIR/report.json (the machine report, timing excluded) and one
// archive file per evidence collection. Exit status is the number of failed
// criteria, capped at 10.
#include "support/oracle.hpp"

#include <nestlab/cli/commands.hpp>
#include <nestlab/enumerate.hpp>
#include <nestlab/fermat.hpp>
#include <nestlab/nest.hpp>
#include <nestlab/orderability.hpp>
#include <nestlab/product.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numeric>
#include <random>

namespace {

using namespace nestlab;
using cli::family_json;
using cli::Json;
using cli::relation_json;
using cli::set_json;

constexpr std::size_t kArchiveCap = 64;

class Tally
{
public:
    void check(bool ok, const std::function<Json()>& witness)
    {
        ++cases_;
        if (!ok) {
            if (exceptions_ == 0) {
                first_ = witness();
            }
            ++exceptions_;
        }
    }

    [[nodiscard]] std::size_t cases() const { return cases_; }
    [[nodiscard]] std::size_t exceptions() const { return exceptions_; }
    [[nodiscard]] Json summary() const
    {
        Json out{{"cases", cases_}, {"exceptions", exceptions_}};
        if (exceptions_ != 0) {
            out["first_exception"] = first_;
        }
        return out;
    }

private:
    std::size_t cases_ = 0;
    std::size_t exceptions_ = 0;
    Json first_;
};

/// Counterexamples kept for a report file: the full count plus the first few.
struct Archive
{
    std::size_t total = 0;
    Json items = Json::array();

    void add(Json item)
    {
        ++total;
        if (items.size() < kArchiveCap) {
            items.push_back(std::move(item));
        }
    }

    [[nodiscard]] Json to_json() const { return Json{{"total", total}, {"items", items}}; }
};

struct Outcome
{
    std::map<std::string, Tally> checks;
    Json observations = Json::object();
    std::map<std::string, Archive> archives;
    /// Requirements that are not per-case properties (pinned counts, non-empty archives).
    std::vector<std::pair<std::string, bool>> pins;

    Tally& operator[](const std::string& name) { return checks[name]; }

    void pin(std::string what, bool ok) { pins.emplace_back(std::move(what), ok); }

    [[nodiscard]] std::size_t cases() const
    {
        std::size_t n = 0;
        for (const auto& [_, t] : checks) {
            n += t.cases();
        }
        return n;
    }

    [[nodiscard]] std::size_t exceptions() const
    {
        std::size_t n = 0;
        for (const auto& [_, t] : checks) {
            n += t.exceptions();
        }
        for (const auto& [_, ok] : pins) {
            n += ok ? 0 : 1;
        }
        return n;
    }

    [[nodiscard]] Json to_json() const
    {
        Json out = Json::object();
        Json c = Json::object();
        for (const auto& [name, t] : checks) {
            c[name] = t.summary();
        }
        out["checks"] = std::move(c);
        Json p = Json::object();
        for (const auto& [what, ok] : pins) {
            p[what] = ok;
        }
        out["pins"] = std::move(p);
        out["observations"] = observations;
        Json a = Json::object();
        for (const auto& [name, archive] : archives) {
            a[name] = archive.total;
        }
        out["archived"] = std::move(a);
        return out;
    }
};

struct Criterion
{
    int id;
    std::string title;
    double limit_seconds;
    std::function<Outcome(std::uint64_t seed)> run;
};

SubsetFamily strip_degenerate(const SubsetFamily& f)
{
    return f.without(PointSet(f.space())).without(PointSet::full(f.space()));
}

bool has_min(const Relation& order, const PointSet& s)
{
    return minimal_element(order, s).has_value();
}

bool has_max(const Relation& order, const PointSet& s)
{
    return maximal_element(order, s).has_value();
}

// ---------------------------------------------------------------- criterion 1

void nests_and_orders(std::size_t n, const oracle::Masks& m, Outcome& out)
{
    const SubsetFamily f = oracle::family_of(n, m);
    const Relation order = induced_order(f);
    const auto matrix = oracle::order_matrix(n, m);
    const bool nest = oracle::is_chain(m);
    bool asymmetric = true;
    bool total = true;
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            if (x != y) {
                asymmetric = asymmetric && !(matrix[x][y] && matrix[y][x]);
                total = total && (matrix[x][y] || matrix[y][x]);
            }
            if (order.holds(x, y) != matrix[x][y]) {
                out["induced order matches the definition"].check(false, [&] { return family_json(f); });
                return;
            }
        }
    }
    out["induced order matches the definition"].check(true, {});
    const auto witness = [&] { return Json{{"points", n}, {"family", family_json(f)}}; };
    out["nest implies transitive"].check(!is_nest(f) || is_transitive(order), witness);
    out["nest iff asymmetric"].check((is_nest(f) && nest) == asymmetric && is_nest(f) == nest, witness);
    out["t0 iff total"].check((separation_kind(f) >= SeparationKind::t0) == total
                                  && oracle::t0(n, m) == total,
                              witness);
    out["t0 nest iff linear"].check(
        (is_nest(f) && separation_kind(f) >= SeparationKind::t0) == is_linear_class(classify_order(order))
            && is_linear_class(classify_order(order)) == oracle::strict_linear(n, matrix),
        witness);
}

Outcome criterion_nests_and_orders(std::uint64_t seed)
{
    Outcome out;
    std::size_t exhaustive = 0;
    for (std::size_t n = 2; n <= 3; ++n) {
        for (const auto& m : oracle::all_families(n)) {
            nests_and_orders(n, m, out);
            ++exhaustive;
        }
    }
    std::size_t sampled = 0;
    for (std::size_t n = 5; n <= 6; ++n) {
        for (const auto& f : sample_families(FiniteSpace(n), 5000, seed + n)) {
            nests_and_orders(n, oracle::masks_of(f), out);
            ++sampled;
        }
    }
    out.observations["exhaustive_families"] = exhaustive;
    out.observations["sampled_families"] = sampled;
    out.pin("128 families on 3 points", oracle::all_families(3).size() == 128);
    return out;
}

// ---------------------------------------------------------------- criterion 2

Outcome criterion_reverse_nests(std::uint64_t)
{
    Outcome out;
    for (std::size_t n = 1; n <= 3; ++n) {
        const auto nests = enumerate_families(FiniteSpace(n), FamilyFilter::nest);
        for (const auto& l : nests) {
            for (const auto& r : nests) {
                const bool t1 = oracle::t1(n, oracle::masks_of(l.united(r)));
                const bool rhs = separation_kind(l) >= SeparationKind::t0
                                 && separation_kind(r) >= SeparationKind::t0
                                 && induced_order(l) == reverse(induced_order(r));
                out["t1 union iff reversed t0 orders"].check(t1 == rhs, [&] {
                    return Json{{"L", family_json(l)}, {"R", family_json(r)}, {"t1", t1}};
                });
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------- criterion 3

void interlocking_theorem(const SubsetFamily& f, Tally& lemma, Tally& theorem)
{
    const Relation order = induced_order(f);
    bool condition = true;
    for (const auto& l : f) {
        lemma.check(intersection_trigger(f, l) == !has_min(order, l.complement())
                        && union_witness(f, l) == !has_max(order, l),
                    [&] { return Json{{"family", family_json(f)}, {"member", set_json(l)}}; });
        condition = condition && (!has_max(order, l) || has_min(order, l.complement()));
    }
    theorem.check(is_interlocking(f) == condition, [&] { return family_json(f); });
}

Outcome criterion_interlocking(std::uint64_t)
{
    Outcome out;
    Archive sensitive;
    std::size_t t0_nests = 0;
    std::size_t adjoin_flips = 0;
    for (std::size_t n = 1; n <= 4; ++n) {
        for (const auto& f : enumerate_families(FiniteSpace(n), FamilyFilter::t0_nest)) {
            ++t0_nests;
            out["literal definition agrees with the oracle"].check(
                is_interlocking(f) == oracle::interlocking(n, oracle::masks_of(f)),
                [&] { return family_json(f); });
            interlocking_theorem(f, out["lemma: extremal elements (as given)"],
                                 out["theorem: interlocking iff max implies min (as given)"]);

            const SubsetFamily stripped = strip_degenerate(f);
            const SubsetFamily adjoined = f.with(PointSet::full(f.space()));
            for (const auto& variant : {stripped, adjoined}) {
                if (separation_kind(variant) >= SeparationKind::t0) {
                    interlocking_theorem(variant, out["lemma: extremal elements (variants)"],
                                         out["theorem: interlocking iff max implies min (variants)"]);
                }
            }
            const bool raw = is_interlocking(f);
            adjoin_flips += raw != is_interlocking(adjoined) ? 1 : 0;
            if (raw != is_interlocking(stripped)) {
                sensitive.add(Json{{"points", n},
                                   {"family", family_json(f)},
                                   {"interlocking", raw},
                                   {"without_empty_and_whole", is_interlocking(stripped)},
                                   {"with_whole", is_interlocking(adjoined)}});
            }
        }
    }
    out.observations["t0_nests"] = t0_nests;
    out.observations["convention_sensitive"] = sensitive.total;
    out.observations["verdict_changes_with_whole_adjoined"] = adjoin_flips;
    out.archives["convention_sensitive_interlocking"] = std::move(sensitive);
    return out;
}

// ---------------------------------------------------------------- criterion 4

Outcome criterion_van_dalen_wattel(std::uint64_t)
{
    Outcome out;
    std::size_t orders = 0;
    for (std::size_t n = 1; n <= 5; ++n) {
        for (const auto& r : linear_orders(FiniteSpace(n))) {
            ++orders;
            const auto [l, rr] = ray_nests(r);
            const VdwVerdict v = vdw_verdict(FiniteSpace(n), l, rr);
            out["ray nests of a linear order satisfy claim 3"].check(v.claim3 && v.order == strict_part(r), [&] {
                return Json{{"order", relation_json(r)}, {"witness", v.claim3_witness ? set_json(*v.claim3_witness) : Json()}};
            });
        }
    }
    std::size_t pairs = 0;
    for (std::size_t n = 1; n <= 3; ++n) {
        const auto nests = enumerate_families(FiniteSpace(n), FamilyFilter::nest);
        for (const auto& l : nests) {
            for (const auto& r : nests) {
                const VdwVerdict v = vdw_verdict(FiniteSpace(n), l, r);
                if (!v.union_t1) {
                    continue;
                }
                ++pairs;
                out["t1 union: order-open sets are generated"].check(v.claim1, [&] {
                    return Json{{"L", family_json(l)}, {"R", family_json(r)}};
                });
            }
        }
    }
    out.observations["linear_orders"] = orders;
    out.observations["t1_union_pairs"] = pairs;
    out.pin("153 linear orders on at most 5 points", orders == 153);
    return out;
}

// ---------------------------------------------------------------- criterion 5

Outcome criterion_well_orders_and_ordinals(std::uint64_t)
{
    Outcome out;
    Archive divergences;
    const FamilyConvention adjoin{.allow_empty = false, .include_universe = true};
    for (std::size_t n = 1; n <= 4; ++n) {
        for (const auto& f : enumerate_families(FiniteSpace(n), FamilyFilter::nest)) {
            const WellOrderConditions c = well_order_conditions(f, adjoin);
            out["well-order conditions agree with X adjoined"].check(c.agree(), [&] { return family_json(f); });
            if (!c.agree()) {
                divergences.add(Json{{"kind", "well-order"}, {"family", family_json(f)}});
            }
        }
    }
    Json counts = Json::object();
    std::size_t ordinal_like = 0;
    for (std::size_t n = 1; n <= 4; ++n) {
        const auto topologies = enumerate_topologies(FiniteSpace(n));
        counts[std::to_string(n)] = topologies.size();
        for (const auto& t : topologies) {
            const OrdinalProfile p = ordinal_profile(t);
            ordinal_like += p.homeomorphic_to_ordinal ? 1 : 0;
            const auto witness = [&] {
                return Json{{"opens", family_json(t.opens())},
                            {"conditions",
                             {p.homeomorphic_to_ordinal, p.interlocking_pair_scattering,
                              p.interlocking_pair_well_ordered, p.clopen_nest_with_base,
                              p.clopen_nest_scatters}}};
            };
            out["ordinal profile conditions agree"].check(p.equivalent() && p.search_complete, witness);
            if (!p.equivalent()) {
                divergences.add(witness());
            }
        }
    }
    out.observations["labeled_topologies"] = counts;
    out.observations["ordinal_like"] = ordinal_like;
    out.pin("355 labeled topologies on 4 points", counts["4"] == 355);
    out.archives["well_order_and_profile_divergences"] = std::move(divergences);
    return out;
}

// ---------------------------------------------------------------- criterion 6

struct ProductChecks
{
    Outcome& out;
    std::map<std::string, Archive>& necessity;
    std::map<std::string, std::size_t> hypotheses_met;

    Json instance(const ProductSpace& p, const SubsetFamily& l, const SubsetFamily* r, std::size_t j) const
    {
        Json out{{"base", p.base().size()}, {"index_count", p.index_count()}, {"j", j},
                 {"L", family_json(l)}};
        if (r != nullptr) {
            out["R"] = family_json(*r);
        }
        return out;
    }

    void single(const ProductSpace& p, const SubsetFamily& f, std::size_t j)
    {
        const SubsetFamily proj = project_nest(p, f, j);
        out["projection of a nest is a nest"].check(is_nest(proj), [&] { return instance(p, f, nullptr, j); });

        const bool weak_t0 = weak_separation_kind(p, f, nullptr, j) >= SeparationKind::t0;
        const bool condition = projection_condition(p, f, j);
        const bool t0 = separation_kind(proj) >= SeparationKind::t0;
        const auto violation = projected_order_violation(p, f, j);
        if (weak_t0 && condition) {
            ++hypotheses_met["plane to line"];
            out["plane to line: weakly t0 nest projects to a t0 nest"].check(t0, [&] { return instance(p, f, nullptr, j); });
            out["remark: tuple order descends to the projection"].check(!violation, [&] { return instance(p, f, nullptr, j); });
        } else if (weak_t0) {
            if (!t0) {
                necessity["plane to line"].add(Json{{"instance", instance(p, f, nullptr, j)}});
            }
            if (violation) {
                necessity["remark"].add(Json{{"instance", instance(p, f, nullptr, j)},
                                             {"tuples", {violation->first, violation->second}}});
            }
        }

        // Lemma: π(L) ⊇ ⋂{π(L') ⊋ π(L)} implies L ⊇ ⋂{L' ⊋ L}.
        bool lemma = true;
        for (const auto& l : f) {
            const PointSet image = project(p, l, j);
            const bool premise = strict_superset_intersection(proj, image).is_subset_of(image);
            lemma = lemma && (!premise || strict_superset_intersection(f, l).is_subset_of(l));
        }
        const bool interlocking = is_interlocking(f);
        const bool projected_interlocking = is_interlocking(proj);
        if (condition) {
            ++hypotheses_met["lemma"];
            out["lemma: projected intersection bound lifts"].check(lemma, [&] { return instance(p, f, nullptr, j); });
            if (interlocking) {
                ++hypotheses_met["interlocking projection"];
                out["interlocking nest projects to an interlocking nest"].check(
                    projected_interlocking, [&] { return instance(p, f, nullptr, j); });
            }
        } else if (interlocking && !projected_interlocking) {
            necessity["interlocking projection"].add(Json{{"instance", instance(p, f, nullptr, j)}});
        }
    }

    void pair(const ProductSpace& p, const SubsetFamily& l, const SubsetFamily& r, std::size_t j)
    {
        const bool weak_t1 = weak_separation_kind(p, l, &r, j) == SeparationKind::t1;
        const bool conditions = projection_condition(p, l, j) && projection_condition(p, r, j);
        if (!weak_t1) {
            return;
        }
        const SubsetFamily pl = project_nest(p, l, j);
        const SubsetFamily pr = project_nest(p, r, j);
        const bool t1 = separation_kind(pl.united(pr)) == SeparationKind::t1;
        if (!conditions) {
            if (!t1) {
                necessity["weak t1 projection"].add(Json{{"instance", instance(p, l, &r, j)}});
            }
            return;
        }
        ++hypotheses_met["weak t1 projection"];
        out["weakly t1 pair projects to a t1 union"].check(t1, [&] { return instance(p, l, &r, j); });

        const bool full = is_interlocking(l) && is_interlocking(r)
                          && weak_separation_kind(p, l, nullptr, j) >= SeparationKind::t0
                          && weak_separation_kind(p, r, nullptr, j) >= SeparationKind::t0;
        if (full) {
            ++hypotheses_met["combined"];
            out["combined: projections are interlocking t0 nests with t1 union"].check(
                is_interlocking(pl) && is_interlocking(pr) && separation_kind(pl) >= SeparationKind::t0
                    && separation_kind(pr) >= SeparationKind::t0 && t1,
                [&] { return instance(p, l, &r, j); });
        }
    }

    void lift(const ProductSpace& p, const SubsetFamily& l, const SubsetFamily& r)
    {
        for (std::size_t j = 0; j < p.index_count(); ++j) {
            const SubsetFamily ml = preimage_nest(p, l, j);
            const SubsetFamily mr = preimage_nest(p, r, j);
            out["preimage of a nest is a nest"].check(is_nest(ml), [&] { return family_json(l); });
            if (is_interlocking(l)) {
                out["interlocking nest lifts to an interlocking nest"].check(is_interlocking(ml),
                                                                             [&] { return family_json(l); });
            }
            if (separation_kind(l.united(r)) == SeparationKind::t1) {
                out["t1 pair lifts to a weakly t1 pair"].check(
                    weak_separation_kind(p, ml, &mr, j) == SeparationKind::t1,
                    [&] { return Json{{"L", family_json(l)}, {"R", family_json(r)}, {"j", j}}; });
            }
        }
        if (separation_kind(l.united(r)) == SeparationKind::t1 && is_interlocking(l) && is_interlocking(r)
            && separation_kind(l) >= SeparationKind::t0 && separation_kind(r) >= SeparationKind::t0) {
            const SubsetFamily base = product_base(p, l, r);
            out["product base is a base for the product topology"].check(
                is_base_of_some_topology(base)
                    && generate_topology(p.space(), base) == product_topology(p, l, r),
                [&] { return Json{{"L", family_json(l)}, {"R", family_json(r)}}; });
        }
    }
};

SubsetFamily perturbed(const ProductSpace& p, const SubsetFamily& lifted, std::mt19937_64& rng)
{
    // Flip one tuple in one member; keep the original if that breaks the chain.
    if (lifted.empty() || rng() % 2 == 0) {
        return lifted;
    }
    std::vector<PointSet> members(lifted.begin(), lifted.end());
    PointSet& changed = members[rng() % members.size()];
    const std::size_t x = rng() % p.size();
    if (changed.contains(x)) {
        changed.erase(x);
    } else {
        changed.insert(x);
    }
    SubsetFamily candidate(p.space(), members);
    return is_nest(candidate) ? candidate : lifted;
}

/// Random nest pairs on X^I: unrelated chains, independently lifted chains,
/// or the lifted ray nests of a random linear order on X, each possibly perturbed.
std::pair<SubsetFamily, SubsetFamily> random_product_pair(const ProductSpace& p, std::size_t j,
                                                          std::mt19937_64& rng)
{
    switch (rng() % 3) {
    case 0:
        return {random_nest(p.space(), rng), random_nest(p.space(), rng)};
    case 1: {
        const auto lift = [&] {
            return perturbed(p, preimage_nest(p, random_nest(p.base(), rng), rng() % p.index_count()), rng);
        };
        SubsetFamily l = lift();
        return {l, lift()};
    }
    default: {
        std::vector<std::size_t> ranking(p.base().size());
        std::iota(ranking.begin(), ranking.end(), 0);
        std::shuffle(ranking.begin(), ranking.end(), rng);
        const auto [l, r] = ray_nests(Relation::linear(p.base(), ranking));
        return {perturbed(p, preimage_nest(p, l, j), rng), perturbed(p, preimage_nest(p, r, j), rng)};
    }
    }
}

Outcome criterion_products(std::uint64_t seed)
{
    Outcome out;
    std::map<std::string, Archive> necessity;
    ProductChecks checks{out, necessity, {}};

    const ProductSpace plane(FiniteSpace(2), 2);
    const auto nests = enumerate_families(plane.space(), FamilyFilter::nest);
    for (const auto& f : nests) {
        for (std::size_t j = 0; j < 2; ++j) {
            checks.single(plane, f, j);
        }
    }
    for (const auto& l : nests) {
        for (const auto& r : nests) {
            for (std::size_t j = 0; j < 2; ++j) {
                checks.pair(plane, l, r, j);
            }
        }
    }
    for (std::size_t b = 2; b <= 3; ++b) {
        const ProductSpace p(FiniteSpace(b), 2);
        const auto base_nests = enumerate_families(p.base(), FamilyFilter::nest);
        for (const auto& l : base_nests) {
            for (const auto& r : base_nests) {
                checks.lift(p, l, r);
            }
        }
    }

    std::mt19937_64 rng(seed);
    const ProductSpace cube(FiniteSpace(3), 2);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t j = rng() % 2;
        const auto [l, r] = random_product_pair(cube, j, rng);
        checks.single(cube, l, j);
        checks.pair(cube, l, r, j);
    }

    Json met = Json::object();
    for (const auto& [name, count] : checks.hypotheses_met) {
        met[name] = count;
    }
    out.observations["hypotheses_met"] = met;
    out.observations["plane_nests"] = nests.size();
    out.pin("150 nests on the 2 x 2 plane", nests.size() == 150);
    out.pin("projection condition counterexamples archived", necessity["interlocking projection"].total > 0);
    for (auto& [statement, archive] : necessity) {
        std::string name = "without_projection_condition_" + statement;
        std::replace(name.begin(), name.end(), ' ', '_');
        out.archives[name] = std::move(archive);
    }
    return out;
}

// ---------------------------------------------------------------- criterion 7

Outcome criterion_function_spaces(std::uint64_t)
{
    Outcome out;
    for (std::size_t dom = 1; dom <= 3; ++dom) {
        for (std::size_t cod = 1; cod <= 3; ++cod) {
            const ProductSpace fs = function_space(dom, FiniteSpace(cod));
            const auto nests = enumerate_families(FiniteSpace(cod), FamilyFilter::nest);
            for (const auto& l : nests) {
                for (std::size_t x = 0; x < dom; ++x) {
                    const SubsetFamily pn = point_nest(fs, x, l);
                    const auto witness = [&] {
                        return Json{{"domain", dom}, {"codomain", cod}, {"x", x}, {"L", family_json(l)}};
                    };
                    // Filter functions by their value at x, independently of preimage_nest.
                    std::vector<PointSet> members;
                    for (const auto& m : l) {
                        PointSet s(fs.space());
                        for (std::size_t f = 0; f < fs.size(); ++f) {
                            if (m.contains(fs.decode(f)[x])) {
                                s.insert(f);
                            }
                        }
                        members.push_back(s);
                    }
                    out["point nest equals the preimage nest"].check(
                        pn == preimage_nest(fs, l, x) && pn == SubsetFamily(fs.space(), members), witness);
                    out["point nest is a nest"].check(is_nest(pn), witness);
                    if (is_interlocking(l)) {
                        out["interlocking is preserved"].check(is_interlocking(pn), witness);
                    }
                    for (const auto& r : nests) {
                        if (separation_kind(l.united(r)) == SeparationKind::t1) {
                            const SubsetFamily pr = point_nest(fs, x, r);
                            out["t1 pair gives weakly t1 point nests"].check(
                                weak_separation_kind(fs, pn, &pr, x) == SeparationKind::t1, witness);
                        }
                    }
                }
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------- criterion 8

/// Value of a raw representative, junk terms included, at t = 2^(-bits * d).
Rational evaluate_raw(const RawLittleOh& raw, unsigned long bits, unsigned long d)
{
    Rational total = 0;
    for (const auto& term : raw.terms) {
        const Rational scaled = term.exponent * static_cast<long>(d);
        const auto shift = static_cast<mp_bitcnt_t>(scaled.get_num().get_ui() * bits);
        total += term.coefficient / Rational(mpz_class(1) << shift);
    }
    return total;
}

RawLittleOh random_raw(std::mt19937_64& rng)
{
    RawLittleOh raw;
    const int k = static_cast<int>(rng() % 5);
    for (int i = 0; i < k; ++i) {
        const long den = 1 + static_cast<long>(rng() % 4);
        const long num = static_cast<long>(rng() % (den + 1));
        Rational e(num, den);
        e.canonicalize();
        raw.terms.push_back(FermatTerm{e, Rational(static_cast<long>(rng() % 7) - 3)});
    }
    return raw;
}

RawLittleOh with_junk(RawLittleOh raw, std::mt19937_64& rng)
{
    const int k = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < k; ++i) {
        const long den = 1 + static_cast<long>(rng() % 4);
        Rational e(den + 1 + static_cast<long>(rng() % (2 * den)), den);
        e.canonicalize();
        raw.terms.push_back(FermatTerm{e, Rational(static_cast<long>(rng() % 19) - 9)});
    }
    return raw;
}

RawLittleOh concat(RawLittleOh a, const RawLittleOh& b, int sign)
{
    for (auto term : b.terms) {
        term.coefficient *= sign;
        a.terms.push_back(term);
    }
    return a;
}

int sign_of(Comparison c)
{
    return c == Comparison::less ? -1 : c == Comparison::greater ? 1 : 0;
}

Outcome criterion_fermat(std::uint64_t seed)
{
    Outcome out;
    std::mt19937_64 rng(seed);
    // At t = 2^(-64 D) every junk term is smaller than the leading term by a
    // factor of at least 2^64, far beyond the coefficient range used here.
    const Rational small(1, mpz_class(1) << 64);
    for (int trial = 0; trial < 10000; ++trial) {
        const RawLittleOh rx = random_raw(rng);
        const RawLittleOh ry = random_raw(rng);
        const RawLittleOh rz = random_raw(rng);
        const FermatReal x = canonicalize(rx);
        const FermatReal y = canonicalize(ry);
        const FermatReal z = canonicalize(rz);
        const auto witness = [&] { return Json{to_string(x), to_string(y), to_string(z)}; };

        out["canonicalization is idempotent"].check(canonicalize(representative(x)) == x, witness);
        const Comparison xy = compare(x, y);
        const Comparison yx = compare(y, x);
        const int exactly_one = (xy == Comparison::less) + (xy == Comparison::equal) + (xy == Comparison::greater);
        out["trichotomy"].check(exactly_one == 1 && sign_of(xy) == -sign_of(yx)
                                    && ((xy == Comparison::equal) == (x == y)),
                                witness);
        if (xy == Comparison::less && compare(y, z) == Comparison::less) {
            out["transitivity"].check(compare(x, z) == Comparison::less, witness);
        }

        const RawLittleOh jx = with_junk(rx, rng);
        const RawLittleOh jy = with_junk(ry, rng);
        out["multiplication ignores junk terms"].check(
            canonicalize(mul_raw(jx, jy)) == mul(x, y) && canonicalize(jx) == x, witness);

        const std::vector<FermatReal> both{x, y};
        const unsigned long d = exponent_lcm(std::span<const FermatReal>(both));
        const int sampled = sgn(sample_at_root(x, small, d) - sample_at_root(y, small, d));
        const unsigned long junk_d = d * 24;
        const Rational raw_value = evaluate_raw(concat(jx, jy, -1), 64, junk_d);
        // Equal values differ by junk only, which must vanish faster than t.
        const Rational t_value(1, mpz_class(1) << static_cast<mp_bitcnt_t>(64 * junk_d));
        const bool raw_agrees = xy == Comparison::equal
                                    ? abs(raw_value) * Rational(mpz_class(1) << 64) < t_value
                                    : sgn(raw_value) == sign_of(xy);
        out["sampling oracle agrees"].check(sampled == sign_of(xy) && raw_agrees, witness);
    }

    const std::vector<const char*> pool_text{
        "0",   "t",           "-t",  "t^(1/2)", "2*t",          "1",
        "1 + t", "1 - t^(1/3)", "t^(1/3)", "-1", "1/2*t^(2/3)", "3*t^(1/2) - t"};
    std::vector<FermatReal> pool;
    for (const char* text : pool_text) {
        pool.push_back(parse_fermat(text));
    }
    std::size_t samples = 0;
    const std::size_t size = pool.size();
    for (std::uint32_t mask = 1; mask < (1u << size); ++mask) {
        if (std::popcount(mask) > 5) {
            continue;
        }
        std::vector<FermatReal> sample;
        Json texts = Json::array();
        for (std::size_t i = 0; i < size; ++i) {
            if ((mask >> i) & 1u) {
                sample.push_back(pool[i]);
                texts.push_back(pool_text[i]);
            }
        }
        ++samples;
        const Relation order = sample_order(sample);
        const auto [l, r] = ray_nests(order);
        const VdwVerdict v = vdw_verdict(order.space(), l, r);
        out["sampled ray nests interlock with t1 union"].check(
            is_interlocking(l) && is_interlocking(r) && separation_kind(l.united(r)) == SeparationKind::t1
                && v.claim3,
            [&] { return texts; });
    }
    out.observations["bridge_samples"] = samples;
    out.pin("1585 bridge samples", samples == 1585);
    return out;
}

// ---------------------------------------------------------------- criterion 9

Outcome criterion_connectedness_and_density(std::uint64_t)
{
    Outcome out;
    std::size_t t1_topologies = 0;
    for (std::size_t n = 2; n <= 4; ++n) {
        for (const auto& t : enumerate_topologies(FiniteSpace(n))) {
            if (separation_kind(t.opens()) != SeparationKind::t1) {
                continue;
            }
            ++t1_topologies;
            out["t1 open subbase on 2 or more points is disconnected"].check(
                !is_connected(t), [&] { return family_json(t.opens()); });
        }
    }
    std::size_t connected_pairs = 0;
    for (std::size_t n = 1; n <= 4; ++n) {
        const auto nests = enumerate_families(FiniteSpace(n), FamilyFilter::nest);
        for (const auto& l : nests) {
            for (const auto& r : nests) {
                if (separation_kind(l.united(r)) != SeparationKind::t1) {
                    continue;
                }
                if (!is_connected(generate_topology(FiniteSpace(n), l.united(r)))) {
                    continue;
                }
                ++connected_pairs;
                out["connected t1 nest pairs live on one point"].check(
                    n == 1, [&] { return Json{{"L", family_json(l)}, {"R", family_json(r)}}; });
            }
        }
    }
    std::size_t empty_order_exceptions = 0;
    for (std::size_t n = 1; n <= 3; ++n) {
        for (const auto& f : enumerate_families(FiniteSpace(n), FamilyFilter::nest)) {
            const bool dense = is_dense_order(induced_order(f));
            if (separation_kind(f) >= SeparationKind::t0) {
                out["density criterion on t0 nests"].check(dense_nest_criterion(f) == dense,
                                                            [&] { return family_json(f); });
            } else if (dense_nest_criterion(f) != dense) {
                ++empty_order_exceptions;
                out["non-t0 disagreements have an empty order"].check(induced_order(f).empty(),
                                                                       [&] { return family_json(f); });
            }
        }
    }
    out.observations["t1_topologies"] = t1_topologies;
    out.observations["connected_t1_pairs"] = connected_pairs;
    out.observations["non_t0_empty_order_disagreements"] = empty_order_exceptions;
    out.pin("t1 topologies exist on every size checked", t1_topologies == 3);
    return out;
}

std::vector<Criterion> criteria()
{
    return {
        {1, "nests and induced orders", 30, criterion_nests_and_orders},
        {2, "reverse nests", 10, criterion_reverse_nests},
        {3, "interlocking via extremal elements", 60, criterion_interlocking},
        {4, "van Dalen-Wattel constructive direction", 60, criterion_van_dalen_wattel},
        {5, "well orders and ordinal profiles", 300, criterion_well_orders_and_ordinals},
        {6, "product transfer", 120, criterion_products},
        {7, "function spaces", 30, criterion_function_spaces},
        {8, "Fermat reals", 60, criterion_fermat},
        {9, "connectedness and density", 10, criterion_connectedness_and_density},
    };
}

struct SuiteRun
{
    Json report;
    std::vector<Outcome> outcomes;
    std::vector<double> seconds;
};

SuiteRun run_suite(std::uint64_t seed)
{
    SuiteRun run;
    run.report = Json{{"schema", "nestlab.acceptance/1"}, {"seed", seed}};
    Json items = Json::array();
    for (const auto& c : criteria()) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o = c.run(seed + static_cast<std::uint64_t>(c.id));
        run.seconds.push_back(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
        Json item{{"criterion", c.id}, {"title", c.title}};
        item.update(o.to_json());
        items.push_back(std::move(item));
        run.outcomes.push_back(std::move(o));
    }
    run.report["criteria"] = std::move(items);
    return run;
}

void write_json(const std::filesystem::path& path, const Json& j)
{
    std::ofstream(path) << j.dump(2) << "\n";
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"nestlab acceptance gate"};
    std::uint64_t seed = cli::kDefaultSeed;
    std::string out_dir = "acceptance-artifacts";
    app.add_option("--seed", seed, "Seed for the randomized suites");
    app.add_option("--out", out_dir, "Directory for the report and archives");
    CLI11_PARSE(app, argc, argv);

    const std::filesystem::path dir(out_dir);
    std::filesystem::create_directories(dir);

    const auto start = std::chrono::steady_clock::now();
    const SuiteRun first = run_suite(seed);
    const auto cs = criteria();
    int failed = 0;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        const Outcome& o = first.outcomes[i];
        const bool in_time = first.seconds[i] <= cs[i].limit_seconds;
        const bool pass = o.exceptions() == 0 && in_time;
        failed += pass ? 0 : 1;
        std::printf("criterion %2d %s  %-42s cases=%-8zu exceptions=%-4zu %8.2fs (limit %.0fs)\n", cs[i].id,
                    pass ? "PASS" : "FAIL", cs[i].title.c_str(), o.cases(), o.exceptions(), first.seconds[i],
                    cs[i].limit_seconds);
        for (const auto& [name, archive] : o.archives) {
            write_json(dir / (name + ".json"), archive.to_json());
        }
    }
    write_json(dir / "report.json", first.report);

    const SuiteRun second = run_suite(seed);
    const bool identical = first.report.dump() == second.report.dump();
    failed += identical ? 0 : 1;
    std::printf("criterion 10 %s  %-42s bytes=%-8zu\n", identical ? "PASS" : "FAIL", "byte-identical reports",
                first.report.dump().size());

    const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%d of 10 criteria failed, %.2fs total, report in %s\n", failed, total,
                (dir / "report.json").string().c_str());
    return failed;
}
