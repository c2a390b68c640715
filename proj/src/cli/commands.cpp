#include <nestlab/cli/commands.hpp>

#include <nestlab/nest.hpp>
#include <nestlab/orderability.hpp>
#include <nestlab/product.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <sstream>

namespace nestlab::cli {

Json set_json(const PointSet& s)
{
    Json out = Json::array();
    s.for_each([&](std::size_t x) { out.push_back(x); });
    return out;
}

Json family_json(const SubsetFamily& f)
{
    Json out = Json::array();
    for (const auto& s : f) {
        out.push_back(set_json(s));
    }
    return out;
}

Json relation_json(const Relation& r)
{
    Json out = Json::array();
    for (const auto& [x, y] : r.pairs()) {
        out.push_back(Json::array({x, y}));
    }
    return out;
}

namespace {

Json pair_json(std::size_t x, std::size_t y)
{
    return Json::array({x, y});
}

Json optional_set(const std::optional<PointSet>& s)
{
    return s ? set_json(*s) : Json(nullptr);
}

std::string_view convention_name(FamilyConvention c)
{
    return c.include_universe ? "include-universe" : "raw";
}

class Builder
{
public:
    explicit Builder(Report& report) : report_(report) {}

    void claim(std::string name, bool holds, std::optional<Json> witness = std::nullopt)
    {
        report_.claims.push_back(Claim{std::move(name), holds, holds ? std::nullopt : std::move(witness)});
    }

    Json& observe(const std::string& key) { return report_.observations[key]; }

private:
    Report& report_;
};

std::size_t bounded(const CommandOptions& o, std::size_t fallback, std::size_t ceiling)
{
    const std::size_t bound = o.bound.value_or(fallback);
    if (bound > ceiling) {
        throw CapacityError("requested bound " + std::to_string(bound) + " exceeds the ceiling",
                            ceiling);
    }
    return bound;
}

void require_points(std::size_t points, std::size_t bound, const char* what)
{
    if (points > bound) {
        throw CapacityError(std::string(what) + " over " + std::to_string(points) + " points",
                            bound);
    }
}

const std::map<std::string, SubsetFamily>& require_families(const Instance& inst)
{
    if (inst.families.empty()) {
        throw InputError("the instance has no families");
    }
    return inst.families;
}

const Topology& require_topology(const Instance& inst)
{
    if (!inst.topology) {
        throw InputError("the instance has no 'topology' field");
    }
    return *inst.topology;
}

SubsetFamily strip_degenerate(const SubsetFamily& f)
{
    return f.without(PointSet(f.space())).without(PointSet::full(f.space()));
}

void check_nest(const Instance& inst, const CommandOptions&, Builder& b)
{
    for (const auto& [name, f] : require_families(inst)) {
        const auto bad = incomparable_pair(f);
        b.claim(name + " is a nest", !bad,
                bad ? std::optional<Json>(Json::array({set_json(bad->first), set_json(bad->second)}))
                    : std::nullopt);
        b.observe("sizes")[name] = f.size();
    }
}

void induced_order_cmd(const Instance& inst, const CommandOptions&, Builder& b)
{
    for (const auto& [name, f] : require_families(inst)) {
        const Relation order = induced_order(f);
        const OrderClass cls = classify_order(order);
        const bool t0_nest = is_nest(f) && separation_kind(f) >= SeparationKind::t0;
        Json& o = b.observe(name);
        o["order"] = relation_json(order);
        o["class"] = to_string(cls);
        o["nest"] = is_nest(f);
        o["separation"] = to_string(separation_kind(f));
        b.claim(name + ": t0 nest iff the induced order is linear",
                t0_nest == is_linear_class(cls), family_json(f));
    }
}

void separation_cmd(const Instance& inst, const CommandOptions& opts, Builder& b)
{
    const std::string level_name = opts.filter.value_or("t0");
    SeparationKind level = SeparationKind::t0;
    if (level_name == "t1") {
        level = SeparationKind::t1;
    } else if (level_name != "t0") {
        throw InputError("separation level must be t0 or t1, got '" + level_name + "'");
    }
    for (const auto& [name, f] : require_families(inst)) {
        const auto failure = separation_failure(f, level);
        b.observe(name) = to_string(separation_kind(f));
        b.claim(name + " is " + level_name + "-separating", !failure,
                failure ? std::optional<Json>(pair_json(failure->first, failure->second))
                        : std::nullopt);
    }
}

void interlocking_cmd(const Instance& inst, const CommandOptions&, Builder& b)
{
    for (const auto& [name, f] : require_families(inst)) {
        const auto violation = interlocking_violation(f);
        const bool stripped = is_interlocking(strip_degenerate(f));
        Json& o = b.observe(name);
        o["nest"] = is_nest(f);
        o["interlocking_without_empty_and_whole"] = stripped;
        o["convention_sensitive"] = stripped != !violation.has_value();
        b.claim(name + " is interlocking", !violation, optional_set(violation));
    }
}

void scatter_cmd(const Instance& inst, const CommandOptions& opts, Builder& b)
{
    for (const auto& [name, f] : require_families(inst)) {
        const SubsetFamily tested =
            opts.convention.include_universe ? f.with(PointSet::full(f.space())) : f;
        const auto missed = unscattered_subset(tested);
        b.claim(name + " scatters the space", !missed, optional_set(missed));
        if (is_nest(f)) {
            const WellOrderConditions c = well_order_conditions(f, opts.convention);
            Json& o = b.observe(name);
            o["scatters"] = c.scatters;
            o["well_order"] = c.well_order;
            o["t0_and_well_ordered_by_inclusion"] = c.t0_and_well_ordered_by_inclusion;
            o["t0_and_minimal_witness"] = c.t0_and_minimal_witness;
            b.claim(name + ": well-order conditions agree", c.agree(), family_json(f));
        }
    }
}

void vdw_cmd(const Instance& inst, const CommandOptions& opts, Builder& b)
{
    const SubsetFamily& l = inst.family(opts.left);
    const SubsetFamily& r = inst.family(opts.right);
    const VdwVerdict v = vdw_verdict(inst.finite_space(), l, r);
    b.observe("order") = relation_json(v.order);
    b.observe("order_class") = to_string(v.order_class);
    b.observe("union_t1") = v.union_t1;
    b.observe("left_interlocking") = v.left_interlocking;
    b.observe("right_interlocking") = v.right_interlocking;
    b.observe("convention_sensitive") = v.convention_sensitive;
    b.observe("generated_opens") = family_json(v.generated.opens());
    b.claim("claim 1: order-open sets are open", v.claim1, optional_set(v.claim1_witness));
    b.claim("claim 2: generated by the order rays in the subbase", v.claim2,
            optional_set(v.claim2_witness));
    b.claim("claim 3: interlocking nests give the order topology", v.claim3,
            optional_set(v.claim3_witness));
}

Json nest_pair_json(const std::optional<NestPair>& p)
{
    if (!p) {
        return nullptr;
    }
    return Json{{"left", family_json(p->first)}, {"right", family_json(p->second)}};
}

Json optional_family(const std::optional<SubsetFamily>& f)
{
    return f ? family_json(*f) : Json(nullptr);
}

void ordinal_profile_cmd(const Instance& inst, const CommandOptions& opts, Builder& b)
{
    const Topology& t = require_topology(inst);
    require_points(t.space().size(), bounded(opts, kOrdinalProfileBound, kOrdinalProfileBound),
                   "ordinal profile");
    const OrdinalProfile p = ordinal_profile(t);
    Json o = Json::object();
    o["homeomorphic_to_ordinal"] = p.homeomorphic_to_ordinal;
    o["interlocking_pair_scattering"] = p.interlocking_pair_scattering;
    o["interlocking_pair_well_ordered"] = p.interlocking_pair_well_ordered;
    o["clopen_nest_with_base"] = p.clopen_nest_with_base;
    o["clopen_nest_scatters"] = p.clopen_nest_scatters;
    b.observe("conditions") = o;
    b.observe("scattering_pair") = nest_pair_json(p.scattering_pair);
    b.observe("well_ordered_pair") = nest_pair_json(p.well_ordered_pair);
    b.observe("base_nest") = optional_family(p.base_nest);
    b.observe("scattering_nest") = optional_family(p.scattering_nest);
    b.claim("pair search completed", p.search_complete);
    b.claim("the five conditions agree", p.equivalent(), o);
}

void neight_cmd(const Instance& inst, const CommandOptions& opts, Builder& b)
{
    const Topology& t = require_topology(inst);
    require_points(t.space().size(), kNeightBound, "neight search");
    const NeightResult result = minimal_neight(t);
    Json nests = Json::array();
    SubsetFamily subbase(t.space());
    for (const auto& n : result.nests) {
        nests.push_back(family_json(n));
        subbase = subbase.united(n);
    }
    b.observe("neight") = result.k;
    b.observe("nests") = std::move(nests);
    b.claim("the reported nests generate the topology",
            generate_topology(t.space(), subbase) == t);
    if (opts.bound) {
        b.claim("neight is at most " + std::to_string(*opts.bound), result.k <= *opts.bound,
                Json(result.k));
    }
}

void probe_cmd(const Instance& inst, const CommandOptions& opts, Builder& b)
{
    b.observe("assumption") = ProbeReport::kAssumption;
    if (inst.relation) {
        const ProbeReport report = transitive_probe(*inst.relation);
        Json only_ray = Json::array();
        for (const auto& s : report.only_in_ray) {
            only_ray.push_back(set_json(s));
        }
        Json only_interval = Json::array();
        for (const auto& s : report.only_in_interval) {
            only_interval.push_back(set_json(s));
        }
        b.observe("features") = report.features.signature();
        b.observe("only_in_ray") = only_ray;
        b.observe("only_in_interval") = only_interval;
        b.claim("ray topology equals interval topology", report.equal,
                Json{{"only_in_ray", only_ray}, {"only_in_interval", only_interval}});
        return;
    }
    const std::size_t n = opts.n ? *opts.n : inst.finite_space().size();
    require_points(n, bounded(opts, 4, 4), "transitive probe batch");
    const ProbeBatch batch = probe_batch(FiniteSpace(n));
    b.observe("points") = batch.points;
    b.observe("relations") = batch.relations;
    b.observe("equal") = batch.equal;
    b.observe("not_equal") = batch.not_equal;
    Json buckets = Json::object();
    for (const auto& [signature, bucket] : batch.by_features) {
        buckets[signature] = Json{{"equal", bucket.equal}, {"not_equal", bucket.not_equal}};
    }
    b.observe("by_features") = std::move(buckets);
}

void product_transfer_cmd(const Instance& inst, const CommandOptions& opts, Builder& b)
{
    const FiniteSpace base = inst.finite_space();
    require_points(base.size(), bounded(opts, 3, 4), "product transfer base");
    const ProductSpace p(base, opts.n.value_or(2));
    const SubsetFamily& l = inst.family(opts.left);
    const SubsetFamily& r = inst.family(opts.right);
    const TransferReport report = product_transfer(p, l, r);
    b.observe("index_count") = p.index_count();
    b.observe("product_points") = p.size();
    b.observe("base_t1") = report.base_t1;
    b.observe("base_interlocking") = report.base_interlocking;
    for (const auto& c : report.coordinates) {
        const std::string at = " at coordinate " + std::to_string(c.j);
        if (report.base_t1) {
            b.claim("lifted pair is weakly t1" + at, c.weak_kind == SeparationKind::t1,
                    Json(to_string(c.weak_kind)));
        }
        b.claim("lifted nests satisfy the projection condition" + at, c.projection_condition);
        b.claim("projection recovers the nests" + at, c.projections_recover);
        b.claim("lifting preserves interlocking" + at, c.interlocking_preserved);
    }
    b.claim("product base family is a base", report.product_base_is_base);
    b.claim("product base generates the product topology", report.product_base_generates);
}

std::vector<FermatReal> fermat_inputs(const Instance& inst, const CommandOptions& opts)
{
    if (!opts.args.empty()) {
        std::vector<FermatReal> xs;
        for (const auto& a : opts.args) {
            xs.push_back(parse_fermat(a));
        }
        return xs;
    }
    return inst.fermat;
}

Comparison sampled_sign(const FermatReal& x, const FermatReal& y, const Rational& s, unsigned long d)
{
    const int c = cmp(sample_at_root(x, s, d), sample_at_root(y, s, d));
    return c < 0 ? Comparison::less : (c == 0 ? Comparison::equal : Comparison::greater);
}

void fermat_compare_cmd(const Instance& inst, const CommandOptions& opts, Builder& b)
{
    const auto xs = fermat_inputs(inst, opts);
    if (xs.size() != 2) {
        throw InputError("fermat-compare needs exactly two expressions, got "
                         + std::to_string(xs.size()));
    }
    const Comparison c = compare(xs[0], xs[1]);
    const std::string a = to_string(xs[0]);
    const std::string z = to_string(xs[1]);
    std::string text;
    switch (c) {
    case Comparison::less: text = a + " < " + z; break;
    case Comparison::equal: text = a + " = " + z; break;
    case Comparison::greater: text = z + " < " + a; break;
    }
    b.observe("comparison") = to_string(c);
    b.observe("relation") = text;

    // Exact samples at t = 2^(-k D); the verdict must hold from some k0 up to 64.
    const unsigned long d = exponent_lcm(std::span<const FermatReal>(xs));
    std::size_t k0 = 65;
    for (std::size_t k = 64; k >= 1; --k) {
        Rational s(1, mpz_class(1) << static_cast<mp_bitcnt_t>(k));
        if (sampled_sign(xs[0], xs[1], s, d) != c) {
            break;
        }
        k0 = k;
    }
    b.observe("sampling_power") = d;
    b.observe("agreement_from_k") = k0 <= 64 ? Json(k0) : Json(nullptr);
    b.claim("sampling oracle agrees", k0 <= 64);
}

void fermat_canon_cmd(const Instance& inst, const CommandOptions& opts, Builder& b)
{
    const auto xs = fermat_inputs(inst, opts);
    if (xs.empty()) {
        throw InputError("fermat-canon needs at least one expression");
    }
    Json forms = Json::array();
    bool round_trip = true;
    for (const auto& x : xs) {
        const std::string text = to_string(x);
        forms.push_back(Json{{"canonical", text},
                             {"standard_part", x.standard_part().get_str()},
                             {"is_zero", is_zero(x)}});
        round_trip = round_trip && parse_fermat(text) == x;
    }
    b.observe("forms") = std::move(forms);
    b.claim("canonical text parses back to the same value", round_trip);
}

void enumerate_cmd(const Instance& inst, const CommandOptions& opts, Builder& b)
{
    const std::size_t n = opts.n ? *opts.n : inst.finite_space().size();
    const FamilyFilter filter = parse_family_filter(opts.filter.value_or("none"));
    const FiniteSpace space(n);
    b.observe("points") = n;
    b.observe("filter") = to_string(filter);
    std::vector<SubsetFamily> families;
    if (opts.sample) {
        require_points(n, bounded(opts, kDefaultSampleBound, kMaxSampleBound), "sampling");
        families = sample_families(space, *opts.sample, opts.seed, filter, kMaxSampleBound);
        b.observe("mode") = "sampled";
    } else {
        const std::size_t bound = bounded(opts, kDefaultExhaustiveBound, kMaxExhaustiveBound);
        require_points(n, bound, "exhaustive enumeration");
        EnumerationOptions eo;
        eo.bound = bound;
        if (opts.count_only) {
            b.observe("mode") = "exhaustive";
            b.observe("count") = count_families(space, filter, eo);
            return;
        }
        families = enumerate_families(space, filter, eo);
        b.observe("mode") = "exhaustive";
    }
    b.observe("count") = families.size();
    if (!opts.count_only) {
        Json list = Json::array();
        for (const auto& f : families) {
            list.push_back(family_json(f));
        }
        b.observe("families") = std::move(list);
    }
}

using Handler = std::function<void(const Instance&, const CommandOptions&, Builder&)>;

const std::vector<std::pair<std::string_view, Handler>>& handlers()
{
    static const std::vector<std::pair<std::string_view, Handler>> table{
        {"check-nest", check_nest},
        {"induced-order", induced_order_cmd},
        {"separation", separation_cmd},
        {"interlocking", interlocking_cmd},
        {"scatter", scatter_cmd},
        {"vdw", vdw_cmd},
        {"ordinal-profile", ordinal_profile_cmd},
        {"neight", neight_cmd},
        {"probe-transitive", probe_cmd},
        {"product-transfer", product_transfer_cmd},
        {"fermat-compare", fermat_compare_cmd},
        {"fermat-canon", fermat_canon_cmd},
        {"enumerate", enumerate_cmd},
    };
    return table;
}

Json options_json(const CommandOptions& o)
{
    Json out = Json::object();
    out["seed"] = o.seed;
    out["convention"] = convention_name(o.convention);
    if (o.bound) {
        out["bound"] = *o.bound;
    }
    if (o.filter) {
        out["filter"] = *o.filter;
    }
    if (o.n) {
        out["n"] = *o.n;
    }
    if (o.sample) {
        out["sample"] = *o.sample;
    }
    if (o.count_only) {
        out["count"] = true;
    }
    out["left"] = o.left;
    out["right"] = o.right;
    if (!o.args.empty()) {
        out["args"] = o.args;
    }
    return out;
}

} // namespace

const std::vector<std::string_view>& command_names()
{
    static const std::vector<std::string_view> names = [] {
        std::vector<std::string_view> out;
        for (const auto& [name, _] : handlers()) {
            out.push_back(name);
        }
        return out;
    }();
    return names;
}

bool Report::all_hold() const
{
    return std::all_of(claims.begin(), claims.end(), [](const Claim& c) { return c.holds; });
}

Json Report::to_json() const
{
    Json out = Json::object();
    out["schema"] = kReportSchema;
    out["command"] = command;
    out["instance_digest"] = digest;
    out["options"] = options;
    Json cs = Json::array();
    for (const auto& c : claims) {
        Json entry{{"name", c.name}, {"holds", c.holds}};
        if (c.witness) {
            entry["witness"] = *c.witness;
        }
        cs.push_back(std::move(entry));
    }
    out["claims"] = std::move(cs);
    out["all_hold"] = all_hold();
    out["observations"] = observations;
    out["warnings"] = warnings;
    if (elapsed_ms) {
        out["elapsed_ms"] = *elapsed_ms;
    }
    return out;
}

std::string Report::to_text() const
{
    std::ostringstream out;
    out << "command " << command << "  instance " << digest << "  seed " << options.value("seed", 0)
        << "\n";
    std::size_t width = 5;
    for (const auto& c : claims) {
        width = std::max(width, c.name.size());
    }
    if (!claims.empty()) {
        out << std::string("claim") << std::string(width - 5 + 2, ' ') << "holds  witness\n";
        for (const auto& c : claims) {
            out << c.name << std::string(width - c.name.size() + 2, ' ') << (c.holds ? "yes  " : "NO   ")
                << "  " << (c.witness ? c.witness->dump() : "-") << "\n";
        }
    }
    for (const auto& [key, value] : observations.items()) {
        out << key << ": " << value.dump() << "\n";
    }
    for (const auto& w : warnings) {
        out << "warning: " << w << "\n";
    }
    if (elapsed_ms) {
        out << "elapsed " << *elapsed_ms << " ms\n";
    }
    return out.str();
}

Report run_command(std::string_view name, const Instance& inst, const CommandOptions& options)
{
    const auto& table = handlers();
    const auto it = std::find_if(table.begin(), table.end(),
                                 [&](const auto& entry) { return entry.first == name; });
    if (it == table.end()) {
        throw InputError("unknown command '" + std::string(name) + "'");
    }
    Report report;
    report.command = std::string(name);
    report.digest = digest_hex(instance_digest(inst));
    report.options = options_json(options);
    report.warnings = inst.warnings;
    Builder builder(report);
    const auto start = std::chrono::steady_clock::now();
    it->second(inst, options, builder);
    if (options.timing) {
        report.elapsed_ms = std::chrono::duration<double, std::milli>(
                                std::chrono::steady_clock::now() - start)
                                .count();
    }
    return report;
}

Json error_json(std::string_view kind, const std::string& message, std::optional<std::size_t> bound)
{
    Json out = Json::object();
    out["schema"] = kReportSchema;
    out["error"] = Json{{"kind", kind}, {"message", message}};
    if (bound) {
        out["error"]["bound"] = *bound;
    }
    return out;
}

} // namespace nestlab::cli
