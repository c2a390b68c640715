#include <nestlab/cli/commands.hpp>
#include <nestlab/enumerate.hpp>
#include <nestlab/fermat.hpp>
#include <nestlab/nest.hpp>
#include <nestlab/orderability.hpp>
#include <nestlab/product.hpp>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;

namespace {

using namespace nestlab;

using Sets = std::vector<std::vector<std::size_t>>;
using Pairs = std::vector<std::pair<std::size_t, std::size_t>>;

SubsetFamily family(std::size_t n, const Sets& sets)
{
    return SubsetFamily::from_lists(FiniteSpace(n), sets);
}

Topology topology(std::size_t n, const Sets& opens)
{
    const FiniteSpace space(n);
    SubsetFamily f = SubsetFamily::from_lists(space, opens);
    return Topology::from_opens(f.with(PointSet(space)).with(PointSet::full(space)));
}

Pairs pairs_of(const Relation& r)
{
    return r.pairs();
}

py::object optional_sets(const std::optional<SubsetFamily>& f)
{
    return f ? py::cast(f->to_lists()) : py::none();
}

py::object optional_members(const std::optional<PointSet>& s)
{
    return s ? py::cast(s->members()) : py::none();
}

Rational rational(const std::string& text)
{
    Rational q;
    if (q.set_str(text, 10) != 0) {
        throw InputError("malformed rational '" + text + "'");
    }
    if (q.get_den() == 0) {
        throw InputError("zero denominator in '" + text + "'");
    }
    q.canonicalize();
    return q;
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Nest calculus, orderability checks and Fermat reals on finite spaces";

    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<CapacityError>(m, "CapacityError", PyExc_OverflowError);

    m.def("is_nest", [](std::size_t n, const Sets& sets) { return is_nest(family(n, sets)); });
    m.def("separation_kind", [](std::size_t n, const Sets& sets) {
        return std::string(to_string(separation_kind(family(n, sets))));
    });
    m.def("induced_order",
          [](std::size_t n, const Sets& sets) { return pairs_of(induced_order(family(n, sets))); });
    m.def("order_class", [](std::size_t n, const Pairs& pairs) {
        return std::string(to_string(classify_order(Relation::from_pairs(FiniteSpace(n), pairs))));
    });
    m.def("is_interlocking",
          [](std::size_t n, const Sets& sets) { return is_interlocking(family(n, sets)); });
    m.def(
        "scatters",
        [](std::size_t n, const Sets& sets, bool include_universe) {
            const SubsetFamily f = family(n, sets);
            return scatters(include_universe ? f.with(PointSet::full(FiniteSpace(n))) : f);
        },
        py::arg("n"), py::arg("sets"), py::arg("include_universe") = false);
    m.def("generate_topology", [](std::size_t n, const Sets& subbase) {
        return generate_topology(FiniteSpace(n), family(n, subbase)).opens().to_lists();
    });
    m.def("count_topologies",
          [](std::size_t n) { return enumerate_topologies(FiniteSpace(n)).size(); });
    m.def(
        "count_families",
        [](std::size_t n, const std::string& filter) {
            return count_families(FiniteSpace(n), parse_family_filter(filter));
        },
        py::arg("n"), py::arg("filter") = "none");

    m.def("vdw_verdict", [](std::size_t n, const Sets& left, const Sets& right) {
        const VdwVerdict v = vdw_verdict(FiniteSpace(n), family(n, left), family(n, right));
        py::dict d;
        d["order"] = pairs_of(v.order);
        d["order_class"] = std::string(to_string(v.order_class));
        d["union_t1"] = v.union_t1;
        d["claim1"] = v.claim1;
        d["claim2"] = v.claim2;
        d["claim3"] = v.claim3;
        d["claim1_witness"] = optional_members(v.claim1_witness);
        d["claim2_witness"] = optional_members(v.claim2_witness);
        d["claim3_witness"] = optional_members(v.claim3_witness);
        d["convention_sensitive"] = v.convention_sensitive;
        return d;
    });
    m.def("ordinal_profile", [](std::size_t n, const Sets& opens) {
        const OrdinalProfile p = ordinal_profile(topology(n, opens));
        py::dict d;
        d["homeomorphic_to_ordinal"] = p.homeomorphic_to_ordinal;
        d["interlocking_pair_scattering"] = p.interlocking_pair_scattering;
        d["interlocking_pair_well_ordered"] = p.interlocking_pair_well_ordered;
        d["clopen_nest_with_base"] = p.clopen_nest_with_base;
        d["clopen_nest_scatters"] = p.clopen_nest_scatters;
        d["base_nest"] = optional_sets(p.base_nest);
        d["equivalent"] = p.equivalent();
        return d;
    });
    m.def("minimal_neight",
          [](std::size_t n, const Sets& opens) { return minimal_neight(topology(n, opens)).k; });

    m.def("project_nest", [](std::size_t base, std::size_t index_count, const Sets& sets,
                             std::size_t j) {
        const ProductSpace p(FiniteSpace(base), index_count);
        return project_nest(p, SubsetFamily::from_lists(p.space(), sets), j).to_lists();
    });
    m.def("preimage_nest", [](std::size_t base, std::size_t index_count, const Sets& sets,
                              std::size_t j) {
        const ProductSpace p(FiniteSpace(base), index_count);
        return preimage_nest(p, family(base, sets), j).to_lists();
    });

    m.def("fermat_canonical", [](const std::string& text) { return to_string(parse_fermat(text)); });
    m.def("fermat_compare", [](const std::string& a, const std::string& b) {
        return std::string(to_string(compare(parse_fermat(a), parse_fermat(b))));
    });
    m.def("fermat_sample", [](const std::string& x, const std::string& t) {
        return sample_at(parse_fermat(x), rational(t)).get_str();
    });

    m.def(
        "run_command",
        [](const std::string& name, const std::string& instance_json,
           const std::vector<std::string>& args, std::uint64_t seed) {
            cli::Instance inst;
            if (!instance_json.empty()) {
                inst = cli::parse_instance(instance_json);
            }
            cli::CommandOptions options;
            options.args = args;
            options.seed = seed;
            return cli::run_command(name, inst, options).to_json().dump();
        },
        py::arg("name"), py::arg("instance_json") = "", py::arg("args") = std::vector<std::string>{},
        py::arg("seed") = cli::kDefaultSeed);
}
