#include <nestlab/cli/commands.hpp>
#include <nestlab/cli/instance.hpp>

#include <cstdio>

namespace nestlab::cli {

namespace {

[[noreturn]] void field_error(const std::string& path, const std::string& message)
{
    throw InputError("field " + path + ": " + message);
}

std::string line_column(std::string_view text, std::size_t byte)
{
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return std::to_string(line) + ":" + std::to_string(column);
}

std::size_t read_index(const Json& value, const std::string& path, std::size_t limit)
{
    if (!value.is_number_integer()) {
        field_error(path, "expected a point index");
    }
    const auto i = value.get<std::int64_t>();
    if (i < 0 || static_cast<std::size_t>(i) >= limit) {
        field_error(path, "index " + std::to_string(i) + " out of range for space "
                              + std::to_string(limit));
    }
    return static_cast<std::size_t>(i);
}

std::vector<PointSet> read_sets(const Json& value, const std::string& path, FiniteSpace space)
{
    if (!value.is_array()) {
        field_error(path, "expected a list of sets");
    }
    std::vector<PointSet> sets;
    for (std::size_t k = 0; k < value.size(); ++k) {
        const std::string set_path = path + "[" + std::to_string(k) + "]";
        if (!value[k].is_array()) {
            field_error(set_path, "expected a list of point indices");
        }
        PointSet s(space);
        for (std::size_t m = 0; m < value[k].size(); ++m) {
            s.insert(read_index(value[k][m], set_path + "[" + std::to_string(m) + "]",
                                space.size()));
        }
        sets.push_back(std::move(s));
    }
    return sets;
}

FiniteSpace require_space(const Instance& inst, const std::string& path)
{
    if (!inst.space) {
        field_error(path, "needs the 'space' field");
    }
    return FiniteSpace(*inst.space);
}

} // namespace

FiniteSpace Instance::finite_space() const
{
    if (!space) {
        throw InputError("the instance has no 'space' field");
    }
    return FiniteSpace(*space);
}

const SubsetFamily& Instance::family(const std::string& name) const
{
    const auto it = families.find(name);
    if (it == families.end()) {
        throw InputError("the instance has no family named '" + name + "'");
    }
    return it->second;
}

Instance parse_instance(std::string_view text)
{
    Json doc;
    try {
        doc = Json::parse(text.begin(), text.end());
    } catch (const Json::parse_error& e) {
        throw InputError("malformed JSON at " + line_column(text, e.byte) + ": " + e.what());
    }
    if (!doc.is_object()) {
        throw InputError("an instance must be a JSON object");
    }
    for (const auto& [key, _] : doc.items()) {
        if (key != "space" && key != "families" && key != "relation" && key != "topology"
            && key != "fermat") {
            field_error(key, "unknown field");
        }
    }

    Instance inst;
    if (doc.contains("space")) {
        const Json& s = doc["space"];
        if (!s.is_number_integer() || s.get<std::int64_t>() < 1) {
            field_error("space", "expected a positive integer");
        }
        inst.space = s.get<std::size_t>();
    }

    if (doc.contains("families")) {
        const FiniteSpace space = require_space(inst, "families");
        const Json& fams = doc["families"];
        if (!fams.is_object()) {
            field_error("families", "expected an object of named families");
        }
        for (const auto& [name, value] : fams.items()) {
            const std::string path = "families." + name;
            SubsetFamily f(space, read_sets(value, path, space));
            if (f.collapsed_duplicates() > 0) {
                inst.warnings.push_back(path + ": collapsed "
                                        + std::to_string(f.collapsed_duplicates())
                                        + " duplicate set(s)");
            }
            inst.families.emplace(name, std::move(f));
        }
    }

    if (doc.contains("relation")) {
        const FiniteSpace space = require_space(inst, "relation");
        const Json& rel = doc["relation"];
        if (!rel.is_array()) {
            field_error("relation", "expected a list of pairs");
        }
        std::vector<Relation::Pair> pairs;
        bool self_pairs = false;
        for (std::size_t k = 0; k < rel.size(); ++k) {
            const std::string path = "relation[" + std::to_string(k) + "]";
            if (!rel[k].is_array() || rel[k].size() != 2) {
                field_error(path, "expected a pair [x, y]");
            }
            const auto x = read_index(rel[k][0], path + "[0]", space.size());
            const auto y = read_index(rel[k][1], path + "[1]", space.size());
            self_pairs = self_pairs || x == y;
            pairs.emplace_back(x, y);
        }
        inst.relation = Relation::from_pairs(space, pairs, self_pairs);
    }

    if (doc.contains("topology")) {
        const FiniteSpace space = require_space(inst, "topology");
        std::vector<PointSet> opens = read_sets(doc["topology"], "topology", space);
        opens.push_back(PointSet(space));
        opens.push_back(PointSet::full(space));
        try {
            inst.topology = Topology::from_opens(SubsetFamily(space, std::move(opens)));
        } catch (const InputError& e) {
            field_error("topology", e.what());
        }
    }

    if (doc.contains("fermat")) {
        const Json& xs = doc["fermat"];
        if (!xs.is_array()) {
            field_error("fermat", "expected a list of expressions");
        }
        for (std::size_t k = 0; k < xs.size(); ++k) {
            const std::string path = "fermat[" + std::to_string(k) + "]";
            if (!xs[k].is_string()) {
                field_error(path, "expected an expression string");
            }
            try {
                inst.fermat.push_back(parse_fermat(xs[k].get<std::string>()));
            } catch (const InputError& e) {
                field_error(path, e.what());
            }
        }
    }
    return inst;
}

namespace {

Json instance_json(const Instance& inst)
{
    Json doc = Json::object();
    if (inst.space) {
        doc["space"] = *inst.space;
    }
    if (!inst.families.empty()) {
        Json fams = Json::object();
        for (const auto& [name, f] : inst.families) {
            fams[name] = family_json(f);
        }
        doc["families"] = std::move(fams);
    }
    if (inst.relation) {
        doc["relation"] = relation_json(*inst.relation);
    }
    if (inst.topology) {
        doc["topology"] = family_json(inst.topology->opens());
    }
    if (!inst.fermat.empty()) {
        Json xs = Json::array();
        for (const auto& x : inst.fermat) {
            xs.push_back(to_string(x));
        }
        doc["fermat"] = std::move(xs);
    }
    return doc;
}

} // namespace

std::string print_instance(const Instance& inst)
{
    return instance_json(inst).dump(2) + "\n";
}

std::uint64_t instance_digest(const Instance& inst)
{
    std::uint64_t h = 1469598103934665603ULL;
    for (const char c : instance_json(inst).dump()) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ULL;
    }
    return h;
}

std::string digest_hex(std::uint64_t digest)
{
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(digest));
    return buf;
}

} // namespace nestlab::cli
