#include <nestlab/cli/commands.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace {

using namespace nestlab;

std::string read_text(const std::string& path)
{
    if (path == "-") {
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    }
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot read instance file '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool takes_expressions(const std::string& command)
{
    return command.rfind("fermat-", 0) == 0;
}

int fail(bool json, std::string_view kind, const std::string& message,
         std::optional<std::size_t> bound, int code)
{
    if (json) {
        std::cout << cli::error_json(kind, message, bound).dump(2) << "\n";
    }
    std::cerr << "nestlab: " << message << "\n";
    return code;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Finite nest and orderability checks"};
    std::string command;
    std::vector<std::string> positional;
    std::string instance_path;
    std::string convention = "include-universe";
    bool json = false;
    cli::CommandOptions options;
    std::size_t bound = 0;
    std::string filter;
    std::size_t n = 0;
    std::size_t sample = 0;

    std::string names;
    for (const auto& c : cli::command_names()) {
        names += names.empty() ? "" : ", ";
        names += c;
    }
    app.add_option("command", command, "One of: " + names)->required();
    app.add_option("args", positional,
                   "Instance file (- for stdin), or expressions for fermat-* commands");
    app.add_option("-i,--instance", instance_path, "Instance file");
    app.add_flag("--json", json, "Print the machine-readable report");
    app.add_option("--seed", options.seed, "Seed for sampled runs")->capture_default_str();
    auto* bound_opt = app.add_option("--bound", bound, "Override the command's capacity bound");
    auto* filter_opt = app.add_option("--filter", filter, "Family filter or separation level");
    app.add_option("--convention", convention, "include-universe or raw")
        ->check(CLI::IsMember({"include-universe", "raw"}))
        ->capture_default_str();
    auto* n_opt = app.add_option("--n", n, "Number of points, or coordinates for product-transfer");
    app.add_flag("--count", options.count_only, "Report counts only");
    auto* sample_opt = app.add_option("--sample", sample, "Draw this many random families");
    app.add_option("--left", options.left, "Left family name")->capture_default_str();
    app.add_option("--right", options.right, "Right family name")->capture_default_str();
    app.add_flag("--timing", options.timing, "Include elapsed time in the report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : cli::kExitInputError;
    }

    if (*bound_opt) {
        options.bound = bound;
    }
    if (*filter_opt) {
        options.filter = filter;
    }
    if (*n_opt) {
        options.n = n;
    }
    if (*sample_opt) {
        options.sample = sample;
    }
    options.convention.include_universe = convention == "include-universe";

    try {
        if (takes_expressions(command)) {
            options.args = positional;
        } else if (instance_path.empty() && !positional.empty()) {
            if (positional.size() > 1) {
                throw InputError("expected a single instance file");
            }
            instance_path = positional.front();
        }
        cli::Instance inst;
        if (!instance_path.empty()) {
            inst = cli::parse_instance(read_text(instance_path));
        }
        const cli::Report report = cli::run_command(command, inst, options);
        std::cout << (json ? report.to_json().dump(2) + "\n" : report.to_text());
        return report.exit_code();
    } catch (const CapacityError& e) {
        return fail(json, "capacity", e.what(), e.bound(), cli::kExitCapacityError);
    } catch (const InputError& e) {
        return fail(json, "input", e.what(), std::nullopt, cli::kExitInputError);
    }
}
