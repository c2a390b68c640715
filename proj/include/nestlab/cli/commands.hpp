#pragma once

#include <nestlab/cli/instance.hpp>
#include <nestlab/enumerate.hpp>

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nestlab::cli {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kReportSchema = "nestlab.report/1";
inline constexpr std::uint64_t kDefaultSeed = 20240601;

inline constexpr int kExitOk = 0;
inline constexpr int kExitCounterexample = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitCapacityError = 3;

struct CommandOptions
{
    std::uint64_t seed = kDefaultSeed;
    std::optional<std::size_t> bound;
    std::optional<std::string> filter;
    FamilyConvention convention{.allow_empty = false, .include_universe = true};
    std::optional<std::size_t> n;
    bool count_only = false;
    std::optional<std::size_t> sample;
    std::string left = "L";
    std::string right = "R";
    bool timing = false;
    /// Positional arguments after the command name (Fermat expressions).
    std::vector<std::string> args;
};

struct Claim
{
    std::string name;
    bool holds = false;
    std::optional<Json> witness;
};

struct Report
{
    std::string command;
    std::string digest;
    Json options = Json::object();
    std::vector<Claim> claims;
    Json observations = Json::object();
    std::vector<std::string> warnings;
    std::optional<double> elapsed_ms;

    [[nodiscard]] bool all_hold() const;
    [[nodiscard]] int exit_code() const { return all_hold() ? kExitOk : kExitCounterexample; }
    [[nodiscard]] Json to_json() const;
    /// Aligned claim table followed by the observations.
    [[nodiscard]] std::string to_text() const;
};

const std::vector<std::string_view>& command_names();

/// Throws InputError for an unknown command or unusable instance and
/// CapacityError when a bound is exceeded.
Report run_command(std::string_view name, const Instance& inst, const CommandOptions& options);

/// Machine-readable error document with the same schema tag.
Json error_json(std::string_view kind, const std::string& message,
                std::optional<std::size_t> bound = std::nullopt);

/// Encoders shared by reports and the instance printer.
Json set_json(const PointSet& s);
Json family_json(const SubsetFamily& f);
Json relation_json(const Relation& r);

} // namespace nestlab::cli
