#pragma once

#include <stdexcept>
#include <string>

namespace nestlab {

/// Raised when an argument violates an operation's precondition
/// (mismatched spaces, a non-nest where a nest is required, malformed text).
class InputError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when an exhaustive operation is asked to run beyond its configured bound.
class CapacityError : public std::length_error
{
public:
    CapacityError(const std::string& what, std::size_t bound)
        : std::length_error(what + " (bound " + std::to_string(bound) + ")"), bound_(bound)
    {
    }

    [[nodiscard]] std::size_t bound() const noexcept { return bound_; }

private:
    std::size_t bound_;
};

} // namespace nestlab
