#pragma once

#include <stdexcept>
#include <string>

namespace imflow {

// Bad or missing input: malformed files, violated preconditions,
// out-of-range parameters. Maps to CLI exit code 2.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A request that is well-formed but cannot be satisfied, e.g. asking for a
// pattern channel on a joint that does not admit it. Maps to exit code 3.
struct unachievable_error : std::runtime_error {
    explicit unachievable_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Broken internal invariant. Maps to exit code 4.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace imflow
