#pragma once

#include <stdexcept>
#include <string>

namespace rampw {

// Enumeration would exceed the configured budget. The oracles never return
// truncated results; callers either raise the budget or use a closed form.
struct TooLargeError : std::runtime_error {
    explicit TooLargeError(const std::string& what) : std::runtime_error(what) {}
};

// A theorem's stated hypothesis does not hold for the given parameters.
struct HypothesisError : std::runtime_error {
    explicit HypothesisError(const std::string& what) : std::runtime_error(what) {}
};

struct IoError : std::runtime_error {
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace rampw
