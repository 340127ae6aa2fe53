#pragma once

#include <stdexcept>
#include <string>

namespace annulus {

// Rejection of a candidate diagonal set, naming the first violated invariant.
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Enumeration exceeded its configured class bound.
struct ResourceLimitError : std::runtime_error {
    explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace annulus
