#pragma once
#include <stdexcept>
#include <string>

namespace ccnet {

// Bad user input: malformed documents, maps out of range, wrong grades.
struct validation_error : std::runtime_error {
    explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

// A request that exceeds an explicit search guard. The operation refuses
// rather than approximate.
struct guard_error : std::runtime_error {
    explicit guard_error(const std::string& what) : std::runtime_error(what) {}
};

// A broken internal invariant: closure not closed, inconsistent linear
// system that theory says is solvable, Newton iteration overrunning its bound.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

} // namespace ccnet
