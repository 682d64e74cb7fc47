#pragma once

#include <stdexcept>
#include <string>

namespace qmod {

// Input or config malformed: bad shapes, unknown names, invalid dimension
// strings. CLI exit code 1.
struct SchemaError : std::runtime_error {
    explicit SchemaError(const std::string& msg) : std::runtime_error(msg) {}
};

// A mathematical hypothesis an operation relies on is not asserted or fails:
// rigidity not declared, gamma-condition violated, precondition on stability
// not met. CLI exit code 2.
struct AssumptionError : std::runtime_error {
    explicit AssumptionError(const std::string& msg) : std::runtime_error(msg) {}
};

// The requested computation is outside an engine's supported shape, with the
// data otherwise well-formed. CLI exit code 3.
struct UnsupportedError : std::runtime_error {
    explicit UnsupportedError(const std::string& msg) : std::runtime_error(msg) {}
};

// An enumeration would exceed the configured operation budget. Aborts instead
// of silently sampling. CLI exit code 4.
struct BudgetError : std::runtime_error {
    explicit BudgetError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace qmod
