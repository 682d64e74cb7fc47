#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "qmod/quiver.hpp"

namespace qmod {

// Engine configuration parsed from one JSON document: the extension data
// plus reproducibility and resource controls.
struct Config {
    ExtensionData ext;
    std::uint64_t budget = 100'000'000;  // enumeration cap, matches the oracle default
    std::uint64_t seed = 42;
    std::map<ExtDimVector, bool> gamma_overrides;
};

// Parses and validates a configuration document. Throws SchemaError naming
// the offending field on malformed input.
Config parse_config(const std::string& json_text);

// Reads a file and parses it; unreadable files are SchemaErrors.
Config load_config(const std::string& path);

// Dimension type literal "s:d1,d2,...", d entries in quiver vertex order.
// A negative n_vertices skips the arity check.
ExtDimVector parse_dim(const std::string& text, int n_vertices);

}  // namespace qmod
