#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qmod/config.hpp"

namespace qmod {

struct CheckItem {
    std::string name;
    bool pass = false;
    bool skipped = false;  // not applicable to this configuration; counts as pass
    std::string detail;
};

// Structural sanity battery for one configuration: extended-quiver relations
// vanish on random modules, rigidity when asserted, the generic rank
// identities, Euler-characteristic consistency, and gamma overrides against
// definitive oracle evidence. p is the probe field characteristic.
std::vector<CheckItem> run_selfcheck(const Config& cfg, std::uint32_t p = 101);

}  // namespace qmod
