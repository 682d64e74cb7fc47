#pragma once

#include <cstdint>
#include <vector>

#include "qmod/motive.hpp"
#include "qmod/oracle.hpp"

namespace qmod {

// One HN stratum of the locus of full points: the exhaustive finite-field
// count next to the stratum class evaluated at L = p.
struct StratumRow {
    HNType type;
    bool trivial = false;  // the one-step type (the semistable stratum)
    std::uint64_t observed = 0;
    Int predicted;
    bool match = false;
};

struct CensusReport {
    std::uint32_t prime = 0;
    ExtDimVector dim;
    std::uint64_t total_full = 0;
    Int predicted_full;
    bool full_match = false;
    std::vector<StratumRow> rows;  // trivial stratum first, then H in its order
    bool all_match = false;
};

// Exhaustively enumerates full points over F_p, splits them by HN type, and
// compares every stratum count and the total against the symbolic classes
// evaluated at L = p. Types observed outside {trivial} + H (impossible if
// the criterion is sound) get predicted = 0 and fail the match.
CensusReport census_compare(MotiveContext& motive, const ExtDimVector& v,
                            std::uint32_t p, std::uint64_t budget);

}  // namespace qmod
