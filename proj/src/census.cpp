#include "qmod/census.hpp"

#include <algorithm>

namespace qmod {

CensusReport census_compare(MotiveContext& motive, const ExtDimVector& v,
                            std::uint32_t p, std::uint64_t budget) {
    StabilityContext& stab = motive.stability();
    const ExtensionData& ext = stab.ext();
    const PrimeField F(p);

    CensusReport report;
    report.prime = p;
    report.dim = v;

    const StratumCensus observed = stratum_census(F, ext, v, budget);
    report.total_full = observed.total_full;
    report.predicted_full = eval_at_integer(motive.rep_full(v), Int(p));
    report.full_match = Int(report.total_full) == report.predicted_full;

    auto count_of = [&](const HNType& t) -> std::uint64_t {
        auto it = observed.strata.find(t);
        return it == observed.strata.end() ? 0 : it->second;
    };

    std::vector<HNType> expected;
    const HNType trivial{{v}};
    expected.push_back(trivial);
    for (const HNType& t : stab.enumerate_hn_types(v)) expected.push_back(t);

    report.all_match = report.full_match;
    for (const HNType& t : expected) {
        StratumRow row;
        row.type = t;
        row.trivial = t == trivial;
        row.observed = count_of(t);
        row.predicted = row.trivial ? eval_at_integer(motive.sst(v), Int(p))
                                    : eval_at_integer(motive.stratum_class(t), Int(p));
        row.match = Int(row.observed) == row.predicted;
        report.all_match = report.all_match && row.match;
        report.rows.push_back(std::move(row));
    }
    // Stray types would mean an unsound criterion; report them, never hide.
    for (const auto& [t, n] : observed.strata) {
        if (std::find(expected.begin(), expected.end(), t) != expected.end()) continue;
        StratumRow row;
        row.type = t;
        row.observed = n;
        row.predicted = Int(0);
        row.match = false;
        report.all_match = false;
        report.rows.push_back(std::move(row));
    }
    return report;
}

}  // namespace qmod
