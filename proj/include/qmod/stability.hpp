#pragma once

#include <map>
#include <string>
#include <vector>

#include "qmod/quiver.hpp"

namespace qmod {

// Harder-Narasimhan type: dimension types of the subquotients, slope-ordered.
struct HNType {
    std::vector<ExtDimVector> steps;

    ExtDimVector weight() const;
    // rendered as "(1|2,0) > (1|2,1)"
    std::string to_string() const;
    auto operator<=>(const HNType&) const = default;
};

// Answer to "is the generic rank gamma_{T^s,d} equal to d?", with enough
// context to reproduce a positive probabilistic answer.
struct GammaAnswer {
    bool full = false;
    DimVector rank;       // best vertexwise rank established
    std::string witness;  // e.g. "p=101 seed=42 trial=3", "table", "bound"
};

class GammaOracle {
  public:
    virtual ~GammaOracle() = default;
    virtual GammaAnswer answer(const ExtDimVector& v) = 0;
};

// Pinned answers, with an optional fallback oracle for misses. Entries win.
class TableGammaOracle : public GammaOracle {
  public:
    explicit TableGammaOracle(std::map<ExtDimVector, bool> table,
                              GammaOracle* fallback = nullptr)
        : table_(std::move(table)), fallback_(fallback) {}

    GammaAnswer answer(const ExtDimVector& v) override;

  private:
    std::map<ExtDimVector, bool> table_;
    GammaOracle* fallback_;
};

// Memoized slope-stability combinatorics for one fixed extension. Holding
// the extension by reference keys every cache to it by construction.
class StabilityContext {
  public:
    StabilityContext(const ExtensionData& ext, GammaOracle& gamma);

    const ExtensionData& ext() const { return ext_; }

    // Recursive criterion: gamma full and no candidate HN type with all
    // pairwise extended Euler pairings zero.
    bool is_semistable_type(const ExtDimVector& v);

    // The set H: decompositions of v into >= 2 semistable steps of strictly
    // decreasing slope, all with nonzero s-component. Lexicographic order on
    // the flattened step sequence.
    std::vector<HNType> enumerate_hn_types(const ExtDimVector& v);

    // False iff v splits as w + (v-w) with both parts semistable of equal
    // slope (which yields properly semistable direct sums).
    bool stable_equals_semistable(const ExtDimVector& v);

    std::int64_t hn_stratum_codim(const HNType& hn) const;
    std::int64_t hn_exponent(const HNType& hn) const;

  private:
    bool semistable_uncached(const ExtDimVector& v);

    const ExtensionData& ext_;
    GammaOracle& gamma_;
    std::map<ExtDimVector, bool> sst_memo_;
    std::map<ExtDimVector, std::vector<HNType>> hn_memo_;
};

}  // namespace qmod
