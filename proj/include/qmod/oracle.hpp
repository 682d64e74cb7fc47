#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>

#include "qmod/fqrep.hpp"
#include "qmod/stability.hpp"

namespace qmod {

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

// Best vertexwise rank of a homomorphism T^s -> M found by sampling random
// (M, hom) pairs. A full-rank witness proves gamma = d (rank can only drop
// on special points); a negative answer is probabilistic.
struct GammaEstimate {
    DimVector rank;
    bool full = false;
    int witness_trial = -1;  // trial index of the first full-rank witness
};

GammaEstimate estimate_gamma(const ExtensionData& ext, const ExtDimVector& v, int trials,
                             std::uint32_t p, std::uint64_t seed);

// GammaOracle backed by the componentwise bound d <= s*t (definitive no)
// plus randomized sampling (witness yes / probable no). Memoized.
class SamplingGammaOracle final : public GammaOracle {
  public:
    explicit SamplingGammaOracle(const ExtensionData& ext, std::uint32_t p = 101,
                                 int trials = 24, std::uint64_t seed = 42)
        : ext_(ext), p_(p), trials_(trials), seed_(seed) {}

    GammaAnswer answer(const ExtDimVector& v) override;

  private:
    const ExtensionData& ext_;
    std::uint32_t p_;
    int trials_;
    std::uint64_t seed_;
    std::map<ExtDimVector, GammaAnswer> memo_;
};

enum class KingVerdict { Stable, SemistableNotStable, Unstable };

std::string to_string(KingVerdict v);

// Subspace test on one module: walks all nonzero subspaces W of the
// infinity space, forms the generated subobject (W, Wbar) and compares its
// slope with the total slope. The pair (V, whole) is skipped. Budget counts
// visited subspaces.
KingVerdict king_check(const PrimeField& F, const ExtensionData& ext, const FqRep& rep,
                       std::uint64_t budget = kDefaultBudget);

// Dimension vector of the subobject generated by the row span of W
// (a k x s matrix): componentwise rank of the f-images of W.
DimVector generated_subobject_dims(const PrimeField& F, const ExtensionData& ext,
                                   const FqRep& rep, const FpMat& w);

// HN type of one module, computed by repeatedly splitting off the maximal
// destabilizing subobject (the slope-then-dimension maximum over generated
// subobjects) and passing to the quotient. The trailing infinity-free part,
// when present, is one slope-zero step.
HNType hn_filtration_point(const PrimeField& F, const ExtensionData& ext, const FqRep& rep,
                           std::uint64_t budget = kDefaultBudget);

// Visits every pair (M, f) over F_p with the module condition and all f_i
// surjective, in a fixed deterministic order. The FqRep reference is valid
// only during the callback. Budget counts candidate pairs (surjective or
// not); exceeding it throws BudgetError.
void for_each_full_point(const PrimeField& F, const ExtensionData& ext,
                         const ExtDimVector& v, std::uint64_t budget,
                         const std::function<void(const FqRep&)>& fn);

std::uint64_t count_rep_full_points(const PrimeField& F, const ExtensionData& ext,
                                    const ExtDimVector& v,
                                    std::uint64_t budget = kDefaultBudget);

// Full points partitioned by HN type; the single-step type is the
// semistable stratum.
struct StratumCensus {
    std::uint64_t total_full = 0;
    std::map<HNType, std::uint64_t> strata;

    std::uint64_t semistable_count(const ExtDimVector& v) const;
};

StratumCensus stratum_census(const PrimeField& F, const ExtensionData& ext,
                             const ExtDimVector& v, std::uint64_t budget = kDefaultBudget);

// dim Ext^2 over the extension algebra via the kernel of the structure map:
// Ext^2(M~, N~) = Ext_Q(ker f_M, N), computed as hom - Euler form over the
// hereditary base.
int ext2_dim(const PrimeField& F, const ExtensionData& ext, const FqRep& m, const FqRep& n);

// Tangent-space dimension at a point: dim Rep_d(Q) + s<t,d> + ext_Q(ker f, M).
std::int64_t tangent_dim(const PrimeField& F, const ExtensionData& ext, const FqRep& rep);

// Independent tangent computation: ambient dimension of the extended-quiver
// representation space minus the exact rank of the Jacobian of the relation
// equations at the point.
std::int64_t jacobian_tangent_dim(const PrimeField& F, const ExtensionData& ext,
                                  const FqRep& rep);

// Rank identities for a general map f: T -> M with M general of dimension d:
// dim Hom(T, M) = <t,d> + ext_Q(ker f, M) = <rank f, d> + hom_Q(ker f, M).
// Samples (M, f) pairs; pairs whose hom dimension exceeds the best-observed
// minimum or whose rank falls short of the best-observed maximum lie outside
// the general locus and are skipped. False when a retained sample fails.
bool hom_formula_check(const ExtensionData& ext, const DimVector& d, std::uint32_t p,
                       int trials, std::uint64_t seed);

// hom - ext1 + ext2 = <dim m, dim n> over the extension algebra, with ext1
// inferred; returns the inferred ext1 and whether it is >= 0.
struct EulerIdentitySample {
    int hom = 0;
    int ext2 = 0;
    std::int64_t euler = 0;
    std::int64_t ext1 = 0;  // hom + ext2 - euler
    bool consistent = false;
};

EulerIdentitySample euler_identity_sample(const PrimeField& F, const ExtensionData& ext,
                                          const FqRep& m, const FqRep& n);

// Verifies Ext_Q(T, T) = 0 by exact linear algebra over F_p.
bool rigidity_check(const ExtensionData& ext, std::uint32_t p);

}  // namespace qmod
