#pragma once

#include <map>
#include <vector>

#include "qmod/grothendieck.hpp"
#include "qmod/stability.hpp"

namespace qmod {

// Iso class of a representation of a one-arrow quiver: dimensions at the
// arrow's source and target plus the rank of the arrow map.
struct A2IsoClass {
    int d1 = 0;
    int d2 = 0;
    int r = 0;

    auto operator<=>(const A2IsoClass&) const = default;
};

// dim Hom(T, N) over the one-arrow quiver from iso invariants.
int a2_hom_dim(const A2IsoClass& t, const A2IsoClass& n);

// Number of submodules of class `sub` inside a module of class `big`, as a
// polynomial in L (a product of Gaussian binomials and an L-power).
LPolynomial a2_submodule_count(const A2IsoClass& big, const A2IsoClass& sub);

// Where the class of the locus of surjective structure maps comes from:
// the closed-form engine for one-arrow base quivers, exact interpolation
// through finite-field counts, or a user-supplied table.
enum class MotiveSourceKind { SymbolicA2, Interpolated, UserTable };

struct RepFullMotiveSource {
    MotiveSourceKind kind = MotiveSourceKind::SymbolicA2;

    // Interpolated: counting primes (at least degree bound + 1 are used, in
    // the order given) plus one held-out confirmation prime.
    std::vector<std::uint32_t> sample_primes;
    std::uint32_t confirm_prime = 0;
    std::uint64_t count_budget = 100'000'000;

    // UserTable
    std::map<ExtDimVector, MotiveExpr> table;

    static RepFullMotiveSource symbolic() { return {}; }
    static RepFullMotiveSource interpolated(std::vector<std::uint32_t> primes,
                                            std::uint32_t confirm,
                                            std::uint64_t budget = 100'000'000);
    static RepFullMotiveSource user_table(std::map<ExtDimVector, MotiveExpr> table);
};

// Memoized motive computations for one fixed extension (via the stability
// context, which pins the extension and the gamma oracle).
class MotiveContext {
  public:
    MotiveContext(StabilityContext& stab, RepFullMotiveSource src)
        : stab_(stab), src_(std::move(src)) {}

    StabilityContext& stability() { return stab_; }

    // Class of the locus of (M, f) with f vertexwise surjective. Zero when
    // the locus is empty; otherwise a polynomial of degree dim_rep_full.
    MotiveExpr rep_full(const ExtDimVector& v);

    // Class of the semistable locus via the stratification by HN type:
    // rep_full minus the classes of the proper strata. Zero for
    // non-semistable types.
    MotiveExpr sst(const ExtDimVector& v);

    // Stratum class divided by the group class: L^exponent times the product
    // of the step classes over the parabolic class.
    MotiveExpr stratum_term(const HNType& hn);

    // Absolute class of the HN stratum: [G_weight] times stratum_term.
    MotiveExpr stratum_class(const HNType& hn);

    // sst / [PG]; must reduce to a polynomial with nonnegative coefficients,
    // constant term 1 and degree dim_moduli. Requires semistability and
    // stable == semistable.
    LPolynomial poincare_polynomial(const ExtDimVector& v);

  private:
    MotiveExpr rep_full_symbolic(const ExtDimVector& v);
    MotiveExpr rep_full_interpolated(const ExtDimVector& v);
    LPolynomial epi_class(int s, const A2IsoClass& c);

    StabilityContext& stab_;
    RepFullMotiveSource src_;
    std::map<ExtDimVector, MotiveExpr> full_memo_;
    std::map<ExtDimVector, MotiveExpr> sst_memo_;
    std::map<std::pair<int, A2IsoClass>, LPolynomial> epi_memo_;
    bool t_class_ready_ = false;
    A2IsoClass t_class_;
};

}  // namespace qmod
