#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qmod/fq.hpp"
#include "qmod/fqrep.hpp"
#include "qmod/quiver.hpp"

namespace qmod {

// Base change (g_inf, (g_i)) acting on module coordinates: arrow matrices by
// M_a -> g_j M_a g_i^{-1}, structure maps by f_i -> g_i f_i (I_{t_i} (x) g_inf^{-1}).
// The action preserves the module condition and fullness.
struct GroupElement {
    FpMat g_inf;
    std::vector<FpMat> g;  // one invertible d_i x d_i matrix per base vertex
};

GroupElement random_group_element(const PrimeField& F, const ExtDimVector& v, Rng& rng);

FqRep act(const PrimeField& F, const ExtensionData& ext, const GroupElement& g,
          const FqRep& rep);

// Where a matrix name used in a block layout points: either an arrow matrix
// of the base representation, or one d_i x s block of a structure map f_i
// (copy index l is 1-based, matching FqRep::f_block).
struct MatrixRef {
    enum class Kind { Arrow, RhoBlock };
    Kind kind = Kind::Arrow;
    int arrow = -1;   // arrow index when kind == Arrow
    int vertex = -1;  // base vertex when kind == RhoBlock
    int block = 1;    // 1-based copy index when kind == RhoBlock
};

// One summand of a grid cell: sign times a left-to-right product of names.
struct BlockTerm {
    int sign = 1;
    std::vector<std::string> factors;
};

// A cell is a sum of terms; an empty cell is the zero block of the shape
// inferred from its block row and column.
using BlockCell = std::vector<BlockTerm>;

// A determinantal function on module coordinates: evaluate every cell,
// assemble the grid into one square matrix, and return sign * det. Block
// row heights and column widths are inferred from nonempty cells and must
// be consistent; a fully empty row or column cannot be sized and is
// rejected.
struct BlockDetSI {
    std::string name;
    ExtDimVector dim;  // declared dimension type
    int sign = 1;
    std::map<std::string, MatrixRef> names;
    std::vector<std::vector<BlockCell>> grid;
};

std::uint32_t evaluate_si(const PrimeField& F, const ExtensionData& ext,
                          const BlockDetSI& si, const FqRep& rep);

// Character exponents fitted from samples:
//   si(g.x) = det(g_inf)^w_inf * prod_i det(g_i)^{w[i]} * si(x).
// Exponents are pinned per vertex by scalar probes g = (1,..,lambda*I,..,1),
// then the joint identity is checked on fully random (g, x) pairs. Fitting
// fails when the function vanishes on every sample (degenerate, nothing to
// fit) or when some sample violates the fitted identity.
struct WeightFit {
    bool ok = false;
    int w_inf = 0;
    std::vector<int> w;   // one exponent per base vertex
    std::string message;  // reason when !ok
};

WeightFit verify_weight(const PrimeField& F, const ExtensionData& ext,
                        const BlockDetSI& si, int trials, std::uint64_t seed);

// A tuple of determinantal functions h_0..h_k whose quotient coordinates
// are the products (h_0 h_1 : ... : h_0 h_k).
struct SIFamily {
    ExtDimVector dim;
    std::vector<BlockDetSI> h;
};

// The built-in families on the two-vertex single-arrow example with three
// extension copies at the source vertex: dimension types (2|4,1) and
// (3|6,2) in (s | d_source, d_target) order. Throws UnsupportedError for
// any other input.
SIFamily builtin_si_family(const ExtensionData& ext, const ExtDimVector& v);

// A point of projective space over F_p, normalized so the first nonzero
// coordinate is 1; defined == false when every coordinate vanishes.
struct ProjectivePoint {
    bool defined = false;
    std::vector<std::uint32_t> coords;

    bool operator==(const ProjectivePoint&) const = default;
    auto operator<=>(const ProjectivePoint&) const = default;
};

// The products (h_0 h_1 : ... : h_0 h_k) at rep, normalized. Meaningful on
// stable points (callers check stability); a vanishing tuple there comes
// back with defined == false rather than as an error.
ProjectivePoint quotient_coords(const PrimeField& F, const ExtensionData& ext,
                                const SIFamily& family, const FqRep& rep);

}  // namespace qmod
