#pragma once

#include <vector>

#include "qmod/fq.hpp"
#include "qmod/quiver.hpp"

namespace qmod {

// Representation of the base quiver over a prime field: one matrix per arrow
// in quiver order, shape dims(target) x dims(source).
struct QRep {
    DimVector dims;
    std::vector<FpMat> mats;
};

QRep zero_qrep(const Quiver& q, const DimVector& d);
QRep random_qrep(const PrimeField& F, const Quiver& q, const DimVector& d, Rng& rng);

// T^s as a representation of the base quiver: dimension s*t_i at vertex i,
// arrow matrices T_alpha tensor I_s in the l-major slot layout (slot
// (l-1)*s + c is copy c of T-basis vector l).
QRep t_power_rep(const PrimeField& F, const ExtensionData& ext, int s);

// Module over the extension algebra in coordinates: a base representation M
// of dimension d, a multiplicity s at the adjoined vertex, and structure
// maps f_i of shape d_i x (t_i*s) in the same l-major column layout.
struct FqRep {
    QRep base;
    int s = 0;
    std::vector<FpMat> f;

    ExtDimVector dim() const { return ExtDimVector{s, base.dims}; }

    // Columns of f_i for T-basis vector l (1-based): a d_i x s block, the
    // matrix of the arrow rho_l_(i) of the extended quiver.
    FpMat f_block(int vertex, int l) const;
};

// Module condition: M_alpha f_i = f_j (T_alpha tensor I_s) for every arrow.
// Equivalent to all relations of the extended quiver vanishing.
bool is_module(const PrimeField& F, const ExtensionData& ext, const FqRep& rep);

// Every f_i surjective (vertexwise row rank d_i).
bool is_full(const PrimeField& F, const FqRep& rep);

// Basis of Hom(M, N) over the base quiver: tuples (h_i) with h_j M_a = N_a h_i.
struct HomBasis {
    std::vector<std::vector<FpMat>> elements;  // elements[k][vertex]

    int dim() const { return static_cast<int>(elements.size()); }
};

HomBasis hom_space(const PrimeField& F, const Quiver& q, const QRep& m, const QRep& n);

// Dimension of the morphism space over the extension algebra: pairs
// (h: M -> N of base representations, h_inf: V -> W) with
// h_i f_i = g_i (I_{t_i} tensor h_inf) at every vertex.
int hom_ext_dim(const PrimeField& F, const ExtensionData& ext, const FqRep& m,
                const FqRep& n);

// ker f as a base-quiver representation: vertexwise kernels of the f_i inside
// (T^s)_i with the restricted T_alpha tensor I_s action (well defined because
// f is a module map).
QRep kernel_rep(const PrimeField& F, const ExtensionData& ext, const FqRep& rep);

// Uniform random module of dimension type v: M uniform, then f uniform in the
// solution space of the module condition for that M.
FqRep random_module(const PrimeField& F, const ExtensionData& ext, const ExtDimVector& v,
                    Rng& rng);

// Retries random_module until the result is full; throws AssumptionError
// after `trials` failures (signals a non-generic fullness assumption).
FqRep random_full_module(const PrimeField& F, const ExtensionData& ext,
                         const ExtDimVector& v, Rng& rng, int trials = 64);

}  // namespace qmod
