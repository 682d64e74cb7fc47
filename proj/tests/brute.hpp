#pragma once

#include <cstdint>
#include <functional>
#include <map>

#include "qmod/fq.hpp"
#include "qmod/fqrep.hpp"
#include "qmod/motive.hpp"
#include "qmod/quiver.hpp"

// Exhaustive finite-field oracles, written as directly as possible so they
// share no code path with the library functions they cross-check. All of
// them enumerate complete coordinate boxes and are only usable for tiny
// inputs; callers keep p^entries small.
namespace qmod::brute {

// The two-vertex one-arrow extension used as the standard example across the
// suites: Q = 1 -> 2, t = (3,1), T the coordinate projection (1,0,0).
ExtensionData running_extension();

// |GL_n(F_p)| by the product formula.
std::uint64_t gl_order(std::uint32_t p, int n);

// Counts of rows x cols matrices over F_p grouped by rank, enumerating the
// whole box.
std::map<int, std::uint64_t> matrix_rank_census(std::uint32_t p, int rows, int cols);

// Number of k-dimensional subspaces of F_p^n: full-rank k x n matrices
// counted by enumeration, divided by |GL_k|.
std::uint64_t subspace_count(std::uint32_t p, int n, int k);

// Subrepresentations of (F^d1 --M--> F^d2) grouped by iso class, found by
// testing every pair of subspaces for M U1 <= U2.
std::map<A2IsoClass, std::uint64_t> submodule_census(const PrimeField& F, const FpMat& M);

// Surjective base-quiver homomorphisms T^s -> N, counted by enumerating the
// whole hom space and testing vertexwise surjectivity.
std::uint64_t epi_count(const PrimeField& F, const ExtensionData& ext, int s,
                        const QRep& n);

// Visits every coordinate tuple (M, f) of dimension type v, with no module
// or fullness filtering; the callback decides what to keep.
void for_each_rep_point(const PrimeField& F, const ExtensionData& ext,
                        const ExtDimVector& v, const std::function<void(const FqRep&)>& fn);

// Full module points counted through for_each_rep_point; an independent
// derivation of the counts produced by the library enumerator, which walks
// M first and then solves for f.
std::uint64_t full_point_count(const PrimeField& F, const ExtensionData& ext,
                               const ExtDimVector& v);

}  // namespace qmod::brute
