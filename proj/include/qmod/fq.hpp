#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "qmod/numeric.hpp"
#include "qmod/quiver.hpp"

namespace qmod {

// Prime field F_p for p < 2^31. Elements are canonical residues in uint32_t;
// products go through uint64_t so no reduction overflows.
class PrimeField {
  public:
    explicit PrimeField(std::uint32_t p);

    std::uint32_t p() const { return p_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
        return a >= b ? a - b : a + p_ - b;
    }
    std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return static_cast<std::uint32_t>((std::uint64_t(a) * b) % p_);
    }
    std::uint32_t inv(std::uint32_t a) const;  // a != 0
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
    std::uint32_t reduce(std::int64_t x) const {
        std::int64_t r = x % std::int64_t(p_);
        return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
    }

  private:
    std::uint32_t p_;
};

// Dense row-major matrix over a prime field. The field is passed to the
// operations, not stored.
struct FpMat {
    int rows = 0;
    int cols = 0;
    std::vector<std::uint32_t> a;

    FpMat() = default;
    FpMat(int r, int c) : rows(r), cols(c), a(std::size_t(r) * c, 0) {}

    std::uint32_t& at(int r, int c) { return a[std::size_t(r) * cols + c]; }
    std::uint32_t at(int r, int c) const { return a[std::size_t(r) * cols + c]; }

    static FpMat identity(int n);
    bool is_zero() const;
    friend bool operator==(const FpMat&, const FpMat&) = default;
};

FpMat fp_mul(const PrimeField& F, const FpMat& A, const FpMat& B);
FpMat fp_add(const PrimeField& F, const FpMat& A, const FpMat& B);
FpMat fp_sub(const PrimeField& F, const FpMat& A, const FpMat& B);
FpMat fp_scale(const PrimeField& F, std::uint32_t c, const FpMat& A);

int fp_rank(const PrimeField& F, FpMat A);  // destroys its copy

std::uint32_t fp_det(const PrimeField& F, FpMat A);  // square input, destroys its copy

// Reduced row echelon form; pivot columns reported when requested.
FpMat fp_rref(const PrimeField& F, FpMat A, std::vector<int>* pivots = nullptr);

// Columns form a basis of the right kernel {x : A x = 0}.
FpMat fp_kernel(const PrimeField& F, const FpMat& A);

// One solution X of A X = B, or nullopt when inconsistent.
std::optional<FpMat> fp_solve(const PrimeField& F, const FpMat& A, const FpMat& B);

FpMat fp_inverse(const PrimeField& F, const FpMat& A);  // throws on singular

FpMat fp_transpose(const FpMat& A);

FpMat fp_random(const PrimeField& F, int rows, int cols, Rng& rng);

// Reduction of an integer matrix followed by Kronecker product with I_s.
// Index layout is l-major: slot (l-1)*s + c refers to copy c of basis
// vector l, matching the column layout of the extension maps.
FpMat fp_kron_identity(const PrimeField& F, const IntMat& T, int s);

// All k-dimensional subspaces of F_p^n, each as the unique k x n matrix in
// reduced row echelon form whose rows span it. Visits in a fixed order.
void for_each_subspace(const PrimeField& F, int n, int k,
                       const std::function<void(const FpMat&)>& fn);

// Number of k-dimensional subspaces of F_p^n; throws BudgetError beyond the
// cap (used to bound subspace walks before starting them).
std::uint64_t count_subspaces(std::uint32_t p, int n, int k, std::uint64_t cap);

}  // namespace qmod
