#include "qmod/fq.hpp"

#include <algorithm>

#include "qmod/errors.hpp"

namespace qmod {

namespace {

bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    if (n % 3 == 0) return n == 3;
    for (std::uint64_t f = 5; f * f <= n; f += 6) {
        if (n % f == 0 || n % (f + 2) == 0) return false;
    }
    return true;
}

}  // namespace

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
    if (p >= (1u << 31) || !is_prime_u32(p)) {
        throw SchemaError("field characteristic must be a prime below 2^31, got " +
                          std::to_string(p));
    }
}

std::uint32_t PrimeField::pow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t r = 1 % p_;
    std::uint32_t base = a % p_;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
    if (a % p_ == 0) throw AssumptionError("inverse of zero in F_" + std::to_string(p_));
    return pow(a, p_ - 2);
}

FpMat FpMat::identity(int n) {
    FpMat I(n, n);
    for (int i = 0; i < n; ++i) I.at(i, i) = 1;
    return I;
}

bool FpMat::is_zero() const {
    return std::all_of(a.begin(), a.end(), [](std::uint32_t x) { return x == 0; });
}

FpMat fp_mul(const PrimeField& F, const FpMat& A, const FpMat& B) {
    if (A.cols != B.rows) throw AssumptionError("matrix product shape mismatch");
    FpMat C(A.rows, B.cols);
    const std::uint64_t p = F.p();
    // Accumulate in uint64 and reduce lazily: with p < 2^31 each product is
    // < 2^62, so reduce whenever the sum could overflow on the next add.
    const std::uint64_t guard = ~std::uint64_t(0) - (p - 1) * (p - 1);
    for (int i = 0; i < A.rows; ++i) {
        for (int j = 0; j < B.cols; ++j) {
            std::uint64_t acc = 0;
            for (int k = 0; k < A.cols; ++k) {
                acc += std::uint64_t(A.at(i, k)) * B.at(k, j);
                if (acc >= guard) acc %= p;
            }
            C.at(i, j) = static_cast<std::uint32_t>(acc % p);
        }
    }
    return C;
}

FpMat fp_add(const PrimeField& F, const FpMat& A, const FpMat& B) {
    if (A.rows != B.rows || A.cols != B.cols) throw AssumptionError("matrix sum shape mismatch");
    FpMat C(A.rows, A.cols);
    for (std::size_t i = 0; i < C.a.size(); ++i) C.a[i] = F.add(A.a[i], B.a[i]);
    return C;
}

FpMat fp_sub(const PrimeField& F, const FpMat& A, const FpMat& B) {
    if (A.rows != B.rows || A.cols != B.cols) throw AssumptionError("matrix sum shape mismatch");
    FpMat C(A.rows, A.cols);
    for (std::size_t i = 0; i < C.a.size(); ++i) C.a[i] = F.sub(A.a[i], B.a[i]);
    return C;
}

FpMat fp_scale(const PrimeField& F, std::uint32_t c, const FpMat& A) {
    FpMat C(A.rows, A.cols);
    for (std::size_t i = 0; i < C.a.size(); ++i) C.a[i] = F.mul(c, A.a[i]);
    return C;
}

namespace {

// In-place forward elimination to row echelon form; returns pivot columns.
std::vector<int> echelon(const PrimeField& F, FpMat& A) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < A.cols && row < A.rows; ++col) {
        int sel = -1;
        for (int r = row; r < A.rows; ++r) {
            if (A.at(r, col) != 0) { sel = r; break; }
        }
        if (sel < 0) continue;
        if (sel != row) {
            for (int c = col; c < A.cols; ++c) std::swap(A.at(sel, c), A.at(row, c));
        }
        const std::uint32_t piv_inv = F.inv(A.at(row, col));
        for (int c = col; c < A.cols; ++c) A.at(row, c) = F.mul(piv_inv, A.at(row, c));
        for (int r = row + 1; r < A.rows; ++r) {
            const std::uint32_t f = A.at(r, col);
            if (f == 0) continue;
            for (int c = col; c < A.cols; ++c) {
                A.at(r, c) = F.sub(A.at(r, c), F.mul(f, A.at(row, c)));
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

int fp_rank(const PrimeField& F, FpMat A) {
    return static_cast<int>(echelon(F, A).size());
}

std::uint32_t fp_det(const PrimeField& F, FpMat A) {
    if (A.rows != A.cols) throw SchemaError("fp_det: matrix is not square");
    std::uint32_t det = 1;
    for (int col = 0; col < A.cols; ++col) {
        int sel = -1;
        for (int r = col; r < A.rows; ++r) {
            if (A.at(r, col) != 0) { sel = r; break; }
        }
        if (sel < 0) return 0;
        if (sel != col) {
            for (int c = col; c < A.cols; ++c) std::swap(A.at(sel, c), A.at(col, c));
            det = F.neg(det);
        }
        const std::uint32_t piv = A.at(col, col);
        det = F.mul(det, piv);
        const std::uint32_t piv_inv = F.inv(piv);
        for (int r = col + 1; r < A.rows; ++r) {
            const std::uint32_t f = A.at(r, col);
            if (f == 0) continue;
            const std::uint32_t scale = F.mul(f, piv_inv);
            for (int c = col; c < A.cols; ++c) {
                A.at(r, c) = F.sub(A.at(r, c), F.mul(scale, A.at(col, c)));
            }
        }
    }
    return det;
}

FpMat fp_rref(const PrimeField& F, FpMat A, std::vector<int>* pivots_out) {
    std::vector<int> pivots = echelon(F, A);
    for (int i = static_cast<int>(pivots.size()) - 1; i >= 0; --i) {
        const int col = pivots[i];
        for (int r = 0; r < i; ++r) {
            const std::uint32_t f = A.at(r, col);
            if (f == 0) continue;
            for (int c = col; c < A.cols; ++c) {
                A.at(r, c) = F.sub(A.at(r, c), F.mul(f, A.at(i, c)));
            }
        }
    }
    if (pivots_out) *pivots_out = std::move(pivots);
    return A;
}

FpMat fp_kernel(const PrimeField& F, const FpMat& A) {
    std::vector<int> pivots;
    FpMat R = fp_rref(F, A, &pivots);
    std::vector<bool> is_pivot(A.cols, false);
    for (int c : pivots) is_pivot[c] = true;
    const int nullity = A.cols - static_cast<int>(pivots.size());
    FpMat K(A.cols, nullity);
    int kcol = 0;
    for (int free_col = 0; free_col < A.cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        K.at(free_col, kcol) = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            K.at(pivots[i], kcol) = F.neg(R.at(static_cast<int>(i), free_col));
        }
        ++kcol;
    }
    return K;
}

std::optional<FpMat> fp_solve(const PrimeField& F, const FpMat& A, const FpMat& B) {
    if (A.rows != B.rows) throw AssumptionError("solve shape mismatch");
    FpMat aug(A.rows, A.cols + B.cols);
    for (int r = 0; r < A.rows; ++r) {
        for (int c = 0; c < A.cols; ++c) aug.at(r, c) = A.at(r, c);
        for (int c = 0; c < B.cols; ++c) aug.at(r, A.cols + c) = B.at(r, c);
    }
    std::vector<int> pivots;
    FpMat R = fp_rref(F, std::move(aug), &pivots);
    for (int c : pivots) {
        if (c >= A.cols) return std::nullopt;  // pivot in the RHS block
    }
    FpMat X(A.cols, B.cols);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        for (int c = 0; c < B.cols; ++c) {
            X.at(pivots[i], c) = R.at(static_cast<int>(i), A.cols + c);
        }
    }
    return X;
}

FpMat fp_inverse(const PrimeField& F, const FpMat& A) {
    if (A.rows != A.cols) throw AssumptionError("inverse of a non-square matrix");
    auto X = fp_solve(F, A, FpMat::identity(A.rows));
    if (!X) throw AssumptionError("inverse of a singular matrix");
    return *X;
}

FpMat fp_transpose(const FpMat& A) {
    FpMat T(A.cols, A.rows);
    for (int r = 0; r < A.rows; ++r) {
        for (int c = 0; c < A.cols; ++c) T.at(c, r) = A.at(r, c);
    }
    return T;
}

FpMat fp_random(const PrimeField& F, int rows, int cols, Rng& rng) {
    FpMat A(rows, cols);
    for (auto& x : A.a) x = rng.below(F.p());
    return A;
}

FpMat fp_kron_identity(const PrimeField& F, const IntMat& T, int s) {
    const int tr = static_cast<int>(T.size());
    const int tc = tr ? static_cast<int>(T[0].size()) : 0;
    FpMat K(tr * s, tc * s);
    for (int i = 0; i < tr; ++i) {
        for (int j = 0; j < tc; ++j) {
            const std::uint32_t v = F.reduce(T[i][j]);
            if (v == 0) continue;
            for (int c = 0; c < s; ++c) K.at(i * s + c, j * s + c) = v;
        }
    }
    return K;
}

void for_each_subspace(const PrimeField& F, int n, int k,
                       const std::function<void(const FpMat&)>& fn) {
    if (k < 0 || k > n) return;
    if (k == 0) {
        fn(FpMat(0, n));
        return;
    }
    // Enumerate rref matrices directly: choose pivot columns increasingly,
    // then sweep all values of the free entries (those right of their row's
    // pivot and not in any pivot column).
    std::vector<int> pivots(k);
    for (int i = 0; i < k; ++i) pivots[i] = i;
    const std::uint32_t p = F.p();
    while (true) {
        std::vector<std::pair<int, int>> free_cells;
        std::vector<bool> is_pivot(n, false);
        for (int c : pivots) is_pivot[c] = true;
        for (int r = 0; r < k; ++r) {
            for (int c = pivots[r] + 1; c < n; ++c) {
                if (!is_pivot[c]) free_cells.emplace_back(r, c);
            }
        }
        FpMat M(k, n);
        for (int r = 0; r < k; ++r) M.at(r, pivots[r]) = 1;
        // Odometer over the free cells.
        std::vector<std::uint32_t> digits(free_cells.size(), 0);
        while (true) {
            fn(M);
            std::size_t i = 0;
            for (; i < digits.size(); ++i) {
                auto [r, c] = free_cells[i];
                if (++digits[i] < p) {
                    M.at(r, c) = digits[i];
                    break;
                }
                digits[i] = 0;
                M.at(r, c) = 0;
            }
            if (i == digits.size()) break;
        }
        // Next pivot combination in lexicographic order.
        int i = k - 1;
        while (i >= 0 && pivots[i] == n - k + i) --i;
        if (i < 0) break;
        ++pivots[i];
        for (int j = i + 1; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
    }
}

std::uint64_t count_subspaces(std::uint32_t p, int n, int k, std::uint64_t cap) {
    if (k < 0 || k > n) return 0;
    // Gaussian binomial evaluated at p, in exact arithmetic.
    Int num = 1, den = 1;
    for (int i = 0; i < k; ++i) {
        Int pn = 1, pk = 1;
        for (int e = 0; e < n - i; ++e) pn *= p;
        for (int e = 0; e < i + 1; ++e) pk *= p;
        num *= pn - 1;
        den *= pk - 1;
    }
    Int count = num / den;
    if (count > Int(cap)) {
        throw BudgetError("subspace walk of " + count.str() + " subspaces exceeds cap " +
                          std::to_string(cap));
    }
    return count.convert_to<std::uint64_t>();
}

}  // namespace qmod
