#pragma once

#include <map>
#include <optional>
#include <string>

#include "qmod/numeric.hpp"

namespace qmod {

// Univariate polynomial in the Lefschetz symbol L with arbitrary-precision
// integer coefficients. Stored sparsely; zero coefficients never appear, so
// structural equality is canonical equality.
class LPolynomial {
  public:
    LPolynomial() = default;
    LPolynomial(std::int64_t c);  // implicit: constants participate in arithmetic
    explicit LPolynomial(Int c);

    static LPolynomial var();                      // L
    static LPolynomial term(Int coef, int exp);    // coef * L^exp, exp >= 0

    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial is -1
    int degree() const { return c_.empty() ? -1 : c_.rbegin()->first; }
    Int coeff(int exp) const;
    Int leading() const;  // 0 for the zero polynomial
    // gcd of all coefficients, nonnegative; 0 for the zero polynomial
    Int content() const;
    bool is_one() const;

    const std::map<int, Int>& terms() const { return c_; }

    LPolynomial& operator+=(const LPolynomial& o);
    LPolynomial& operator-=(const LPolynomial& o);
    friend LPolynomial operator+(LPolynomial a, const LPolynomial& b) { return a += b; }
    friend LPolynomial operator-(LPolynomial a, const LPolynomial& b) { return a -= b; }
    friend LPolynomial operator*(const LPolynomial& a, const LPolynomial& b);
    LPolynomial& operator*=(const LPolynomial& o) { return *this = *this * o; }
    LPolynomial operator-() const;
    friend bool operator==(const LPolynomial& a, const LPolynomial& b) {
        return a.c_ == b.c_;
    }

    LPolynomial pow(unsigned e) const;
    LPolynomial shifted(int k) const;  // multiply by L^k, k >= 0

    // quotient if o divides exactly over Z[L], nullopt otherwise
    std::optional<LPolynomial> divide_exact(const LPolynomial& o) const;

    Int eval(const Int& x) const;

    // nonnegative-content primitive gcd, normalized with positive leading
    // coefficient; gcd(0, b) = +-b
    static LPolynomial gcd(LPolynomial a, LPolynomial b);

    // "2*L^3 - L + 1" style: descending exponents, unit coefficients omitted,
    // zero rendered "0"
    std::string to_string() const;

  private:
    void trim(int exp);  // drop the entry at exp if zero
    std::map<int, Int> c_;
};

// Gaussian binomial coefficient as a polynomial in L.
LPolynomial gauss_binomial(int n, int k);

// Number of rows x cols matrices of rank r over a field with L elements,
// as a polynomial in L.
LPolynomial count_matrices_by_rank(int rows, int cols, int r);

}  // namespace qmod
