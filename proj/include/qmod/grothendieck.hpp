#pragma once

#include <string>
#include <vector>

#include "qmod/lpoly.hpp"
#include "qmod/quiver.hpp"

namespace qmod {

// Element of the Grothendieck-ring localization used here: a rational
// function in L over Z. Canonical form: den != 0, gcd(num, den) = 1
// including integer content, and the leading coefficient of den positive;
// zero is 0/1. With that normalization structural equality coincides with
// cross-multiplied equality.
class MotiveExpr {
  public:
    MotiveExpr() : den_(1) {}
    MotiveExpr(std::int64_t c) : num_(c), den_(1) {}  // implicit for arithmetic
    MotiveExpr(LPolynomial p) : num_(std::move(p)), den_(1) {}
    MotiveExpr(LPolynomial num, LPolynomial den);

    static MotiveExpr lefschetz() { return MotiveExpr(LPolynomial::var()); }
    // L^e for any integer e; negative exponents land in the denominator
    static MotiveExpr lefschetz_pow(std::int64_t e);

    const LPolynomial& num() const { return num_; }
    const LPolynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const;
    // throws AssumptionError when the reduced denominator is not 1
    const LPolynomial& as_polynomial() const;

    // deg num - deg den; meaningful for nonzero values only
    std::int64_t dimension() const;

    friend MotiveExpr operator+(const MotiveExpr& a, const MotiveExpr& b);
    friend MotiveExpr operator-(const MotiveExpr& a, const MotiveExpr& b);
    friend MotiveExpr operator*(const MotiveExpr& a, const MotiveExpr& b);
    friend MotiveExpr operator/(const MotiveExpr& a, const MotiveExpr& b);
    MotiveExpr& operator+=(const MotiveExpr& o) { return *this = *this + o; }
    MotiveExpr& operator-=(const MotiveExpr& o) { return *this = *this - o; }
    MotiveExpr& operator*=(const MotiveExpr& o) { return *this = *this * o; }
    MotiveExpr& operator/=(const MotiveExpr& o) { return *this = *this / o; }
    MotiveExpr operator-() const;
    // cross-multiplied equality (agrees with structural equality in canonical
    // form; the cross product keeps it robust)
    friend bool operator==(const MotiveExpr& a, const MotiveExpr& b);

    MotiveExpr pow(unsigned e) const;

    // exact rational value at an integer point; the denominators occurring
    // here vanish only at 0 and roots of unity, a pole throws
    BigRational eval_at(const Int& q) const;

    // "num" when the denominator is 1, "(num)/(den)" otherwise
    std::string to_string() const;

  private:
    void normalize();
    LPolynomial num_;
    LPolynomial den_;
};

// Class of GL_n: prod_{k<n} (L^n - L^k).
MotiveExpr class_gl(int n);

// Class of the base-change group of a dimension type: GL_s x prod_i GL_{d_i}.
MotiveExpr class_group(const ExtDimVector& v);

// class_group divided by the diagonal torus factor L - 1.
MotiveExpr class_pg(const ExtDimVector& v);

// Class of the parabolic attached to an ordered block decomposition: at the
// extension vertex and at each base vertex the blocks are the step entries,
// contributing L^{sum_{k<l} n_k n_l} * prod_k [GL_{n_k}].
MotiveExpr class_parabolic(const std::vector<ExtDimVector>& steps);

// Exact integer evaluation helper: value of m at q, which must be an integer
// (throws AssumptionError otherwise).
Int eval_at_integer(const MotiveExpr& m, const Int& q);

}  // namespace qmod
