#include "qmod/grothendieck.hpp"

namespace qmod {

MotiveExpr::MotiveExpr(LPolynomial num, LPolynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw SchemaError("motive with zero denominator");
    normalize();
}

void MotiveExpr::normalize() {
    if (num_.is_zero()) {
        den_ = LPolynomial(1);
        return;
    }
    LPolynomial g = LPolynomial::gcd(num_, den_);
    if (!g.is_one()) {
        num_ = *num_.divide_exact(g);
        den_ = *den_.divide_exact(g);
    }
    if (den_.leading() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

MotiveExpr MotiveExpr::lefschetz_pow(std::int64_t e) {
    if (e >= 0) return MotiveExpr(LPolynomial::term(1, static_cast<int>(e)));
    return MotiveExpr(LPolynomial(1), LPolynomial::term(1, static_cast<int>(-e)));
}

bool MotiveExpr::is_polynomial() const { return den_.is_one(); }

const LPolynomial& MotiveExpr::as_polynomial() const {
    if (!is_polynomial())
        throw AssumptionError("motive is not a polynomial: " + to_string());
    return num_;
}

std::int64_t MotiveExpr::dimension() const {
    if (is_zero()) throw AssumptionError("dimension of the zero motive");
    return std::int64_t(num_.degree()) - den_.degree();
}

MotiveExpr operator+(const MotiveExpr& a, const MotiveExpr& b) {
    return MotiveExpr(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

MotiveExpr operator-(const MotiveExpr& a, const MotiveExpr& b) {
    return MotiveExpr(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

MotiveExpr operator*(const MotiveExpr& a, const MotiveExpr& b) {
    return MotiveExpr(a.num_ * b.num_, a.den_ * b.den_);
}

MotiveExpr operator/(const MotiveExpr& a, const MotiveExpr& b) {
    if (b.is_zero()) throw SchemaError("division by the zero motive");
    return MotiveExpr(a.num_ * b.den_, a.den_ * b.num_);
}

MotiveExpr MotiveExpr::operator-() const {
    MotiveExpr r = *this;
    r.num_ = -r.num_;
    return r;
}

bool operator==(const MotiveExpr& a, const MotiveExpr& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
}

MotiveExpr MotiveExpr::pow(unsigned e) const {
    MotiveExpr r(1);
    MotiveExpr base = *this;
    while (e) {
        if (e & 1u) r *= base;
        base *= base;
        e >>= 1u;
    }
    return r;
}

BigRational MotiveExpr::eval_at(const Int& q) const {
    Int d = den_.eval(q);
    if (d == 0)
        throw AssumptionError("motive has a pole at " + q.str());
    return BigRational(num_.eval(q), d);
}

std::string MotiveExpr::to_string() const {
    if (is_polynomial()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

MotiveExpr class_gl(int n) {
    if (n < 0) throw SchemaError("negative GL rank");
    LPolynomial r(1);
    for (int k = 0; k < n; ++k)
        r *= LPolynomial::term(1, n) - LPolynomial::term(1, k);
    return MotiveExpr(std::move(r));
}

MotiveExpr class_group(const ExtDimVector& v) {
    MotiveExpr r = class_gl(v.s);
    for (int di : v.d) r *= class_gl(di);
    return r;
}

MotiveExpr class_pg(const ExtDimVector& v) {
    return class_group(v) / (MotiveExpr::lefschetz() - MotiveExpr(1));
}

namespace {

MotiveExpr block_parabolic(const std::vector<int>& sizes) {
    std::int64_t e = 0;
    for (std::size_t k = 0; k < sizes.size(); ++k)
        for (std::size_t l = k + 1; l < sizes.size(); ++l)
            e += std::int64_t(sizes[k]) * sizes[l];
    MotiveExpr r = MotiveExpr::lefschetz_pow(e);
    for (int n : sizes) r *= class_gl(n);
    return r;
}

}  // namespace

MotiveExpr class_parabolic(const std::vector<ExtDimVector>& steps) {
    if (steps.empty()) throw SchemaError("parabolic of an empty block list");
    std::vector<int> sizes;
    sizes.reserve(steps.size());
    for (const auto& st : steps) sizes.push_back(st.s);
    MotiveExpr r = block_parabolic(sizes);
    std::size_t nv = steps.front().d.size();
    for (std::size_t i = 0; i < nv; ++i) {
        for (std::size_t k = 0; k < steps.size(); ++k) sizes[k] = steps[k].d[i];
        r *= block_parabolic(sizes);
    }
    return r;
}

Int eval_at_integer(const MotiveExpr& m, const Int& q) {
    BigRational r = m.eval_at(q);
    if (!r.is_integer())
        throw AssumptionError("motive value at " + q.str() + " is not an integer");
    return r.num;
}

}  // namespace qmod
