#include "qmod/lpoly.hpp"

#include <sstream>
#include <vector>

namespace qmod {

LPolynomial::LPolynomial(std::int64_t c) {
    if (c != 0) c_[0] = c;
}

LPolynomial::LPolynomial(Int c) {
    if (c != 0) c_[0] = std::move(c);
}

LPolynomial LPolynomial::var() { return term(1, 1); }

LPolynomial LPolynomial::term(Int coef, int exp) {
    if (exp < 0) throw SchemaError("polynomial exponent must be nonnegative");
    LPolynomial p;
    if (coef != 0) p.c_[exp] = std::move(coef);
    return p;
}

Int LPolynomial::coeff(int exp) const {
    auto it = c_.find(exp);
    return it == c_.end() ? Int(0) : it->second;
}

Int LPolynomial::leading() const {
    return c_.empty() ? Int(0) : c_.rbegin()->second;
}

Int LPolynomial::content() const {
    Int g = 0;
    for (const auto& [e, c] : c_) g = boost::multiprecision::gcd(g, c < 0 ? Int(-c) : c);
    return g;
}

bool LPolynomial::is_one() const {
    return c_.size() == 1 && c_.begin()->first == 0 && c_.begin()->second == 1;
}

void LPolynomial::trim(int exp) {
    auto it = c_.find(exp);
    if (it != c_.end() && it->second == 0) c_.erase(it);
}

LPolynomial& LPolynomial::operator+=(const LPolynomial& o) {
    for (const auto& [e, c] : o.c_) {
        c_[e] += c;
        trim(e);
    }
    return *this;
}

LPolynomial& LPolynomial::operator-=(const LPolynomial& o) {
    for (const auto& [e, c] : o.c_) {
        c_[e] -= c;
        trim(e);
    }
    return *this;
}

LPolynomial operator*(const LPolynomial& a, const LPolynomial& b) {
    LPolynomial r;
    for (const auto& [ea, ca] : a.c_)
        for (const auto& [eb, cb] : b.c_) {
            r.c_[ea + eb] += ca * cb;
        }
    for (auto it = r.c_.begin(); it != r.c_.end();)
        it = (it->second == 0) ? r.c_.erase(it) : std::next(it);
    return r;
}

LPolynomial LPolynomial::operator-() const {
    LPolynomial r;
    for (const auto& [e, c] : c_) r.c_[e] = -c;
    return r;
}

LPolynomial LPolynomial::pow(unsigned e) const {
    LPolynomial r(1);
    LPolynomial base = *this;
    while (e) {
        if (e & 1u) r *= base;
        base *= base;
        e >>= 1u;
    }
    return r;
}

LPolynomial LPolynomial::shifted(int k) const {
    if (k < 0) throw SchemaError("negative polynomial shift");
    LPolynomial r;
    for (const auto& [e, c] : c_) r.c_[e + k] = c;
    return r;
}

std::optional<LPolynomial> LPolynomial::divide_exact(const LPolynomial& o) const {
    if (o.is_zero()) throw SchemaError("polynomial division by zero");
    LPolynomial rem = *this;
    LPolynomial quot;
    const Int& lead = o.leading();
    int odeg = o.degree();
    while (!rem.is_zero() && rem.degree() >= odeg) {
        Int lc = rem.leading();
        if (lc % lead != 0) return std::nullopt;
        LPolynomial t = term(lc / lead, rem.degree() - odeg);
        quot += t;
        rem -= t * o;
    }
    if (!rem.is_zero()) return std::nullopt;
    return quot;
}

Int LPolynomial::eval(const Int& x) const {
    // Horner over the dense range; sparse gaps advanced by powers
    Int r = 0;
    int prev = -1;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        if (prev < 0) {
            r = it->second;
        } else {
            Int p = 1;
            for (int k = 0; k < prev - it->first; ++k) p *= x;
            r = r * p + it->second;
        }
        prev = it->first;
    }
    if (prev > 0) {
        Int p = 1;
        for (int k = 0; k < prev; ++k) p *= x;
        r *= p;
    }
    return r;
}

namespace {

// primitive part; caller handles the zero polynomial
LPolynomial primitive(const LPolynomial& p) {
    Int c = p.content();
    if (c == 1) return p;
    return *p.divide_exact(LPolynomial(c));
}

// pseudo-remainder of a by b (b nonzero), as used by the primitive PRS
LPolynomial pseudo_rem(LPolynomial a, const LPolynomial& b) {
    int db = b.degree();
    const Int& lb = b.leading();
    while (!a.is_zero() && a.degree() >= db) {
        int shift = a.degree() - db;
        Int la = a.leading();
        LPolynomial scaled;
        for (const auto& [e, c] : a.terms()) scaled += LPolynomial::term(c * lb, e);
        a = scaled - LPolynomial::term(la, shift) * b;
    }
    return a;
}

}  // namespace

LPolynomial LPolynomial::gcd(LPolynomial a, LPolynomial b) {
    if (a.is_zero() && b.is_zero()) return LPolynomial();
    if (a.is_zero() || b.is_zero()) {
        LPolynomial g = a.is_zero() ? b : a;
        return g.leading() < 0 ? -g : g;
    }
    Int cg = boost::multiprecision::gcd(a.content(), b.content());
    LPolynomial x = primitive(a);
    LPolynomial y = primitive(b);
    if (x.degree() < y.degree()) std::swap(x, y);
    while (!y.is_zero()) {
        LPolynomial r = pseudo_rem(x, y);
        x = std::move(y);
        y = r.is_zero() ? LPolynomial() : primitive(r);
    }
    LPolynomial g = x * LPolynomial(cg);
    return g.leading() < 0 ? -g : g;
}

std::string LPolynomial::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        Int c = it->second;
        bool neg = c < 0;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        Int mag = neg ? Int(-c) : c;
        int e = it->first;
        if (e == 0) {
            os << mag.str();
        } else {
            if (mag != 1) os << mag.str() << "*";
            os << "L";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

LPolynomial gauss_binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return LPolynomial();
    k = std::min(k, n - k);
    // Pascal recurrence [m j] = [m-1 j-1] + L^j [m-1 j], exact in Z[L];
    // entries beyond the current m stay zero so the update needs no cases
    std::vector<LPolynomial> row(static_cast<std::size_t>(k) + 1);
    row[0] = LPolynomial(1);
    for (int m = 1; m <= n; ++m)
        for (int j = std::min(m, k); j >= 1; --j)
            row[j] = row[j - 1] + row[j].shifted(j);
    return row[k];
}

LPolynomial count_matrices_by_rank(int rows, int cols, int r) {
    if (r < 0 || r > std::min(rows, cols)) return LPolynomial();
    LPolynomial res = gauss_binomial(cols, r);
    for (int i = 0; i < r; ++i)
        res *= LPolynomial::term(1, rows) - LPolynomial::term(1, i);
    return res;
}

}  // namespace qmod
