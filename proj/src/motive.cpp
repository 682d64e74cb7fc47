#include "qmod/motive.hpp"

#include <algorithm>

#include "qmod/errors.hpp"
#include "qmod/oracle.hpp"

namespace qmod {

namespace {

// Exact rank of an integer matrix via rational Gaussian elimination.
int int_rank(const IntMat& m) {
    if (m.empty()) return 0;
    std::vector<std::vector<BigRational>> a;
    for (const auto& row : m) {
        std::vector<BigRational> r;
        for (std::int64_t x : row) r.emplace_back(Int(x));
        a.push_back(std::move(r));
    }
    const int rows = static_cast<int>(a.size());
    const int cols = static_cast<int>(a[0].size());
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int sel = -1;
        for (int r = rank; r < rows; ++r) {
            if (!(a[r][col] == BigRational(Int(0)))) { sel = r; break; }
        }
        if (sel < 0) continue;
        std::swap(a[sel], a[rank]);
        for (int r = rank + 1; r < rows; ++r) {
            if (a[r][col] == BigRational(Int(0))) continue;
            const BigRational factor = a[r][col] / a[rank][col];
            for (int c = col; c < cols; ++c) a[r][c] = a[r][c] - factor * a[rank][c];
        }
        ++rank;
    }
    return rank;
}

}  // namespace

int a2_hom_dim(const A2IsoClass& t, const A2IsoClass& n) {
    const int p = t.r, u = t.d1 - t.r, v = t.d2 - t.r;
    return p * n.d1 + u * (n.d1 - n.r) + v * n.d2;
}

LPolynomial a2_submodule_count(const A2IsoClass& big, const A2IsoClass& sub) {
    const int a = big.d1, b = big.d2, rho = big.r;
    const int i = sub.d1, j = sub.d2, r = sub.r;
    LPolynomial out = gauss_binomial(rho, r);
    out = out * gauss_binomial(a - rho, i - r);
    out = out * gauss_binomial(b - r, j - r);
    if (out.is_zero()) return out;
    return out.shifted(r * (a - rho - i + r));
}

RepFullMotiveSource RepFullMotiveSource::interpolated(std::vector<std::uint32_t> primes,
                                                      std::uint32_t confirm,
                                                      std::uint64_t budget) {
    RepFullMotiveSource src;
    src.kind = MotiveSourceKind::Interpolated;
    src.sample_primes = std::move(primes);
    src.confirm_prime = confirm;
    src.count_budget = budget;
    return src;
}

RepFullMotiveSource RepFullMotiveSource::user_table(std::map<ExtDimVector, MotiveExpr> table) {
    RepFullMotiveSource src;
    src.kind = MotiveSourceKind::UserTable;
    src.table = std::move(table);
    return src;
}

LPolynomial MotiveContext::epi_class(int s, const A2IsoClass& c) {
    const auto key = std::make_pair(s, c);
    auto it = epi_memo_.find(key);
    if (it != epi_memo_.end()) return it->second;
    // Every hom lands in exactly one submodule, so the epis onto c are the
    // homs minus the epis onto each proper submodule class.
    LPolynomial result = LPolynomial::term(1, std::int64_t(s) * a2_hom_dim(t_class_, c));
    for (int i = 0; i <= c.d1; ++i) {
        for (int j = 0; j <= c.d2; ++j) {
            for (int r = 0; r <= std::min(i, j); ++r) {
                const A2IsoClass sub{i, j, r};
                if (sub == c) continue;
                const LPolynomial count = a2_submodule_count(c, sub);
                if (count.is_zero()) continue;
                result -= count * epi_class(s, sub);
            }
        }
    }
    epi_memo_[key] = result;
    return result;
}

MotiveExpr MotiveContext::rep_full_symbolic(const ExtDimVector& v) {
    const ExtensionData& ext = stab_.ext();
    const Quiver& q = ext.quiver;
    if (q.arrows().size() != 1 || q.n_vertices() != 2) {
        throw UnsupportedError("the closed-form engine handles one-arrow quivers only; "
                               "supply a table or interpolation source instead");
    }
    if (!t_class_ready_) {
        const Arrow& arrow = q.arrows()[0];
        t_class_ = A2IsoClass{ext.t[arrow.source], ext.t[arrow.target],
                              int_rank(ext.matrix_for(arrow.name))};
        t_class_ready_ = true;
    }
    const Arrow& arrow = q.arrows()[0];
    const int d1 = v.d[arrow.source], d2 = v.d[arrow.target];
    LPolynomial total;
    for (int r = 0; r <= std::min(d1, d2); ++r) {
        // Orbits of dimension d are classified by the rank of the arrow map;
        // the orbit class is the class of the rank-r matrix locus.
        const LPolynomial orbit = count_matrices_by_rank(d2, d1, r);
        total += orbit * epi_class(v.s, A2IsoClass{d1, d2, r});
    }
    return MotiveExpr(std::move(total));
}

MotiveExpr MotiveContext::rep_full_interpolated(const ExtDimVector& v) {
    const ExtensionData& ext = stab_.ext();
    const std::int64_t degree = expected_dims(ext, v).dim_rep_full;
    const std::size_t need = static_cast<std::size_t>(degree) + 1;
    if (src_.sample_primes.size() < need) {
        throw UnsupportedError("interpolation needs " + std::to_string(need) +
                               " sample primes for degree " + std::to_string(degree) + ", got " +
                               std::to_string(src_.sample_primes.size()));
    }
    if (src_.confirm_prime == 0) {
        throw SchemaError("interpolation requires a held-out confirmation prime");
    }
    std::vector<Int> xs;
    std::vector<Int> ys;
    for (std::size_t k = 0; k < need; ++k) {
        const PrimeField F(src_.sample_primes[k]);
        xs.emplace_back(src_.sample_primes[k]);
        ys.emplace_back(count_rep_full_points(F, ext, v, src_.count_budget));
    }
    // Lagrange interpolation with exact rationals.
    std::vector<BigRational> acc(need, BigRational(Int(0)));
    for (std::size_t k = 0; k < need; ++k) {
        std::vector<BigRational> basis{BigRational(Int(1))};
        Int denom = 1;
        for (std::size_t j = 0; j < need; ++j) {
            if (j == k) continue;
            // multiply basis by (x - xs[j])
            std::vector<BigRational> next(basis.size() + 1, BigRational(Int(0)));
            for (std::size_t e = 0; e < basis.size(); ++e) {
                next[e + 1] = next[e + 1] + basis[e];
                next[e] = next[e] - basis[e] * BigRational(xs[j]);
            }
            basis = std::move(next);
            denom *= xs[k] - xs[j];
        }
        const BigRational scale{ys[k], denom};
        for (std::size_t e = 0; e < basis.size(); ++e) acc[e] = acc[e] + basis[e] * scale;
    }
    LPolynomial poly;
    for (std::size_t e = 0; e < acc.size(); ++e) {
        if (acc[e].num == 0) continue;
        if (!acc[e].is_integer()) {
            throw AssumptionError("interpolated count polynomial has a non-integer "
                                  "coefficient; counts are inconsistent");
        }
        poly += LPolynomial::term(acc[e].num, static_cast<std::int64_t>(e));
    }
    const PrimeField Fc(src_.confirm_prime);
    const Int observed(count_rep_full_points(Fc, ext, v, src_.count_budget));
    if (poly.eval(Int(src_.confirm_prime)) != observed) {
        throw AssumptionError("interpolated polynomial fails at the confirmation prime");
    }
    return MotiveExpr(std::move(poly));
}

MotiveExpr MotiveContext::rep_full(const ExtDimVector& v) {
    const ExtensionData& ext = stab_.ext();
    validate_dim_type(ext, v);
    auto it = full_memo_.find(v);
    if (it != full_memo_.end()) return it->second;
    MotiveExpr m;
    switch (src_.kind) {
        case MotiveSourceKind::SymbolicA2: m = rep_full_symbolic(v); break;
        case MotiveSourceKind::Interpolated: m = rep_full_interpolated(v); break;
        case MotiveSourceKind::UserTable: {
            auto entry = src_.table.find(v);
            if (entry == src_.table.end()) {
                throw UnsupportedError("no table entry for " + v.to_string());
            }
            m = entry->second;
            break;
        }
    }
    if (!m.is_zero()) {
        if (!m.is_polynomial()) {
            throw AssumptionError("class of the full locus must be a polynomial in L");
        }
        const std::int64_t expect = expected_dims(ext, v).dim_rep_full;
        if (m.dimension() != expect) {
            throw AssumptionError("full-locus class of " + v.to_string() + " has dimension " +
                                  std::to_string(m.dimension()) + ", expected " +
                                  std::to_string(expect));
        }
    }
    full_memo_[v] = m;
    return m;
}

MotiveExpr MotiveContext::stratum_term(const HNType& hn) {
    MotiveExpr prod = MotiveExpr(1);
    for (const ExtDimVector& step : hn.steps) prod *= sst(step);
    prod *= MotiveExpr::lefschetz_pow(stab_.hn_exponent(hn));
    return prod / class_parabolic(hn.steps);
}

MotiveExpr MotiveContext::stratum_class(const HNType& hn) {
    return class_group(hn.weight()) * stratum_term(hn);
}

MotiveExpr MotiveContext::sst(const ExtDimVector& v) {
    validate_dim_type(stab_.ext(), v);
    auto it = sst_memo_.find(v);
    if (it != sst_memo_.end()) return it->second;
    MotiveExpr m;
    if (stab_.is_semistable_type(v)) {
        m = rep_full(v);
        for (const HNType& hn : stab_.enumerate_hn_types(v)) m -= stratum_class(hn);
        if (m.is_zero() || !m.is_polynomial() ||
            m.dimension() != expected_dims(stab_.ext(), v).dim_rep_full) {
            throw AssumptionError("semistable class of " + v.to_string() +
                                  " is not a polynomial of the full-locus dimension");
        }
    }
    sst_memo_[v] = m;
    return m;
}

LPolynomial MotiveContext::poincare_polynomial(const ExtDimVector& v) {
    if (!stab_.is_semistable_type(v)) {
        throw AssumptionError(v.to_string() + " is not a semistable type");
    }
    if (!stab_.stable_equals_semistable(v)) {
        throw AssumptionError("stability and semistability differ for " + v.to_string() +
                              "; the Poincare formula does not apply");
    }
    const MotiveExpr quotient = sst(v) / class_pg(v);
    const LPolynomial poly = quotient.as_polynomial();
    const std::int64_t dim = expected_dims(stab_.ext(), v).dim_moduli;
    bool shape_ok = poly.degree() == dim && poly.coeff(0) == 1;
    for (const auto& [e, c] : poly.terms()) {
        if (c < 0) shape_ok = false;
    }
    if (!shape_ok) {
        throw AssumptionError("Poincare polynomial of " + v.to_string() +
                              " violates its shape constraints: " + poly.to_string());
    }
    return poly;
}

}  // namespace qmod
