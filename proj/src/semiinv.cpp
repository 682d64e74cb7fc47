#include "qmod/semiinv.hpp"

#include <cstdlib>
#include <string>
#include <utility>

#include "qmod/errors.hpp"

namespace qmod {

namespace {

FpMat block_diag_copies(const FpMat& X, int copies) {
    FpMat out(X.rows * copies, X.cols * copies);
    for (int k = 0; k < copies; ++k) {
        for (int r = 0; r < X.rows; ++r) {
            for (int c = 0; c < X.cols; ++c) {
                out.at(k * X.rows + r, k * X.cols + c) = X.at(r, c);
            }
        }
    }
    return out;
}

FpMat random_invertible(const PrimeField& F, int n, Rng& rng) {
    for (int attempt = 0; attempt < 256; ++attempt) {
        FpMat g = fp_random(F, n, n, rng);
        if (fp_det(F, g) != 0) return g;
    }
    throw AssumptionError("no invertible matrix found in 256 draws");
}

// Exponents of nonzero elements act modulo the group order p - 1.
std::uint32_t pow_signed(const PrimeField& F, std::uint32_t a, std::int64_t e) {
    const std::int64_t m = std::int64_t(F.p()) - 1;
    const std::int64_t r = ((e % m) + m) % m;
    return F.pow(a, std::uint64_t(r));
}

FpMat resolve_name(const BlockDetSI& si, const std::string& name, const FqRep& rep) {
    auto it = si.names.find(name);
    if (it == si.names.end()) {
        throw SchemaError("block layout " + si.name + ": unknown matrix name '" + name + "'");
    }
    const MatrixRef& ref = it->second;
    if (ref.kind == MatrixRef::Kind::Arrow) return rep.base.mats[std::size_t(ref.arrow)];
    return rep.f_block(ref.vertex, ref.block);
}

FpMat eval_term(const PrimeField& F, const BlockDetSI& si, const BlockTerm& term,
                const FqRep& rep) {
    if (term.factors.empty()) {
        throw SchemaError("block layout " + si.name + ": empty product");
    }
    FpMat acc = resolve_name(si, term.factors[0], rep);
    for (std::size_t k = 1; k < term.factors.size(); ++k) {
        FpMat next = resolve_name(si, term.factors[k], rep);
        if (acc.cols != next.rows) {
            throw SchemaError("block layout " + si.name + ": factors of '" +
                              term.factors[k] + "' do not compose");
        }
        acc = fp_mul(F, acc, next);
    }
    if (term.sign < 0) acc = fp_scale(F, F.neg(1), acc);
    return acc;
}

FpMat eval_cell(const PrimeField& F, const BlockDetSI& si, const BlockCell& cell,
                const FqRep& rep) {
    FpMat acc = eval_term(F, si, cell[0], rep);
    for (std::size_t k = 1; k < cell.size(); ++k) {
        FpMat next = eval_term(F, si, cell[k], rep);
        if (next.rows != acc.rows || next.cols != acc.cols) {
            throw SchemaError("block layout " + si.name + ": cell summands disagree in shape");
        }
        acc = fp_add(F, acc, next);
    }
    return acc;
}

}  // namespace

GroupElement random_group_element(const PrimeField& F, const ExtDimVector& v, Rng& rng) {
    GroupElement g;
    g.g_inf = random_invertible(F, v.s, rng);
    g.g.reserve(v.d.size());
    for (int di : v.d) g.g.push_back(random_invertible(F, di, rng));
    return g;
}

FqRep act(const PrimeField& F, const ExtensionData& ext, const GroupElement& g,
          const FqRep& rep) {
    const Quiver& Q = ext.quiver;
    const int n = Q.n_vertices();
    const FpMat hinv = fp_inverse(F, g.g_inf);
    std::vector<FpMat> ginv;
    ginv.reserve(std::size_t(n));
    for (int i = 0; i < n; ++i) ginv.push_back(fp_inverse(F, g.g[std::size_t(i)]));

    FqRep out;
    out.s = rep.s;
    out.base.dims = rep.base.dims;
    out.base.mats.reserve(Q.arrows().size());
    for (std::size_t k = 0; k < Q.arrows().size(); ++k) {
        const Arrow& a = Q.arrows()[k];
        out.base.mats.push_back(fp_mul(
            F, g.g[std::size_t(a.target)],
            fp_mul(F, rep.base.mats[k], ginv[std::size_t(a.source)])));
    }
    out.f.reserve(std::size_t(n));
    for (int i = 0; i < n; ++i) {
        out.f.push_back(fp_mul(F, g.g[std::size_t(i)],
                               fp_mul(F, rep.f[std::size_t(i)],
                                      block_diag_copies(hinv, ext.t[std::size_t(i)]))));
    }
    return out;
}

std::uint32_t evaluate_si(const PrimeField& F, const ExtensionData& ext,
                          const BlockDetSI& si, const FqRep& rep) {
    if (!(rep.dim() == si.dim)) {
        throw SchemaError("block layout " + si.name + ": dimension type mismatch, got " +
                          rep.dim().to_string() + ", declared " + si.dim.to_string());
    }
    (void)ext;
    const std::size_t nrows = si.grid.size();
    if (nrows == 0) throw SchemaError("block layout " + si.name + ": empty grid");
    const std::size_t ncols = si.grid[0].size();
    for (const auto& row : si.grid) {
        if (row.size() != ncols) {
            throw SchemaError("block layout " + si.name + ": ragged grid");
        }
    }

    std::vector<std::vector<FpMat>> cells(nrows, std::vector<FpMat>(ncols));
    std::vector<int> row_h(nrows, -1), col_w(ncols, -1);
    for (std::size_t i = 0; i < nrows; ++i) {
        for (std::size_t j = 0; j < ncols; ++j) {
            if (si.grid[i][j].empty()) continue;
            FpMat m = eval_cell(F, si, si.grid[i][j], rep);
            if (row_h[i] < 0) row_h[i] = m.rows;
            if (col_w[j] < 0) col_w[j] = m.cols;
            if (row_h[i] != m.rows || col_w[j] != m.cols) {
                throw SchemaError("block layout " + si.name + ": inconsistent block shapes");
            }
            cells[i][j] = std::move(m);
        }
    }
    int total_r = 0, total_c = 0;
    for (std::size_t i = 0; i < nrows; ++i) {
        if (row_h[i] < 0) {
            throw SchemaError("block layout " + si.name + ": block row with no sized entry");
        }
        total_r += row_h[i];
    }
    for (std::size_t j = 0; j < ncols; ++j) {
        if (col_w[j] < 0) {
            throw SchemaError("block layout " + si.name + ": block column with no sized entry");
        }
        total_c += col_w[j];
    }
    if (total_r != total_c) {
        throw SchemaError("block layout " + si.name + ": assembled matrix is not square");
    }

    FpMat big(total_r, total_c);
    int roff = 0;
    for (std::size_t i = 0; i < nrows; ++i) {
        int coff = 0;
        for (std::size_t j = 0; j < ncols; ++j) {
            const FpMat& m = cells[i][j];
            if (m.rows > 0) {
                for (int r = 0; r < m.rows; ++r) {
                    for (int c = 0; c < m.cols; ++c) {
                        big.at(roff + r, coff + c) = m.at(r, c);
                    }
                }
            }
            coff += col_w[j];
        }
        roff += row_h[i];
    }
    const std::uint32_t d = fp_det(F, big);
    return si.sign < 0 ? F.neg(d) : d;
}

WeightFit verify_weight(const PrimeField& F, const ExtensionData& ext,
                        const BlockDetSI& si, int trials, std::uint64_t seed) {
    constexpr int kMaxWeight = 12;
    const ExtDimVector& v = si.dim;
    const int n = ext.quiver.n_vertices();
    Rng rng(Rng::mix(seed, 0x5e317));

    WeightFit out;
    out.w.assign(std::size_t(n), 0);

    // Base point where the function does not vanish.
    FqRep x;
    std::uint32_t val = 0;
    for (int attempt = 0; attempt < 64 && val == 0; ++attempt) {
        x = random_module(F, ext, v, rng);
        val = evaluate_si(F, ext, si, x);
    }
    if (val == 0) {
        out.message = "degenerate: function vanishes at every sampled point";
        return out;
    }
    const std::uint32_t val_inv = F.inv(val);

    // Scalar probes pin the exponent one vertex at a time: with
    // g = lambda * I at vertex u only, the ratio si(g.x)/si(x) equals
    // lambda^(n_u * w_u).
    auto fit_vertex = [&](int vertex_or_inf, int nu) -> bool {
        int& slot = vertex_or_inf < 0 ? out.w_inf : out.w[std::size_t(vertex_or_inf)];
        if (nu == 0) {
            slot = 0;
            return true;
        }
        std::vector<std::pair<std::uint32_t, std::uint32_t>> probes;  // (lambda, ratio)
        for (int k = 0; k < 3; ++k) {
            const std::uint32_t lambda = 1 + rng.below(F.p() - 1);
            GroupElement g;
            g.g_inf = FpMat::identity(v.s);
            for (int i = 0; i < n; ++i) g.g.push_back(FpMat::identity(v.d[std::size_t(i)]));
            FpMat& target = vertex_or_inf < 0 ? g.g_inf : g.g[std::size_t(vertex_or_inf)];
            target = fp_scale(F, lambda, target);
            const std::uint32_t ratio =
                F.mul(evaluate_si(F, ext, si, act(F, ext, g, x)), val_inv);
            if (ratio == 0) return false;
            probes.emplace_back(lambda, ratio);
        }
        bool found = false;
        int best = 0;
        for (int w = -kMaxWeight; w <= kMaxWeight; ++w) {
            bool all = true;
            for (const auto& [lambda, ratio] : probes) {
                if (pow_signed(F, lambda, std::int64_t(nu) * w) != ratio) {
                    all = false;
                    break;
                }
            }
            if (!all) continue;
            if (!found || std::abs(w) < std::abs(best) ||
                (std::abs(w) == std::abs(best) && w < best)) {
                best = w;
            }
            found = true;
        }
        if (!found) return false;
        slot = best;
        return true;
    };

    if (!fit_vertex(-1, v.s)) {
        out.message = "inconsistent samples: no exponent fits the adjoined vertex";
        return out;
    }
    for (int i = 0; i < n; ++i) {
        if (!fit_vertex(i, v.d[std::size_t(i)])) {
            out.message = "inconsistent samples: no exponent fits vertex " +
                          ext.quiver.vertex_name(i);
            return out;
        }
    }

    // Joint check on fully random pairs.
    for (int t = 0; t < trials; ++t) {
        const FqRep y = random_module(F, ext, v, rng);
        const GroupElement g = random_group_element(F, v, rng);
        std::uint32_t chi = pow_signed(F, fp_det(F, g.g_inf), out.w_inf);
        for (int i = 0; i < n; ++i) {
            chi = F.mul(chi, pow_signed(F, fp_det(F, g.g[std::size_t(i)]), out.w[std::size_t(i)]));
        }
        const std::uint32_t lhs = evaluate_si(F, ext, si, act(F, ext, g, y));
        const std::uint32_t rhs = F.mul(chi, evaluate_si(F, ext, si, y));
        if (lhs != rhs) {
            out.message = "inconsistent samples: fitted weights fail at trial " +
                          std::to_string(t);
            return out;
        }
    }
    out.ok = true;
    return out;
}

SIFamily builtin_si_family(const ExtensionData& ext, const ExtDimVector& v) {
    const Quiver& Q = ext.quiver;
    if (Q.n_vertices() != 2 || Q.arrows().size() != 1) {
        throw UnsupportedError(
            "built-in semi-invariant families need a two-vertex single-arrow quiver");
    }
    const Arrow& arr = Q.arrows()[0];
    const int src = arr.source;
    const int tgt = arr.target;
    if (ext.t[std::size_t(src)] < 3) {
        throw UnsupportedError(
            "built-in semi-invariant families need three extension copies at the source vertex");
    }
    const bool small = v.s == 2 && v.d[std::size_t(src)] == 4 && v.d[std::size_t(tgt)] == 1;
    const bool large = v.s == 3 && v.d[std::size_t(src)] == 6 && v.d[std::size_t(tgt)] == 2;
    if (!small && !large) {
        throw UnsupportedError("no built-in semi-invariant family for dimension type " +
                               v.to_string());
    }

    std::map<std::string, MatrixRef> names;
    names["A"] = MatrixRef{MatrixRef::Kind::RhoBlock, -1, src, 1};
    names["B"] = MatrixRef{MatrixRef::Kind::RhoBlock, -1, src, 2};
    names["C"] = MatrixRef{MatrixRef::Kind::RhoBlock, -1, src, 3};
    names["M"] = MatrixRef{MatrixRef::Kind::Arrow, 0, -1, 1};

    const BlockCell cA{{1, {"A"}}};
    const BlockCell cB{{1, {"B"}}};
    const BlockCell cC{{1, {"C"}}};
    const BlockCell cAB{{1, {"A"}}, {1, {"B"}}};
    const BlockCell cAC{{1, {"A"}}, {1, {"C"}}};
    const BlockCell cBC{{1, {"B"}}, {1, {"C"}}};
    const BlockCell cMA{{1, {"M", "A"}}};
    const BlockCell cNMA{{-1, {"M", "A"}}};
    const BlockCell cZ{};

    auto make = [&](std::string name, int sign,
                    std::vector<std::vector<BlockCell>> grid) {
        BlockDetSI si;
        si.name = std::move(name);
        si.dim = v;
        si.sign = sign;
        si.names = names;
        si.grid = std::move(grid);
        return si;
    };

    SIFamily fam;
    fam.dim = v;
    if (small) {
        fam.h.push_back(make("hbar0", -1,
                             {{cA, cB, cC}, {cZ, cMA, cZ}, {cZ, cZ, cMA}}));
        fam.h.push_back(make("hbar1", 1, {{cA, cB}}));
        fam.h.push_back(make("hbar2", 1, {{cA, cC}}));
        fam.h.push_back(make("hbar3", 1, {{cAC, cB}}));
        fam.h.push_back(make("hbar4", 1, {{cA, cBC}}));
        fam.h.push_back(make("hbar5", 1, {{cAC, cBC}}));
    } else {
        fam.h.push_back(make("hbar0", 1,
                             {{cMA, cZ, cZ, cZ, cNMA, cZ},
                              {cZ, cMA, cZ, cZ, cZ, cNMA},
                              {cZ, cZ, cMA, cZ, cZ, cNMA},
                              {cA, cZ, cC, cZ, cB, cZ},
                              {cZ, cB, cZ, cA, cZ, cC}}));
        fam.h.push_back(make("hbar1", 1, {{cA, cB}}));
        fam.h.push_back(make("hbar2", 1, {{cA, cC}}));
        fam.h.push_back(make("hbar3", 1, {{cAC, cB}}));
        fam.h.push_back(make("hbar4", 1, {{cAB, cC}}));
        fam.h.push_back(make("hbar5", 1, {{cA, cBC}}));
        fam.h.push_back(make("hbar6", 1, {{cAB, cBC}}));
        fam.h.push_back(make("hbar7", 1, {{cAC, cBC}}));
    }
    return fam;
}

ProjectivePoint quotient_coords(const PrimeField& F, const ExtensionData& ext,
                                const SIFamily& family, const FqRep& rep) {
    if (family.h.size() < 2) {
        throw SchemaError("quotient coordinates need at least two functions");
    }
    const std::uint32_t h0 = evaluate_si(F, ext, family.h[0], rep);
    ProjectivePoint out;
    out.coords.resize(family.h.size() - 1, 0);
    for (std::size_t i = 1; i < family.h.size(); ++i) {
        out.coords[i - 1] = F.mul(h0, evaluate_si(F, ext, family.h[i], rep));
    }
    for (std::size_t i = 0; i < out.coords.size(); ++i) {
        if (out.coords[i] == 0) continue;
        const std::uint32_t scale = F.inv(out.coords[i]);
        for (std::size_t k = i; k < out.coords.size(); ++k) {
            out.coords[k] = F.mul(scale, out.coords[k]);
        }
        out.defined = true;
        break;
    }
    return out;
}

}  // namespace qmod
