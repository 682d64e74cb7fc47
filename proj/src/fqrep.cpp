#include "qmod/fqrep.hpp"

#include <numeric>

#include "qmod/errors.hpp"

namespace qmod {

namespace {

// Dense linear-system builder over F_p: variables are indexed blocks of
// matrix entries, rows are accumulated one equation at a time.
class SystemBuilder {
  public:
    explicit SystemBuilder(const PrimeField& F) : F_(F) {}

    // Registers a rows x cols matrix of unknowns; returns its block id.
    int add_block(int rows, int cols) {
        offsets_.push_back(nvars_);
        shapes_.emplace_back(rows, cols);
        nvars_ += rows * cols;
        return static_cast<int>(offsets_.size()) - 1;
    }

    int var(int block, int r, int c) const {
        return offsets_[block] + r * shapes_[block].second + c;
    }

    void begin_row() { rows_.emplace_back(nvars_, 0); }

    void add_coef(int block, int r, int c, std::uint32_t coef) {
        auto& row = rows_.back();
        const int v = var(block, r, c);
        row[v] = F_.add(row[v], coef);
    }

    // Kernel of the assembled system; each column is one solution, unpacked
    // by the caller via var().
    FpMat solve_kernel() const {
        FpMat A(static_cast<int>(rows_.size()), nvars_);
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            for (int j = 0; j < nvars_; ++j) A.at(static_cast<int>(i), j) = rows_[i][j];
        }
        return fp_kernel(F_, A);
    }

    int nvars() const { return nvars_; }

    FpMat unpack(const FpMat& kernel, int column, int block) const {
        auto [r, c] = shapes_[block];
        FpMat M(r, c);
        for (int i = 0; i < r; ++i) {
            for (int j = 0; j < c; ++j) M.at(i, j) = kernel.at(var(block, i, j), column);
        }
        return M;
    }

  private:
    const PrimeField& F_;
    int nvars_ = 0;
    std::vector<int> offsets_;
    std::vector<std::pair<int, int>> shapes_;
    std::vector<std::vector<std::uint32_t>> rows_;
};

}  // namespace

QRep zero_qrep(const Quiver& q, const DimVector& d) {
    QRep rep;
    rep.dims = d;
    for (const Arrow& a : q.arrows()) rep.mats.emplace_back(d[a.target], d[a.source]);
    return rep;
}

QRep random_qrep(const PrimeField& F, const Quiver& q, const DimVector& d, Rng& rng) {
    QRep rep;
    rep.dims = d;
    for (const Arrow& a : q.arrows()) {
        rep.mats.push_back(fp_random(F, d[a.target], d[a.source], rng));
    }
    return rep;
}

QRep t_power_rep(const PrimeField& F, const ExtensionData& ext, int s) {
    if (!ext.has_matrices()) throw AssumptionError("extension matrices required for T^s");
    QRep rep;
    rep.dims.resize(ext.t.size());
    for (std::size_t i = 0; i < ext.t.size(); ++i) rep.dims[i] = ext.t[i] * s;
    for (const Arrow& a : ext.quiver.arrows()) {
        rep.mats.push_back(fp_kron_identity(F, ext.matrix_for(a.name), s));
    }
    return rep;
}

FpMat FqRep::f_block(int vertex, int l) const {
    const FpMat& fi = f[vertex];
    FpMat B(fi.rows, s);
    for (int r = 0; r < fi.rows; ++r) {
        for (int c = 0; c < s; ++c) B.at(r, c) = fi.at(r, (l - 1) * s + c);
    }
    return B;
}

bool is_module(const PrimeField& F, const ExtensionData& ext, const FqRep& rep) {
    const Quiver& q = ext.quiver;
    for (std::size_t a = 0; a < q.arrows().size(); ++a) {
        const Arrow& arrow = q.arrows()[a];
        const FpMat lhs = fp_mul(F, rep.base.mats[a], rep.f[arrow.source]);
        const FpMat rhs =
            fp_mul(F, rep.f[arrow.target], fp_kron_identity(F, ext.matrix_for(arrow.name), rep.s));
        if (!(lhs == rhs)) return false;
    }
    return true;
}

bool is_full(const PrimeField& F, const FqRep& rep) {
    for (std::size_t i = 0; i < rep.f.size(); ++i) {
        if (fp_rank(F, rep.f[i]) < rep.base.dims[i]) return false;
    }
    return true;
}

HomBasis hom_space(const PrimeField& F, const Quiver& q, const QRep& m, const QRep& n) {
    SystemBuilder sys(F);
    std::vector<int> blocks;
    for (int i = 0; i < q.n_vertices(); ++i) blocks.push_back(sys.add_block(n.dims[i], m.dims[i]));
    for (std::size_t a = 0; a < q.arrows().size(); ++a) {
        const Arrow& arrow = q.arrows()[a];
        const int i = arrow.source, j = arrow.target;
        // (h_j M_a - N_a h_i)[r, c] = 0
        for (int r = 0; r < n.dims[j]; ++r) {
            for (int c = 0; c < m.dims[i]; ++c) {
                sys.begin_row();
                for (int k = 0; k < m.dims[j]; ++k) {
                    sys.add_coef(blocks[j], r, k, m.mats[a].at(k, c));
                }
                for (int k = 0; k < n.dims[i]; ++k) {
                    sys.add_coef(blocks[i], k, c, F.neg(n.mats[a].at(r, k)));
                }
            }
        }
    }
    const FpMat ker = sys.solve_kernel();
    HomBasis basis;
    for (int col = 0; col < ker.cols; ++col) {
        std::vector<FpMat> elem;
        for (int i = 0; i < q.n_vertices(); ++i) elem.push_back(sys.unpack(ker, col, blocks[i]));
        basis.elements.push_back(std::move(elem));
    }
    return basis;
}

int hom_ext_dim(const PrimeField& F, const ExtensionData& ext, const FqRep& m,
                const FqRep& n) {
    const Quiver& q = ext.quiver;
    SystemBuilder sys(F);
    std::vector<int> blocks;
    for (int i = 0; i < q.n_vertices(); ++i) {
        blocks.push_back(sys.add_block(n.base.dims[i], m.base.dims[i]));
    }
    const int vblock = sys.add_block(n.s, m.s);
    for (std::size_t a = 0; a < q.arrows().size(); ++a) {
        const Arrow& arrow = q.arrows()[a];
        const int i = arrow.source, j = arrow.target;
        for (int r = 0; r < n.base.dims[j]; ++r) {
            for (int c = 0; c < m.base.dims[i]; ++c) {
                sys.begin_row();
                for (int k = 0; k < m.base.dims[j]; ++k) {
                    sys.add_coef(blocks[j], r, k, m.base.mats[a].at(k, c));
                }
                for (int k = 0; k < n.base.dims[i]; ++k) {
                    sys.add_coef(blocks[i], k, c, F.neg(n.base.mats[a].at(r, k)));
                }
            }
        }
    }
    // Compatibility with the structure maps: h_i f_i = g_i (I_t tensor h_inf),
    // entrywise over (r < n_i, column (l-1)*m.s + c of the source layout).
    for (int i = 0; i < q.n_vertices(); ++i) {
        const int ti = ext.t[i];
        for (int r = 0; r < n.base.dims[i]; ++r) {
            for (int l = 0; l < ti; ++l) {
                for (int c = 0; c < m.s; ++c) {
                    sys.begin_row();
                    for (int k = 0; k < m.base.dims[i]; ++k) {
                        sys.add_coef(blocks[i], r, k, m.f[i].at(k, l * m.s + c));
                    }
                    // (g_i (I tensor h_inf))[r, (l,c)] = sum_w g_i[r, (l,w)] h_inf[w, c]
                    for (int w = 0; w < n.s; ++w) {
                        sys.add_coef(vblock, w, c, F.neg(n.f[i].at(r, l * n.s + w)));
                    }
                }
            }
        }
    }
    return sys.solve_kernel().cols;
}

QRep kernel_rep(const PrimeField& F, const ExtensionData& ext, const FqRep& rep) {
    const Quiver& q = ext.quiver;
    std::vector<FpMat> bases;  // columns span ker f_i inside (T^s)_i
    QRep ker;
    for (int i = 0; i < q.n_vertices(); ++i) {
        bases.push_back(fp_kernel(F, rep.f[i]));
        ker.dims.push_back(bases.back().cols);
    }
    for (std::size_t a = 0; a < q.arrows().size(); ++a) {
        const Arrow& arrow = q.arrows()[a];
        const FpMat action = fp_kron_identity(F, ext.matrix_for(arrow.name), rep.s);
        const FpMat image = fp_mul(F, action, bases[arrow.source]);
        auto coeffs = fp_solve(F, bases[arrow.target], image);
        if (!coeffs) {
            throw AssumptionError("kernel of the structure map is not a subrepresentation; "
                                  "module condition violated");
        }
        ker.mats.push_back(std::move(*coeffs));
    }
    return ker;
}

FqRep random_module(const PrimeField& F, const ExtensionData& ext, const ExtDimVector& v,
                    Rng& rng) {
    validate_dim_type(ext, v);
    FqRep rep;
    rep.base = random_qrep(F, ext.quiver, v.d, rng);
    rep.s = v.s;
    const Quiver& q = ext.quiver;
    SystemBuilder sys(F);
    std::vector<int> blocks;
    for (int i = 0; i < q.n_vertices(); ++i) {
        blocks.push_back(sys.add_block(v.d[i], ext.t[i] * v.s));
    }
    for (std::size_t a = 0; a < q.arrows().size(); ++a) {
        const Arrow& arrow = q.arrows()[a];
        const int i = arrow.source, j = arrow.target;
        const FpMat action = fp_kron_identity(F, ext.matrix_for(arrow.name), v.s);
        // (M_a f_i - f_j action)[r, c] = 0
        for (int r = 0; r < v.d[j]; ++r) {
            for (int c = 0; c < ext.t[i] * v.s; ++c) {
                sys.begin_row();
                for (int k = 0; k < v.d[i]; ++k) {
                    sys.add_coef(blocks[i], k, c, rep.base.mats[a].at(r, k));
                }
                for (int k = 0; k < ext.t[j] * v.s; ++k) {
                    sys.add_coef(blocks[j], r, k, F.neg(action.at(k, c)));
                }
            }
        }
    }
    const FpMat ker = sys.solve_kernel();
    std::vector<std::uint32_t> coeffs(ker.cols);
    for (auto& c : coeffs) c = rng.below(F.p());
    FpMat flat(sys.nvars(), 1);
    for (int r = 0; r < ker.rows; ++r) {
        std::uint64_t acc = 0;
        for (int c = 0; c < ker.cols; ++c) acc += std::uint64_t(ker.at(r, c)) * coeffs[c];
        flat.at(r, 0) = static_cast<std::uint32_t>(acc % F.p());
    }
    for (int i = 0; i < q.n_vertices(); ++i) {
        FpMat fi(v.d[i], ext.t[i] * v.s);
        for (int r = 0; r < fi.rows; ++r) {
            for (int c = 0; c < fi.cols; ++c) fi.at(r, c) = flat.at(sys.var(blocks[i], r, c), 0);
        }
        rep.f.push_back(std::move(fi));
    }
    return rep;
}

FqRep random_full_module(const PrimeField& F, const ExtensionData& ext,
                         const ExtDimVector& v, Rng& rng, int trials) {
    for (int t = 0; t < trials; ++t) {
        FqRep rep = random_module(F, ext, v, rng);
        if (is_full(F, rep)) return rep;
    }
    throw AssumptionError("no full module of type " + v.to_string() + " found in " +
                          std::to_string(trials) + " random trials over F_" +
                          std::to_string(F.p()));
}

}  // namespace qmod
