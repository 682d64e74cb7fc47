#include "qmod/selfcheck.hpp"

#include <sstream>

#include "qmod/errors.hpp"
#include "qmod/fqrep.hpp"
#include "qmod/oracle.hpp"

namespace qmod {

namespace {

// Matrix of one extended-quiver arrow at a module point.
FpMat arrow_matrix(const ExtensionData& ext, const ExtendedQuiver& eq, const FqRep& rep,
                   const std::string& name) {
    auto it = eq.rho_arrows.find(name);
    if (it != eq.rho_arrows.end()) {
        return rep.f_block(it->second.second, it->second.first);
    }
    return rep.base.mats[std::size_t(ext.quiver.arrow_index(name))];
}

// Travel-ordered path: the first arrow acts first, so matrices compose
// right to left.
FpMat eval_path(const PrimeField& F, const ExtensionData& ext, const ExtendedQuiver& eq,
                const FqRep& rep, const std::vector<std::string>& arrows) {
    FpMat acc = arrow_matrix(ext, eq, rep, arrows[0]);
    for (std::size_t k = 1; k < arrows.size(); ++k) {
        acc = fp_mul(F, arrow_matrix(ext, eq, rep, arrows[k]), acc);
    }
    return acc;
}

bool relation_vanishes(const PrimeField& F, const ExtensionData& ext,
                       const ExtendedQuiver& eq, const FqRep& rep, const Relation& rel) {
    FpMat sum;
    bool first = true;
    for (const PathTerm& term : rel.terms) {
        FpMat m = fp_scale(F, F.reduce(term.coef), eval_path(F, ext, eq, rep, term.arrows));
        if (first) {
            sum = std::move(m);
            first = false;
        } else {
            sum = fp_add(F, sum, m);
        }
    }
    return first || sum.is_zero();
}

}  // namespace

std::vector<CheckItem> run_selfcheck(const Config& cfg, std::uint32_t p) {
    std::vector<CheckItem> out;
    const ExtensionData& ext = cfg.ext;
    const PrimeField F(p);

    auto push = [&](std::string name, bool pass, std::string detail, bool skipped = false) {
        out.push_back(CheckItem{std::move(name), pass, skipped, std::move(detail)});
    };

    try {
        validate_extension(ext);
        push("extension-structure", true, "acyclic quiver, extension shapes consistent");
    } catch (const SchemaError& e) {
        push("extension-structure", false, e.what());
        return out;  // nothing below is meaningful on a malformed extension
    }

    if (!ext.has_matrices()) {
        push("relations-vanish", true, "no structure matrices configured", true);
        push("rigidity", true, "no structure matrices configured", true);
        push("rank-identities", true, "no structure matrices configured", true);
        push("euler-identity", true, "no structure matrices configured", true);
    } else {
        // Relations of the extended quiver vanish on sampled modules; this
        // ties the symbolic presentation to the module condition.
        {
            const ExtendedQuiver eq = build_extended_quiver(ext);
            Rng rng(Rng::mix(cfg.seed, 0xc0de));
            const ExtDimVector v{2, ext.t};
            bool ok = true;
            const int samples = 4;
            for (int i = 0; i < samples && ok; ++i) {
                const FqRep rep = random_module(F, ext, v, rng);
                for (const Relation& rel : eq.relations) {
                    if (!relation_vanishes(F, ext, eq, rep, rel)) {
                        ok = false;
                        break;
                    }
                }
            }
            std::ostringstream os;
            os << eq.relations.size() << " relations on " << samples
               << " random modules of type " << v.to_string() << " over F_" << p;
            push("relations-vanish", ok, os.str());
        }

        if (!ext.assume_rigid) {
            push("rigidity", true, "not asserted by the configuration", true);
        } else {
            const bool ok = rigidity_check(ext, p);
            push("rigidity", ok,
                 ok ? "Ext(T,T) = 0 over F_" + std::to_string(p)
                    : "Ext(T,T) != 0: dim Hom(T,T) disagrees with the Euler form");
        }

        {
            const bool ok = hom_formula_check(ext, ext.t, p, 6, cfg.seed);
            push("rank-identities", ok,
                 "generic rank identities for maps T -> M at d = t over F_" + std::to_string(p));
        }

        {
            Rng rng(Rng::mix(cfg.seed, 0xe01e4));
            const ExtDimVector v{1, ext.t};
            bool ok = true;
            for (int i = 0; i < 4 && ok; ++i) {
                const FqRep m = random_module(F, ext, v, rng);
                const FqRep n = random_module(F, ext, v, rng);
                ok = euler_identity_sample(F, ext, m, n).consistent;
            }
            push("euler-identity", ok,
                 "inferred Ext^1 nonnegative on random module pairs of type " + v.to_string());
        }
    }

    if (cfg.gamma_overrides.empty()) {
        push("gamma-overrides", true, "none configured", true);
    } else {
        bool ok = true;
        std::ostringstream os;
        for (const auto& [v, asserted] : cfg.gamma_overrides) {
            bool bound_ok = true;
            for (std::size_t i = 0; i < v.d.size(); ++i) {
                if (std::int64_t(v.d[i]) > std::int64_t(v.s) * ext.t[i]) bound_ok = false;
            }
            if (asserted && !bound_ok) {
                ok = false;
                os << v.to_string() << " asserted full but violates d <= s*t; ";
                continue;
            }
            if (!ext.has_matrices() || v.s == 0) continue;
            const GammaEstimate est = estimate_gamma(ext, v, 24, p, cfg.seed);
            if (est.full && !asserted) {
                ok = false;
                os << v.to_string() << " asserted not full but a full-rank witness exists; ";
            }
        }
        push("gamma-overrides", ok,
             ok ? "no definitive contradictions" : os.str());
    }

    return out;
}

}  // namespace qmod
