#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "qmod/census.hpp"
#include "qmod/config.hpp"
#include "qmod/errors.hpp"
#include "qmod/motive.hpp"
#include "qmod/oracle.hpp"
#include "qmod/selfcheck.hpp"
#include "qmod/semiinv.hpp"
#include "qmod/stability.hpp"

namespace {

using nlohmann::ordered_json;

struct CommonOpts {
    std::string quiver_path;
    std::string dim_text;
    std::string format = "text";
    std::optional<std::uint64_t> budget;
    std::optional<std::uint64_t> seed;
};

void add_common(CLI::App* sub, CommonOpts& o, bool need_quiver, bool need_dim) {
    auto* q = sub->add_option("--quiver", o.quiver_path, "configuration file (JSON)");
    if (need_quiver) q->required();
    auto* d = sub->add_option("--dim", o.dim_text, "dimension type s:d1,d2,...");
    if (need_dim) d->required();
    sub->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--budget", o.budget, "enumeration budget override");
    sub->add_option("--seed", o.seed, "random seed override");
}

// Owns the config and the oracle chain; heap-allocated so the references
// the contexts hold never move.
struct Session {
    qmod::Config cfg;
    qmod::SamplingGammaOracle sampler;
    std::optional<qmod::TableGammaOracle> table;
    std::optional<qmod::StabilityContext> stab;

    explicit Session(qmod::Config c)
        : cfg(std::move(c)), sampler(cfg.ext, 101, 24, cfg.seed) {
        if (!cfg.gamma_overrides.empty()) {
            table.emplace(cfg.gamma_overrides, &sampler);
        }
        stab.emplace(cfg.ext, table ? static_cast<qmod::GammaOracle&>(*table) : sampler);
    }
};

std::unique_ptr<Session> open_session(const CommonOpts& o) {
    qmod::Config cfg = qmod::load_config(o.quiver_path);
    if (const char* env = std::getenv("QMOD_BUDGET")) {
        std::uint64_t value = 0;
        std::istringstream in(env);
        if (!(in >> value) || !in.eof()) {
            throw qmod::SchemaError("QMOD_BUDGET is not an unsigned integer");
        }
        cfg.budget = value;
    }
    if (o.budget) cfg.budget = *o.budget;
    if (o.seed) cfg.seed = *o.seed;
    return std::make_unique<Session>(std::move(cfg));
}

qmod::ExtDimVector session_dim(const Session& s, const CommonOpts& o) {
    const qmod::ExtDimVector v = qmod::parse_dim(o.dim_text, s.cfg.ext.quiver.n_vertices());
    qmod::validate_dim_type(s.cfg.ext, v);
    return v;
}

void emit(const CommonOpts& o, const std::string& text, const ordered_json& j) {
    if (o.format == "json") {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << text;
    }
}

ordered_json poly_json(const qmod::LPolynomial& p) {
    ordered_json coeffs = ordered_json::object();
    for (const auto& [e, c] : p.terms()) coeffs[std::to_string(e)] = c.str();
    return coeffs;
}

ordered_json motive_json(const qmod::MotiveExpr& m) {
    ordered_json j = ordered_json::object();
    j["num"] = poly_json(m.num());
    j["den"] = poly_json(m.den());
    j["polynomial"] = m.is_polynomial();
    return j;
}

int cmd_euler(const CommonOpts& o, const std::string& dim2_text) {
    auto s = open_session(o);
    const qmod::ExtDimVector v = session_dim(*s, o);
    const qmod::ExtDimVector w =
        dim2_text.empty() ? v : qmod::parse_dim(dim2_text, s->cfg.ext.quiver.n_vertices());
    const std::int64_t value = qmod::euler_form_ext(s->cfg.ext, v, w);
    ordered_json j;
    j["lhs"] = v.to_string();
    j["rhs"] = w.to_string();
    j["value"] = value;
    emit(o, std::to_string(value) + "\n", j);
    return 0;
}

int cmd_slope(const CommonOpts& o) {
    // Works without a configuration: the slope only reads the dimensions.
    qmod::ExtDimVector v = qmod::parse_dim(o.dim_text, -1);
    if (o.quiver_path.empty()) {
        if (v.s < 0 || v.is_zero()) throw qmod::SchemaError("slope needs (s,d) != 0");
    } else {
        auto s = open_session(o);
        v = session_dim(*s, o);
    }
    const qmod::Frac64 mu = qmod::slope(v);
    ordered_json j;
    j["num"] = mu.num;
    j["den"] = mu.den;
    emit(o, std::to_string(mu.num) + "/" + std::to_string(mu.den) + "\n", j);
    return 0;
}

int cmd_dims(const CommonOpts& o) {
    auto s = open_session(o);
    const qmod::ExtDimVector v = session_dim(*s, o);
    const qmod::ExpectedDims d = qmod::expected_dims(s->cfg.ext, v);
    ordered_json j;
    j["dim_rep_q"] = d.dim_rep_q;
    j["dim_rep_full"] = d.dim_rep_full;
    j["dim_moduli"] = d.dim_moduli;
    std::ostringstream os;
    os << "dim_rep_q: " << d.dim_rep_q << "\n"
       << "dim_rep_full: " << d.dim_rep_full << "\n"
       << "dim_moduli: " << d.dim_moduli << "\n";
    emit(o, os.str(), j);
    return 0;
}

int cmd_hn_types(const CommonOpts& o) {
    auto s = open_session(o);
    const qmod::ExtDimVector v = session_dim(*s, o);
    const std::vector<qmod::HNType> types = s->stab->enumerate_hn_types(v);
    std::ostringstream os;
    ordered_json arr = ordered_json::array();
    for (const qmod::HNType& t : types) {
        os << t.to_string() << "\n";
        arr.push_back(t.to_string());
    }
    ordered_json j;
    j["dim"] = v.to_string();
    j["types"] = arr;
    emit(o, os.str(), j);
    return 0;
}

int cmd_semistable(const CommonOpts& o) {
    auto s = open_session(o);
    const qmod::ExtDimVector v = session_dim(*s, o);
    const bool sst = s->stab->is_semistable_type(v);
    ordered_json j;
    j["dim"] = v.to_string();
    j["semistable"] = sst;
    std::ostringstream os;
    os << "semistable: " << (sst ? "true" : "false") << "\n";
    if (sst) {
        const bool eq = s->stab->stable_equals_semistable(v);
        j["stable_equals_semistable"] = eq;
        os << "stable_equals_semistable: " << (eq ? "true" : "false") << "\n";
    }
    emit(o, os.str(), j);
    return 0;
}

int cmd_codim(const CommonOpts& o) {
    auto s = open_session(o);
    const qmod::ExtDimVector v = session_dim(*s, o);
    std::ostringstream os;
    ordered_json arr = ordered_json::array();
    for (const qmod::HNType& t : s->stab->enumerate_hn_types(v)) {
        const std::int64_t codim = s->stab->hn_stratum_codim(t);
        const std::int64_t expo = s->stab->hn_exponent(t);
        os << t.to_string() << ": codim " << codim << ", exponent " << expo << "\n";
        ordered_json row;
        row["type"] = t.to_string();
        row["codim"] = codim;
        row["exponent"] = expo;
        arr.push_back(row);
    }
    ordered_json j;
    j["dim"] = v.to_string();
    j["strata"] = arr;
    emit(o, os.str(), j);
    return 0;
}

qmod::RepFullMotiveSource motive_source(const std::string& interpolate,
                                        std::uint32_t confirm_prime,
                                        const std::string& user_table_path,
                                        std::uint64_t budget, int n_vertices) {
    if (!user_table_path.empty()) {
        std::ifstream in(user_table_path);
        if (!in) throw qmod::SchemaError("cannot read user table " + user_table_path);
        ordered_json j;
        try {
            j = ordered_json::parse(in);
        } catch (const ordered_json::parse_error& e) {
            throw qmod::SchemaError(std::string("user table: invalid JSON: ") + e.what());
        }
        if (!j.is_object()) throw qmod::SchemaError("user table: top level must be an object");
        std::map<qmod::ExtDimVector, qmod::MotiveExpr> table;
        for (auto it = j.begin(); it != j.end(); ++it) {
            const qmod::ExtDimVector v = qmod::parse_dim(it.key(), n_vertices);
            if (!it.value().is_object()) {
                throw qmod::SchemaError("user table: entry " + it.key() +
                                        " must map exponents to coefficients");
            }
            qmod::LPolynomial p;
            for (auto ct = it.value().begin(); ct != it.value().end(); ++ct) {
                const int e = std::stoi(ct.key());
                qmod::Int c;
                if (ct.value().is_string()) {
                    c = qmod::Int(ct.value().get<std::string>());
                } else if (ct.value().is_number_integer()) {
                    c = qmod::Int(ct.value().get<std::int64_t>());
                } else {
                    throw qmod::SchemaError("user table: coefficients must be integers");
                }
                p += qmod::LPolynomial::term(c, e);
            }
            table.emplace(v, qmod::MotiveExpr(p));
        }
        return qmod::RepFullMotiveSource::user_table(std::move(table));
    }
    if (!interpolate.empty()) {
        std::vector<std::uint32_t> primes;
        std::size_t pos = 0;
        while (pos <= interpolate.size()) {
            const std::size_t comma = interpolate.find(',', pos);
            const std::string part = interpolate.substr(pos, comma - pos);
            std::uint32_t value = 0;
            std::istringstream in(part);
            if (!(in >> value) || !in.eof()) {
                throw qmod::SchemaError("--interpolate: bad prime list entry '" + part + "'");
            }
            primes.push_back(value);
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        return qmod::RepFullMotiveSource::interpolated(std::move(primes), confirm_prime, budget);
    }
    return qmod::RepFullMotiveSource::symbolic();
}

int cmd_motive(const CommonOpts& o, const std::string& which, const std::string& interpolate,
               std::uint32_t confirm_prime, const std::string& user_table_path) {
    auto s = open_session(o);
    const qmod::ExtDimVector v = session_dim(*s, o);
    qmod::MotiveContext mc(*s->stab,
                           motive_source(interpolate, confirm_prime, user_table_path,
                                         s->cfg.budget, s->cfg.ext.quiver.n_vertices()));
    const qmod::MotiveExpr m = which == "rep-full" ? mc.rep_full(v) : mc.sst(v);
    ordered_json j = motive_json(m);
    j["dim"] = v.to_string();
    j["which"] = which;
    emit(o, m.to_string() + "\n", j);
    return 0;
}

int cmd_poincare(const CommonOpts& o, const std::string& interpolate,
                 std::uint32_t confirm_prime, const std::string& user_table_path) {
    auto s = open_session(o);
    const qmod::ExtDimVector v = session_dim(*s, o);
    qmod::MotiveContext mc(*s->stab,
                           motive_source(interpolate, confirm_prime, user_table_path,
                                         s->cfg.budget, s->cfg.ext.quiver.n_vertices()));
    const qmod::LPolynomial p = mc.poincare_polynomial(v);
    ordered_json j;
    j["dim"] = v.to_string();
    j["coeffs"] = poly_json(p);
    j["degree"] = p.degree();
    emit(o, p.to_string() + "\n", j);
    return 0;
}

int cmd_count(const CommonOpts& o, std::uint32_t prime) {
    auto s = open_session(o);
    const qmod::ExtDimVector v = session_dim(*s, o);
    const qmod::PrimeField F(prime);
    const std::uint64_t n = qmod::count_rep_full_points(F, s->cfg.ext, v, s->cfg.budget);
    ordered_json j;
    j["dim"] = v.to_string();
    j["prime"] = prime;
    j["count"] = n;
    emit(o, std::to_string(n) + "\n", j);
    return 0;
}

int cmd_census(const CommonOpts& o, std::uint32_t prime) {
    auto s = open_session(o);
    const qmod::ExtDimVector v = session_dim(*s, o);
    qmod::MotiveContext mc(*s->stab, qmod::RepFullMotiveSource::symbolic());
    const qmod::CensusReport rep = qmod::census_compare(mc, v, prime, s->cfg.budget);
    std::ostringstream os;
    os << "full points: " << rep.total_full << " (predicted " << rep.predicted_full.str()
       << ") " << (rep.full_match ? "ok" : "MISMATCH") << "\n";
    ordered_json arr = ordered_json::array();
    for (const qmod::StratumRow& row : rep.rows) {
        os << (row.trivial ? "semistable stratum" : row.type.to_string()) << ": "
           << row.observed << " (predicted " << row.predicted.str() << ") "
           << (row.match ? "ok" : "MISMATCH") << "\n";
        ordered_json r;
        r["type"] = row.type.to_string();
        r["trivial"] = row.trivial;
        r["observed"] = row.observed;
        r["predicted"] = row.predicted.str();
        r["match"] = row.match;
        arr.push_back(r);
    }
    os << (rep.all_match ? "census matches the symbolic classes\n"
                         : "census DISAGREES with the symbolic classes\n");
    ordered_json j;
    j["dim"] = v.to_string();
    j["prime"] = prime;
    j["total_full"] = rep.total_full;
    j["predicted_full"] = rep.predicted_full.str();
    j["strata"] = arr;
    j["all_match"] = rep.all_match;
    emit(o, os.str(), j);
    if (!rep.all_match) {
        throw qmod::AssumptionError("census disagrees with the symbolic classes");
    }
    return 0;
}

int cmd_check(const CommonOpts& o) {
    auto s = open_session(o);
    const std::vector<qmod::CheckItem> items = qmod::run_selfcheck(s->cfg);
    bool all = true;
    std::ostringstream os;
    ordered_json arr = ordered_json::array();
    for (const qmod::CheckItem& item : items) {
        const char* tag = item.skipped ? "skip" : (item.pass ? " ok " : "FAIL");
        os << "[" << tag << "] " << item.name << ": " << item.detail << "\n";
        all = all && (item.pass || item.skipped);
        ordered_json r;
        r["name"] = item.name;
        r["pass"] = item.pass;
        r["skipped"] = item.skipped;
        r["detail"] = item.detail;
        arr.push_back(r);
    }
    os << (all ? "all checks passed\n" : "some checks FAILED\n");
    ordered_json j;
    j["items"] = arr;
    j["all_pass"] = all;
    emit(o, os.str(), j);
    if (!all) throw qmod::AssumptionError("self-check failed");
    return 0;
}

int cmd_si_eval(const CommonOpts& o, std::uint32_t prime, int weight_trials) {
    auto s = open_session(o);
    const qmod::ExtDimVector v = session_dim(*s, o);
    const qmod::PrimeField F(prime);
    const qmod::SIFamily fam = qmod::builtin_si_family(s->cfg.ext, v);
    qmod::Rng rng(qmod::Rng::mix(s->cfg.seed, 0x51e7a1));
    const qmod::FqRep point = qmod::random_full_module(F, s->cfg.ext, v, rng);

    std::ostringstream os;
    ordered_json arr = ordered_json::array();
    for (const qmod::BlockDetSI& h : fam.h) {
        const qmod::WeightFit fit = qmod::verify_weight(F, s->cfg.ext, h, weight_trials,
                                                        s->cfg.seed);
        const std::uint32_t value = qmod::evaluate_si(F, s->cfg.ext, h, point);
        os << h.name << ": value " << value << ", weight ";
        ordered_json r;
        r["name"] = h.name;
        r["value"] = value;
        if (fit.ok) {
            os << "(";
            ordered_json wj = ordered_json::array();
            for (std::size_t i = 0; i < fit.w.size(); ++i) {
                os << fit.w[i] << ", ";
                wj.push_back(fit.w[i]);
            }
            os << "w_inf " << fit.w_inf << ")";
            r["weight"] = wj;
            r["weight_inf"] = fit.w_inf;
        } else {
            os << "unverified (" << fit.message << ")";
            r["weight_error"] = fit.message;
        }
        os << "\n";
        arr.push_back(r);
    }
    const qmod::ProjectivePoint coords = qmod::quotient_coords(F, s->cfg.ext, fam, point);
    os << "quotient coordinates:";
    ordered_json cj = ordered_json::array();
    if (coords.defined) {
        for (std::uint32_t c : coords.coords) {
            os << " " << c;
            cj.push_back(c);
        }
        os << "\n";
    } else {
        os << " undefined (all products vanish)\n";
    }
    ordered_json j;
    j["dim"] = v.to_string();
    j["prime"] = prime;
    j["functions"] = arr;
    j["coords_defined"] = coords.defined;
    j["coords"] = cj;
    emit(o, os.str(), j);
    return 0;
}

int run(int argc, char** argv) {
    CLI::App app{"moduli engine for one-point extensions of path algebras"};
    app.require_subcommand(1);

    CommonOpts o;

    auto* c_euler = app.add_subcommand("euler", "extended Euler form <dim, dim2>");
    std::string dim2;
    add_common(c_euler, o, true, true);
    c_euler->add_option("--dim2", dim2, "second argument (defaults to --dim)");

    auto* c_slope = app.add_subcommand("slope", "slope s/(s+|d|)");
    add_common(c_slope, o, false, true);

    auto* c_dims = app.add_subcommand("dims", "expected dimensions");
    add_common(c_dims, o, true, true);

    auto* c_hn = app.add_subcommand("hn-types", "candidate HN types");
    add_common(c_hn, o, true, true);

    auto* c_sst = app.add_subcommand("semistable", "semistability of a dimension type");
    add_common(c_sst, o, true, true);

    auto* c_codim = app.add_subcommand("codim", "stratum codimensions and exponents");
    add_common(c_codim, o, true, true);

    auto* c_motive = app.add_subcommand("motive", "class of the full or semistable locus");
    std::string which;
    std::string interpolate;
    std::uint32_t confirm_prime = 0;
    std::string user_table_path;
    c_motive->add_option("which", which, "rep-full or sst")
        ->required()
        ->check(CLI::IsMember({"rep-full", "sst"}));
    add_common(c_motive, o, true, true);
    c_motive->add_option("--interpolate", interpolate, "comma-separated counting primes");
    c_motive->add_option("--confirm-prime", confirm_prime, "held-out confirmation prime");
    c_motive->add_option("--user-table", user_table_path, "JSON table of full-locus classes");

    auto* c_poincare = app.add_subcommand("poincare", "Poincare polynomial of the moduli space");
    add_common(c_poincare, o, true, true);
    c_poincare->add_option("--interpolate", interpolate, "comma-separated counting primes");
    c_poincare->add_option("--confirm-prime", confirm_prime, "held-out confirmation prime");
    c_poincare->add_option("--user-table", user_table_path, "JSON table of full-locus classes");

    std::uint32_t prime = 0;
    auto* c_count = app.add_subcommand("count", "count full points over F_p");
    add_common(c_count, o, true, true);
    c_count->add_option("--prime", prime, "field characteristic")->required();

    auto* c_census = app.add_subcommand("census", "stratum census against the symbolic classes");
    add_common(c_census, o, true, true);
    c_census->add_option("--prime", prime, "field characteristic")->required();

    auto* c_check = app.add_subcommand("check", "configuration self-check battery");
    add_common(c_check, o, true, false);

    auto* c_si = app.add_subcommand("si-eval", "evaluate the built-in semi-invariants");
    add_common(c_si, o, true, true);
    std::uint32_t si_prime = 101;
    int weight_trials = 16;
    c_si->add_option("--prime", si_prime, "field characteristic");
    c_si->add_option("--weight-trials", weight_trials, "joint verification samples");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;  // usage problems exit 1, help exits 0
    }

    if (c_euler->parsed()) return cmd_euler(o, dim2);
    if (c_slope->parsed()) return cmd_slope(o);
    if (c_dims->parsed()) return cmd_dims(o);
    if (c_hn->parsed()) return cmd_hn_types(o);
    if (c_sst->parsed()) return cmd_semistable(o);
    if (c_codim->parsed()) return cmd_codim(o);
    if (c_motive->parsed())
        return cmd_motive(o, which, interpolate, confirm_prime, user_table_path);
    if (c_poincare->parsed())
        return cmd_poincare(o, interpolate, confirm_prime, user_table_path);
    if (c_count->parsed()) return cmd_count(o, prime);
    if (c_census->parsed()) return cmd_census(o, prime);
    if (c_check->parsed()) return cmd_check(o);
    if (c_si->parsed()) return cmd_si_eval(o, si_prime, weight_trials);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const qmod::SchemaError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const qmod::AssumptionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const qmod::UnsupportedError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const qmod::BudgetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
