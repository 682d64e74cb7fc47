#include "qmod/config.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "json.hpp"
#include "qmod/errors.hpp"

namespace qmod {

namespace {

using nlohmann::json;

const json& field(const json& j, const char* key, const char* where) {
    if (!j.is_object()) {
        throw SchemaError(std::string("config: ") + where + " must be an object");
    }
    auto it = j.find(key);
    if (it == j.end()) {
        throw SchemaError(std::string("config: missing ") + where + "." + key);
    }
    return *it;
}

std::string as_string(const json& j, const std::string& where) {
    if (!j.is_string()) throw SchemaError("config: " + where + " must be a string");
    return j.get<std::string>();
}

std::int64_t as_int(const json& j, const std::string& where) {
    if (!j.is_number_integer()) throw SchemaError("config: " + where + " must be an integer");
    return j.get<std::int64_t>();
}

bool as_bool(const json& j, const std::string& where) {
    if (!j.is_boolean()) throw SchemaError("config: " + where + " must be a boolean");
    return j.get<bool>();
}

std::uint64_t as_u64(const json& j, const std::string& where) {
    const std::int64_t v = as_int(j, where);
    if (v < 0) throw SchemaError("config: " + where + " must be nonnegative");
    return std::uint64_t(v);
}

}  // namespace

Config parse_config(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw SchemaError(std::string("config: invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw SchemaError("config: top level must be an object");

    const json& jq = field(j, "quiver", "<top>");
    const json& jverts = field(jq, "vertices", "quiver");
    if (!jverts.is_array() || jverts.empty()) {
        throw SchemaError("config: quiver.vertices must be a nonempty array");
    }
    std::vector<std::string> vertices;
    for (std::size_t i = 0; i < jverts.size(); ++i) {
        vertices.push_back(as_string(jverts[i], "quiver.vertices[" + std::to_string(i) + "]"));
    }
    std::vector<ArrowSpec> arrows;
    if (jq.contains("arrows")) {
        const json& jarr = jq["arrows"];
        if (!jarr.is_array()) throw SchemaError("config: quiver.arrows must be an array");
        for (std::size_t i = 0; i < jarr.size(); ++i) {
            const std::string where = "quiver.arrows[" + std::to_string(i) + "]";
            ArrowSpec a;
            a.name = as_string(field(jarr[i], "name", where.c_str()), where + ".name");
            a.source = as_string(field(jarr[i], "source", where.c_str()), where + ".source");
            a.target = as_string(field(jarr[i], "target", where.c_str()), where + ".target");
            arrows.push_back(std::move(a));
        }
    }

    ExtensionData ext{Quiver(vertices, arrows), {}, {}, false, false};

    const json& je = field(j, "extension", "<top>");
    const json& jt = field(je, "t", "extension");
    if (!jt.is_array() || jt.size() != vertices.size()) {
        throw SchemaError("config: extension.t must be an array with one entry per vertex");
    }
    for (std::size_t i = 0; i < jt.size(); ++i) {
        const std::int64_t ti = as_int(jt[i], "extension.t[" + std::to_string(i) + "]");
        if (ti < 0) throw SchemaError("config: extension.t entries must be nonnegative");
        ext.t.push_back(int(ti));
    }
    if (je.contains("matrices")) {
        const json& jm = je["matrices"];
        if (!jm.is_object()) throw SchemaError("config: extension.matrices must be an object");
        for (auto it = jm.begin(); it != jm.end(); ++it) {
            const std::string where = "extension.matrices." + it.key();
            const json& rows = it.value();
            if (!rows.is_array()) throw SchemaError("config: " + where + " must be an array of rows");
            IntMat mat;
            for (std::size_t r = 0; r < rows.size(); ++r) {
                if (!rows[r].is_array()) {
                    throw SchemaError("config: " + where + " rows must be arrays");
                }
                std::vector<std::int64_t> row;
                for (std::size_t c = 0; c < rows[r].size(); ++c) {
                    row.push_back(as_int(rows[r][c], where + "[" + std::to_string(r) + "][" +
                                                         std::to_string(c) + "]"));
                }
                mat.push_back(std::move(row));
            }
            ext.t_matrices[it.key()] = std::move(mat);
        }
    }
    if (je.contains("assume_rigid")) {
        ext.assume_rigid = as_bool(je["assume_rigid"], "extension.assume_rigid");
    }
    if (je.contains("assume_end_trivial")) {
        ext.assume_end_trivial = as_bool(je["assume_end_trivial"], "extension.assume_end_trivial");
    }
    validate_extension(ext);

    Config cfg{std::move(ext), 100'000'000, 42, {}};
    if (j.contains("budget")) cfg.budget = as_u64(j["budget"], "budget");
    if (j.contains("seed")) cfg.seed = as_u64(j["seed"], "seed");
    if (j.contains("gamma_overrides")) {
        const json& jg = j["gamma_overrides"];
        if (!jg.is_object()) {
            throw SchemaError("config: gamma_overrides must map dimension literals to booleans");
        }
        for (auto it = jg.begin(); it != jg.end(); ++it) {
            const ExtDimVector v = parse_dim(it.key(), cfg.ext.quiver.n_vertices());
            cfg.gamma_overrides[v] = as_bool(it.value(), "gamma_overrides." + it.key());
        }
    }
    return cfg;
}

Config load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("config: cannot read file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

ExtDimVector parse_dim(const std::string& text, int n_vertices) {
    const auto bad = [&]() {
        return SchemaError("dimension literal '" + text + "' is not of the form s:d1,d2,...");
    };
    const auto parse_part = [&](const std::string& part) {
        if (part.empty() || part.size() > 9) throw bad();
        int value = 0;
        for (char ch : part) {
            if (ch < '0' || ch > '9') throw bad();
            value = value * 10 + (ch - '0');
        }
        return value;
    };
    const std::size_t colon = text.find(':');
    if (colon == std::string::npos) throw bad();
    ExtDimVector v;
    v.s = parse_part(text.substr(0, colon));
    std::string rest = text.substr(colon + 1);
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = rest.find(',', pos);
        v.d.push_back(parse_part(rest.substr(pos, comma - pos)));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (n_vertices >= 0 && int(v.d.size()) != n_vertices) {
        throw SchemaError("dimension literal '" + text + "' has " +
                          std::to_string(v.d.size()) + " entries for " +
                          std::to_string(n_vertices) + " vertices");
    }
    return v;
}

}  // namespace qmod
