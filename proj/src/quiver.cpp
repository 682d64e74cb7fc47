#include "qmod/quiver.hpp"

#include <algorithm>
#include <sstream>

namespace qmod {

std::int64_t dim_total(const DimVector& d) {
    std::int64_t s = 0;
    for (int x : d) s += x;
    return s;
}

bool dim_leq(const DimVector& a, const DimVector& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

DimVector dim_sub(const DimVector& a, const DimVector& b) {
    DimVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

bool dim_is_zero(const DimVector& d) {
    return std::all_of(d.begin(), d.end(), [](int x) { return x == 0; });
}

std::string ExtDimVector::to_string() const {
    std::ostringstream os;
    os << "(" << s << "|";
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (i) os << ",";
        os << d[i];
    }
    os << ")";
    return os.str();
}

Quiver::Quiver(std::vector<std::string> vertices, const std::vector<ArrowSpec>& arrows)
    : vertices_(std::move(vertices)) {
    if (vertices_.empty()) throw SchemaError("quiver needs at least one vertex");
    for (int i = 0; i < static_cast<int>(vertices_.size()); ++i) {
        if (vertices_[i].empty()) throw SchemaError("empty vertex name");
        if (!vertex_by_name_.emplace(vertices_[i], i).second)
            throw SchemaError("duplicate vertex name: " + vertices_[i]);
    }
    for (const auto& a : arrows) {
        if (a.name.empty()) throw SchemaError("empty arrow name");
        Arrow arr{a.name, vertex_index(a.source), vertex_index(a.target)};
        if (!arrow_by_name_.emplace(a.name, static_cast<int>(arrows_.size())).second)
            throw SchemaError("duplicate arrow name: " + a.name);
        arrows_.push_back(arr);
    }
    // Kahn topological check
    std::vector<int> indeg(vertices_.size(), 0);
    for (const auto& a : arrows_) ++indeg[a.target];
    std::vector<int> stack;
    for (int i = 0; i < n_vertices(); ++i)
        if (indeg[i] == 0) stack.push_back(i);
    int seen = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++seen;
        for (const auto& a : arrows_)
            if (a.source == v && --indeg[a.target] == 0) stack.push_back(a.target);
    }
    acyclic_ = (seen == n_vertices());
}

int Quiver::vertex_index(const std::string& name) const {
    auto it = vertex_by_name_.find(name);
    if (it == vertex_by_name_.end()) throw SchemaError("unknown vertex: " + name);
    return it->second;
}

bool Quiver::has_vertex(const std::string& name) const {
    return vertex_by_name_.count(name) != 0;
}

int Quiver::arrow_index(const std::string& name) const {
    auto it = arrow_by_name_.find(name);
    if (it == arrow_by_name_.end()) throw SchemaError("unknown arrow: " + name);
    return it->second;
}

bool Quiver::has_arrow(const std::string& name) const {
    return arrow_by_name_.count(name) != 0;
}

const IntMat& ExtensionData::matrix_for(const std::string& arrow_name) const {
    auto it = t_matrices.find(arrow_name);
    if (it == t_matrices.end())
        throw SchemaError("no extension matrix for arrow: " + arrow_name);
    return it->second;
}

void validate_extension(const ExtensionData& ext) {
    if (!ext.quiver.is_acyclic())
        throw SchemaError("base quiver must be acyclic");
    if (static_cast<int>(ext.t.size()) != ext.quiver.n_vertices())
        throw SchemaError("extension dimension vector does not match vertex count");
    bool nonzero = false;
    for (int x : ext.t) {
        if (x < 0) throw SchemaError("extension dimension vector must be nonnegative");
        if (x > 0) nonzero = true;
    }
    if (!nonzero) throw SchemaError("extension module dimension vector is zero");
    for (const auto& [name, mat] : ext.t_matrices) {
        const Arrow& a = ext.quiver.arrows().at(ext.quiver.arrow_index(name));
        std::size_t rows = static_cast<std::size_t>(ext.t[a.target]);
        std::size_t cols = static_cast<std::size_t>(ext.t[a.source]);
        if (mat.size() != rows)
            throw SchemaError("matrix for arrow " + name + " has wrong row count");
        for (const auto& row : mat)
            if (row.size() != cols)
                throw SchemaError("matrix for arrow " + name + " has wrong column count");
    }
    if (!ext.quiver.arrows().empty() &&
        ext.t_matrices.size() != ext.quiver.arrows().size() && !ext.t_matrices.empty())
        throw SchemaError("extension matrices must be given for all arrows or none");
}

std::string ExtendedQuiver::rho_name(int l, int base_vertex) const {
    for (const auto& [name, lv] : rho_arrows)
        if (lv.first == l && lv.second == base_vertex) return name;
    throw SchemaError("no extension arrow with index " + std::to_string(l));
}

ExtendedQuiver build_extended_quiver(const ExtensionData& ext) {
    validate_extension(ext);
    if (!ext.quiver.arrows().empty() && ext.t_matrices.empty())
        throw SchemaError("extension matrices are required to build the extended quiver");

    const std::string inf = "inf";
    if (ext.quiver.has_vertex(inf))
        throw SchemaError("base quiver may not use the reserved vertex name inf");

    std::vector<std::string> vertices;
    vertices.push_back(inf);
    for (const auto& v : ext.quiver.vertices()) vertices.push_back(v);

    std::vector<ArrowSpec> arrows;
    std::map<std::string, std::pair<int, int>> rho;
    for (int i = 0; i < ext.quiver.n_vertices(); ++i) {
        for (int l = 1; l <= ext.t[i]; ++l) {
            std::string name = "rho_" + std::to_string(l) + "_" + ext.quiver.vertex_name(i);
            if (ext.quiver.has_arrow(name))
                throw SchemaError("base quiver arrow name collides with " + name);
            arrows.push_back({name, inf, ext.quiver.vertex_name(i)});
            rho.emplace(name, std::make_pair(l, i));
        }
    }
    for (const auto& a : ext.quiver.arrows())
        arrows.push_back({a.name, ext.quiver.vertex_name(a.source),
                          ext.quiver.vertex_name(a.target)});

    ExtendedQuiver result{Quiver(vertices, arrows), {}, 0, rho};

    for (const auto& a : ext.quiver.arrows()) {
        const IntMat& mat = ext.matrix_for(a.name);
        for (int l = 1; l <= ext.t[a.source]; ++l) {
            Relation rel;
            rel.terms.push_back(
                {1,
                 {"rho_" + std::to_string(l) + "_" + ext.quiver.vertex_name(a.source),
                  a.name}});
            for (int s = 1; s <= ext.t[a.target]; ++s) {
                std::int64_t lam = mat[s - 1][l - 1];
                if (lam != 0)
                    rel.terms.push_back(
                        {-lam,
                         {"rho_" + std::to_string(s) + "_" + ext.quiver.vertex_name(a.target)}});
            }
            result.relations.push_back(std::move(rel));
        }
    }
    return result;
}

std::int64_t euler_form_q(const Quiver& q, const DimVector& d, const DimVector& e) {
    if (static_cast<int>(d.size()) != q.n_vertices() ||
        static_cast<int>(e.size()) != q.n_vertices())
        throw SchemaError("dimension vector does not match vertex count");
    std::int64_t r = 0;
    for (int i = 0; i < q.n_vertices(); ++i) r += std::int64_t(d[i]) * e[i];
    for (const auto& a : q.arrows()) r -= std::int64_t(d[a.source]) * e[a.target];
    return r;
}

std::int64_t euler_form_ext(const ExtensionData& ext, const ExtDimVector& a,
                            const ExtDimVector& b) {
    return std::int64_t(a.s) * b.s - a.s * euler_form_q(ext.quiver, ext.t, b.d) +
           euler_form_q(ext.quiver, a.d, b.d);
}

Frac64 slope(const ExtDimVector& v) {
    if (v.s < 0) throw SchemaError("negative extension part");
    for (int x : v.d)
        if (x < 0) throw SchemaError("negative dimension entry");
    if (v.is_zero()) throw SchemaError("slope of the zero dimension type");
    return Frac64(v.s, v.total());
}

ExpectedDims expected_dims(const ExtensionData& ext, const ExtDimVector& v) {
    validate_dim_type(ext, v);
    ExpectedDims r;
    for (const auto& a : ext.quiver.arrows())
        r.dim_rep_q += std::int64_t(v.d[a.source]) * v.d[a.target];
    r.dim_rep_full = r.dim_rep_q + std::int64_t(v.s) * euler_form_q(ext.quiver, ext.t, v.d);
    r.dim_moduli = 1 - euler_form_ext(ext, v, v);
    return r;
}

void validate_dim_type(const ExtensionData& ext, const ExtDimVector& v) {
    if (static_cast<int>(v.d.size()) != ext.quiver.n_vertices())
        throw SchemaError("dimension vector does not match vertex count");
    if (v.s < 0) throw SchemaError("negative extension part");
    for (int x : v.d)
        if (x < 0) throw SchemaError("negative dimension entry");
    if (v.is_zero()) throw SchemaError("the zero dimension type is not allowed");
}

}  // namespace qmod
