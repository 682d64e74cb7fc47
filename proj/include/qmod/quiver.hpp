#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qmod/numeric.hpp"

namespace qmod {

// Dimension vector over the vertices of a fixed quiver, in vertex order.
using DimVector = std::vector<int>;

std::int64_t dim_total(const DimVector& d);
bool dim_leq(const DimVector& a, const DimVector& b);  // componentwise
DimVector dim_sub(const DimVector& a, const DimVector& b);
bool dim_is_zero(const DimVector& d);

// Dimension type (s, d) for a one-point extension: s at the adjoined vertex,
// d over the base quiver.
struct ExtDimVector {
    int s = 0;
    DimVector d;

    std::int64_t total() const { return s + dim_total(d); }
    bool is_zero() const { return s == 0 && dim_is_zero(d); }
    auto operator<=>(const ExtDimVector&) const = default;

    // rendered as "(s|d1,d2,...)"
    std::string to_string() const;
};

struct Arrow {
    std::string name;
    int source = 0;  // vertex indices
    int target = 0;
};

struct ArrowSpec {
    std::string name;
    std::string source;
    std::string target;
};

// Finite quiver with named vertices and arrows. Vertex order is the order
// given at construction and fixes the meaning of every DimVector index.
class Quiver {
  public:
    Quiver(std::vector<std::string> vertices, const std::vector<ArrowSpec>& arrows);

    int n_vertices() const { return static_cast<int>(vertices_.size()); }
    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::string& vertex_name(int i) const { return vertices_.at(i); }
    int vertex_index(const std::string& name) const;  // throws SchemaError
    bool has_vertex(const std::string& name) const;

    const std::vector<Arrow>& arrows() const { return arrows_; }
    int arrow_index(const std::string& name) const;  // throws SchemaError
    bool has_arrow(const std::string& name) const;

    bool is_acyclic() const { return acyclic_; }

  private:
    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
    std::map<std::string, int> vertex_by_name_;
    std::map<std::string, int> arrow_by_name_;
    bool acyclic_ = true;
};

// Integer matrix, row-major; shapes are validated where consumed.
using IntMat = std::vector<std::vector<std::int64_t>>;

// Base quiver together with the dimension data of the extending module T and
// optionally its arrow matrices (shape t(target) x t(source) per arrow).
// assume_rigid asserts Ext^1(T, T) = 0; operations that mathematically need
// it refuse to run otherwise. assume_end_trivial asserts End(T) = k.
struct ExtensionData {
    Quiver quiver;
    DimVector t;
    std::map<std::string, IntMat> t_matrices;
    bool assume_rigid = false;
    bool assume_end_trivial = false;

    bool has_matrices() const { return !t_matrices.empty() || no_arrows(); }
    bool no_arrows() const { return quiver.arrows().empty(); }
    const IntMat& matrix_for(const std::string& arrow_name) const;
};

// Validates shape consistency: acyclic quiver, t >= 0 and t != 0, matrix
// shapes and arrow names. Throws SchemaError.
void validate_extension(const ExtensionData& ext);

// Formal sum of paths, each path a travel-ordered arrow-name list. The
// relations of an extension are sums of length-2 paths through the adjoined
// vertex and length-1 correction terms.
struct PathTerm {
    std::int64_t coef = 0;
    std::vector<std::string> arrows;
};

struct Relation {
    std::vector<PathTerm> terms;
};

// Quiver of the extended algebra: the adjoined vertex (named "inf") comes
// first, with t(i) arrows rho_l_<vertex> from it to each base vertex i,
// followed by the base arrows. Relations encode the T-module structure:
// one relation per (base arrow a: i -> j, l <= t(i)), namely
// a . rho_l_i = sum_s T_a[s][l] rho_s_j.
struct ExtendedQuiver {
    Quiver quiver;
    std::vector<Relation> relations;
    int ext_vertex = 0;  // always 0
    // arrow name -> (l, base vertex index in the base quiver), 1-based l
    std::map<std::string, std::pair<int, int>> rho_arrows;

    std::string rho_name(int l, int base_vertex) const;
};

// Requires validate_extension to pass and the matrices to be present.
ExtendedQuiver build_extended_quiver(const ExtensionData& ext);

// Euler form of the base quiver: <d,e> = sum_i d_i e_i - sum_{a:i->j} d_i e_j.
std::int64_t euler_form_q(const Quiver& q, const DimVector& d, const DimVector& e);

// Euler form of the extended algebra:
// <(s,d),(s',d')> = s s' - s <t,d'>_Q + <d,d'>_Q.
std::int64_t euler_form_ext(const ExtensionData& ext, const ExtDimVector& a,
                            const ExtDimVector& b);

// mu(s,d) = s / (s + |d|); requires (s,d) != 0, s >= 0, d >= 0.
Frac64 slope(const ExtDimVector& v);

struct ExpectedDims {
    std::int64_t dim_rep_q = 0;     // dim Rep_d of the base quiver
    std::int64_t dim_rep_full = 0;  // dim of the extension's representation space
    std::int64_t dim_moduli = 0;    // 1 - <(s,d),(s,d)> of the extended form
};

ExpectedDims expected_dims(const ExtensionData& ext, const ExtDimVector& v);

// Throws SchemaError unless s >= 0, d >= 0, d sized to the quiver, and
// (s,d) != (0,0).
void validate_dim_type(const ExtensionData& ext, const ExtDimVector& v);

}  // namespace qmod
