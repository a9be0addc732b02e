#pragma once

#include <map>

#include "phicoord/delta.hpp"
#include "phicoord/superalgebra.hpp"

namespace phicoord {

/// Expansion sum_e x^e v_e of a V-valued Laurent polynomial.
using VecSeries = std::map<int, Vec>;

/// Vertex operators of a finite-dimensional weak quantum vertex algebra with
/// Koszul braiding: Y[u](k, j) is the coefficient of e_k in Y(e_u, x) e_j.
struct VertexStructure {
    DifferentialSuperalgebra alg;
    std::vector<LaurentMatrix> Y;
    bool opposite = false;

    int dim() const { return alg.dim; }
    const Vec& vacuum() const { return alg.unit; }
    /// Y(a, x) for a general vector a.
    LaurentMatrix vertex_operator(const Vec& a) const;
    /// Y(e_u, x) w.
    VecSeries act(int u, const Vec& w) const;
    /// (-1)^{|e_u||e_v|}.
    int koszul(int u, int v) const;

    /// Y(a, x) b = (e^{xD} a) b, without validating the algebra. Negative
    /// controls use this to hand broken structure constants to the checkers.
    static VertexStructure from_unchecked(const DifferentialSuperalgebra& a);
};

/// Validates the algebra and builds Y(a, x) b = (e^{xD} a) b. Throws
/// DomainError naming the failing law and basis elements.
VertexStructure make_vertex_algebra(const DifferentialSuperalgebra& a);

/// Y^o(u, x) v = e^{xD} Y(v, -x) u.
VertexStructure opposite(const VertexStructure& v);

/// Vacuum and creation properties, then for every basis pair the smallest
/// k <= kmax giving S-locality and the associativity clause
/// ((x1-x2)^k Y(u,x1)Y(v,x2))|_{x1=x2+x0} = x0^k Y(Y(u,x0)v,x2) through x0^zorder.
Report check_wqva_axioms(const VertexStructure& v, int kmax, int zorder);

/// D(v) = coefficient of x^1 in Y(v, x) 1, as a matrix (columns are images).
RatMatrix d_operator(const VertexStructure& v);
/// d_operator equals the stored derivation, and [D, Y(v,x)] = Y(Dv,x) = d/dx Y(v,x).
Report check_d_operator(const VertexStructure& v);

/// Y(u, x) v = (-1)^{|u||v|} e^{xD} Y(v, -x) u for all basis pairs.
Report check_skew_symmetry(const VertexStructure& v);

/// e^{xD} applied to a V-valued Laurent polynomial.
VecSeries exp_xd(const DifferentialSuperalgebra& a, const VecSeries& s);

std::string format_vec_series(const DifferentialSuperalgebra& a, const VecSeries& s);

} // namespace phicoord
