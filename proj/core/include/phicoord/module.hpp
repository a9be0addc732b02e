#pragma once

#include "phicoord/associates.hpp"
#include "phicoord/vertex.hpp"

namespace phicoord {

/// Y_W(e_v, x) for every algebra basis element v. action[v](k, j) is the
/// coefficient of w_k in Y_W(e_v, x) w_j. Entries are Laurent polynomials for
/// hand-written instances and may be truncated after a coordinate change.
struct ModuleInstance {
    int wdim = 0;
    std::vector<LaurentMatrix> action;

    /// Y_W(a, x) for a general vector a.
    LaurentMatrix operator_of(const Vec& a) const;
    bool exact() const;
};

/// V as a module over itself.
ModuleInstance adjoint_module(const VertexStructure& v);

/// Checks Y_W(1, x) = 1 and that entries are bounded below.
Report check_module_shape(const VertexStructure& v, const ModuleInstance& w);

/// A module together with the associate it was checked against.
struct PhiModuleInstance {
    ModuleInstance module;
    Associate phi;
    /// Minimal k per basis pair (u, v), row-major; -1 when no k <= kmax worked.
    std::vector<int> k;
    Report report;
};

/// ((x1-x2)^k Y_W(u,x1)Y_W(v,x2))|_{x1=phi(x2,z)} = (phi(x2,z)-x2)^k Y_W(Y(u,z)v, x2)
/// for all basis pairs, compared through z^zorder.
///
/// The substitution only touches the x1 factor, so the left side is computed
/// as (phi - x2)^k Y_W(u, phi) Y_W(v, x2).
PhiModuleInstance check_phi_module(const VertexStructure& v, const ModuleInstance& w, const Associate& phi, int kmax,
                                   int zorder);

/// Y_W(e^{zD}u, x) = Y_W(u, phi(x, z)) through z^zorder.
Report check_exp_d_property(const VertexStructure& v, const ModuleInstance& w, const Associate& phi, int zorder);

/// (x1-x2)^k Y_W(u,x1)Y_W(v,x2) = (x1-x2)^k S Y_W(v,x2)Y_W(u,x1), minimal k recorded.
/// Needs Laurent-polynomial entries.
Report check_weak_commutativity(const VertexStructure& v, const ModuleInstance& w, int kmax);

/// Module S-Jacobi identity on the box [lo, hi]^3 compared at the given
/// margin, plus Y_W(Dv, x) = d/dx Y_W(v, x). With W = adjoint_module(V) this
/// is the S-Jacobi identity of V itself.
Report check_module_jacobi(const VertexStructure& v, const ModuleInstance& w, int lo, int hi, int margin);

/// The three-term Jacobi identity for modules over x/(1+zx), variables (z, x1, x2).
Report check_phi1_jacobi(const VertexStructure& v, const ModuleInstance& w, int lo, int hi, int margin);

/// Y^f_W(v, x) = Y_W(v, f(x)), entries truncated at f's order.
ModuleInstance transform_module(const ModuleInstance& w, const CoordinateChange& f);

/// theta Y_1(v, x) = Y_2(v, x) theta for every basis v.
Report check_intertwiner(const RatMatrix& theta, const ModuleInstance& w1, const ModuleInstance& w2);

/// Entrywise agreement of two modules on their common known region.
Report compare_modules(const ModuleInstance& a, const ModuleInstance& b);

/// Y*_W(v, x) on W* in the dual basis: the transpose of Y_W(v, x^-1).
///
/// Throws DomainError naming v and alpha when some Y*_W(v, x) alpha is not
/// bounded below, i.e. the dual basis vector is not in D(W).
ModuleInstance dual_module(const VertexStructure& v, const ModuleInstance& w);

/// Pairing relation, Y*(Dv, x) = -x^2 d/dx Y*(v, x), the phi-module check of
/// D(W) over the opposite algebra with x/(1+zx) and the matching Jacobi identity.
Report check_dual_theorem(const VertexStructure& v, const ModuleInstance& w, int kmax, int zorder, int lo, int hi,
                          int margin);

/// Dual of a module over a general phi, checked against star(phi) over the
/// opposite algebra. Nothing is asserted: the report is tagged exploratory.
Report explore_dual(const VertexStructure& v, const ModuleInstance& w, const Associate& phi, int kmax);

ModuleInstance module_from_json(const nlohmann::json& j, const VertexStructure& v);
nlohmann::json to_json(const ModuleInstance& w, const VertexStructure& v);

} // namespace phicoord
