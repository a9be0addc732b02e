#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "phicoord/matrix.hpp"
#include "phicoord/report.hpp"

namespace phicoord {

/// A finite-dimensional supercommutative algebra with an even nilpotent
/// derivation, given by structure constants in a fixed basis.
struct DifferentialSuperalgebra {
    int dim = 0;
    std::vector<std::string> labels;
    std::vector<int> parity;
    Vec unit;
    /// mul[(i * dim + j) * dim + k]: coefficient of e_k in e_i e_j.
    std::vector<Rat> mul;
    /// der(k, i): coefficient of e_k in D e_i.
    RatMatrix der;

    explicit DifferentialSuperalgebra(int n = 0);

    Rat& m(int i, int j, int k);
    const Rat& m(int i, int j, int k) const;

    Vec product(const Vec& a, const Vec& b) const;
    /// Matrix of left multiplication by a.
    RatMatrix left(const Vec& a) const;
    Vec derive(const Vec& a) const { return apply(der, a); }
    /// Parity of a homogeneous vector; -1 for zero or mixed vectors.
    int parity_of(const Vec& a) const;
    int index_of(const std::string& label) const;
};

/// Checks every defining law over all basis triples. The first failing law
/// and basis elements are reported as witnesses.
Report validate(const DifferentialSuperalgebra& a);

/// Q[t]/(t^m) with D = t^2 d/dt, so D t^i = i t^(i+1). (d/dt itself does not
/// preserve the ideal (t^m) and fails the Leibniz rule at (t, t^(m-1)).)
DifferentialSuperalgebra truncated_polynomial(int m);
/// The Grassmann algebra on theta1, theta2 (basis 1, theta1, theta2,
/// theta1theta2) with D theta1 = theta2 and every other basis element killed.
DifferentialSuperalgebra grassmann2();

/// Instance file: {"dim", "labels", "parity", "unit", "mul", "der"} with
/// sparse rational entries; see the README for the layout.
DifferentialSuperalgebra algebra_from_json(const nlohmann::json& j);
nlohmann::json to_json(const DifferentialSuperalgebra& a);

} // namespace phicoord
