#include "phicoord/module.hpp"

#include "phicoord/delta.hpp"
#include "phicoord/errors.hpp"
#include "phicoord/series_io.hpp"

namespace phicoord {

namespace {

std::size_t sz(int i) { return static_cast<std::size_t>(i); }

constexpr std::size_t kMaxWitnesses = 8;

std::string entry(int i, int j) { return "entry (" + std::to_string(i) + "," + std::to_string(j) + ")"; }

std::string pair_name(const VertexStructure& v, int a, int b)
{
    return "(" + v.alg.labels[sz(a)] + "," + v.alg.labels[sz(b)] + ")";
}

void add_witness(Report& r, Witness w)
{
    if (r.witnesses.size() < kMaxWitnesses) {
        r.fail(std::move(w));
    } else {
        r.status = Status::fail;
    }
}

LaurentMatrix product(const LaurentMatrix& a, const LaurentMatrix& b) { return multiply(a, b, Laurent()); }

/// Y_W(Y(u, z) v, x) = sum_j z^j Y_W(c_j, x) as matrices indexed by j.
std::map<int, LaurentMatrix> module_of_product(const VertexStructure& v, const ModuleInstance& w, int u, int b)
{
    std::map<int, LaurentMatrix> out;
    for (const auto& [e, vec] : v.act(u, basis_vector(v.dim(), b))) {
        out.emplace(e, w.operator_of(vec));
    }
    return out;
}

/// sum_{i,k} A(i,k)(x_sa) B(k,j)(x_sb) for exact matrices, as data in three slots.
Matrix<MultiLaurent> product3(const LaurentMatrix& a, int sa, const LaurentMatrix& b, int sb,
                              const std::vector<std::string>& names)
{
    Matrix<MultiLaurent> out(a.rows(), b.cols(), MultiLaurent(names));
    for (int i = 0; i < a.rows(); ++i) {
        for (int k = 0; k < a.cols(); ++k) {
            if (a(i, k).empty()) {
                continue;
            }
            const MultiLaurent left = embed(a(i, k), sa, names);
            for (int j = 0; j < b.cols(); ++j) {
                if (!b(k, j).empty()) {
                    out(i, j) += left * embed(b(k, j), sb, names);
                }
            }
        }
    }
    return out;
}

void require_exact(const ModuleInstance& w, const std::string& what)
{
    if (!w.exact()) {
        throw PrecisionError(what + " needs Laurent-polynomial module entries");
    }
}

/// Shared body of the two delta-function Jacobi identities.
///
/// lhs = a * Y_W(u,x1)Y_W(v,x2) - S b * Y_W(v,x2)Y_W(u,x1),
/// rhs = c * sum_j (sign x0)^j Y_W(c_j, x2).
Report jacobi_body(const VertexStructure& v, const ModuleInstance& w, DeltaShape a, DeltaShape b, DeltaShape c,
                   int zsign, int lo, int hi, int margin, const std::string& name)
{
    require_exact(w, name);
    Report r;
    r.name = name;
    const std::vector<std::string> names = names_of(a);
    const Frame frame = Frame::box(names, lo, hi);
    const MultiLaurent da = delta_term(a, frame);
    const MultiLaurent db = delta_term(b, frame);
    const MultiLaurent dc = delta_term(c, frame);
    std::size_t compared = 0;
    for (int u = 0; u < v.dim(); ++u) {
        for (int t = 0; t < v.dim(); ++t) {
            const Matrix<MultiLaurent> uv = product3(w.action[sz(u)], 1, w.action[sz(t)], 2, names);
            const Matrix<MultiLaurent> vu = product3(w.action[sz(t)], 2, w.action[sz(u)], 1, names);
            const auto parts = module_of_product(v, w, u, t);
            const Rat eps(v.koszul(u, t));
            for (int i = 0; i < w.wdim; ++i) {
                for (int j = 0; j < w.wdim; ++j) {
                    MultiLaurent tail(names);
                    for (const auto& [e, m] : parts) {
                        if (m(i, j).empty()) {
                            continue;
                        }
                        const MultiLaurent ze = MultiLaurent::monomial(names, Rat(zsign == 1 ? 1 : sign_power(e)),
                                                                       {e, 0, 0});
                        tail += ze * embed(m(i, j), 2, names);
                    }
                    if (uv(i, j).terms().empty() && vu(i, j).terms().empty() && tail.terms().empty()) {
                        continue;
                    }
                    MultiLaurent lhs = da * uv(i, j);
                    lhs -= (db * vu(i, j)) * eps;
                    // Zero factors give exact zero products; pin them to the frame.
                    if (lhs.is_exact()) {
                        lhs = lhs.restricted(frame.windows);
                    }
                    MultiLaurent rhs = dc * tail;
                    if (rhs.is_exact()) {
                        rhs = rhs.restricted(frame.windows);
                    }
                    const Report one = check_delta_identity(lhs, rhs, margin, name);
                    ++compared;
                    if (one.status == Status::insufficient_precision) {
                        r.absorb(one);
                        continue;
                    }
                    for (const auto& wit : one.witnesses) {
                        add_witness(r, {wit.monomial, wit.lhs, wit.rhs, pair_name(v, u, t) + ", " + entry(i, j)});
                    }
                }
            }
        }
    }
    r.details = {{"window", {lo, hi}}, {"margin", margin}, {"entries_compared", compared}};
    return r;
}

} // namespace

LaurentMatrix ModuleInstance::operator_of(const Vec& a) const
{
    LaurentMatrix out(wdim, wdim);
    for (std::size_t u = 0; u < action.size(); ++u) {
        if (a[u].is_zero()) {
            continue;
        }
        for (int i = 0; i < wdim; ++i) {
            for (int j = 0; j < wdim; ++j) {
                out(i, j) += action[u](i, j) * a[u];
            }
        }
    }
    return out;
}

bool ModuleInstance::exact() const
{
    for (const auto& m : action) {
        for (int i = 0; i < wdim; ++i) {
            for (int j = 0; j < wdim; ++j) {
                if (!m(i, j).is_exact()) {
                    return false;
                }
            }
        }
    }
    return true;
}

ModuleInstance adjoint_module(const VertexStructure& v) { return {v.dim(), v.Y}; }

Report check_module_shape(const VertexStructure& v, const ModuleInstance& w)
{
    Report r;
    r.name = "module-shape";
    if (w.action.size() != sz(v.dim())) {
        throw DomainError("module lists " + std::to_string(w.action.size()) + " operators for an algebra of dimension " +
                          std::to_string(v.dim()));
    }
    const LaurentMatrix one = w.operator_of(v.vacuum());
    for (int i = 0; i < w.wdim; ++i) {
        for (int j = 0; j < w.wdim; ++j) {
            const Laurent want = Laurent::constant(Rat(i == j ? 1 : 0));
            if (!agree(one(i, j), want)) {
                add_witness(r, {"x^0", format(one(i, j)), format(want), "Y_W(1,x) = 1, " + entry(i, j)});
            }
        }
    }
    return r;
}

PhiModuleInstance check_phi_module(const VertexStructure& v, const ModuleInstance& w, const Associate& phi, int kmax,
                                   int zorder)
{
    PhiModuleInstance out{w, phi, {}, {}};
    Report& r = out.report;
    r.name = "phi-module";
    r.absorb(check_module_shape(v, w));
    const int z = std::min(zorder, phi.zorder());
    Substituter at_phi(phi.series.truncated(z));
    const Bivariate x2 = Bivariate::monomial(Rat(1), 1, 0, z);
    const Bivariate d = phi.series.truncated(z) - x2;

    std::vector<BivariateMatrix> y_phi;
    for (int u = 0; u < v.dim(); ++u) {
        y_phi.push_back(w.action[sz(u)].map([&](const Laurent& c) { return at_phi(c); }));
    }
    nlohmann::json ks = nlohmann::json::array();
    for (int u = 0; u < v.dim(); ++u) {
        for (int t = 0; t < v.dim(); ++t) {
            const BivariateMatrix lhs0 = multiply(y_phi[sz(u)], w.action[sz(t)], Bivariate(std::vector<Laurent>(sz(z + 1))));
            BivariateMatrix rhs0(w.wdim, w.wdim, Bivariate(std::vector<Laurent>(sz(z + 1))));
            for (const auto& [e, m] : module_of_product(v, w, u, t)) {
                if (e < 0) {
                    throw DomainError("Y(u,z)v has a pole; the z-expansion is not a power series");
                }
                for (int i = 0; i < w.wdim; ++i) {
                    for (int j = 0; j < w.wdim; ++j) {
                        if (!m(i, j).empty() || !m(i, j).is_exact()) {
                            rhs0(i, j) += Bivariate::constant(m(i, j), z).shifted_z(e);
                        }
                    }
                }
            }
            Bivariate dk = Bivariate::constant(Laurent::constant(Rat(1)), z);
            std::optional<Witness> last;
            bool undetermined = false;
            int found = -1;
            for (int k = 0; k <= kmax && found < 0; ++k) {
                last.reset();
                undetermined = false;
                for (int i = 0; i < w.wdim && !last; ++i) {
                    for (int j = 0; j < w.wdim && !last; ++j) {
                        const Bivariate lhs = dk * lhs0(i, j);
                        const Bivariate rhs = dk * rhs0(i, j);
                        if (auto m = first_disagreement(lhs, rhs)) {
                            last = Witness{format_monomial({m->x_exp, m->z_exp, 0}, {"x2", "z"}), m->lhs.str(),
                                           m->rhs.str(),
                                           pair_name(v, u, t) + " k=" + std::to_string(k) + ", " + entry(i, j)};
                        } else if (!agree(lhs, rhs)) {
                            undetermined = true;
                        }
                    }
                }
                if (!last) {
                    found = k;
                }
                dk = dk * d;
            }
            out.k.push_back(found);
            ks.push_back({v.alg.labels[sz(u)], v.alg.labels[sz(t)], found});
            if (found < 0) {
                last->context += " (no k <= " + std::to_string(kmax) + ")";
                add_witness(r, *last);
            } else if (undetermined) {
                r.insufficient("pair " + pair_name(v, u, t) + " has no determined coefficients");
            }
        }
    }
    r.details = {{"kmax", kmax}, {"zorder", z}, {"k", ks}};
    return out;
}

Report check_exp_d_property(const VertexStructure& v, const ModuleInstance& w, const Associate& phi, int zorder)
{
    Report r;
    r.name = "exp-d";
    const int z = std::min(zorder, phi.zorder());
    Substituter at_phi(phi.series.truncated(z));
    for (int u = 0; u < v.dim(); ++u) {
        const VecSeries shifts = exp_xd(v.alg, {{0, basis_vector(v.dim(), u)}});
        std::vector<LaurentMatrix> by_power(sz(z + 1), LaurentMatrix(w.wdim, w.wdim));
        for (const auto& [e, vec] : shifts) {
            if (e <= z) {
                by_power[sz(e)] = w.operator_of(vec);
            }
        }
        for (int i = 0; i < w.wdim; ++i) {
            for (int j = 0; j < w.wdim; ++j) {
                std::vector<Laurent> lc(sz(z + 1));
                for (int e = 0; e <= z; ++e) {
                    lc[sz(e)] = by_power[sz(e)](i, j);
                }
                const Bivariate lhs(std::move(lc));
                const Bivariate rhs = at_phi(w.action[sz(u)](i, j));
                if (auto m = first_disagreement(lhs, rhs)) {
                    add_witness(r, {format_monomial({m->x_exp, m->z_exp, 0}, {"x", "z"}), m->lhs.str(), m->rhs.str(),
                                    "Y_W(e^{zD}" + v.alg.labels[sz(u)] + ",x), " + entry(i, j)});
                }
            }
        }
    }
    r.details = {{"zorder", z}};
    return r;
}

Report check_weak_commutativity(const VertexStructure& v, const ModuleInstance& w, int kmax)
{
    require_exact(w, "weak commutativity");
    Report r;
    r.name = "weak-commutativity";
    const std::vector<std::string> names{"x1", "x2"};
    nlohmann::json ks = nlohmann::json::array();
    for (int u = 0; u < v.dim(); ++u) {
        for (int t = 0; t < v.dim(); ++t) {
            const Matrix<MultiLaurent> uv = product3(w.action[sz(u)], 0, w.action[sz(t)], 1, names);
            const Matrix<MultiLaurent> vu = product3(w.action[sz(t)], 1, w.action[sz(u)], 0, names);
            const Rat eps(v.koszul(u, t));
            std::optional<Witness> last;
            int found = -1;
            for (int k = 0; k <= kmax && found < 0; ++k) {
                last.reset();
                const MultiLaurent pk = binomial_power(0, 1, -1, k, names);
                for (int i = 0; i < w.wdim && !last; ++i) {
                    for (int j = 0; j < w.wdim && !last; ++j) {
                        const auto mm = compare_interior(pk * uv(i, j), (pk * vu(i, j)) * eps, 0, 1);
                        if (!mm.empty()) {
                            last = Witness{format_monomial(mm[0].exps, names), mm[0].lhs.str(), mm[0].rhs.str(),
                                           pair_name(v, u, t) + " k=" + std::to_string(k) + ", " + entry(i, j)};
                        }
                    }
                }
                if (!last) {
                    found = k;
                }
            }
            ks.push_back({v.alg.labels[sz(u)], v.alg.labels[sz(t)], found});
            if (found < 0) {
                last->context += " (no k <= " + std::to_string(kmax) + ")";
                add_witness(r, *last);
            }
        }
    }
    r.details = {{"kmax", kmax}, {"k", ks}};
    return r;
}

Report check_module_jacobi(const VertexStructure& v, const ModuleInstance& w, int lo, int hi, int margin)
{
    Report r = jacobi_body(v, w, DeltaShape::x0_x1_minus_x2, DeltaShape::negx0_x2_minus_x1, DeltaShape::x2_x1_minus_x0,
                           1, lo, hi, margin, "module-jacobi");
    const RatMatrix d = v.alg.der;
    for (int u = 0; u < v.dim(); ++u) {
        const LaurentMatrix ydu = w.operator_of(column(d, u));
        for (int i = 0; i < w.wdim; ++i) {
            for (int j = 0; j < w.wdim; ++j) {
                const Laurent deriv = w.action[sz(u)](i, j).derivative();
                if (!agree(ydu(i, j), deriv)) {
                    add_witness(r, {entry(i, j), format(ydu(i, j)), format(deriv),
                                    "Y_W(D" + v.alg.labels[sz(u)] + ",x) = d/dx Y_W(" + v.alg.labels[sz(u)] + ",x)"});
                }
            }
        }
    }
    return r;
}

Report check_phi1_jacobi(const VertexStructure& v, const ModuleInstance& w, int lo, int hi, int margin)
{
    return jacobi_body(v, w, DeltaShape::z_inv_x2_minus_inv_x1, DeltaShape::negz_inv_x1_minus_inv_x2,
                       DeltaShape::inv_x2_inv_x1_plus_z, -1, lo, hi, margin, "phi1-jacobi");
}

ModuleInstance transform_module(const ModuleInstance& w, const CoordinateChange& f)
{
    const Laurent fl = f.f().to_laurent();
    ModuleInstance out{w.wdim, {}};
    for (const auto& m : w.action) {
        out.action.push_back(m.map([&](const Laurent& c) { return substitute(c, fl); }));
    }
    return out;
}

Report check_intertwiner(const RatMatrix& theta, const ModuleInstance& w1, const ModuleInstance& w2)
{
    Report r;
    r.name = "intertwiner";
    if (w1.action.size() != w2.action.size() || theta.rows() != w2.wdim || theta.cols() != w1.wdim) {
        throw DomainError("intertwiner shapes do not match the modules");
    }
    const LaurentMatrix t = theta.map([](const Rat& c) { return Laurent::constant(c); });
    for (std::size_t u = 0; u < w1.action.size(); ++u) {
        const LaurentMatrix a = product(t, w1.action[u]);
        const LaurentMatrix b = product(w2.action[u], t);
        for (int i = 0; i < a.rows(); ++i) {
            for (int j = 0; j < a.cols(); ++j) {
                if (auto e = first_disagreement(a(i, j), b(i, j))) {
                    add_witness(r, {"x^" + std::to_string(*e), a(i, j).coeff(*e).str(), b(i, j).coeff(*e).str(),
                                    "basis " + std::to_string(u) + ", " + entry(i, j)});
                }
            }
        }
    }
    return r;
}

Report compare_modules(const ModuleInstance& a, const ModuleInstance& b)
{
    Report r;
    r.name = "module-compare";
    if (a.wdim != b.wdim || a.action.size() != b.action.size()) {
        throw DomainError("modules have different shapes");
    }
    for (std::size_t u = 0; u < a.action.size(); ++u) {
        for (int i = 0; i < a.wdim; ++i) {
            for (int j = 0; j < a.wdim; ++j) {
                const Laurent& x = a.action[u](i, j);
                const Laurent& y = b.action[u](i, j);
                if (auto e = first_disagreement(x, y)) {
                    add_witness(r, {"x^" + std::to_string(*e), x.coeff(*e).str(), y.coeff(*e).str(),
                                    "basis " + std::to_string(u) + ", " + entry(i, j)});
                }
            }
        }
    }
    return r;
}

ModuleInstance dual_module(const VertexStructure& v, const ModuleInstance& w)
{
    ModuleInstance out{w.wdim, {}};
    for (int u = 0; u < v.dim(); ++u) {
        const LaurentMatrix& m = w.action[sz(u)];
        for (int j = 0; j < w.wdim; ++j) {
            for (int i = 0; i < w.wdim; ++i) {
                if (!m(j, i).is_exact()) {
                    throw DomainError("Y*_W(" + v.alg.labels[sz(u)] + ",x) alpha_" + std::to_string(j) +
                                      " is not bounded below; alpha_" + std::to_string(j) + " is not in D(W)");
                }
            }
        }
        out.action.push_back(m.transposed().map([](const Laurent& c) { return c.reflected(); }));
    }
    return out;
}

Report check_dual_theorem(const VertexStructure& v, const ModuleInstance& w, int kmax, int zorder, int lo, int hi,
                          int margin)
{
    Report r;
    r.name = "dual-theorem";
    const ModuleInstance dual = dual_module(v, w);
    nlohmann::json parts = nlohmann::json::object();

    Report pairing;
    pairing.name = "pairing";
    for (int u = 0; u < v.dim(); ++u) {
        for (int a = 0; a < w.wdim; ++a) {
            for (int b = 0; b < w.wdim; ++b) {
                // <Y*(v,x) alpha_a, w_b> against <alpha_a, Y_W(v,x^-1) w_b>.
                const Laurent lhs = dual.action[sz(u)](b, a);
                const Laurent rhs = w.action[sz(u)](a, b).reflected();
                if (lhs != rhs) {
                    add_witness(pairing, {"alpha_" + std::to_string(a) + ", w_" + std::to_string(b), format(lhs),
                                          format(rhs), "pairing for " + v.alg.labels[sz(u)]});
                }
            }
        }
    }

    Report deriv;
    deriv.name = "dual-derivative";
    const Laurent mx2 = Laurent::monomial(Rat(-1), 2);
    for (int u = 0; u < v.dim(); ++u) {
        const LaurentMatrix ydu = dual.operator_of(column(v.alg.der, u));
        for (int i = 0; i < w.wdim; ++i) {
            for (int j = 0; j < w.wdim; ++j) {
                const Laurent rhs = mx2 * dual.action[sz(u)](i, j).derivative();
                if (ydu(i, j) != rhs) {
                    add_witness(deriv, {entry(i, j), format(ydu(i, j)), format(rhs),
                                        "Y*(D" + v.alg.labels[sz(u)] + ",x) = -x^2 d/dx Y*(" + v.alg.labels[sz(u)] +
                                            ",x)"});
                }
            }
        }
    }

    const VertexStructure vo = opposite(v);
    const PhiModuleInstance pm = check_phi_module(vo, dual, star(additive(zorder)), kmax, zorder);
    const Report jac = check_phi1_jacobi(vo, dual, lo, hi, margin);
    for (const Report* p : std::initializer_list<const Report*>{&pairing, &deriv, &pm.report, &jac}) {
        parts[p->name] = to_string(p->status);
        for (const auto& wit : p->witnesses) {
            add_witness(r, {wit.monomial, wit.lhs, wit.rhs, p->name + ": " + wit.context});
        }
        if (p->status == Status::insufficient_precision) {
            r.absorb(*p);
        }
    }
    r.details = {{"checks", parts}, {"k", pm.report.details["k"]}, {"kmax", kmax}, {"zorder", zorder}};
    return r;
}

Report explore_dual(const VertexStructure& v, const ModuleInstance& w, const Associate& phi, int kmax)
{
    Report r;
    r.name = "dual-exploratory";
    const ModuleInstance dual = dual_module(v, w);
    const PhiModuleInstance pm = check_phi_module(opposite(v), dual, star(phi), kmax, phi.zorder());
    r.details = {{"exploratory", true}, {"observed", to_string(pm.report.status)}, {"k", pm.report.details["k"]}};
    if (!pm.report.witnesses.empty()) {
        const Witness& wit = pm.report.witnesses.front();
        r.details["first_witness"] = {wit.monomial, wit.lhs, wit.rhs, wit.context};
    }
    return r;
}

ModuleInstance module_from_json(const nlohmann::json& j, const VertexStructure& v)
{
    try {
        ModuleInstance w;
        w.wdim = j.at("wdim").get<int>();
        if (w.wdim < 1 || w.wdim > 64) {
            throw ParseError("wdim must be between 1 and 64");
        }
        w.action.assign(sz(v.dim()), LaurentMatrix(w.wdim, w.wdim));
        for (const auto& [label, entries] : j.at("action").items()) {
            const int u = v.alg.index_of(label);
            if (u < 0) {
                throw ParseError("unknown basis label '" + label + "' in module action");
            }
            for (const auto& e : entries) {
                const int i = e.at(0).get<int>();
                const int k = e.at(1).get<int>();
                if (i < 0 || k < 0 || i >= w.wdim || k >= w.wdim) {
                    throw ParseError("module entry index out of range");
                }
                w.action[sz(u)](i, k) += parse_laurent(e.at(2).get<std::string>());
            }
        }
        return w;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed module instance: ") + e.what());
    }
}

nlohmann::json to_json(const ModuleInstance& w, const VertexStructure& v)
{
    nlohmann::json action = nlohmann::json::object();
    for (int u = 0; u < v.dim(); ++u) {
        nlohmann::json entries = nlohmann::json::array();
        for (int i = 0; i < w.wdim; ++i) {
            for (int k = 0; k < w.wdim; ++k) {
                const Laurent& c = w.action[sz(u)](i, k);
                if (!c.is_exact_zero()) {
                    entries.push_back({i, k, format(c)});
                }
            }
        }
        action[v.alg.labels[sz(u)]] = entries;
    }
    return {{"wdim", w.wdim}, {"action", action}};
}

} // namespace phicoord
