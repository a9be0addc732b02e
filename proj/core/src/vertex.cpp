#include "phicoord/vertex.hpp"

#include "phicoord/errors.hpp"
#include "phicoord/series_io.hpp"
#include "phicoord/substitution.hpp"

namespace phicoord {

namespace {

std::size_t sz(int i) { return static_cast<std::size_t>(i); }

const std::vector<std::string> kX12{"x1", "x2"};

bool is_zero(const Vec& v)
{
    for (const auto& x : v) {
        if (!x.is_zero()) {
            return false;
        }
    }
    return true;
}

void add_scaled(VecSeries& s, int e, const Vec& v, const Rat& c)
{
    auto [it, inserted] = s.try_emplace(e, Vec(v.size(), Rat(0)));
    for (std::size_t i = 0; i < v.size(); ++i) {
        it->second[i] += c * v[i];
    }
    if (is_zero(it->second)) {
        s.erase(it);
    }
}

VecSeries negate_x(const VecSeries& s)
{
    VecSeries out;
    for (const auto& [e, v] : s) {
        add_scaled(out, e, v, Rat(sign_power(e)));
    }
    return out;
}

// Entrywise product Y(a, x_sa) Y(b, x_sb) as data in (x1, x2).
Matrix<MultiLaurent> product_two(const LaurentMatrix& a, int slot_a, const LaurentMatrix& b, int slot_b)
{
    Matrix<MultiLaurent> out(a.rows(), b.cols(), MultiLaurent(kX12));
    for (int i = 0; i < a.rows(); ++i) {
        for (int k = 0; k < a.cols(); ++k) {
            if (a(i, k).empty()) {
                continue;
            }
            const MultiLaurent left = embed(a(i, k), slot_a, kX12);
            for (int j = 0; j < b.cols(); ++j) {
                if (b(k, j).empty()) {
                    continue;
                }
                out(i, j) += left * embed(b(k, j), slot_b, kX12);
            }
        }
    }
    return out;
}

std::string entry(int i, int j) { return "entry (" + std::to_string(i) + "," + std::to_string(j) + ")"; }

std::string pair_name(const DifferentialSuperalgebra& a, int u, int v)
{
    return "(" + a.labels[sz(u)] + "," + a.labels[sz(v)] + ")";
}

} // namespace

LaurentMatrix VertexStructure::vertex_operator(const Vec& a) const
{
    LaurentMatrix out(dim(), dim());
    for (int u = 0; u < dim(); ++u) {
        if (a[sz(u)].is_zero()) {
            continue;
        }
        for (int i = 0; i < dim(); ++i) {
            for (int j = 0; j < dim(); ++j) {
                out(i, j) += Y[sz(u)](i, j) * a[sz(u)];
            }
        }
    }
    return out;
}

VecSeries VertexStructure::act(int u, const Vec& w) const
{
    VecSeries out;
    const LaurentMatrix& m = Y[sz(u)];
    for (int j = 0; j < dim(); ++j) {
        if (w[sz(j)].is_zero()) {
            continue;
        }
        for (int k = 0; k < dim(); ++k) {
            for (const auto& [e, c] : m(k, j).terms()) {
                add_scaled(out, e, basis_vector(dim(), k), c * w[sz(j)]);
            }
        }
    }
    return out;
}

int VertexStructure::koszul(int u, int v) const
{
    return alg.parity[sz(u)] * alg.parity[sz(v)] == 1 ? -1 : 1;
}

VecSeries exp_xd(const DifferentialSuperalgebra& a, const VecSeries& s)
{
    VecSeries out;
    for (const auto& [e, v] : s) {
        Vec cur = v;
        for (int j = 0; !is_zero(cur); ++j) {
            if (j > a.dim) {
                throw DomainError("the derivation is not nilpotent");
            }
            add_scaled(out, e + j, cur, Rat(1) / factorial(j));
            cur = a.derive(cur);
        }
    }
    return out;
}

VertexStructure VertexStructure::from_unchecked(const DifferentialSuperalgebra& a)
{
    VertexStructure v{a, {}, false};
    for (int u = 0; u < a.dim; ++u) {
        VecSeries shifts = exp_xd(a, {{0, basis_vector(a.dim, u)}});
        LaurentMatrix m(a.dim, a.dim);
        for (const auto& [e, vec] : shifts) {
            const RatMatrix l = a.left(vec);
            for (int i = 0; i < a.dim; ++i) {
                for (int j = 0; j < a.dim; ++j) {
                    if (!l(i, j).is_zero()) {
                        m(i, j) += Laurent::monomial(l(i, j), e);
                    }
                }
            }
        }
        v.Y.push_back(std::move(m));
    }
    return v;
}

VertexStructure make_vertex_algebra(const DifferentialSuperalgebra& a)
{
    const Report r = validate(a);
    if (!r.passed()) {
        const Witness& w = r.witnesses.front();
        throw DomainError("invalid differential superalgebra: " + w.context + " fails at " + w.monomial + " (" +
                          w.lhs + " vs " + w.rhs + ")");
    }
    return VertexStructure::from_unchecked(a);
}

VertexStructure opposite(const VertexStructure& v)
{
    VertexStructure out{v.alg, {}, !v.opposite};
    const int n = v.dim();
    for (int u = 0; u < n; ++u) {
        LaurentMatrix m(n, n);
        for (int w = 0; w < n; ++w) {
            const VecSeries col = exp_xd(v.alg, negate_x(v.act(w, basis_vector(n, u))));
            for (const auto& [e, vec] : col) {
                for (int k = 0; k < n; ++k) {
                    if (!vec[sz(k)].is_zero()) {
                        m(k, w) += Laurent::monomial(vec[sz(k)], e);
                    }
                }
            }
        }
        out.Y.push_back(std::move(m));
    }
    return out;
}

Report check_wqva_axioms(const VertexStructure& v, int kmax, int zorder)
{
    Report r;
    r.name = "wqva-axioms";
    const int n = v.dim();
    const auto& labels = v.alg.labels;

    const LaurentMatrix vac = v.vertex_operator(v.vacuum());
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const Laurent want = Laurent::constant(Rat(i == j ? 1 : 0));
            if (vac(i, j) != want) {
                r.fail({"x^0", format(vac(i, j)), format(want), "vacuum Y(1,x) = 1, " + entry(i, j)});
            }
        }
    }
    for (int u = 0; u < n; ++u) {
        const VecSeries c = v.act(u, v.vacuum());
        const Vec at0 = c.count(0) ? c.at(0) : Vec(sz(n), Rat(0));
        if (!c.empty() && c.begin()->first < 0) {
            r.fail({"x^" + std::to_string(c.begin()->first), format_vec_series(v.alg, c), "no negative powers",
                    "creation Y(" + labels[sz(u)] + ",x)1 in V[[x]]"});
        } else if (at0 != basis_vector(n, u)) {
            r.fail({"x^0", format_vec_series(v.alg, {{0, at0}}), labels[sz(u)],
                    "creation lim Y(" + labels[sz(u)] + ",x)1 = " + labels[sz(u)]});
        }
    }

    const Bivariate shift = Bivariate::monomial(Rat(1), 1, 0, zorder) + Bivariate::monomial(Rat(1), 0, 1, zorder);
    nlohmann::json ks = nlohmann::json::array();
    for (int u = 0; u < n; ++u) {
        for (int w = 0; w < n; ++w) {
            const int eps = v.koszul(u, w);
            const Matrix<MultiLaurent> ab = product_two(v.Y[sz(u)], 0, v.Y[sz(w)], 1);
            const Matrix<MultiLaurent> ba = product_two(v.Y[sz(w)], 1, v.Y[sz(u)], 0);
            const VecSeries yuv = v.act(u, basis_vector(n, w));
            const int lowest = yuv.empty() ? 0 : yuv.begin()->first;
            std::optional<Witness> last;
            int found = -1;
            for (int k = 0; k <= kmax && found < 0; ++k) {
                last.reset();
                const MultiLaurent pk = binomial_power(0, 1, -1, k, kX12);
                for (int i = 0; i < n && !last; ++i) {
                    for (int j = 0; j < n && !last; ++j) {
                        const MultiLaurent lhs = pk * ab(i, j);
                        MultiLaurent rhs = pk * ba(i, j);
                        rhs *= Rat(eps);
                        const auto mm = compare_interior(lhs, rhs, 0, 1);
                        if (!mm.empty()) {
                            last = Witness{format_monomial(mm[0].exps, kX12), mm[0].lhs.str(), mm[0].rhs.str(),
                                           "S-locality " + pair_name(v.alg, u, w) + " k=" + std::to_string(k) +
                                               ", " + entry(i, j)};
                        }
                    }
                }
                if (last) {
                    continue;
                }
                if (k + lowest < 0) {
                    last = Witness{"x0^" + std::to_string(lowest), "power series", "pole of order " +
                                   std::to_string(-lowest), "associativity " + pair_name(v.alg, u, w) + " k=" +
                                   std::to_string(k)};
                    continue;
                }
                for (int i = 0; i < n && !last; ++i) {
                    for (int j = 0; j < n && !last; ++j) {
                        const Bivariate lhs = substitute_bivariate(pk * ab(i, j), shift);
                        std::vector<Laurent> rc(sz(zorder + 1));
                        for (const auto& [e, vec] : yuv) {
                            const int zpow = e + k;
                            if (zpow > zorder) {
                                continue;
                            }
                            for (int b = 0; b < n; ++b) {
                                if (!vec[sz(b)].is_zero()) {
                                    rc[sz(zpow)] += v.Y[sz(b)](i, j) * vec[sz(b)];
                                }
                            }
                        }
                        const Bivariate rhs(std::move(rc));
                        if (auto m = first_disagreement(lhs, rhs)) {
                            last = Witness{format_monomial({m->x_exp, m->z_exp, 0}, {"x2", "x0"}), m->lhs.str(),
                                           m->rhs.str(),
                                           "associativity " + pair_name(v.alg, u, w) + " k=" + std::to_string(k) +
                                               ", " + entry(i, j)};
                        }
                    }
                }
                if (!last) {
                    found = k;
                }
            }
            ks.push_back({labels[sz(u)], labels[sz(w)], found});
            if (found < 0) {
                last->context += " (no k <= " + std::to_string(kmax) + ")";
                r.fail(*last);
            }
        }
    }
    r.details = {{"kmax", kmax}, {"zorder", zorder}, {"k", ks}, {"opposite", v.opposite}};
    return r;
}

RatMatrix d_operator(const VertexStructure& v)
{
    const int n = v.dim();
    RatMatrix out(n, n, Rat(0));
    for (int u = 0; u < n; ++u) {
        const VecSeries c = v.act(u, v.vacuum());
        if (auto it = c.find(1); it != c.end()) {
            for (int k = 0; k < n; ++k) {
                out(k, u) = it->second[sz(k)];
            }
        }
    }
    return out;
}

Report check_d_operator(const VertexStructure& v)
{
    Report r;
    r.name = "d-operator";
    const int n = v.dim();
    const RatMatrix d = d_operator(v);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (d(i, j) != v.alg.der(i, j)) {
                r.fail({entry(i, j), d(i, j).str(), v.alg.der(i, j).str(), "D from Y(v,x)1 vs stored derivation"});
            }
        }
    }
    const LaurentMatrix dl = d.map([](const Rat& c) { return Laurent::constant(c); });
    for (int u = 0; u < n; ++u) {
        const LaurentMatrix& y = v.Y[sz(u)];
        const LaurentMatrix dy = multiply(dl, y, Laurent());
        const LaurentMatrix yd = multiply(y, dl, Laurent());
        const LaurentMatrix ydv = v.vertex_operator(column(d, u));
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                const Laurent comm = dy(i, j) - yd(i, j);
                const Laurent deriv = y(i, j).derivative();
                if (comm != ydv(i, j)) {
                    r.fail({entry(i, j), format(comm), format(ydv(i, j)),
                            "[D, Y(" + v.alg.labels[sz(u)] + ",x)] = Y(D" + v.alg.labels[sz(u)] + ",x)"});
                }
                if (deriv != ydv(i, j)) {
                    r.fail({entry(i, j), format(deriv), format(ydv(i, j)),
                            "d/dx Y(" + v.alg.labels[sz(u)] + ",x) = Y(D" + v.alg.labels[sz(u)] + ",x)"});
                }
            }
        }
    }
    return r;
}

Report check_skew_symmetry(const VertexStructure& v)
{
    Report r;
    r.name = "skew-symmetry";
    const int n = v.dim();
    for (int u = 0; u < n; ++u) {
        for (int w = 0; w < n; ++w) {
            const VecSeries lhs = v.act(u, basis_vector(n, w));
            VecSeries rhs;
            for (const auto& [e, vec] : exp_xd(v.alg, negate_x(v.act(w, basis_vector(n, u))))) {
                add_scaled(rhs, e, vec, Rat(v.koszul(u, w)));
            }
            if (lhs != rhs) {
                r.fail({pair_name(v.alg, u, w), format_vec_series(v.alg, lhs), format_vec_series(v.alg, rhs),
                        "Y(u,x)v = e^{xD} S Y(v,-x)u"});
            }
        }
    }
    return r;
}

std::string format_vec_series(const DifferentialSuperalgebra& a, const VecSeries& s)
{
    std::string out;
    for (const auto& [e, v] : s) {
        for (int i = 0; i < a.dim; ++i) {
            const Rat& c = v[sz(i)];
            if (c.is_zero()) {
                continue;
            }
            std::string mono = a.labels[sz(i)];
            if (e != 0) {
                mono = (e == 1 ? std::string("x") : "x^" + std::to_string(e)) + "*" + mono;
            }
            const bool neg = c.sign() < 0;
            const Rat mag = neg ? -c : c;
            const std::string term = mag == Rat(1) ? mono : mag.str() + "*" + mono;
            if (out.empty()) {
                out = neg ? "-" + term : term;
            } else {
                out += (neg ? " - " : " + ") + term;
            }
        }
    }
    return out.empty() ? "0" : out;
}

} // namespace phicoord
