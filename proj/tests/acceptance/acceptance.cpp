// Acceptance suite: one line per criterion, exit status 0 only when all pass.
//
// usage: acceptance <path-to-phicoord-cli> <fixtures-dir>

#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sys/wait.h>

#include "phicoord/errors.hpp"
#include "phicoord/module.hpp"
#include "phicoord/series_io.hpp"

using namespace phicoord;

namespace {

struct Outcome {
    bool ok = true;
    std::string note;

    void require(bool cond, const std::string& what)
    {
        if (!cond && ok) {
            ok = false;
            note = what;
        }
    }
};

Laurent x_pow(int e, const Rat& c = Rat(1)) { return Laurent::monomial(c, e); }

Laurent random_laurent(std::mt19937& rng, int lo, int hi, int cmax)
{
    std::uniform_int_distribution<int> coef(-cmax, cmax);
    std::map<int, Rat> t;
    for (int e = lo; e <= hi; ++e) {
        t[e] = Rat(coef(rng));
    }
    Laurent out = Laurent::exact(std::move(t));
    return out.empty() ? x_pow(0) : out;
}

// -x^2 p(1/x), term by term.
Laurent reflected_generator(const Laurent& p)
{
    std::map<int, Rat> t;
    for (const auto& [e, c] : p.terms()) {
        t[2 - e] = -c;
    }
    return Laurent::exact(std::move(t));
}

CoordinateChange random_change(std::mt19937& rng, int order)
{
    std::uniform_int_distribution<int> coef(-3, 3);
    std::vector<Rat> c(static_cast<std::size_t>(order + 1));
    c[1] = Rat(coef(rng) >= 0 ? 1 : -2);
    for (int k = 2; k <= order; ++k) {
        c[static_cast<std::size_t>(k)] = Rat(coef(rng), 2);
    }
    return CoordinateChange(TruncatedSeries(std::move(c)));
}

// Every z^k coefficient for k <= zorder is known at least through x^through.
bool determined(const Bivariate& b, int zorder, int through)
{
    if (b.zorder() < zorder) {
        return false;
    }
    for (int k = 0; k <= zorder; ++k) {
        if (b[k].hi() < through) {
            return false;
        }
    }
    return true;
}

std::string brief(const Report& r) { return summary(r); }

Outcome criterion1()
{
    Outcome o;
    std::mt19937 rng(1);
    const auto start = std::chrono::steady_clock::now();
    for (int i = 0; i < 50 && o.ok; ++i) {
        const Laurent p = random_laurent(rng, -3, 3, 5);
        const Associate phi = from_generator(p, 6);
        for (int k = 0; k <= 6; ++k) {
            for (const auto& [e, c] : phi.series[k].terms()) {
                o.require(e >= -30 && e <= 30, "support leaves [-30,30] for p = " + format(p));
            }
        }
        const Report r = check_associate(phi, 6, 6);
        o.require(r.passed(), "p = " + format(p) + ": " + brief(r));
        o.require(r.details.value("pairs_compared", 0) > 0, "nothing compared for p = " + format(p));
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.require(secs < 60.0, "runtime " + std::to_string(secs) + " s");
    if (o.ok) {
        o.note = "50 generators, " + std::to_string(secs).substr(0, 5) + " s";
    }
    return o;
}

Outcome criterion2()
{
    Outcome o;
    for (int n = -3; n <= 3; ++n) {
        const Bivariate a = phi_n_closed_form(n, 8).series;
        const Bivariate b = from_generator(x_pow(n + 1), 8).series;
        o.require(agree(a, b), "n = " + std::to_string(n));
        o.require(determined(a, 8, 0) && determined(b, 8, 0), "undetermined coefficients at n = " + std::to_string(n));
    }
    return o;
}

Outcome criterion3()
{
    Outcome o;
    for (int n = -3; n <= 3; ++n) {
        const Bivariate s = star(phi_n_closed_form(n, 6)).series;
        const Bivariate want = phi_n_closed_form(-n, 6).series.rescaled_z(Rat(-1));
        o.require(agree(s, want) && determined(s, 6, 0), "star(phi_" + std::to_string(n) + ")");
    }
    std::mt19937 rng(3);
    for (int i = 0; i < 20; ++i) {
        const Laurent p = random_laurent(rng, -3, 3, 5);
        const Associate phi = from_generator(p, 6);
        const Associate s = star(phi);
        o.require(s.generator && *s.generator == reflected_generator(p), "generator law for p = " + format(p));
        o.require(agree(s.series, from_generator(reflected_generator(p), 6).series), "star series for " + format(p));
        const Associate ss = star(s);
        o.require(ss.generator && *ss.generator == p, "star star generator for " + format(p));
        o.require(agree(ss.series, phi.series), "star star series for " + format(p));
    }
    return o;
}

Outcome criterion4()
{
    Outcome o;
    std::mt19937 rng(4);
    std::uniform_int_distribution<int> coef(-5, 5);
    for (int i = 0; i < 20; ++i) {
        std::map<int, Rat> t;
        for (int e = 0; e <= 6; ++e) {
            t[e] = Rat(coef(rng));
        }
        if (t[0].is_zero()) {
            t[0] = Rat(1);
        }
        const Laurent p(std::move(t), 6);
        const auto f = equivalent_to_additive(p, 6);
        o.require(f.has_value(), "no f for p = " + format(p));
        if (!f) {
            continue;
        }
        // f' = 1/p: phi_p = (x+z)_f, so phi_p conjugated by f^-1 is x+z.
        const Associate phi = from_generator(p, 6);
        const Bivariate back = conjugate(phi, f->inverse()).series;
        o.require(agree(back, additive(6).series), "conjugate back to x+z for p = " + format(p));
        o.require(determined(back, 6, 0), "x+z not determined for p = " + format(p));
        o.require(verify_equivalence(p, x_pow(0), *f), "p f' != 1 for p = " + format(p));
    }
    for (int n : {0, 1, 2, -3, -2}) {
        o.require(!equivalent_to_additive(x_pow(n + 1), 6), "x^" + std::to_string(n + 1) + " reported equivalent");
    }
    return o;
}

Outcome criterion5()
{
    Outcome o;
    std::mt19937 rng(5);
    for (int i = 0; i < 20; ++i) {
        const Associate phi = from_generator(random_laurent(rng, 0, 3, 3), 6);
        const CoordinateChange f = random_change(rng, 6);
        const CoordinateChange g = random_change(rng, 6);
        const Bivariate lhs = conjugate(conjugate(phi, f), g).series;
        const Bivariate rhs = conjugate(phi, compose(f, g)).series;
        o.require(agree(lhs, rhs), "triple " + std::to_string(i));
        o.require(determined(lhs, 6, 0) && determined(rhs, 6, 0), "empty determined region, triple " +
                                                                      std::to_string(i));
    }
    return o;
}

Outcome criterion6()
{
    Outcome o;
    std::mt19937 rng(6);
    std::uniform_int_distribution<int> ex(-4, 4);
    std::uniform_int_distribution<int> co(-5, 5);
    const std::vector<std::string> names{"x1", "x2"};
    for (int i = 0; i < 20; ++i) {
        MultiLaurent a(names);
        for (int t = 0; t < 6; ++t) {
            a.add_term({ex(rng), ex(rng), 0}, Rat(co(rng)));
        }
        for (int n : {-1, 0, 1}) {
            const Report r = check_substitution_round_trip(a, phi_n_closed_form(n, 6));
            o.require(r.passed(), "phi_" + std::to_string(n) + ", sample " + std::to_string(i) + ": " + brief(r));
        }
    }
    return o;
}

Outcome criterion7()
{
    Outcome o;
    const Report r = check_named_identity("phi1-proof", -12, 12, 2);
    o.require(r.passed(), brief(r));
    return o;
}

Outcome criterion8()
{
    Outcome o;
    std::vector<DifferentialSuperalgebra> algs;
    for (int m = 2; m <= 5; ++m) {
        algs.push_back(truncated_polynomial(m));
    }
    algs.push_back(grassmann2());
    for (const auto& a : algs) {
        const VertexStructure v = make_vertex_algebra(a);
        const Report ax = check_wqva_axioms(v, 4, 6);
        o.require(ax.passed(), "dim " + std::to_string(a.dim) + ": " + brief(ax));
        const Report jac = check_module_jacobi(v, adjoint_module(v), -12, 12, 2);
        o.require(jac.passed(), "S-Jacobi, dim " + std::to_string(a.dim) + ": " + brief(jac));
    }
    DifferentialSuperalgebra bad = truncated_polynomial(4);
    bad.m(1, 2, 3) = Rat(2);
    const Report r1 = check_wqva_axioms(VertexStructure::from_unchecked(bad), 4, 6);
    o.require(r1.status == Status::fail && !r1.witnesses.empty(), "perturbed Q[t]/(t^4) not rejected");
    DifferentialSuperalgebra badg = grassmann2();
    badg.m(2, 1, 3) = Rat(1);
    const Report r2 = check_wqva_axioms(VertexStructure::from_unchecked(badg), 4, 6);
    o.require(r2.status == Status::fail && !r2.witnesses.empty(), "perturbed Grassmann not rejected");
    return o;
}

Outcome criterion9()
{
    Outcome o;
    for (const auto& a : {truncated_polynomial(4), grassmann2()}) {
        const VertexStructure v = make_vertex_algebra(a);
        const ModuleInstance w = adjoint_module(v);
        const Report r = check_dual_theorem(v, w, 2, 6, -12, 12, 2);
        o.require(r.passed(), "dim " + std::to_string(a.dim) + ": " + brief(r));
        for (const auto& k : r.details["k"]) {
            o.require(k[2].get<int>() >= 0 && k[2].get<int>() <= 2, "k out of range");
        }
        // Converse direction: a perturbed dual fails both forms.
        ModuleInstance bad = dual_module(v, w);
        bad.action[1](2, 1) += x_pow(-2);
        const VertexStructure vo = opposite(v);
        const bool assoc_fails = check_phi_module(vo, bad, star(additive(6)), 2, 6).report.status == Status::fail;
        const bool jacobi_fails = check_phi1_jacobi(vo, bad, -12, 12, 2).status == Status::fail;
        o.require(assoc_fails && jacobi_fails, "perturbed dual passes one form, dim " + std::to_string(a.dim));
    }
    return o;
}

Outcome criterion10()
{
    Outcome o;
    const CoordinateChange f(parse_truncated("x + x^2", 6));
    std::vector<DifferentialSuperalgebra> algs{truncated_polynomial(2), truncated_polynomial(3),
                                               truncated_polynomial(4), truncated_polynomial(5), grassmann2()};
    for (const auto& a : algs) {
        const VertexStructure v = make_vertex_algebra(a);
        const ModuleInstance w = adjoint_module(v);
        const ModuleInstance wf = transform_module(w, f);
        const ModuleInstance back = transform_module(wf, f.inverse());
        o.require(compare_modules(back, w).passed(), "round trip, dim " + std::to_string(a.dim));
        for (const auto& m : back.action) {
            for (int i = 0; i < m.rows(); ++i) {
                for (int j = 0; j < m.cols(); ++j) {
                    o.require(m(i, j).hi() >= 6, "round trip not known through x^6");
                }
            }
        }
        const Report r = check_phi_module(v, wf, conjugate(additive(6), f), 4, 6).report;
        o.require(r.passed(), "transformed, dim " + std::to_string(a.dim) + ": " + brief(r));
    }
    return o;
}

Outcome criterion11()
{
    Outcome o;
    const CoordinateChange f(parse_truncated("x + x^2", 6));
    std::vector<DifferentialSuperalgebra> algs{truncated_polynomial(2), truncated_polynomial(3),
                                               truncated_polynomial(4), truncated_polynomial(5), grassmann2()};
    int instances = 0;
    for (const auto& a : algs) {
        const VertexStructure v = make_vertex_algebra(a);
        const ModuleInstance w = adjoint_module(v);
        const std::string tag = " dim " + std::to_string(a.dim);
        o.require(check_exp_d_property(v, w, additive(6), 6).passed(), "adjoint" + tag);
        o.require(check_exp_d_property(opposite(v), dual_module(v, w), star(additive(6)), 6).passed(), "dual" + tag);
        o.require(check_exp_d_property(v, transform_module(w, f), conjugate(additive(6), f), 6).passed(),
                  "transformed" + tag);
        instances += 3;
    }
    if (o.ok) {
        o.note = std::to_string(instances) + " instances";
    }
    return o;
}

int run_cli(const std::string& cmd, std::string& out)
{
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        return -1;
    }
    std::array<char, 4096> buf{};
    out.clear();
    while (std::fgets(buf.data(), static_cast<int>(buf.size()), pipe)) {
        out += buf.data();
    }
    const int status = pclose(pipe);
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string quote(const std::string& s)
{
    std::string q = "'";
    for (char c : s) {
        q += c == '\'' ? std::string("'\\''") : std::string(1, c);
    }
    return q + "'";
}

Outcome criterion12(const std::string& cli, const std::string& fixtures)
{
    Outcome o;
    std::ifstream in(fixtures + "/cli_cases.json");
    if (!in) {
        o.require(false, "cannot read " + fixtures + "/cli_cases.json");
        return o;
    }
    const nlohmann::json cases = nlohmann::json::parse(in);
    std::map<std::string, std::set<std::string>> kinds;
    int ran = 0;
    for (const auto& c : cases) {
        std::string cmd;
        if (c.contains("env")) {
            for (const auto& [k, v] : c.at("env").items()) {
                cmd += k + "=" + quote(v.get<std::string>()) + " ";
            }
        }
        cmd += quote(cli);
        for (const auto& a : c.at("args")) {
            std::string arg = a.get<std::string>();
            if (arg.rfind("@FIX@/", 0) == 0) {
                arg = fixtures + "/" + arg.substr(6);
            }
            cmd += " " + quote(arg);
        }
        cmd += " 2>/dev/null";
        std::string out;
        const int code = run_cli(cmd, out);
        const std::string label = c.at("name").get<std::string>();
        o.require(code == c.at("exit").get<int>(),
                  label + ": exit " + std::to_string(code) + ", expected " + std::to_string(c.at("exit").get<int>()));
        const std::string first = out.substr(0, out.find('\n'));
        if (c.contains("roundtrip")) {
            try {
                o.require(format(parse_bivariate(first)) == first, label + ": printed series does not re-parse");
            } catch (const std::exception& e) {
                o.require(false, label + ": " + e.what());
            }
        }
        if (c.contains("expect_prefix")) {
            o.require(first == c.at("expect_prefix").get<std::string>(), label + ": got '" + first + "'");
        }
        kinds[c.at("group").get<std::string>()].insert(c.at("kind").get<std::string>());
        ++ran;
    }
    o.require(ran >= 12, "only " + std::to_string(ran) + " fixtures");
    for (const std::string g : {"associate", "delta", "va", "module"}) {
        for (const std::string k : {"pass", "fail", "parse-error"}) {
            o.require(kinds[g].count(k) > 0, g + " lacks a " + k + " fixture");
        }
    }
    for (const std::string g : {"associate", "delta", "module"}) {
        o.require(kinds[g].count("precision") > 0, g + " lacks a precision fixture");
    }
    if (o.ok) {
        o.note = std::to_string(ran) + " fixtures";
    }
    return o;
}

} // namespace

int main(int argc, char** argv)
{
    if (argc < 3) {
        std::cerr << "usage: acceptance <phicoord-cli> <fixtures-dir>\n";
        return 2;
    }
    const std::string cli = argv[1];
    const std::string fixtures = argv[2];
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"associate axioms for random generators", criterion1},
        {"closed forms of phi_n", criterion2},
        {"star and its involution", criterion3},
        {"equivalence with x+z", criterion4},
        {"right action of coordinate changes", criterion5},
        {"substitution round trip", criterion6},
        {"phi1 delta identity", criterion7},
        {"vertex algebra axioms", criterion8},
        {"dual module theorem", criterion9},
        {"coordinate-change functor", criterion10},
        {"exp(zD) property", criterion11},
        {"CLI exit codes and round trips", [&] { return criterion12(cli, fixtures); }},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.ok = false;
            o.note = std::string("exception: ") + e.what();
        }
        failed += o.ok ? 0 : 1;
        std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first;
        if (!o.note.empty()) {
            std::cout << " (" << o.note << ")";
        }
        std::cout << std::endl;
    }
    std::cout << criteria.size() - static_cast<std::size_t>(failed) << "/" << criteria.size() << " criteria passed"
              << std::endl;
    return failed == 0 ? 0 : 1;
}
