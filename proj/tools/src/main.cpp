#include <CLI11.hpp>

#include <functional>
#include <iostream>

#include "inputs.hpp"
#include "phicoord/errors.hpp"
#include "phicoord/series_io.hpp"

using namespace phicoord;
using namespace phicoord::cli;

namespace {

constexpr int kInputError = 3;

struct Config {
    int zorder = 6;
    int yorder = 0;
    int order = 6;
    int lo = -12;
    int hi = 12;
    int margin = 2;
    int kmax = 4;
    std::string format = "text";
};

struct Outcome {
    Report report;
    nlohmann::json result = nlohmann::json::object();
    std::string text;
};

Outcome done(const std::string& name, nlohmann::json result, std::string text)
{
    Outcome o;
    o.report.name = name;
    o.result = std::move(result);
    o.text = std::move(text);
    return o;
}

void print_record(const Config& cfg, const std::string& command, const std::string& status,
                  const nlohmann::json& body, const std::string& text)
{
    if (cfg.format == "json") {
        nlohmann::json rec{{"command", command}, {"status", status}};
        rec.update(body);
        std::cout << rec.dump() << "\n";
    } else {
        std::cout << text;
    }
}

int emit(const Config& cfg, const std::string& command, const Outcome& o)
{
    std::string text = o.text;
    if (!text.empty() && text.back() != '\n') {
        text += "\n";
    }
    text += summary(o.report) + "\n";
    print_record(cfg, command, to_string(o.report.status), {{"report", to_json(o.report)}, {"result", o.result}},
                 text);
    return exit_code(o.report.status);
}

int emit_error(const Config& cfg, const std::string& command, Status status, const std::string& msg)
{
    const bool precision = status == Status::insufficient_precision;
    const std::string kind = precision ? "insufficient_precision" : "input_error";
    print_record(cfg, command, kind, {{"error", msg}}, kind + ": " + msg + "\n");
    return precision ? exit_code(status) : kInputError;
}

std::string series_text(const Associate& a) { return format(a.series); }

/// Validation report when the algebra breaks a law, otherwise nothing.
std::optional<Outcome> invalid(const DifferentialSuperalgebra& alg)
{
    Report r = validate(alg);
    if (r.passed()) {
        return std::nullopt;
    }
    Outcome o;
    o.report = std::move(r);
    return o;
}

} // namespace

int main(int argc, char** argv)
{
    Config cfg;
    CLI::App app{"Associates of the additive formal group, delta identities and phi-coordinated modules"};
    app.fallthrough();
    app.require_subcommand(1);
    app.add_option("--zorder", cfg.zorder, "z truncation order")
        ->envname("PHICOORD_ZORDER")
        ->check(CLI::PositiveNumber);
    app.add_option("--yorder", cfg.yorder, "y truncation order for associativity (default: z-order)")
        ->envname("PHICOORD_YORDER")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--order", cfg.order, "truncation order of coordinate changes")
        ->envname("PHICOORD_ORDER")
        ->check(CLI::PositiveNumber);
    app.add_option("--lo", cfg.lo, "lower end of the exponent window")->envname("PHICOORD_LO");
    app.add_option("--hi", cfg.hi, "upper end of the exponent window")->envname("PHICOORD_HI");
    app.add_option("--margin", cfg.margin, "interior margin")->envname("PHICOORD_MARGIN")->check(CLI::NonNegativeNumber);
    app.add_option("--kmax", cfg.kmax, "largest k tried")->envname("PHICOORD_KMAX")->check(CLI::NonNegativeNumber);
    app.add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}));

    std::string command;
    std::function<Outcome()> run;
    auto bind = [&](CLI::App* sub, std::string name, std::function<Outcome()> body) {
        sub->callback([&, name, body] {
            command = name;
            run = body;
        });
    };

    std::string p, p1, p2, f_text, phi_spec = "additive", name;
    int n = 0;

    // associate
    CLI::App* assoc = app.add_subcommand("associate", "associates phi(x, z)");
    assoc->require_subcommand(1);
    auto* fg = assoc->add_subcommand("from-generator", "phi = exp(z p(x) d/dx) x");
    fg->add_option("--p", p, "generator p(x)")->required();
    bind(fg, "associate from-generator", [&] {
        const Associate a = from_generator(parse_laurent(p), cfg.zorder);
        return done("from-generator", to_json(a), series_text(a));
    });
    auto* cf = assoc->add_subcommand("closed-form", "closed form of phi_n");
    cf->add_option("--n", n, "n in phi_n")->required();
    bind(cf, "associate closed-form", [&] {
        const Associate a = phi_n_closed_form(n, cfg.zorder);
        return done("closed-form", to_json(a), series_text(a));
    });
    auto* ck = assoc->add_subcommand("check", "check the associate axioms");
    ck->add_option("--phi", phi_spec, "additive | phi:<n> | gen:<p> | star:<spec> | file.json");
    bind(ck, "associate check", [&] {
        Outcome o;
        o.report = check_associate(parse_phi(phi_spec, cfg.zorder), cfg.yorder > 0 ? cfg.yorder : cfg.zorder,
                                   cfg.zorder);
        return o;
    });
    auto* st = assoc->add_subcommand("star", "phi*(x, z) = 1/phi(1/x, z)");
    st->add_option("--phi", phi_spec, "associate");
    bind(st, "associate star", [&] {
        const Associate a = star(parse_phi(phi_spec, cfg.zorder));
        return done("star", to_json(a), series_text(a));
    });
    auto* cj = assoc->add_subcommand("conjugate", "phi_f = f^-1(phi(f(x), z))");
    cj->add_option("--phi", phi_spec, "associate");
    cj->add_option("--f", f_text, "coordinate change f(x)")->required();
    bind(cj, "associate conjugate", [&] {
        const Associate a = conjugate(parse_phi(phi_spec, cfg.zorder), parse_change(f_text, cfg.order));
        return done("conjugate", to_json(a), series_text(a));
    });
    auto* cl = assoc->add_subcommand("classify", "generator and equivalence class of an associate");
    cl->add_option("--phi", phi_spec, "associate");
    bind(cl, "associate classify", [&] {
        const Laurent g = recover_generator(parse_phi(phi_spec, cfg.zorder));
        const auto f = equivalent_to_additive(g, cfg.order);
        nlohmann::json res{{"generator", format(g)}, {"equivalent_to_additive", f.has_value()}};
        std::string text = "generator " + format(g) + "\n";
        if (g.is_exact() && g.terms().size() == 1 && g.terms().begin()->second == Rat(1)) {
            const int fam = g.terms().begin()->first - 1;
            res["phi_n"] = fam;
            text += "phi_" + std::to_string(fam) + "\n";
        }
        text += f ? "equivalent to x+z\n" : "not equivalent to x+z\n";
        return done("classify", res, text);
    });
    auto* ea = assoc->add_subcommand("equiv-additive", "solve p f' = 1 for f");
    ea->add_option("--p", p, "generator p(x)")->required();
    bind(ea, "associate equiv-additive", [&] {
        const auto f = equivalent_to_additive(parse_laurent(p), cfg.order);
        if (!f) {
            return done("equiv-additive", {{"verdict", "not equivalent"}}, "not equivalent");
        }
        return done("equiv-additive", {{"verdict", "equivalent"}, {"f", to_json(*f)}},
                    "equivalent\nf = " + format(f->f()) + "\nf^-1 = " + format(f->finv()));
    });
    auto* ve = assoc->add_subcommand("verify-equiv", "check p1 f' = p2(f)");
    ve->add_option("--p1", p1, "first generator")->required();
    ve->add_option("--p2", p2, "second generator")->required();
    ve->add_option("--f", f_text, "coordinate change f(x)")->required();
    bind(ve, "associate verify-equiv", [&] {
        Outcome o;
        o.report = check_equivalence(parse_laurent(p1), parse_laurent(p2), parse_change(f_text, cfg.order));
        return o;
    });

    // delta
    CLI::App* delta = app.add_subcommand("delta", "delta-function identities");
    delta->require_subcommand(1);
    auto* dc = delta->add_subcommand("check", "check a named identity on the window box");
    dc->add_option("identity", name, "one of: classical, phi1-proof, phi1-kernel, classical-kernel, binomial-directions")
        ->required();
    bool perturb = false;
    dc->add_flag("--perturb", perturb, "add 1 to the right side at x0^0 x1^0 x2^0 (negative control)");
    bind(dc, "delta check", [&] {
        auto [lhs, rhs] = named_identity_sides(name, cfg.lo, cfg.hi);
        if (perturb) {
            rhs.add_term({0, 0, 0}, Rat(1));
        }
        Outcome o;
        o.report = check_delta_identity(lhs, rhs, cfg.margin, name);
        return o;
    });

    // va
    std::string alg_spec, mod_spec = "adjoint";
    bool unchecked = false, use_opposite = false, phi1 = false;
    CLI::App* va = app.add_subcommand("va", "vertex algebras from differential superalgebras");
    va->require_subcommand(1);
    auto add_alg = [&](CLI::App* s) {
        s->add_option("--algebra", alg_spec, "poly:<m> | grassmann2 | file.json")->required();
    };
    auto* vv = va->add_subcommand("validate", "check the superalgebra laws");
    add_alg(vv);
    bind(vv, "va validate", [&] {
        Outcome o;
        o.report = validate(parse_algebra(alg_spec));
        return o;
    });
    auto* vax = va->add_subcommand("check-axioms", "vacuum, creation, S-locality, associativity, D operator");
    add_alg(vax);
    vax->add_flag("--unchecked", unchecked, "skip structure validation");
    bind(vax, "va check-axioms", [&] {
        const DifferentialSuperalgebra alg = parse_algebra(alg_spec);
        if (!unchecked) {
            if (auto bad = invalid(alg)) {
                return *bad;
            }
        }
        const VertexStructure v = VertexStructure::from_unchecked(alg);
        Outcome o;
        o.report = check_wqva_axioms(v, cfg.kmax, cfg.zorder);
        o.report.absorb(check_d_operator(v));
        o.result = o.report.details;
        return o;
    });
    auto* vo = va->add_subcommand("opposite", "Y^o(u,x)v = e^{xD} S Y(v,-x)u");
    add_alg(vo);
    bind(vo, "va opposite", [&] {
        const DifferentialSuperalgebra alg = parse_algebra(alg_spec);
        if (auto bad = invalid(alg)) {
            return *bad;
        }
        const VertexStructure op = opposite(make_vertex_algebra(alg));
        Outcome o;
        o.report = check_wqva_axioms(op, cfg.kmax, cfg.zorder);
        o.result = to_json(adjoint_module(op), op);
        o.text = format_module(adjoint_module(op), op);
        return o;
    });
    auto* vs = va->add_subcommand("skew", "skew symmetry with the Koszul sign");
    add_alg(vs);
    bind(vs, "va skew", [&] {
        const DifferentialSuperalgebra alg = parse_algebra(alg_spec);
        if (auto bad = invalid(alg)) {
            return *bad;
        }
        Outcome o;
        o.report = check_skew_symmetry(make_vertex_algebra(alg));
        return o;
    });

    // module
    CLI::App* mod = app.add_subcommand("module", "modules and phi-coordinated modules");
    mod->require_subcommand(1);
    auto add_mod = [&](CLI::App* s) {
        add_alg(s);
        s->add_option("--module", mod_spec, "adjoint | dual | file.json");
        s->add_option("--phi", phi_spec, "associate");
        s->add_flag("--opposite", use_opposite, "act by the opposite algebra");
    };
    auto vertex = [&] {
        VertexStructure v = make_vertex_algebra(parse_algebra(alg_spec));
        return v;
    };
    auto acting = [&](const VertexStructure& v) { return use_opposite ? opposite(v) : v; };
    auto* mp = mod->add_subcommand("check-phi", "phi-coordinated module axioms");
    add_mod(mp);
    bind(mp, "module check-phi", [&] {
        const VertexStructure v = vertex();
        const PhiModuleInstance pm =
            check_phi_module(acting(v), parse_module(mod_spec, v), parse_phi(phi_spec, cfg.zorder), cfg.kmax, cfg.zorder);
        Outcome o;
        o.report = pm.report;
        o.result = pm.report.details;
        return o;
    });
    auto* mt = mod->add_subcommand("transform", "Y^f_W(v,x) = Y_W(v,f(x)), checked against phi_f");
    add_mod(mt);
    mt->add_option("--f", f_text, "coordinate change f(x)")->required();
    bind(mt, "module transform", [&] {
        const VertexStructure v = vertex();
        const CoordinateChange f = parse_change(f_text, cfg.order);
        const ModuleInstance wf = transform_module(parse_module(mod_spec, v), f);
        const Associate phif = conjugate(parse_phi(phi_spec, cfg.zorder), f);
        Outcome o;
        o.report = check_phi_module(acting(v), wf, phif, cfg.kmax, cfg.zorder).report;
        o.result = {{"module", to_json(wf, v)}, {"phi", to_json(phif)}};
        o.text = format_module(wf, v) + "phi_f = " + format(phif.series);
        return o;
    });
    auto* md = mod->add_subcommand("dual", "D(W) over the opposite algebra with x/(1+zx)");
    add_mod(md);
    bind(md, "module dual", [&] {
        const VertexStructure v = vertex();
        const ModuleInstance w = parse_module(mod_spec, v);
        const ModuleInstance d = dual_module(v, w);
        Outcome o;
        o.report = check_dual_theorem(v, w, cfg.kmax, cfg.zorder, cfg.lo, cfg.hi, cfg.margin);
        o.result = {{"module", to_json(d, v)}, {"checks", o.report.details}};
        o.text = format_module(d, v);
        return o;
    });
    auto* mj = mod->add_subcommand("check-jacobi", "module S-Jacobi identity on the window box");
    add_mod(mj);
    mj->add_flag("--phi1", phi1, "use the Jacobi form for x/(1+zx)");
    bind(mj, "module check-jacobi", [&] {
        const VertexStructure v = vertex();
        const ModuleInstance w = parse_module(mod_spec, v);
        Outcome o;
        o.report = phi1 ? check_phi1_jacobi(acting(v), w, cfg.lo, cfg.hi, cfg.margin)
                        : check_module_jacobi(acting(v), w, cfg.lo, cfg.hi, cfg.margin);
        return o;
    });
    auto* me = mod->add_subcommand("exp-d", "Y_W(e^{zD}u,x) = Y_W(u,phi(x,z))");
    add_mod(me);
    bind(me, "module exp-d", [&] {
        const VertexStructure v = vertex();
        Outcome o;
        o.report = check_exp_d_property(acting(v), parse_module(mod_spec, v), parse_phi(phi_spec, cfg.zorder),
                                        cfg.zorder);
        return o;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kInputError;
    }
    if (cfg.lo > cfg.hi) {
        return emit_error(cfg, command, Status::fail, "--lo must not exceed --hi");
    }
    try {
        return emit(cfg, command, run());
    } catch (const PrecisionError& e) {
        return emit_error(cfg, command, Status::insufficient_precision, e.what());
    } catch (const std::exception& e) {
        return emit_error(cfg, command, Status::fail, e.what());
    }
}
