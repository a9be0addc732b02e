#include "inputs.hpp"

#include <fstream>

#include "phicoord/errors.hpp"
#include "phicoord/series_io.hpp"

namespace phicoord::cli {

namespace {

bool starts_with(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

int parse_int(const std::string& s, const std::string& what)
{
    try {
        std::size_t used = 0;
        const int n = std::stoi(s, &used);
        if (used == s.size()) {
            return n;
        }
    } catch (const std::exception&) {
    }
    throw ParseError("expected an integer for " + what + ", got '" + s + "'");
}

} // namespace

nlohmann::json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open '" + path + "'");
    }
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError("'" + path + "' is not valid JSON: " + e.what());
    }
}

Associate parse_phi(const std::string& spec, int zorder)
{
    if (spec == "additive") {
        return additive(zorder);
    }
    if (starts_with(spec, "phi:")) {
        return phi_n_closed_form(parse_int(spec.substr(4), "phi:<n>"), zorder);
    }
    if (starts_with(spec, "gen:")) {
        return from_generator(parse_laurent(spec.substr(4)), zorder);
    }
    if (starts_with(spec, "star:")) {
        return star(parse_phi(spec.substr(5), zorder));
    }
    return associate_from_json(read_json_file(spec));
}

DifferentialSuperalgebra parse_algebra(const std::string& spec)
{
    if (spec == "grassmann2") {
        return grassmann2();
    }
    if (starts_with(spec, "poly:")) {
        const int m = parse_int(spec.substr(5), "poly:<m>");
        if (m < 1 || m > 32) {
            throw ParseError("poly:<m> needs 1 <= m <= 32");
        }
        return truncated_polynomial(m);
    }
    return algebra_from_json(read_json_file(spec));
}

ModuleInstance parse_module(const std::string& spec, const VertexStructure& v)
{
    if (spec == "adjoint") {
        return adjoint_module(v);
    }
    if (spec == "dual") {
        return dual_module(v, adjoint_module(v));
    }
    return module_from_json(read_json_file(spec), v);
}

CoordinateChange parse_change(const std::string& text, int order)
{
    return CoordinateChange(parse_truncated(text, order));
}

std::string format_module(const ModuleInstance& w, const VertexStructure& v)
{
    std::string out;
    for (int u = 0; u < v.dim(); ++u) {
        const LaurentMatrix& m = w.action[static_cast<std::size_t>(u)];
        for (int i = 0; i < w.wdim; ++i) {
            for (int j = 0; j < w.wdim; ++j) {
                if (!m(i, j).is_exact_zero()) {
                    out += "Y_W(" + v.alg.labels[static_cast<std::size_t>(u)] + ",x)[" + std::to_string(i) + "," +
                           std::to_string(j) + "] = " + format(m(i, j)) + "\n";
                }
            }
        }
    }
    return out;
}

} // namespace phicoord::cli
