#include "phicoord/associates.hpp"

#include <algorithm>

#include "phicoord/errors.hpp"
#include "phicoord/series_io.hpp"

namespace phicoord {

namespace {

const Laurent& identity_x()
{
    static const Laurent x = Laurent::monomial(Rat(1), 1);
    return x;
}

// True when a and b share at least one determined coefficient slot.
bool overlap(const Laurent& a, const Laurent& b)
{
    if (a.is_exact() && b.is_exact()) {
        return true;
    }
    return std::min(a.hi(), b.hi()) >= std::min(a.valuation_bound(), b.valuation_bound());
}

Rat power_of(const Rat& base, int k)
{
    Rat r(1);
    for (int j = 0; j < k; ++j) {
        r *= base;
    }
    return r;
}

} // namespace

CoordinateChange::CoordinateChange(TruncatedSeries f) : f_(std::move(f))
{
    if (f_.order() < 1 || !f_[0].is_zero() || f_[1].is_zero()) {
        throw DomainError("a coordinate change needs f(0) = 0 and f'(0) != 0");
    }
    finv_ = comp_inverse(f_);
}

CoordinateChange CoordinateChange::inverse() const
{
    return CoordinateChange(finv_, f_);
}

CoordinateChange compose(const CoordinateChange& f, const CoordinateChange& g)
{
    return CoordinateChange(compose(f.f_, g.f_), compose(g.finv_, f.finv_));
}

Associate additive(int zorder)
{
    return from_generator(Laurent::constant(Rat(1)), zorder);
}

Associate from_generator(const Laurent& p, int zorder)
{
    return {exp_derivation(p, identity_x(), zorder), p};
}

Associate phi_n_closed_form(int n, int zorder)
{
    if (zorder < 0) {
        throw DomainError("z-order must be nonnegative");
    }
    std::vector<Laurent> c;
    c.reserve(static_cast<std::size_t>(zorder + 1));
    for (int k = 0; k <= zorder; ++k) {
        if (n == 0) {
            c.push_back(Laurent::monomial(Rat(1) / factorial(k), 1));
        } else {
            c.push_back(Laurent::monomial(binomial(Rat(-1, n), k) * power_of(Rat(-n), k), 1 + n * k));
        }
    }
    return {Bivariate(std::move(c)), Laurent::monomial(Rat(1), n + 1)};
}

Report check_associate(const Associate& phi, int yorder, int zorder)
{
    Report r;
    r.name = "associate";
    const Bivariate& s = phi.series;
    r.details = {{"yorder", yorder}, {"zorder", zorder}, {"series_zorder", s.zorder()}};
    const std::vector<std::string> names{"x", "y", "z"};

    if (auto e = first_disagreement(s[0], identity_x())) {
        r.fail({format_monomial({*e, 0, 0}, names), s[0].coeff(*e).str(), identity_x().coeff(*e).str(),
                "phi(x,0) = x"});
    }
    if (s.zorder() < std::max(yorder, zorder)) {
        r.insufficient("series z-order " + std::to_string(s.zorder()) + " is below the requested orders");
        return r;
    }
    int compared = 0;
    int skipped = 0;
    try {
        Substituter sub(s.truncated(yorder));
        for (int b = 0; b <= zorder; ++b) {
            const Bivariate lhs = sub(s[b]);
            for (int a = 0; a <= yorder && a + b <= s.zorder(); ++a) {
                const Laurent rhs = s[a + b] * binomial(Rat(a + b), a);
                if (!overlap(lhs[a], rhs)) {
                    ++skipped;
                    continue;
                }
                ++compared;
                if (auto e = first_disagreement(lhs[a], rhs)) {
                    r.fail({format_monomial({*e, a, b}, names), lhs[a].coeff(*e).str(), rhs.coeff(*e).str(),
                            "phi(phi(x,y),z) = phi(x,y+z)"});
                }
            }
        }
    } catch (const PrecisionError& e) {
        r.insufficient(e.what());
        return r;
    }
    r.details["pairs_compared"] = compared;
    r.details["pairs_undetermined"] = skipped;
    if (compared == 0) {
        r.insufficient("no coefficient of the associativity law is determined");
    }
    return r;
}

Laurent recover_generator(const Associate& phi)
{
    if (phi.zorder() < 1) {
        throw PrecisionError("the generator needs the z^1 coefficient");
    }
    return phi.series[1];
}

Associate star(const Associate& phi)
{
    if (!phi.generator) {
        throw DomainError("star needs a known generator");
    }
    const Laurent& p = *phi.generator;
    if (!p.is_exact()) {
        throw DomainError("star needs a Laurent-polynomial generator");
    }
    const Bivariate s = phi.series.exact_coefficients() ? phi.series : from_generator(p, phi.zorder()).series;
    const Bivariate reflected = s.map([](const Laurent& c) { return c.reflected(); });
    return {invert_unit(reflected, kDefaultCap), -p.reflected().shifted(2)};
}

Associate conjugate(const Associate& phi, const CoordinateChange& f)
{
    const Laurent fl = f.f().to_laurent();
    Substituter inner(Bivariate::constant(fl, 0));
    std::vector<Laurent> pulled;
    pulled.reserve(phi.series.zcoeffs().size());
    for (const auto& c : phi.series.zcoeffs()) {
        pulled.push_back(inner(c)[0]);
    }
    Associate out{substitute(f.finv().to_laurent(), Bivariate(std::move(pulled))), std::nullopt};
    if (out.zorder() >= 1) {
        out.generator = out.series[1];
    }
    return out;
}

std::optional<CoordinateChange> equivalent_to_additive(const Laurent& p, int order)
{
    if (order < 1) {
        throw DomainError("order must be at least 1");
    }
    if (!p.empty() && p.terms().begin()->first < 0) {
        return std::nullopt;
    }
    if (p.hi() < 0) {
        throw PrecisionError("p(0) is not determined");
    }
    if (p.coeff(0).is_zero()) {
        return std::nullopt;
    }
    const int n = p.is_exact() ? order : std::min(order, p.hi() + 1);
    const TruncatedSeries inv = invert_unit(TruncatedSeries::from_laurent(p, n - 1));
    return CoordinateChange(inv.integral());
}

Report check_equivalence(const Laurent& p1, const Laurent& p2, const CoordinateChange& f)
{
    Report r;
    r.name = "equivalence";
    try {
        const Laurent lhs = p1 * f.f().derivative().to_laurent();
        const Laurent rhs = substitute(p2, f.f().to_laurent());
        r.details["determined_through"] = std::min(lhs.hi(), rhs.hi());
        if (!overlap(lhs, rhs)) {
            r.insufficient("p1 f' and p2(f) share no determined coefficient");
            return r;
        }
        if (auto e = first_disagreement(lhs, rhs)) {
            r.fail({format_monomial({*e, 0, 0}, {"x"}), lhs.coeff(*e).str(), rhs.coeff(*e).str(),
                    "p1 f' = p2(f)"});
        }
    } catch (const PrecisionError& e) {
        r.insufficient(e.what());
    }
    return r;
}

bool verify_equivalence(const Laurent& p1, const Laurent& p2, const CoordinateChange& f)
{
    const Report r = check_equivalence(p1, p2, f);
    if (r.status == Status::insufficient_precision) {
        throw PrecisionError(r.details.value("precision", std::string("equivalence not determined")));
    }
    return r.passed();
}

Report check_substitution_round_trip(const MultiLaurent& a, const Associate& phi)
{
    Report r;
    r.name = "substitution-round-trip";
    try {
        const Bivariate there = substitute_bivariate(a, phi.series);
        const Bivariate neg = phi.series.rescaled_z(Rat(-1));
        const Bivariate back = substitute_x(there, neg);
        const Bivariate direct = substitute_bivariate(a.swapped(0, 1), neg);
        if (auto m = first_disagreement(back, direct)) {
            r.fail({format_monomial({m->x_exp, m->z_exp, 0}, {"x1", "z"}), m->lhs.str(), m->rhs.str(),
                    "(A|x1=phi(x2,z))|x2=phi(x1,-z) = A(x1, phi(x1,-z))"});
        }
    } catch (const PrecisionError& e) {
        r.insufficient(e.what());
    }
    return r;
}

nlohmann::json to_json(const Associate& a)
{
    nlohmann::json j{{"series", to_json(a.series)}};
    j["generator"] = a.generator ? to_json(*a.generator) : nlohmann::json(nullptr);
    return j;
}

Associate associate_from_json(const nlohmann::json& j)
{
    try {
        Associate a{bivariate_from_json(j.at("series")), std::nullopt};
        if (j.contains("generator") && !j.at("generator").is_null()) {
            a.generator = laurent_from_json(j.at("generator"));
        }
        return a;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed associate record: ") + e.what());
    }
}

nlohmann::json to_json(const CoordinateChange& f)
{
    return {{"f", to_json(f.f())}, {"finv", to_json(f.finv())}};
}

} // namespace phicoord
