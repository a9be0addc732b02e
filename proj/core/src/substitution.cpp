#include "phicoord/substitution.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "phicoord/errors.hpp"

namespace phicoord {

namespace {

// Lower bound on the x-valuation of the z^k coefficient of w^e, e > 0, as
// e * v0 + k * slope.
int tail_slope(const Bivariate& w, int v0)
{
    int slope = 0;
    for (int j = 1; j <= w.zorder(); ++j) {
        if (w[j].is_exact_zero()) {
            continue;
        }
        const double ratio = static_cast<double>(w[j].valuation_bound() - v0) / j;
        slope = std::min(slope, static_cast<int>(std::floor(ratio)));
    }
    return slope;
}

Bivariate substitute_with(const Laurent& c, Substituter& powers)
{
    const Bivariate& w = powers.target();
    const int n = w.zorder();
    std::vector<Laurent> acc(static_cast<std::size_t>(n + 1));
    Bivariate out(std::move(acc));
    for (const auto& [e, coef] : c.terms()) {
        out += powers.power(e) * coef;
    }
    if (c.is_exact()) {
        return out;
    }
    const auto v0 = w[0].valuation();
    if (!v0 || *v0 < 1) {
        throw PrecisionError("a truncated Laurent series can only be substituted into a series of positive x-valuation");
    }
    const int slope = tail_slope(w, *v0);
    std::vector<Laurent> bounded;
    bounded.reserve(out.zcoeffs().size());
    for (int k = 0; k <= n; ++k) {
        const long tail = static_cast<long>(c.hi() + 1) * *v0 + static_cast<long>(k) * slope;
        bounded.push_back(out[k].truncated(static_cast<int>(tail - 1)));
    }
    return Bivariate(std::move(bounded));
}

} // namespace

Substituter::Substituter(Bivariate w, int cap) : w_(std::move(w)), cap_(cap) {}

const Bivariate& Substituter::power(int e)
{
    if (auto it = cache_.find(e); it != cache_.end()) {
        return it->second;
    }
    if (e == 0) {
        return cache_.emplace(0, Bivariate::constant(Laurent::constant(1), w_.zorder())).first->second;
    }
    if (e == 1) {
        return cache_.emplace(1, w_).first->second;
    }
    if (e == -1) {
        return cache_.emplace(-1, invert_unit(w_, cap_)).first->second;
    }
    const int step = e > 0 ? 1 : -1;
    Bivariate next = power(e - step) * power(step);
    return cache_.insert_or_assign(e, std::move(next)).first->second;
}

Bivariate Substituter::operator()(const Laurent& c)
{
    return substitute_with(c, *this);
}

Bivariate exp_derivation(const Laurent& p, const Laurent& g, int zorder)
{
    if (zorder < 0) {
        throw DomainError("z-order must be nonnegative");
    }
    std::vector<Laurent> out;
    out.reserve(static_cast<std::size_t>(zorder + 1));
    out.push_back(g);
    const bool exact = p.is_exact() && g.is_exact();
    long lower = g.valuation_bound();
    const int shift = p.valuation_bound() - 1;
    for (int k = 1; k <= zorder; ++k) {
        Laurent next = p * out.back().derivative() * Rat(1, k);
        lower += shift;
        if (!exact && !next.is_exact() && next.hi() < lower) {
            throw PrecisionError("x-window exhausted at iterate " + std::to_string(k) +
                                 " of the derivation exponential");
        }
        out.push_back(std::move(next));
    }
    return Bivariate(std::move(out));
}

Bivariate substitute(const Laurent& c, const Bivariate& w, int cap)
{
    Substituter powers(w, cap);
    return powers(c);
}

Laurent substitute(const Laurent& c, const Laurent& f, int cap)
{
    return substitute(c, Bivariate::constant(f, 0), cap)[0];
}

Bivariate substitute_x(const Bivariate& b, const Bivariate& w, int cap)
{
    const int n = std::min(b.zorder(), w.zorder());
    const Bivariate wt = w.truncated(n);
    Substituter powers(wt, cap);
    Bivariate out(std::vector<Laurent>(static_cast<std::size_t>(n + 1)));
    for (int k = 0; k <= n; ++k) {
        if (b[k].is_exact_zero()) {
            continue;
        }
        out += powers(b[k]).shifted_z(k);
    }
    return out;
}

Bivariate substitute_bivariate(const MultiLaurent& a, const Bivariate& s, int cap)
{
    if (a.nvars() < 2) {
        throw DomainError("substitution needs data in two variables (x1, x2)");
    }
    if (!a.is_exact()) {
        throw PrecisionError("substitution requires finite-support data in x1 and x2");
    }
    Substituter powers(s, cap);
    Bivariate out(std::vector<Laurent>(static_cast<std::size_t>(s.zorder() + 1)));
    const auto range = a.support_range(0);
    if (!range) {
        return out;
    }
    for (int i = range->first; i <= range->second; ++i) {
        const MultiLaurent sl = a.slice(0, i);
        if (sl.terms().empty()) {
            continue;
        }
        std::map<int, Rat> inner;
        for (const auto& [e, c] : sl.terms()) {
            inner.emplace(e[1], c);
        }
        out += powers.power(i) * Laurent::exact(std::move(inner));
    }
    return out;
}

} // namespace phicoord
