#include "phicoord/laurent.hpp"

#include <algorithm>
#include <string>

#include "phicoord/errors.hpp"

namespace phicoord {

Laurent::Laurent(std::map<int, Rat> coeffs, int hi) : terms_(std::move(coeffs)), hi_(std::min(hi, kExact))
{
    normalize();
}

void Laurent::normalize()
{
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second.is_zero() || it->first > hi_) {
            it = terms_.erase(it);
        } else {
            ++it;
        }
    }
}

std::optional<int> Laurent::valuation() const
{
    if (terms_.empty()) {
        return std::nullopt;
    }
    return terms_.begin()->first;
}

int Laurent::valuation_bound() const
{
    if (terms_.empty()) {
        return is_exact() ? kExact : hi_ + 1;
    }
    return terms_.begin()->first;
}

Rat Laurent::coeff(int e) const
{
    if (e > hi_) {
        throw PrecisionError("coefficient of x^" + std::to_string(e) + " is beyond the known order " +
                             std::to_string(hi_));
    }
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

Laurent Laurent::truncated(int new_hi) const
{
    return Laurent(terms_, std::min(hi_, new_hi));
}

Laurent Laurent::derivative() const
{
    std::map<int, Rat> out;
    for (const auto& [e, c] : terms_) {
        if (e != 0) {
            out.emplace(e - 1, c * Rat(e));
        }
    }
    return Laurent(std::move(out), bound_add(hi_, -1));
}

Laurent Laurent::rescaled(const Rat& c) const
{
    std::map<int, Rat> out;
    for (const auto& [e, v] : terms_) {
        Rat p(1);
        const int n = e < 0 ? -e : e;
        for (int i = 0; i < n; ++i) {
            p *= c;
        }
        out.emplace(e, e < 0 ? v / p : v * p);
    }
    return Laurent(std::move(out), hi_);
}

Laurent Laurent::reflected() const
{
    if (!is_exact()) {
        throw PrecisionError("x -> 1/x requires an exactly known Laurent polynomial");
    }
    std::map<int, Rat> out;
    for (const auto& [e, c] : terms_) {
        out.emplace(-e, c);
    }
    return Laurent::exact(std::move(out));
}

Laurent Laurent::shifted(int k) const
{
    std::map<int, Rat> out;
    for (const auto& [e, c] : terms_) {
        out.emplace(e + k, c);
    }
    return Laurent(std::move(out), bound_add(hi_, k));
}

Laurent& Laurent::operator+=(const Laurent& o)
{
    hi_ = std::min(hi_, o.hi_);
    for (const auto& [e, c] : o.terms_) {
        terms_[e] += c;
    }
    normalize();
    return *this;
}

Laurent& Laurent::operator-=(const Laurent& o)
{
    hi_ = std::min(hi_, o.hi_);
    for (const auto& [e, c] : o.terms_) {
        terms_[e] -= c;
    }
    normalize();
    return *this;
}

Laurent& Laurent::operator*=(const Rat& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) {
        v *= c;
    }
    return *this;
}

Laurent operator*(const Laurent& a, const Laurent& b)
{
    if (a.is_exact_zero() || b.is_exact_zero()) {
        return Laurent();
    }
    const int hi = std::min(bound_add(a.hi_, b.valuation_bound()), bound_add(b.hi_, a.valuation_bound()));
    std::map<int, Rat> out;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            const int e = ea + eb;
            if (e > hi) {
                break;
            }
            out[e] += ca * cb;
        }
    }
    return Laurent(std::move(out), hi);
}

std::optional<int> first_disagreement(const Laurent& a, const Laurent& b)
{
    const int hi = std::min(a.hi(), b.hi());
    std::optional<int> best;
    auto consider = [&](int e) {
        if (e <= hi && a.coeff(e) != b.coeff(e) && (!best || e < *best)) {
            best = e;
        }
    };
    for (const auto& [e, c] : a.terms()) {
        consider(e);
    }
    for (const auto& [e, c] : b.terms()) {
        consider(e);
    }
    return best;
}

bool agree(const Laurent& a, const Laurent& b)
{
    return !first_disagreement(a, b).has_value();
}

Laurent invert_unit(const Laurent& a, int cap)
{
    const auto v = a.valuation();
    if (!v) {
        if (a.is_exact()) {
            throw DomainError("zero is not a unit");
        }
        throw PrecisionError("lowest term undetermined: no nonzero coefficient up to x^" + std::to_string(a.hi()));
    }
    const Rat lead_inv = a.coeff(*v).inverse();
    if (a.is_exact() && a.terms().size() == 1) {
        return Laurent::monomial(lead_inv, -*v);
    }
    const int hi = a.is_exact() ? std::max(cap, -*v) : a.hi() - 2 * *v;
    const int n = hi + *v;  // number of correction terms
    std::vector<Rat> b(static_cast<std::size_t>(n + 1));
    b[0] = lead_inv;
    for (int m = 1; m <= n; ++m) {
        Rat acc(0);
        for (const auto& [e, c] : a.terms()) {
            const int i = e - *v;
            if (i == 0) {
                continue;
            }
            if (i > m) {
                break;
            }
            acc += c * b[static_cast<std::size_t>(m - i)];
        }
        b[static_cast<std::size_t>(m)] = -lead_inv * acc;
    }
    std::map<int, Rat> out;
    for (int m = 0; m <= n; ++m) {
        out.emplace(m - *v, b[static_cast<std::size_t>(m)]);
    }
    return Laurent(std::move(out), hi);
}

// ---------------------------------------------------------------------------

TruncatedSeries::TruncatedSeries(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.empty()) {
        throw DomainError("truncated series needs at least the constant coefficient");
    }
}

TruncatedSeries TruncatedSeries::identity(int order)
{
    std::vector<Rat> c(static_cast<std::size_t>(order + 1));
    if (order >= 1) {
        c[1] = 1;
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::from_laurent(const Laurent& l, int order)
{
    if (auto v = l.valuation(); v && *v < 0) {
        throw DomainError("series has negative exponents; not a power series");
    }
    const int n = std::min(order, l.hi());
    if (n < 0) {
        throw PrecisionError("no coefficients of the power series are known");
    }
    std::vector<Rat> c(static_cast<std::size_t>(n + 1));
    for (const auto& [e, v] : l.terms()) {
        if (e <= n) {
            c[static_cast<std::size_t>(e)] = v;
        }
    }
    return TruncatedSeries(std::move(c));
}

Laurent TruncatedSeries::to_laurent() const
{
    std::map<int, Rat> m;
    for (int k = 0; k <= order(); ++k) {
        m.emplace(k, coeffs_[static_cast<std::size_t>(k)]);
    }
    return Laurent(std::move(m), order());
}

TruncatedSeries TruncatedSeries::truncated(int order) const
{
    const int n = std::min(order, this->order());
    return TruncatedSeries(std::vector<Rat>(coeffs_.begin(), coeffs_.begin() + n + 1));
}

TruncatedSeries TruncatedSeries::derivative() const
{
    if (order() == 0) {
        throw PrecisionError("derivative of an order-0 series has no known coefficients");
    }
    std::vector<Rat> c(static_cast<std::size_t>(order()));
    for (int k = 1; k <= order(); ++k) {
        c[static_cast<std::size_t>(k - 1)] = coeffs_[static_cast<std::size_t>(k)] * Rat(k);
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::integral() const
{
    std::vector<Rat> c(static_cast<std::size_t>(order() + 2));
    for (int k = 0; k <= order(); ++k) {
        c[static_cast<std::size_t>(k + 1)] = coeffs_[static_cast<std::size_t>(k)] / Rat(k + 1);
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b)
{
    const int n = std::min(a.order(), b.order());
    std::vector<Rat> c(static_cast<std::size_t>(n + 1));
    for (int k = 0; k <= n; ++k) {
        c[static_cast<std::size_t>(k)] = a[k] + b[k];
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b)
{
    return a + Rat(-1) * b;
}

TruncatedSeries operator*(const Rat& s, const TruncatedSeries& a)
{
    std::vector<Rat> c = a.coeffs();
    for (auto& v : c) {
        v *= s;
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b)
{
    const int n = std::min(a.order(), b.order());
    std::vector<Rat> c(static_cast<std::size_t>(n + 1));
    for (int i = 0; i <= n; ++i) {
        if (a[i].is_zero()) {
            continue;
        }
        for (int j = 0; i + j <= n; ++j) {
            c[static_cast<std::size_t>(i + j)] += a[i] * b[j];
        }
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries invert_unit(const TruncatedSeries& a)
{
    if (a[0].is_zero()) {
        throw DomainError("power series with zero constant term is not a unit");
    }
    const Rat inv0 = a[0].inverse();
    std::vector<Rat> b(a.coeffs().size());
    b[0] = inv0;
    for (int m = 1; m <= a.order(); ++m) {
        Rat acc(0);
        for (int i = 1; i <= m; ++i) {
            acc += a[i] * b[static_cast<std::size_t>(m - i)];
        }
        b[static_cast<std::size_t>(m)] = -inv0 * acc;
    }
    return TruncatedSeries(std::move(b));
}

TruncatedSeries compose(const TruncatedSeries& g, const TruncatedSeries& f)
{
    if (!f[0].is_zero()) {
        throw DomainError("composition g(f(x)) requires f(0) = 0");
    }
    const int n = std::min(g.order(), f.order());
    const TruncatedSeries ft = f.truncated(n);
    TruncatedSeries acc(std::vector<Rat>(static_cast<std::size_t>(n + 1)));
    for (int j = n; j >= 0; --j) {
        acc = acc * ft;
        std::vector<Rat> c = acc.coeffs();
        c[0] += g[j];
        acc = TruncatedSeries(std::move(c));
    }
    return acc;
}

TruncatedSeries comp_inverse(const TruncatedSeries& f)
{
    if (f.order() < 1 || !f[0].is_zero() || f[1].is_zero()) {
        throw DomainError("not invertible under composition: need f(0) = 0 and f'(0) != 0");
    }
    const int n = f.order();
    // x / f(x) as a unit power series of order n - 1.
    std::vector<Rat> shifted(f.coeffs().begin() + 1, f.coeffs().end());
    const TruncatedSeries q = invert_unit(TruncatedSeries(std::move(shifted)));
    std::vector<Rat> h(static_cast<std::size_t>(n + 1));
    TruncatedSeries power = q;
    for (int k = 1; k <= n; ++k) {
        h[static_cast<std::size_t>(k)] = power[k - 1] / Rat(k);
        power = power * q;
    }
    return TruncatedSeries(std::move(h));
}

} // namespace phicoord
