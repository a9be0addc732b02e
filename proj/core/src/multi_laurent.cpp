#include "phicoord/multi_laurent.hpp"

#include <algorithm>

#include "phicoord/errors.hpp"

namespace phicoord {

Window Window::shrunk(int margin) const
{
    Window w = *this;
    if (w.lo > -kExact) {
        w.lo += margin;
    }
    if (w.hi < kExact) {
        w.hi -= margin;
    }
    return w;
}

Window intersect(const Window& a, const Window& b)
{
    return {std::max(a.lo, b.lo), std::min(a.hi, b.hi)};
}

MultiLaurent::MultiLaurent(std::vector<std::string> names) : names_(std::move(names))
{
    if (names_.empty() || names_.size() > 3) {
        throw DomainError("multivariate data supports one to three variables");
    }
}

MultiLaurent::MultiLaurent(std::vector<std::string> names, std::array<Window, 3> windows)
    : MultiLaurent(std::move(names))
{
    windows_ = windows;
    for (std::size_t s = names_.size(); s < 3; ++s) {
        windows_[s] = Window::all();
    }
}

MultiLaurent MultiLaurent::monomial(std::vector<std::string> names, const Rat& c, const Exponents& e)
{
    MultiLaurent m(std::move(names));
    m.add_term(e, c);
    return m;
}

bool MultiLaurent::is_exact() const
{
    return std::all_of(windows_.begin(), windows_.end(), [](const Window& w) { return w.is_all(); });
}

bool MultiLaurent::in_window(const Exponents& e) const
{
    for (std::size_t s = 0; s < 3; ++s) {
        if (!windows_[s].contains(e[s])) {
            return false;
        }
    }
    return true;
}

Rat MultiLaurent::coeff(const Exponents& e) const
{
    if (!in_window(e)) {
        throw PrecisionError("monomial " + format_monomial(e, names_) + " lies outside the known window");
    }
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

void MultiLaurent::add_term(const Exponents& e, const Rat& c)
{
    if (!in_window(e) || c.is_zero()) {
        return;
    }
    for (std::size_t s = names_.size(); s < 3; ++s) {
        if (e[s] != 0) {
            throw DomainError("exponent in an unused variable slot");
        }
    }
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

void MultiLaurent::prune()
{
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second.is_zero() || !in_window(it->first)) {
            it = terms_.erase(it);
        } else {
            ++it;
        }
    }
}

MultiLaurent MultiLaurent::restricted(const std::array<Window, 3>& w) const
{
    MultiLaurent out = *this;
    for (std::size_t s = 0; s < 3; ++s) {
        out.windows_[s] = intersect(windows_[s], w[s]);
    }
    out.prune();
    return out;
}

MultiLaurent MultiLaurent::slice(int slot, int e) const
{
    const auto s = static_cast<std::size_t>(slot);
    if (!windows_[s].contains(e)) {
        throw PrecisionError("slice exponent outside the known window");
    }
    MultiLaurent out = *this;
    out.terms_.clear();
    out.windows_[s] = Window::all();
    for (const auto& [ex, c] : terms_) {
        if (ex[s] == e) {
            Exponents k = ex;
            k[s] = 0;
            out.terms_.emplace(k, c);
        }
    }
    return out;
}

std::optional<std::pair<int, int>> MultiLaurent::support_range(int slot) const
{
    if (terms_.empty()) {
        return std::nullopt;
    }
    int lo = kExact;
    int hi = -kExact;
    for (const auto& [e, c] : terms_) {
        lo = std::min(lo, e[static_cast<std::size_t>(slot)]);
        hi = std::max(hi, e[static_cast<std::size_t>(slot)]);
    }
    return std::make_pair(lo, hi);
}

MultiLaurent MultiLaurent::swapped(int a, int b) const
{
    MultiLaurent out = *this;
    const auto sa = static_cast<std::size_t>(a);
    const auto sb = static_cast<std::size_t>(b);
    std::swap(out.names_[sa], out.names_[sb]);
    std::swap(out.windows_[sa], out.windows_[sb]);
    out.terms_.clear();
    for (const auto& [e, c] : terms_) {
        Exponents k = e;
        std::swap(k[sa], k[sb]);
        out.terms_.emplace(k, c);
    }
    return out;
}

MultiLaurent& MultiLaurent::operator+=(const MultiLaurent& o)
{
    if (names_ != o.names_) {
        throw DomainError("variable sets differ");
    }
    for (std::size_t s = 0; s < 3; ++s) {
        windows_[s] = intersect(windows_[s], o.windows_[s]);
    }
    for (const auto& [e, c] : o.terms_) {
        terms_[e] += c;
    }
    prune();
    return *this;
}

MultiLaurent& MultiLaurent::operator-=(const MultiLaurent& o)
{
    return *this += o * Rat(-1);
}

MultiLaurent& MultiLaurent::operator*=(const Rat& c)
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

MultiLaurent operator*(const MultiLaurent& a, const MultiLaurent& b)
{
    if (a.names_ != b.names_) {
        throw DomainError("variable sets differ");
    }
    if (!a.is_exact() && !b.is_exact()) {
        throw PrecisionError("product of two windowed distributions is not determined");
    }
    const MultiLaurent& win = a.is_exact() ? b : a;
    const MultiLaurent& poly = a.is_exact() ? a : b;
    MultiLaurent out(a.names_);
    if (poly.terms_.empty()) {
        return out;
    }
    for (std::size_t s = 0; s < 3; ++s) {
        const Window& w = win.windows_[s];
        if (w.is_all()) {
            continue;
        }
        const auto range = poly.support_range(static_cast<int>(s));
        out.windows_[s] = {bound_add(w.lo, range->second), bound_add(w.hi, range->first)};
    }
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            out.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
        }
    }
    return out;
}

MultiLaurent embed(const Laurent& l, int slot, std::vector<std::string> names)
{
    if (!l.is_exact()) {
        throw PrecisionError("only exact Laurent polynomials embed into multivariate data");
    }
    MultiLaurent out(std::move(names));
    for (const auto& [e, c] : l.terms()) {
        Exponents ex{0, 0, 0};
        ex[static_cast<std::size_t>(slot)] = e;
        out.add_term(ex, c);
    }
    return out;
}

MultiLaurent binomial_power(int slot_a, int slot_b, int sign, int k, std::vector<std::string> names)
{
    MultiLaurent out(std::move(names));
    for (int j = 0; j <= k; ++j) {
        Exponents ex{0, 0, 0};
        ex[static_cast<std::size_t>(slot_a)] += k - j;
        ex[static_cast<std::size_t>(slot_b)] += j;
        out.add_term(ex, binomial(Rat(k), j) * Rat(sign > 0 ? 1 : sign_power(j)));
    }
    return out;
}

std::array<Window, 3> interior(const MultiLaurent& a, const MultiLaurent& b, int margin)
{
    std::array<Window, 3> w{};
    for (std::size_t s = 0; s < 3; ++s) {
        w[s] = intersect(a.windows()[s], b.windows()[s]).shrunk(margin);
    }
    return w;
}

std::vector<MultiMismatch> compare_interior(const MultiLaurent& a, const MultiLaurent& b, int margin,
                                            std::size_t max_witnesses)
{
    const auto region = interior(a, b, margin);
    auto inside = [&](const Exponents& e) {
        for (std::size_t s = 0; s < 3; ++s) {
            if (!region[s].contains(e[s])) {
                return false;
            }
        }
        return true;
    };
    std::vector<MultiMismatch> out;
    auto check = [&](const Exponents& e) {
        if (out.size() >= max_witnesses || !inside(e)) {
            return;
        }
        const Rat l = a.coeff(e);
        const Rat r = b.coeff(e);
        if (l != r) {
            out.push_back({e, l, r});
        }
    };
    for (const auto& [e, c] : a.terms()) {
        check(e);
    }
    for (const auto& [e, c] : b.terms()) {
        if (a.terms().count(e) == 0) {
            check(e);
        }
    }
    return out;
}

std::string format_monomial(const Exponents& e, const std::vector<std::string>& names)
{
    std::string out;
    for (std::size_t s = 0; s < names.size(); ++s) {
        if (e[s] == 0) {
            continue;
        }
        if (!out.empty()) {
            out += "*";
        }
        out += names[s];
        if (e[s] != 1) {
            out += "^" + std::to_string(e[s]);
        }
    }
    return out.empty() ? "1" : out;
}

} // namespace phicoord
