#include "phicoord/bivariate.hpp"

#include <algorithm>

#include "phicoord/errors.hpp"

namespace phicoord {

Bivariate::Bivariate(std::vector<Laurent> zcoeffs) : z_(std::move(zcoeffs))
{
    if (z_.empty()) {
        throw DomainError("bivariate series needs at least the z^0 coefficient");
    }
}

Bivariate Bivariate::constant(const Laurent& c, int zorder)
{
    std::vector<Laurent> z(static_cast<std::size_t>(zorder + 1));
    z[0] = c;
    return Bivariate(std::move(z));
}

Bivariate Bivariate::monomial(const Rat& c, int x_exp, int z_exp, int zorder)
{
    std::vector<Laurent> z(static_cast<std::size_t>(zorder + 1));
    if (z_exp >= 0 && z_exp <= zorder) {
        z[static_cast<std::size_t>(z_exp)] = Laurent::monomial(c, x_exp);
    }
    return Bivariate(std::move(z));
}

bool Bivariate::exact_coefficients() const
{
    return std::all_of(z_.begin(), z_.end(), [](const Laurent& c) { return c.is_exact(); });
}

Bivariate Bivariate::truncated(int zorder) const
{
    const int n = std::min(zorder, this->zorder());
    return Bivariate(std::vector<Laurent>(z_.begin(), z_.begin() + n + 1));
}

Bivariate Bivariate::rescaled_z(const Rat& c) const
{
    std::vector<Laurent> out = z_;
    Rat p(1);
    for (auto& l : out) {
        l *= p;
        p *= c;
    }
    return Bivariate(std::move(out));
}

Bivariate Bivariate::shifted_z(int k) const
{
    std::vector<Laurent> out(z_.size());
    for (std::size_t i = 0; i + static_cast<std::size_t>(k) < z_.size(); ++i) {
        out[i + static_cast<std::size_t>(k)] = z_[i];
    }
    return Bivariate(std::move(out));
}

Bivariate& Bivariate::operator+=(const Bivariate& o)
{
    z_.resize(std::min(z_.size(), o.z_.size()));
    for (std::size_t k = 0; k < z_.size(); ++k) {
        z_[k] += o.z_[k];
    }
    return *this;
}

Bivariate& Bivariate::operator-=(const Bivariate& o)
{
    z_.resize(std::min(z_.size(), o.z_.size()));
    for (std::size_t k = 0; k < z_.size(); ++k) {
        z_[k] -= o.z_[k];
    }
    return *this;
}

Bivariate& Bivariate::operator*=(const Rat& c)
{
    for (auto& l : z_) {
        l *= c;
    }
    return *this;
}

Bivariate operator*(const Bivariate& a, const Bivariate& b)
{
    const int n = std::min(a.zorder(), b.zorder());
    std::vector<Laurent> out(static_cast<std::size_t>(n + 1));
    for (int i = 0; i <= n; ++i) {
        if (a[i].is_exact_zero()) {
            continue;
        }
        for (int j = 0; i + j <= n; ++j) {
            if (!b[j].is_exact_zero()) {
                out[static_cast<std::size_t>(i + j)] += a[i] * b[j];
            }
        }
    }
    return Bivariate(std::move(out));
}

Bivariate operator*(const Bivariate& a, const Laurent& b)
{
    return a.map([&](const Laurent& c) { return c * b; });
}

std::optional<BivariateMismatch> first_disagreement(const Bivariate& a, const Bivariate& b)
{
    const int n = std::min(a.zorder(), b.zorder());
    for (int k = 0; k <= n; ++k) {
        if (auto e = first_disagreement(a[k], b[k])) {
            return BivariateMismatch{k, *e, a[k].coeff(*e), b[k].coeff(*e)};
        }
    }
    return std::nullopt;
}

bool agree(const Bivariate& a, const Bivariate& b)
{
    return !first_disagreement(a, b).has_value();
}

Bivariate invert_unit(const Bivariate& a, int cap)
{
    const int n = a.zorder();
    std::vector<Laurent> inv(static_cast<std::size_t>(n + 1));
    inv[0] = invert_unit(a[0], cap);
    const Laurent neg_inv0 = -inv[0];
    for (int k = 1; k <= n; ++k) {
        Laurent acc;
        for (int j = 1; j <= k; ++j) {
            if (!a[j].is_exact_zero()) {
                acc += a[j] * inv[static_cast<std::size_t>(k - j)];
            }
        }
        inv[static_cast<std::size_t>(k)] = neg_inv0 * acc;
    }
    return Bivariate(std::move(inv));
}

} // namespace phicoord
