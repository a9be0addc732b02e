#pragma once

#include <vector>

#include "phicoord/laurent.hpp"

namespace phicoord {

/// Element of Q((x))[[z]] truncated after z^zorder.
///
/// Each z-coefficient is a Laurent series in x carrying its own validity
/// bound, so substitutions that lose different amounts of x-precision per
/// z-degree keep everything they can prove.
class Bivariate {
public:
    Bivariate() : z_(1) {}
    explicit Bivariate(std::vector<Laurent> zcoeffs);

    /// c(x) viewed as a series in z with zero higher coefficients.
    static Bivariate constant(const Laurent& c, int zorder);
    /// c * x^a * z^b.
    static Bivariate monomial(const Rat& c, int x_exp, int z_exp, int zorder);

    int zorder() const { return static_cast<int>(z_.size()) - 1; }
    const Laurent& operator[](int k) const { return z_.at(static_cast<std::size_t>(k)); }
    const std::vector<Laurent>& zcoeffs() const { return z_; }

    /// True when every z-coefficient is an exactly known Laurent polynomial.
    bool exact_coefficients() const;

    Bivariate truncated(int zorder) const;
    /// z -> c z.
    Bivariate rescaled_z(const Rat& c) const;
    /// z^k * this, keeping the z-order.
    Bivariate shifted_z(int k) const;
    /// Applies an operation to each z-coefficient.
    template <typename F>
    Bivariate map(F&& f) const
    {
        std::vector<Laurent> out;
        out.reserve(z_.size());
        for (const auto& c : z_) {
            out.push_back(f(c));
        }
        return Bivariate(std::move(out));
    }

    Bivariate& operator+=(const Bivariate& o);
    Bivariate& operator-=(const Bivariate& o);
    Bivariate& operator*=(const Rat& c);

    friend Bivariate operator+(Bivariate a, const Bivariate& b) { return a += b; }
    friend Bivariate operator-(Bivariate a, const Bivariate& b) { return a -= b; }
    friend Bivariate operator*(Bivariate a, const Rat& c) { return a *= c; }
    friend Bivariate operator*(const Rat& c, Bivariate a) { return a *= c; }
    friend Bivariate operator*(const Bivariate& a, const Bivariate& b);
    friend Bivariate operator*(const Bivariate& a, const Laurent& b);

    friend bool operator==(const Bivariate& a, const Bivariate& b) = default;

private:
    std::vector<Laurent> z_;
};

/// Monomial x^e z^k where two bivariate series disagree inside their common guarantee.
struct BivariateMismatch {
    int z_exp;
    int x_exp;
    Rat lhs;
    Rat rhs;
};

std::optional<BivariateMismatch> first_disagreement(const Bivariate& a, const Bivariate& b);
bool agree(const Bivariate& a, const Bivariate& b);

/// Inverse in Q((x))[[z]]; the z^0 coefficient must be a unit in Q((x)).
Bivariate invert_unit(const Bivariate& a, int cap);

} // namespace phicoord
