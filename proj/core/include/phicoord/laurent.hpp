#pragma once

#include <map>
#include <optional>
#include <vector>

#include "phicoord/rational.hpp"

namespace phicoord {

/// Upper validity bound meaning "every coefficient is known".
inline constexpr int kExact = 1 << 28;

/// Saturating addition on validity bounds.
inline int bound_add(int a, int b)
{
    if (a >= kExact || b >= kExact) {
        return kExact;
    }
    if (a <= -kExact || b <= -kExact) {
        return -kExact;
    }
    return a + b;
}

/// Element of Q((x)) known modulo x^(hi+1).
///
/// Coefficients are stored sparsely; absent keys inside the known range are
/// zero. Everything below the lowest stored term is zero, so the only
/// truncation is from above. hi() == kExact marks a Laurent polynomial whose
/// every coefficient is known.
class Laurent {
public:
    /// Exact zero.
    Laurent() = default;
    Laurent(std::map<int, Rat> coeffs, int hi);

    static Laurent exact(std::map<int, Rat> coeffs) { return Laurent(std::move(coeffs), kExact); }
    static Laurent monomial(const Rat& c, int e, int hi = kExact) { return Laurent({{e, c}}, hi); }
    static Laurent constant(const Rat& c) { return monomial(c, 0); }
    /// The series O(x^(hi+1)): nothing known beyond zeros up to hi.
    static Laurent unknown_above(int hi) { return Laurent({}, hi); }

    int hi() const { return hi_; }
    bool is_exact() const { return hi_ >= kExact; }
    bool is_exact_zero() const { return is_exact() && terms_.empty(); }
    /// True when every known coefficient is zero (the value may still be nonzero above hi).
    bool empty() const { return terms_.empty(); }

    /// Lowest exponent with a nonzero coefficient, if any is known.
    std::optional<int> valuation() const;
    /// Lower bound on the true valuation: valuation() or hi()+1.
    int valuation_bound() const;
    /// Largest stored exponent (kExact-free); only meaningful when !empty().
    int degree() const { return terms_.rbegin()->first; }

    /// Coefficient of x^e; throws PrecisionError if e > hi().
    Rat coeff(int e) const;
    const std::map<int, Rat>& terms() const { return terms_; }

    /// Same series known only up to min(hi(), new_hi).
    Laurent truncated(int new_hi) const;

    Laurent derivative() const;
    /// f(x) -> f(c x).
    Laurent rescaled(const Rat& c) const;
    /// f(x) -> f(1/x); exact inputs only.
    Laurent reflected() const;
    /// x^k * f(x).
    Laurent shifted(int k) const;

    Laurent& operator+=(const Laurent& o);
    Laurent& operator-=(const Laurent& o);
    Laurent& operator*=(const Rat& c);

    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
    friend Laurent operator*(Laurent a, const Rat& c) { return a *= c; }
    friend Laurent operator*(const Rat& c, Laurent a) { return a *= c; }
    friend Laurent operator-(Laurent a) { return a *= Rat(-1); }
    friend Laurent operator*(const Laurent& a, const Laurent& b);

    /// Structural equality: same guarantee, same coefficients.
    friend bool operator==(const Laurent& a, const Laurent& b) = default;

private:
    void normalize();

    std::map<int, Rat> terms_;
    int hi_ = kExact;
};

/// True when a and b agree on every coefficient both of them determine.
bool agree(const Laurent& a, const Laurent& b);

/// First exponent where a and b disagree within the common guarantee.
std::optional<int> first_disagreement(const Laurent& a, const Laurent& b);

/// Multiplicative inverse of a Laurent series with a determined lowest term.
///
/// For exact non-monomial input the result is infinite and is computed up to
/// x^cap. Throws DomainError for exact zero and PrecisionError when no nonzero
/// coefficient is known.
Laurent invert_unit(const Laurent& a, int cap);

/// Power series in x known through x^order.
class TruncatedSeries {
public:
    TruncatedSeries() : coeffs_(1) {}
    explicit TruncatedSeries(std::vector<Rat> coeffs);

    /// The identity series x at the given order.
    static TruncatedSeries identity(int order);
    /// Converts a Laurent series with no negative exponents.
    static TruncatedSeries from_laurent(const Laurent& l, int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rat& operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    Laurent to_laurent() const;
    TruncatedSeries truncated(int order) const;
    TruncatedSeries derivative() const;
    /// Antiderivative with zero constant term.
    TruncatedSeries integral() const;

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const Rat& c, const TruncatedSeries& a);
    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) = default;

private:
    std::vector<Rat> coeffs_;
};

/// Multiplicative inverse of a power series with nonzero constant term.
TruncatedSeries invert_unit(const TruncatedSeries& a);

/// g(f(x)); requires f(0) = 0. Valid through min(order(g), order(f)).
TruncatedSeries compose(const TruncatedSeries& g, const TruncatedSeries& f);

/// Compositional inverse of f in xQ[[x]] with f'(0) != 0 (Lagrange inversion).
TruncatedSeries comp_inverse(const TruncatedSeries& f);

} // namespace phicoord
