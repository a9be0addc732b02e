#pragma once

#include "phicoord/bivariate.hpp"
#include "phicoord/multi_laurent.hpp"

namespace phicoord {

/// Default x-order used when an exact non-monomial Laurent series is inverted.
inline constexpr int kDefaultCap = 24;

/// sum_{k<=zorder} z^k/k! (p d/dx)^k g.
///
/// Throws PrecisionError naming the iterate at which the x-range of a
/// truncated p or g is exhausted.
Bivariate exp_derivation(const Laurent& p, const Laurent& g, int zorder);

/// c(w) for c in Q((x)) and w in Q((x))[[z]].
///
/// Exact c (a Laurent polynomial) may be substituted into any w with an
/// invertible z^0 coefficient. A truncated c needs the z^0 coefficient of w to
/// have positive valuation so the unknown tail of c only reaches high x-powers;
/// the result's per-coefficient guarantee accounts for that tail.
Bivariate substitute(const Laurent& c, const Bivariate& w, int cap = kDefaultCap);

/// Repeated substitution into one fixed w; powers of w are cached per instance.
class Substituter {
public:
    explicit Substituter(Bivariate w, int cap = kDefaultCap);

    const Bivariate& target() const { return w_; }
    /// w^e for any integer e.
    const Bivariate& power(int e);
    /// c(w), as substitute(c, w).
    Bivariate operator()(const Laurent& c);

private:
    Bivariate w_;
    int cap_;
    std::map<int, Bivariate> cache_;
};

/// c(f(x)) for a Laurent series c and a power series f with f(0) = 0.
Laurent substitute(const Laurent& c, const Laurent& f, int cap = kDefaultCap);

/// B(w(x,z), z) for B in Q((x))[[z]]: substitutes w for x in every z-coefficient.
Bivariate substitute_x(const Bivariate& b, const Bivariate& w, int cap = kDefaultCap);

/// A(x1, x2)|_{x1 = s(x2, z)} for exact A in slots (x1, x2).
///
/// The result is an element of Q((x2))[[z]]. Negative x1-powers use the
/// inverse of s in Q((x2))[[z]].
Bivariate substitute_bivariate(const MultiLaurent& a, const Bivariate& s, int cap = kDefaultCap);

} // namespace phicoord
