#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

namespace phicoord {

/// Exact rational number in canonical form (reduced, positive denominator).
///
/// Thin value wrapper over GMP's mpq_class. Every constructor and arithmetic
/// operation canonicalizes, so structural equality is mathematical equality.
class Rat {
public:
    Rat() = default;
    Rat(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
    Rat(int n) : v_(n) {}   // NOLINT(google-explicit-constructor)
    Rat(long num, long den);
    explicit Rat(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    /// Parses "num" or "num/den" (optional leading sign). Throws ParseError.
    static Rat parse(std::string_view text);

    const mpq_class& raw() const { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rat inverse() const;

    /// "num" when the denominator is 1, else "num/den".
    std::string str() const;

    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
    friend Rat operator-(const Rat& a) { return Rat(mpq_class(-a.v_)); }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b)
    {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r);

private:
    mpq_class v_{0};
};

/// Generalized binomial coefficient binom(a, k) for rational a, k >= 0.
Rat binomial(const Rat& a, int k);

/// k! as a rational.
Rat factorial(int k);

/// (-1)^n for any integer n.
inline int sign_power(long n) { return (n % 2 == 0) ? 1 : -1; }

} // namespace phicoord
