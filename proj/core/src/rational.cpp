#include "phicoord/rational.hpp"

#include <cctype>
#include <ostream>

#include "phicoord/errors.hpp"

namespace phicoord {

namespace {

bool valid_integer(std::string_view s)
{
    if (s.empty()) {
        return false;
    }
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) {
        return false;
    }
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
            return false;
        }
    }
    return true;
}

} // namespace

Rat::Rat(long num, long den)
{
    if (den == 0) {
        throw DomainError("rational with zero denominator");
    }
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rat Rat::parse(std::string_view text)
{
    const auto slash = text.find('/');
    std::string_view n = text.substr(0, slash);
    std::string_view d = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!valid_integer(n) || !valid_integer(d) || d[0] == '-' || d[0] == '+') {
        throw ParseError("malformed rational '" + std::string(text) + "'");
    }
    std::string ns(n.front() == '+' ? n.substr(1) : n);
    mpz_class num(ns, 10);
    mpz_class den(std::string(d), 10);
    if (den == 0) {
        throw ParseError("zero denominator in '" + std::string(text) + "'");
    }
    return Rat(mpq_class(num, den));
}

Rat Rat::inverse() const
{
    if (is_zero()) {
        throw DomainError("inverse of zero");
    }
    return Rat(mpq_class(1 / v_));
}

Rat& Rat::operator/=(const Rat& o)
{
    if (o.is_zero()) {
        throw DomainError("division by zero");
    }
    v_ /= o.v_;
    return *this;
}

std::string Rat::str() const
{
    if (v_.get_den() == 1) {
        return v_.get_num().get_str();
    }
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rat& r)
{
    return os << r.str();
}

Rat binomial(const Rat& a, int k)
{
    Rat out(1);
    for (int i = 0; i < k; ++i) {
        out *= (a - Rat(i)) / Rat(i + 1);
    }
    return out;
}

Rat factorial(int k)
{
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(k));
    return Rat(mpq_class(f));
}

} // namespace phicoord
