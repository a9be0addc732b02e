#include <doctest.h>

#include <random>

#include "phicoord/errors.hpp"
#include "phicoord/series_io.hpp"
#include "phicoord/substitution.hpp"

using namespace phicoord;

namespace {

Rat catalan(int n)
{
    // C_n = (2n)! / (n! (n+1)!), by direct product.
    Rat c(1);
    for (int k = 2; k <= n; ++k) {
        c *= Rat(n + k, k);
    }
    return c;
}

Rat inv_factorial(int k)
{
    Rat r(1);
    for (int j = 2; j <= k; ++j) {
        r *= Rat(1, j);
    }
    return r;
}

// (1/2 choose k) by its defining product.
Rat half_choose(int k)
{
    Rat r(1);
    for (int j = 0; j < k; ++j) {
        r *= (Rat(1, 2) - Rat(j)) * Rat(1, j + 1);
    }
    return r;
}

Laurent random_laurent(std::mt19937& rng, int lo, int hi_exp, bool exact)
{
    std::uniform_int_distribution<int> coef(-5, 5);
    std::uniform_int_distribution<int> den(1, 3);
    std::map<int, Rat> t;
    for (int e = lo; e <= hi_exp; ++e) {
        t[e] = Rat(coef(rng), den(rng));
    }
    return Laurent(std::move(t), exact ? kExact : hi_exp);
}

TruncatedSeries random_invertible(std::mt19937& rng, int order)
{
    std::uniform_int_distribution<int> coef(-4, 4);
    std::vector<Rat> c(static_cast<std::size_t>(order + 1));
    c[1] = Rat(coef(rng) == 0 ? 1 : 2);
    for (int k = 2; k <= order; ++k) {
        c[static_cast<std::size_t>(k)] = Rat(coef(rng), 2);
    }
    return TruncatedSeries(std::move(c));
}

} // namespace

TEST_CASE("rational parsing and printing")
{
    CHECK(Rat::parse("-6/4") == Rat(-3, 2));
    CHECK(Rat(-3, 2).str() == "-3/2");
    CHECK(Rat(4, 2).str() == "2");
    CHECK_THROWS_AS(Rat::parse("1/0"), ParseError);
    CHECK_THROWS_AS(Rat::parse("x"), ParseError);
    CHECK(binomial(Rat(-1, 2), 2) == Rat(3, 8));
    CHECK(factorial(5) == Rat(120));
}

TEST_CASE("geometric series is the inverse of 1 - x")
{
    const auto inv = invert_unit(TruncatedSeries({Rat(1), Rat(-1), Rat(0), Rat(0), Rat(0), Rat(0)}));
    for (int k = 0; k <= 5; ++k) {
        CHECK(inv[k] == Rat(1));
    }
    const Laurent l = invert_unit(Laurent::exact({{0, Rat(1)}, {1, Rat(-1)}}), 7);
    CHECK(l.hi() == 7);
    for (int k = 0; k <= 7; ++k) {
        CHECK(l.coeff(k) == Rat(1));
    }
}

TEST_CASE("compositional inverse of x + x^2 has signed Catalan coefficients")
{
    const int n = 10;
    std::vector<Rat> c(n + 1);
    c[1] = Rat(1);
    c[2] = Rat(1);
    const auto inv = comp_inverse(TruncatedSeries(c));
    for (int k = 1; k <= n; ++k) {
        CHECK(inv[k] == catalan(k - 1) * Rat(k % 2 == 1 ? 1 : -1));
    }
    CHECK(compose(TruncatedSeries(c), inv) == TruncatedSeries::identity(n));
}

TEST_CASE("log(1 + x) composed with exp(x) - 1 is x")
{
    const int n = 9;
    std::vector<Rat> lg(n + 1), ex(n + 1);
    for (int k = 1; k <= n; ++k) {
        lg[k] = Rat(k % 2 == 1 ? 1 : -1, k);
        ex[k] = inv_factorial(k);
    }
    CHECK(compose(TruncatedSeries(lg), TruncatedSeries(ex)) == TruncatedSeries::identity(n));
    CHECK(comp_inverse(TruncatedSeries(lg)) == TruncatedSeries(ex));
}

TEST_CASE("composition rejects a nonzero constant term")
{
    CHECK_THROWS_AS(compose(TruncatedSeries::identity(3), TruncatedSeries({Rat(1), Rat(1)})), DomainError);
    CHECK_THROWS_AS(comp_inverse(TruncatedSeries({Rat(0), Rat(0), Rat(1)})), DomainError);
}

TEST_CASE("windowed products keep only determined coefficients")
{
    const Laurent a({{-1, Rat(1)}, {0, Rat(2)}}, 3);
    const Laurent b({{2, Rat(1)}}, 5);
    const Laurent p = a * b;
    CHECK(p.hi() == 4);
    CHECK(p.coeff(1) == Rat(1));
    CHECK(p.coeff(2) == Rat(2));
    CHECK_THROWS_AS(p.coeff(5), PrecisionError);
    const Laurent e = Laurent::exact({{1, Rat(1)}}) * Laurent::exact({{-1, Rat(3)}});
    CHECK(e.is_exact());
    CHECK(e == Laurent::constant(Rat(3)));
}

TEST_CASE("derivation exponential of 1/x reproduces sqrt(x^2 + 2z)")
{
    const int zorder = 8;
    const Bivariate phi = exp_derivation(Laurent::monomial(Rat(1), -1), Laurent::monomial(Rat(1), 1), zorder);
    CHECK(phi.exact_coefficients());
    // sqrt(x^2 + 2z) = sum_k binom(1/2, k) 2^k z^k x^(1-2k).
    for (int k = 0; k <= zorder; ++k) {
        Rat expected = half_choose(k);
        for (int j = 0; j < k; ++j) {
            expected *= Rat(2);
        }
        CHECK(phi[k] == Laurent::monomial(expected, 1 - 2 * k));
    }
}

TEST_CASE("derivation exponential flags an exhausted window")
{
    // Relative precision survives when the lowest term of p is known.
    const Laurent p({{-1, Rat(1)}}, -1);
    const Bivariate b = exp_derivation(p, Laurent::monomial(Rat(1), 1), 6);
    CHECK(b[6].coeff(-11) == exp_derivation(Laurent::monomial(Rat(1), -1), Laurent::monomial(Rat(1), 1), 6)[6].coeff(-11));
    try {
        exp_derivation(Laurent::unknown_above(0), Laurent::monomial(Rat(1), 1), 6);
        FAIL("expected PrecisionError");
    } catch (const PrecisionError& e) {
        CHECK(std::string(e.what()).find("iterate 1") != std::string::npos);
    }
}

TEST_CASE("substitution of 1/x into x + z is the binomial series")
{
    const int zorder = 6;
    const Bivariate w = Bivariate::monomial(Rat(1), 1, 0, zorder) + Bivariate::monomial(Rat(1), 0, 1, zorder);
    const Bivariate s = substitute(Laurent::monomial(Rat(1), -1), w);
    for (int k = 0; k <= zorder; ++k) {
        CHECK(s[k] == Laurent::monomial(Rat(k % 2 == 0 ? 1 : -1), -1 - k));
    }
}

TEST_CASE("truncated substitution agrees with the exact polynomial where guaranteed")
{
    const int zorder = 4;
    std::map<int, Rat> t;
    for (int e = 0; e <= 12; ++e) {
        t[e] = Rat(e + 1);
    }
    const Laurent full = Laurent::exact(t);
    const Laurent cut = full.truncated(5);
    const Bivariate w = Bivariate::monomial(Rat(1), 1, 0, zorder) + Bivariate::monomial(Rat(1), 2, 1, zorder);
    const Bivariate exact = substitute(full, w);
    const Bivariate trunc = substitute(cut, w);
    CHECK(agree(exact, trunc));
    for (int k = 0; k <= zorder; ++k) {
        // x^e with e >= 6 contributes x^(e + k) at z^k.
        CHECK(trunc[k].hi() >= 5);
    }
    CHECK_THROWS_AS(substitute(cut, Bivariate::constant(Laurent::constant(Rat(1)), 2)), PrecisionError);
}

TEST_CASE("bivariate inversion")
{
    const int zorder = 5;
    const Bivariate w = Bivariate::monomial(Rat(1), 1, 0, zorder) + Bivariate::monomial(Rat(2), 0, 1, zorder);
    const Bivariate one = w * invert_unit(w, 20);
    CHECK(agree(one, Bivariate::constant(Laurent::constant(Rat(1)), zorder)));
}

TEST_CASE("text round trip")
{
    const Laurent l({{-2, Rat(3, 4)}, {0, Rat(-1)}, {3, Rat(1)}}, 6);
    CHECK(format(l) == "3/4*x^-2 - 1 + x^3 + O(x^7)");
    CHECK(parse_laurent(format(l)) == l);
    CHECK(parse_laurent("x^-1 - 1/2*x^3") == Laurent::exact({{-1, Rat(1)}, {3, Rat(-1, 2)}}));
    CHECK(format(Laurent()) == "0");

    const Bivariate b = exp_derivation(Laurent::monomial(Rat(1), -1), Laurent::monomial(Rat(1), 1), 3);
    CHECK(format(b) == "x + x^-1*z - 1/2*x^-3*z^2 + 1/2*x^-5*z^3 + O(z^4)");
    CHECK(parse_bivariate(format(b)) == b);

    CHECK_THROWS_AS(parse_laurent("x +"), ParseError);
    CHECK_THROWS_AS(parse_laurent("y^2"), ParseError);
    CHECK_THROWS_AS(parse_laurent("2 x"), ParseError);
}

TEST_CASE("property: format and JSON round trips on random series")
{
    std::mt19937 rng(20240917);
    for (int trial = 0; trial < 50; ++trial) {
        const Laurent l = random_laurent(rng, -3, 4, trial % 2 == 0);
        CHECK(parse_laurent(format(l)) == l);
        CHECK(laurent_from_json(to_json(l)) == l);
        std::vector<Laurent> zc;
        for (int k = 0; k <= 3; ++k) {
            zc.push_back(random_laurent(rng, -2, 3, (trial + k) % 3 == 0));
        }
        const Bivariate b(zc);
        CHECK(parse_bivariate(format(b)) == b);
        CHECK(bivariate_from_json(to_json(b)) == b);
    }
}

TEST_CASE("property: ring laws for exact Laurent polynomials")
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        const Laurent a = random_laurent(rng, -2, 2, true);
        const Laurent b = random_laurent(rng, -1, 3, true);
        const Laurent c = random_laurent(rng, 0, 2, true);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b).derivative() == a.derivative() * b + a * b.derivative());
    }
}

TEST_CASE("property: composition is associative and inversion is involutive")
{
    std::mt19937 rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        const auto f = random_invertible(rng, 8);
        const auto g = random_invertible(rng, 8);
        const auto h = random_invertible(rng, 8);
        CHECK(compose(compose(f, g), h) == compose(f, compose(g, h)));
        CHECK(comp_inverse(comp_inverse(f)) == f);
        CHECK(compose(f, comp_inverse(f)) == TruncatedSeries::identity(8));
    }
}

TEST_CASE("property: windowed inverse agrees with the inverse of the full polynomial")
{
    std::mt19937 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        Laurent a = random_laurent(rng, 1, 6, true);
        a += Laurent::monomial(Rat(1), 0);
        if (a.coeff(0).is_zero()) {
            continue;
        }
        const Laurent inv = invert_unit(a.truncated(6), 30);
        const Laurent full = invert_unit(a, 6);
        CHECK(agree(inv, full));
        CHECK(agree(inv * a, Laurent::constant(Rat(1))));
    }
}
