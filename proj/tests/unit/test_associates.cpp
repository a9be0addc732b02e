#include <doctest.h>

#include <random>

#include "phicoord/associates.hpp"
#include "phicoord/errors.hpp"

using namespace phicoord;

namespace {

Rat inv_factorial(int k)
{
    Rat r(1);
    for (int j = 2; j <= k; ++j) {
        r *= Rat(1, j);
    }
    return r;
}

// (a choose k) from the falling-factorial product.
Rat choose(const Rat& a, int k)
{
    Rat r(1);
    for (int j = 0; j < k; ++j) {
        r *= (a - Rat(j)) * Rat(1, j + 1);
    }
    return r;
}

Laurent x_pow(int e, const Rat& c = Rat(1)) { return Laurent::monomial(c, e); }

Laurent random_generator(std::mt19937& rng, int lo, int hi)
{
    std::uniform_int_distribution<int> coef(-2, 2);
    std::map<int, Rat> t;
    for (int e = lo; e <= hi; ++e) {
        t[e] = Rat(coef(rng));
    }
    t[lo] = Rat(1);
    return Laurent::exact(std::move(t));
}

CoordinateChange random_change(std::mt19937& rng, int order)
{
    std::uniform_int_distribution<int> coef(-2, 2);
    std::vector<Rat> c(static_cast<std::size_t>(order + 1));
    c[1] = Rat(coef(rng) >= 0 ? 1 : -1);
    for (int k = 2; k <= order; ++k) {
        c[static_cast<std::size_t>(k)] = Rat(coef(rng), 2);
    }
    return CoordinateChange(TruncatedSeries(std::move(c)));
}

} // namespace

TEST_CASE("associates from small generators")
{
    const Associate add = from_generator(Laurent::constant(Rat(1)), 6);
    CHECK(add.series[0] == x_pow(1));
    CHECK(add.series[1] == x_pow(0));
    for (int k = 2; k <= 6; ++k) {
        CHECK(add.series[k].is_exact_zero());
    }

    const Associate e = from_generator(x_pow(1), 7);
    for (int k = 0; k <= 7; ++k) {
        CHECK(e.series[k] == x_pow(1, inv_factorial(k)));
    }

    // (x^-1 d/dx)^k x by hand: x^-1, -x^-3, 3x^-5.
    const Associate r = from_generator(x_pow(-1), 3);
    CHECK(r.series[1] == x_pow(-1));
    CHECK(r.series[2] == x_pow(-3, Rat(-1, 2)));
    CHECK(r.series[3] == x_pow(-5, Rat(3, 6)));
}

TEST_CASE("closed forms of phi_n")
{
    const Associate p1 = phi_n_closed_form(1, 6);
    for (int k = 0; k <= 6; ++k) {
        CHECK(p1.series[k] == x_pow(1 + k));
    }
    const Associate m1 = phi_n_closed_form(-1, 6);
    CHECK(m1.series == additive(6).series);

    const Associate p2 = phi_n_closed_form(2, 6);
    CHECK(p2.series[1] == x_pow(3));
    CHECK(p2.series[2] == x_pow(5, Rat(3, 2)));
    for (int k = 0; k <= 6; ++k) {
        Rat expected = choose(Rat(-1, 2), k);
        for (int j = 0; j < k; ++j) {
            expected *= Rat(-2);
        }
        CHECK(p2.series[k] == x_pow(1 + 2 * k, expected));
    }

    for (int n = -3; n <= 3; ++n) {
        CAPTURE(n);
        CHECK(phi_n_closed_form(n, 6).series == from_generator(x_pow(n + 1), 6).series);
    }
}

TEST_CASE("associativity check")
{
    CHECK(check_associate(additive(6), 6, 6).passed());
    CHECK(check_associate(phi_n_closed_form(1, 6), 6, 6).passed());

    std::vector<Laurent> c{x_pow(1), Laurent::exact({{0, Rat(1)}, {2, Rat(1)}}), Laurent()};
    const Report bad = check_associate({Bivariate(c), std::nullopt}, 1, 1);
    REQUIRE(bad.status == Status::fail);
    CHECK(bad.witnesses.front().monomial == "x*y*z");
    CHECK(bad.witnesses.front().lhs == "2");
    CHECK(bad.witnesses.front().rhs == "0");

    const Report low = check_associate(additive(2), 4, 4);
    CHECK(low.status == Status::insufficient_precision);

    std::vector<Laurent> shifted{x_pow(1) + x_pow(0), x_pow(0)};
    CHECK(check_associate({Bivariate(shifted), std::nullopt}, 1, 1).status == Status::fail);
}

TEST_CASE("property: constructed associates pass at order 6")
{
    std::mt19937 rng(2718);
    for (int trial = 0; trial < 6; ++trial) {
        std::uniform_int_distribution<int> lo(-3, 3);
        const int a = lo(rng);
        const Laurent p = random_generator(rng, a, std::min(3, a + 2));
        CAPTURE(p.terms().size());
        const Associate phi = from_generator(p, 6);
        CHECK(check_associate(phi, 6, 6).passed());
        CHECK(recover_generator(phi) == p);
        CHECK(from_generator(recover_generator(phi), 6).series == phi.series);
    }
}

TEST_CASE("recover_generator examples")
{
    CHECK(recover_generator(additive(3)) == x_pow(0));
    CHECK(recover_generator(phi_n_closed_form(0, 3)) == x_pow(1));
    CHECK(recover_generator(phi_n_closed_form(1, 3)) == x_pow(2));
}

TEST_CASE("star")
{
    const Associate s1 = star(phi_n_closed_form(1, 6));
    CHECK(s1.series == additive(6).series.rescaled_z(Rat(-1)));
    const Associate s0 = star(phi_n_closed_form(0, 6));
    CHECK(s0.series == phi_n_closed_form(0, 6).series.rescaled_z(Rat(-1)));
    for (int n = -3; n <= 3; ++n) {
        CAPTURE(n);
        const Associate s = star(phi_n_closed_form(n, 6));
        CHECK(s.series == phi_n_closed_form(-n, 6).series.rescaled_z(Rat(-1)));
        CHECK(star(s).series == phi_n_closed_form(n, 6).series);
    }
    const Laurent p = Laurent::exact({{2, Rat(1)}, {-1, Rat(1)}});
    const Associate sp = star(from_generator(p, 5));
    CHECK(*sp.generator == Laurent::exact({{0, Rat(-1)}, {3, Rat(-1)}}));
    CHECK(recover_generator(sp) == *sp.generator);
    CHECK(check_associate(sp, 5, 5).passed());
    CHECK(star(sp).series == from_generator(p, 5).series);

    CHECK_THROWS_AS(star({additive(3).series, std::nullopt}), DomainError);
}

TEST_CASE("conjugation")
{
    const int order = 14;
    CHECK(agree(conjugate(additive(5), CoordinateChange::identity(order)).series, additive(5).series));

    // f = x/(1-x): the conjugate is (x + z(1-x))/(1 + z(1-x)), whose z^k
    // coefficient is (-1)^(k-1) (1-x)^(k+1) for k >= 1.
    std::vector<Rat> fc(order + 1, Rat(1));
    fc[0] = Rat(0);
    const Associate c = conjugate(additive(5), CoordinateChange(TruncatedSeries(fc)));
    CHECK(agree(c.series[0], x_pow(1)));
    for (int k = 1; k <= 5; ++k) {
        std::map<int, Rat> t;
        for (int j = 0; j <= k + 1; ++j) {
            t[j] = choose(Rat(k + 1), j) * Rat(j % 2 == 0 ? 1 : -1) * Rat(k % 2 == 1 ? 1 : -1);
        }
        CAPTURE(k);
        CHECK(c.series[k].hi() >= k + 1);
        CHECK(agree(c.series[k], Laurent::exact(t)));
    }
    CHECK(check_associate(c, 5, 5).passed());
}

TEST_CASE("property: conjugation is a right action")
{
    std::mt19937 rng(31415);
    for (int trial = 0; trial < 5; ++trial) {
        const Laurent p = random_generator(rng, -1, 1);
        const Associate phi = from_generator(p, 4);
        const CoordinateChange f = random_change(rng, 14);
        const CoordinateChange g = random_change(rng, 14);
        const Associate lhs = conjugate(conjugate(phi, f), g);
        const Associate rhs = conjugate(phi, compose(f, g));
        CHECK(agree(lhs.series, rhs.series));
        for (int k = 0; k <= 4; ++k) {
            CHECK(std::min(lhs.series[k].hi(), rhs.series[k].hi()) >= 2);
        }
        CHECK(check_associate(lhs, 4, 4).passed());
    }
}

TEST_CASE("equivalence with the additive associate")
{
    const auto f1 = equivalent_to_additive(x_pow(0), 8);
    REQUIRE(f1);
    CHECK(f1->f() == TruncatedSeries::identity(8));

    const Laurent p = Laurent::exact({{0, Rat(1)}, {1, Rat(1)}});
    const auto f = equivalent_to_additive(p, 12);
    REQUIRE(f);
    for (int k = 1; k <= 12; ++k) {
        CHECK(f->f()[k] == Rat(k % 2 == 1 ? 1 : -1, k));
    }
    CHECK_FALSE(equivalent_to_additive(x_pow(1), 8));
    CHECK_FALSE(equivalent_to_additive(Laurent::exact({{-1, Rat(1)}, {0, Rat(1)}}), 8));

    const Associate phi = from_generator(p, 5);
    CHECK(agree(conjugate(additive(5), *f).series, phi.series));
    CHECK(agree(conjugate(phi, f->inverse()).series, additive(5).series));

    CHECK(verify_equivalence(x_pow(0), x_pow(0), CoordinateChange::identity(6)));
    CHECK(verify_equivalence(p, x_pow(0), *f));
    std::vector<Rat> g{Rat(0), Rat(1), Rat(3), Rat(-1)};
    CHECK_FALSE(verify_equivalence(x_pow(1), x_pow(0), CoordinateChange(TruncatedSeries(g))));
    CHECK_FALSE(verify_equivalence(x_pow(1), x_pow(0), CoordinateChange::identity(6)));
}

TEST_CASE("equivalence witnesses conjugate generators into each other")
{
    // p2 = 1 + x^2 and f = x + x^2 give p1 = p2(f) / f'.
    const Laurent p2 = Laurent::exact({{0, Rat(1)}, {2, Rat(1)}});
    const CoordinateChange f(TruncatedSeries({Rat(0), Rat(1), Rat(1), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0),
                                              Rat(0), Rat(0), Rat(0), Rat(0), Rat(0)}));
    const Associate conj = conjugate(from_generator(p2, 4), f);
    const Laurent p1 = *conj.generator;
    CHECK(verify_equivalence(p1, p2, f));
    CHECK(agree(from_generator(p1, 4).series, conj.series));
}

TEST_CASE("substitution round trip")
{
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> ex(-2, 2);
    std::uniform_int_distribution<int> co(-3, 3);
    const std::vector<std::string> names{"x1", "x2"};
    for (int trial = 0; trial < 6; ++trial) {
        MultiLaurent a(names);
        for (int t = 0; t < 4; ++t) {
            a.add_term({ex(rng), ex(rng), 0}, Rat(co(rng)));
        }
        const Associate phi = trial % 2 == 0 ? phi_n_closed_form(trial / 2 - 1, 4) : from_generator(x_pow(-1), 4);
        CHECK(check_substitution_round_trip(a, phi).passed());
    }
    // With no x2 dependence the round trip returns A itself.
    MultiLaurent b(names);
    b.add_term({-1, 0, 0}, Rat(2));
    b.add_term({2, 0, 0}, Rat(1));
    const Associate phi = phi_n_closed_form(1, 4);
    const Bivariate back = substitute_x(substitute_bivariate(b, phi.series), phi.series.rescaled_z(Rat(-1)));
    CHECK(back == Bivariate::constant(Laurent::exact({{-1, Rat(2)}, {2, Rat(1)}}), 4));
}
