#include <doctest.h>

#include <random>

#include "phicoord/delta.hpp"
#include "phicoord/errors.hpp"

using namespace phicoord;

namespace {

const std::vector<std::string> kX{"x0", "x1", "x2"};

const std::vector<DeltaShape> kShapes{
    DeltaShape::x0_x1_minus_x2,        DeltaShape::negx0_x2_minus_x1,        DeltaShape::x2_x1_minus_x0,
    DeltaShape::z_inv_x2_minus_inv_x1, DeltaShape::negz_inv_x1_minus_inv_x2, DeltaShape::inv_x2_inv_x1_plus_z,
    DeltaShape::inv_x1_inv_x2_minus_z, DeltaShape::x1_x2_plus_x0,
};

MultiLaurent summand_power(const Summand& s, int m, const std::vector<std::string>& names)
{
    Exponents e{0, 0, 0};
    e[static_cast<std::size_t>(s.slot)] = s.power * m;
    return MultiLaurent::monomial(names, Rat(s.sign > 0 || m % 2 == 0 ? 1 : -1), e);
}

} // namespace

TEST_CASE("binomial expansions")
{
    const Frame f = Frame::box(kX, -6, 6);
    const Summand x1{1};
    const Summand mx2{2, 1, -1};
    MultiLaurent sq(kX);
    sq.add_term({0, 2, 0}, Rat(1));
    sq.add_term({0, 1, 1}, Rat(-2));
    sq.add_term({0, 0, 2}, Rat(1));
    CHECK(expand_binomial(x1, mx2, 2, ExpansionDirection::second, f) == sq);
    CHECK(expand_binomial(x1, mx2, 2, ExpansionDirection::first, f) == sq);

    const MultiLaurent geo = expand_binomial(x1, mx2, -1, ExpansionDirection::second, f);
    for (int a = -6; a <= 6; ++a) {
        for (int b = -6; b <= 6; ++b) {
            const bool on = b >= 0 && a == -1 - b;
            CHECK(geo.coeff({0, a, b}) == Rat(on ? 1 : 0));
        }
    }
    CHECK_THROWS_AS(geo.coeff({0, 7, 0}), PrecisionError);
}

TEST_CASE("the two expansions of (x1 - x2)^-2 differ by a derivative of the delta kernel")
{
    const Frame f = Frame::box(kX, -8, 8);
    MultiLaurent d = expand_binomial({1}, {2, 1, -1}, -2, ExpansionDirection::second, f);
    d -= expand_binomial({1}, {2, 1, -1}, -2, ExpansionDirection::first, f);
    // d/dx2 sum_n x2^n x1^(-n-1) = sum_n n x2^(n-1) x1^(-n-1).
    MultiLaurent oracle(kX, f.windows);
    for (int n = -9; n <= 9; ++n) {
        oracle.add_term({0, -n - 1, n - 1}, Rat(n));
    }
    CHECK(check_delta_identity(d, oracle, 1).passed());
}

TEST_CASE("delta terms spot values")
{
    const Frame f = Frame::box(kX, -5, 5);
    const MultiLaurent s1 = delta_term(DeltaShape::x0_x1_minus_x2, f);
    CHECK(s1.coeff({-1, 0, 0}) == Rat(1));
    // n = 2: x0^-3 (x1 - x2)^2.
    CHECK(s1.coeff({-3, 1, 1}) == Rat(-2));
    CHECK(s1.coeff({-3, 2, 0}) == Rat(1));
    CHECK(s1.coeff({-1, 1, 0}) == Rat(0));

    const Frame g = Frame::box({"z", "x1", "x2"}, -5, 5);
    const MultiLaurent s6 = delta_term(DeltaShape::inv_x2_inv_x1_plus_z, g);
    for (int a = -5; a <= 5; ++a) {
        for (int b = -5; b <= 5; ++b) {
            CHECK(s6.coeff({0, a, b}) == Rat(b == 1 - a ? 1 : 0));
        }
    }
}

TEST_CASE("named identities hold on the default box")
{
    for (const auto& name : identity_names()) {
        CAPTURE(name);
        const Report r = check_named_identity(name, -12, 12, 2);
        CHECK(r.passed());
    }
    CHECK_THROWS_AS(check_named_identity("nope", -4, 4, 1), DomainError);
}

TEST_CASE("property: the phi1 proof identity on random sub-boxes")
{
    std::mt19937 rng(12);
    std::uniform_int_distribution<int> lo(-12, -3);
    std::uniform_int_distribution<int> hi(3, 12);
    std::uniform_int_distribution<int> margin(2, 4);
    for (int trial = 0; trial < 8; ++trial) {
        const int l = lo(rng);
        const int h = hi(rng);
        const int m = margin(rng);
        CAPTURE(l);
        CAPTURE(h);
        CHECK(check_named_identity("phi1-proof", l, h, m).passed());
        CHECK(check_named_identity("classical", l, h, m).passed());
    }
}

TEST_CASE("perturbed side fails with a witness")
{
    const Frame f = Frame::box(kX, -6, 6);
    MultiLaurent lhs = delta_term(DeltaShape::x0_x1_minus_x2, f);
    lhs -= delta_term(DeltaShape::negx0_x2_minus_x1, f);
    MultiLaurent rhs = delta_term(DeltaShape::x2_x1_minus_x0, f);
    rhs.add_term({1, 0, -2}, Rat(1, 3));
    const Report r = check_delta_identity(lhs, rhs, 2);
    REQUIRE(r.status == Status::fail);
    CHECK(r.witnesses.front().monomial == "x0*x2^-2");
    CHECK(check_delta_identity(lhs, rhs, 5).passed());
    CHECK(check_delta_identity(lhs, rhs, 7).status == Status::insufficient_precision);
}

TEST_CASE("property: comparison is symmetric and margin-monotone")
{
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> ex(-6, 6);
    const Frame f = Frame::box(kX, -6, 6);
    for (int trial = 0; trial < 20; ++trial) {
        MultiLaurent a = delta_term(kShapes[static_cast<std::size_t>(trial) % 3], f);
        MultiLaurent b = a;
        b.add_term({ex(rng), ex(rng), ex(rng)}, Rat(1));
        for (int m = 0; m <= 6; ++m) {
            const Report ab = check_delta_identity(a, b, m);
            CHECK(ab.status == check_delta_identity(b, a, m).status);
            if (ab.passed()) {
                for (int m2 = m; m2 <= 5; ++m2) {
                    CHECK(check_delta_identity(a, b, m2).passed());
                }
            }
        }
    }
}

TEST_CASE("property: substitution inside every delta shape")
{
    // D^m delta(N/D) = N^m delta(N/D) for m >= 0.
    for (const auto s : kShapes) {
        const auto names = names_of(s);
        const Frame f = Frame::box(names, -10, 10);
        const MultiLaurent d = delta_term(s, f);
        const DeltaSpec spec = spec_of(s);
        for (int m = 0; m <= 3; ++m) {
            CAPTURE(to_string(s));
            CAPTURE(m);
            const MultiLaurent lhs = summand_power(spec.denominator, m, names) * d;
            const MultiLaurent rhs =
                expand_binomial(spec.lead, spec.tail, m, ExpansionDirection::second, f) * d;
            CHECK(check_delta_identity(lhs, rhs, 0).passed());
        }
    }
}
