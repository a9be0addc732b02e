#pragma once

#include <optional>

#include "phicoord/multi_laurent.hpp"
#include "phicoord/report.hpp"
#include "phicoord/substitution.hpp"

namespace phicoord {

/// An associate phi(x, z) of the additive formal group, with its generator p
/// (the z^1 coefficient) when known.
struct Associate {
    Bivariate series;
    std::optional<Laurent> generator;

    int zorder() const { return series.zorder(); }
};

/// A change of coordinates f in xQ[[x]] with f'(0) != 0, with its inverse.
class CoordinateChange {
public:
    /// Throws DomainError unless f(0) = 0 and f'(0) != 0.
    explicit CoordinateChange(TruncatedSeries f);

    static CoordinateChange identity(int order) { return CoordinateChange(TruncatedSeries::identity(order)); }

    const TruncatedSeries& f() const { return f_; }
    const TruncatedSeries& finv() const { return finv_; }
    int order() const { return f_.order(); }

    CoordinateChange inverse() const;
    /// f(g(x)).
    friend CoordinateChange compose(const CoordinateChange& f, const CoordinateChange& g);

private:
    CoordinateChange(TruncatedSeries f, TruncatedSeries finv) : f_(std::move(f)), finv_(std::move(finv)) {}

    TruncatedSeries f_;
    TruncatedSeries finv_;
};

/// x + z.
Associate additive(int zorder);

/// exp(z p(x) d/dx) x.
Associate from_generator(const Laurent& p, int zorder);

/// phi_n(x, z) from its binomial series: x e^z for n = 0 and
/// x (1 - n z x^n)^(-1/n) otherwise.
Associate phi_n_closed_form(int n, int zorder);

/// Checks phi(x, 0) = x and phi(phi(x, y), z) = phi(x, y + z) on every
/// coefficient y^a z^b (a <= yorder, b <= zorder) whose x-range both sides
/// determine.
Report check_associate(const Associate& phi, int yorder, int zorder);

/// The z^1 coefficient of phi.
Laurent recover_generator(const Associate& phi);

/// 1 / phi(1/x, z), with generator -x^2 p(1/x). Needs a Laurent-polynomial generator.
Associate star(const Associate& phi);

/// f^(-1)(phi(f(x), z)).
Associate conjugate(const Associate& phi, const CoordinateChange& f);

/// The f with p f' = 1 and f(0) = 0, through x^order, when p is a power series
/// with p(0) != 0; empty otherwise. conjugate(additive, f) is then phi_p.
std::optional<CoordinateChange> equivalent_to_additive(const Laurent& p, int order);

/// Checks p1 f' = p2(f) wherever both sides are determined.
Report check_equivalence(const Laurent& p1, const Laurent& p2, const CoordinateChange& f);
/// check_equivalence as a predicate; throws PrecisionError when nothing can be compared.
bool verify_equivalence(const Laurent& p1, const Laurent& p2, const CoordinateChange& f);

/// Substitutes x1 = phi(x2, z) into an exact A(x1, x2), then x2 = phi(x1, -z),
/// and compares with A(x1, phi(x1, -z)) computed directly.
Report check_substitution_round_trip(const MultiLaurent& a, const Associate& phi);

nlohmann::json to_json(const Associate& a);
Associate associate_from_json(const nlohmann::json& j);
nlohmann::json to_json(const CoordinateChange& f);

} // namespace phicoord
