#include "phicoord/delta.hpp"

#include <algorithm>

#include "phicoord/errors.hpp"

namespace phicoord {

namespace {

struct Range {
    long lo;
    long hi;
};

// Integers t with base + p * t inside w (p = +1 or -1).
Range solve(const Window& w, long base, int p)
{
    if (w.lo <= -kExact || w.hi >= kExact) {
        throw DomainError("infinite delta sums need a bounded window in every variable");
    }
    if (p > 0) {
        return {w.lo - base, w.hi - base};
    }
    return {base - w.hi, base - w.lo};
}

Rat sign_of(const Summand& s, long power)
{
    return Rat(s.sign > 0 ? 1 : sign_power(power));
}

std::size_t at(int slot) { return static_cast<std::size_t>(slot); }

void validate(const Summand& s)
{
    if (s.slot < 0 || s.slot > 2 || (s.power != 1 && s.power != -1) || (s.sign != 1 && s.sign != -1)) {
        throw DomainError("malformed binomial summand");
    }
}

// Adds sum_k binom(n, k) lead^(n-k) tail^k, each term times `scale` and the
// monomial `base`, for the k that land inside the window box.
void add_binomial_terms(MultiLaurent& out, const Summand& lead, const Summand& tail, long n, const Rat& scale,
                        const Exponents& base, const std::array<Window, 3>& windows)
{
    long kmin = 0;
    long kmax = n >= 0 ? n : static_cast<long>(kExact);
    if (!windows[at(tail.slot)].is_all()) {
        const Range r = solve(windows[at(tail.slot)], base[at(tail.slot)], tail.power);
        kmin = std::max(kmin, r.lo);
        kmax = std::min(kmax, r.hi);
    }
    if (!windows[at(lead.slot)].is_all()) {
        const Range r = solve(windows[at(lead.slot)], base[at(lead.slot)] + lead.power * n, -lead.power);
        kmin = std::max(kmin, r.lo);
        kmax = std::min(kmax, r.hi);
    }
    if (n < 0 && kmax >= kExact) {
        throw DomainError("a negative binomial power needs a bounded window");
    }
    for (long k = kmin; k <= kmax; ++k) {
        Exponents e = base;
        e[at(lead.slot)] += static_cast<int>(lead.power * (n - k));
        e[at(tail.slot)] += static_cast<int>(tail.power * k);
        out.add_term(e, scale * binomial(Rat(n), static_cast<int>(k)) * sign_of(lead, n - k) * sign_of(tail, k));
    }
}

} // namespace

Frame Frame::box(std::vector<std::string> names, int lo, int hi)
{
    return {std::move(names), {Window{lo, hi}, Window{lo, hi}, Window{lo, hi}}};
}

MultiLaurent expand_binomial(const Summand& a, const Summand& b, int n, ExpansionDirection dir, const Frame& frame)
{
    validate(a);
    validate(b);
    if (a.slot == b.slot) {
        throw DomainError("binomial summands must use different variables");
    }
    const Summand& lead = dir == ExpansionDirection::second ? a : b;
    const Summand& tail = dir == ExpansionDirection::second ? b : a;
    std::array<Window, 3> windows{Window::all(), Window::all(), Window::all()};
    if (n < 0) {
        windows[at(a.slot)] = frame.windows[at(a.slot)];
        windows[at(b.slot)] = frame.windows[at(b.slot)];
    }
    MultiLaurent out(frame.names, windows);
    add_binomial_terms(out, lead, tail, n, Rat(1), {0, 0, 0}, windows);
    return out;
}

DeltaSpec spec_of(DeltaShape s)
{
    switch (s) {
    case DeltaShape::x0_x1_minus_x2:
        return {{1, 1, 1}, {2, 1, -1}, {0, 1, 1}, 0, -1};
    case DeltaShape::negx0_x2_minus_x1:
        return {{2, 1, 1}, {1, 1, -1}, {0, 1, -1}, 0, -1};
    case DeltaShape::x2_x1_minus_x0:
        return {{1, 1, 1}, {0, 1, -1}, {2, 1, 1}, 2, -1};
    case DeltaShape::z_inv_x2_minus_inv_x1:
        return {{2, -1, 1}, {1, -1, -1}, {0, 1, 1}, 0, -1};
    case DeltaShape::negz_inv_x1_minus_inv_x2:
        return {{1, -1, 1}, {2, -1, -1}, {0, 1, -1}, 0, -1};
    case DeltaShape::inv_x2_inv_x1_plus_z:
        return {{1, -1, 1}, {0, 1, 1}, {2, -1, 1}, 2, 1};
    case DeltaShape::inv_x1_inv_x2_minus_z:
        return {{2, -1, 1}, {0, 1, -1}, {1, -1, 1}, 1, 1};
    case DeltaShape::x1_x2_plus_x0:
        return {{2, 1, 1}, {0, 1, 1}, {1, 1, 1}, 1, -1};
    }
    throw DomainError("unsupported delta shape");
}

std::string to_string(DeltaShape s)
{
    switch (s) {
    case DeltaShape::x0_x1_minus_x2:
        return "x0^-1 delta((x1-x2)/x0)";
    case DeltaShape::negx0_x2_minus_x1:
        return "x0^-1 delta((x2-x1)/(-x0))";
    case DeltaShape::x2_x1_minus_x0:
        return "x2^-1 delta((x1-x0)/x2)";
    case DeltaShape::z_inv_x2_minus_inv_x1:
        return "z^-1 delta((x2^-1-x1^-1)/z)";
    case DeltaShape::negz_inv_x1_minus_inv_x2:
        return "z^-1 delta((x1^-1-x2^-1)/(-z))";
    case DeltaShape::inv_x2_inv_x1_plus_z:
        return "x2 delta((x1^-1+z)/x2^-1)";
    case DeltaShape::inv_x1_inv_x2_minus_z:
        return "x1 delta((x2^-1-z)/x1^-1)";
    case DeltaShape::x1_x2_plus_x0:
        return "x1^-1 delta((x2+x0)/x1)";
    }
    return "?";
}

std::vector<std::string> names_of(DeltaShape s)
{
    switch (s) {
    case DeltaShape::z_inv_x2_minus_inv_x1:
    case DeltaShape::negz_inv_x1_minus_inv_x2:
    case DeltaShape::inv_x2_inv_x1_plus_z:
    case DeltaShape::inv_x1_inv_x2_minus_z:
        return {"z", "x1", "x2"};
    default:
        return {"x0", "x1", "x2"};
    }
}

MultiLaurent delta_term(DeltaShape s, const Frame& frame)
{
    const DeltaSpec d = spec_of(s);
    MultiLaurent out(frame.names, frame.windows);
    Exponents pre{0, 0, 0};
    pre[at(d.pre_slot)] = d.pre_exp;
    const Summand& den = d.denominator;
    // D^-n contributes x_den^(-power * n).
    const Range nr = solve(frame.windows[at(den.slot)], pre[at(den.slot)], -den.power);
    for (long n = nr.lo; n <= nr.hi; ++n) {
        Exponents base = pre;
        base[at(den.slot)] -= static_cast<int>(den.power * n);
        add_binomial_terms(out, d.lead, d.tail, n, sign_of(den, n), base, frame.windows);
    }
    return out;
}

MultiLaurent delta_kernel(int slot_a, int slot_b, const Frame& frame)
{
    MultiLaurent out(frame.names, frame.windows);
    const Range r = solve(frame.windows[at(slot_a)], 0, 1);
    for (long n = r.lo; n <= r.hi; ++n) {
        Exponents e{0, 0, 0};
        e[at(slot_a)] = static_cast<int>(n);
        e[at(slot_b)] = static_cast<int>(-n - 1);
        out.add_term(e, Rat(1));
    }
    return out;
}

Report check_delta_identity(const MultiLaurent& lhs, const MultiLaurent& rhs, int margin, const std::string& name)
{
    Report r;
    r.name = name;
    const auto region = interior(lhs, rhs, margin);
    nlohmann::json win = nlohmann::json::array();
    for (int s = 0; s < lhs.nvars(); ++s) {
        const Window& w = region[at(s)];
        win.push_back(w.is_all() ? nlohmann::json(nullptr) : nlohmann::json::array({w.lo, w.hi}));
    }
    r.details = {{"identity", name}, {"margin", margin}, {"interior", win}};
    if (std::any_of(region.begin(), region.end(), [](const Window& w) { return w.empty(); })) {
        r.insufficient("the interior region is empty");
        return r;
    }
    for (const auto& m : compare_interior(lhs, rhs, margin)) {
        r.fail({format_monomial(m.exps, lhs.names()), m.lhs.str(), m.rhs.str(), ""});
    }
    return r;
}

std::vector<std::string> identity_names()
{
    return {"classical", "phi1-proof", "phi1-kernel", "classical-kernel", "binomial-directions"};
}

std::pair<MultiLaurent, MultiLaurent> named_identity_sides(const std::string& name, int lo, int hi)
{
    using S = DeltaShape;
    auto side = [&](S s) { return delta_term(s, Frame::box(names_of(s), lo, hi)); };
    auto diff = [&](S a, S b) {
        MultiLaurent d = side(a);
        d -= side(b);
        return d;
    };
    if (name == "classical") {
        return {diff(S::x0_x1_minus_x2, S::negx0_x2_minus_x1), side(S::x2_x1_minus_x0)};
    }
    if (name == "phi1-proof") {
        return {diff(S::z_inv_x2_minus_inv_x1, S::negz_inv_x1_minus_inv_x2), side(S::inv_x2_inv_x1_plus_z)};
    }
    if (name == "phi1-kernel") {
        return {side(S::inv_x2_inv_x1_plus_z), side(S::inv_x1_inv_x2_minus_z)};
    }
    if (name == "classical-kernel") {
        return {side(S::x2_x1_minus_x0), side(S::x1_x2_plus_x0)};
    }
    if (name == "binomial-directions") {
        const Frame f = Frame::box({"x0", "x1", "x2"}, lo, hi);
        const Summand x1{1, 1, 1};
        const Summand mx2{2, 1, -1};
        MultiLaurent lhs = expand_binomial(x1, mx2, -1, ExpansionDirection::second, f);
        lhs -= expand_binomial(x1, mx2, -1, ExpansionDirection::first, f);
        return {lhs, delta_kernel(2, 1, f)};
    }
    throw DomainError("unknown delta identity '" + name + "'");
}

Report check_named_identity(const std::string& name, int lo, int hi, int margin)
{
    const auto [lhs, rhs] = named_identity_sides(name, lo, hi);
    return check_delta_identity(lhs, rhs, margin, name);
}

} // namespace phicoord
