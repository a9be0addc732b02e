#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "phicoord/laurent.hpp"

namespace phicoord {

/// Closed exponent interval on which coefficients are known.
struct Window {
    int lo = -kExact;
    int hi = kExact;

    static Window all() { return {}; }
    bool is_all() const { return lo <= -kExact && hi >= kExact; }
    bool contains(int e) const { return lo <= e && e <= hi; }
    bool empty() const { return lo > hi; }
    Window shrunk(int margin) const;
    friend Window intersect(const Window& a, const Window& b);
    friend bool operator==(const Window&, const Window&) = default;
};

using Exponents = std::array<int, 3>;

/// Finite-support data in up to three named variables, known on a box.
///
/// Outside the per-variable windows coefficients are unknown (not zero) on
/// both sides, which is what a truncated two-sided delta series needs. A
/// variable whose window is all of Z is known everywhere. Unused variable
/// slots always carry exponent 0.
class MultiLaurent {
public:
    MultiLaurent() = default;
    explicit MultiLaurent(std::vector<std::string> names);
    MultiLaurent(std::vector<std::string> names, std::array<Window, 3> windows);

    static MultiLaurent monomial(std::vector<std::string> names, const Rat& c, const Exponents& e);

    int nvars() const { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& names() const { return names_; }
    const std::array<Window, 3>& windows() const { return windows_; }
    const std::map<Exponents, Rat>& terms() const { return terms_; }
    bool is_exact() const;
    bool in_window(const Exponents& e) const;

    /// Coefficient at e; throws PrecisionError outside the windows.
    Rat coeff(const Exponents& e) const;
    /// Adds c at e (ignored if e lies outside the windows).
    void add_term(const Exponents& e, const Rat& c);

    /// Restricts the known region to the given windows.
    MultiLaurent restricted(const std::array<Window, 3>& w) const;
    /// Coefficient of slot^e as data in the remaining slots (slot exponent set to 0).
    MultiLaurent slice(int slot, int e) const;
    /// Exponent range [min, max] used by stored terms in a slot.
    std::optional<std::pair<int, int>> support_range(int slot) const;
    /// Exchanges two variable slots (names included).
    MultiLaurent swapped(int a, int b) const;

    MultiLaurent& operator+=(const MultiLaurent& o);
    MultiLaurent& operator-=(const MultiLaurent& o);
    MultiLaurent& operator*=(const Rat& c);
    friend MultiLaurent operator+(MultiLaurent a, const MultiLaurent& b) { return a += b; }
    friend MultiLaurent operator-(MultiLaurent a, const MultiLaurent& b) { return a -= b; }
    friend MultiLaurent operator*(MultiLaurent a, const Rat& c) { return a *= c; }
    friend MultiLaurent operator*(const Rat& c, MultiLaurent a) { return a *= c; }
    /// Product; at most one factor may be windowed (two truncated two-sided
    /// series have no determined product).
    friend MultiLaurent operator*(const MultiLaurent& a, const MultiLaurent& b);

    friend bool operator==(const MultiLaurent& a, const MultiLaurent& b) = default;

private:
    void prune();

    std::vector<std::string> names_;
    std::array<Window, 3> windows_{};
    std::map<Exponents, Rat> terms_;
};

/// Embeds an exact univariate Laurent polynomial into a slot.
MultiLaurent embed(const Laurent& l, int slot, std::vector<std::string> names);

/// (x_a + sign * x_b)^k as exact data, k >= 0.
MultiLaurent binomial_power(int slot_a, int slot_b, int sign, int k, std::vector<std::string> names);

struct MultiMismatch {
    Exponents exps;
    Rat lhs;
    Rat rhs;
};

/// Compares on the intersection of both windows shrunk by margin.
/// Returns the mismatches (at most max_witnesses of them).
std::vector<MultiMismatch> compare_interior(const MultiLaurent& a, const MultiLaurent& b, int margin,
                                            std::size_t max_witnesses = 8);

/// The region compare_interior inspects.
std::array<Window, 3> interior(const MultiLaurent& a, const MultiLaurent& b, int margin);

std::string format_monomial(const Exponents& e, const std::vector<std::string>& names);

} // namespace phicoord
