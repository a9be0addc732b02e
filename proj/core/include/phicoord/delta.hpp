#pragma once

#include <string>
#include <utility>
#include <vector>

#include "phicoord/multi_laurent.hpp"
#include "phicoord/report.hpp"

namespace phicoord {

/// sign * x_slot^power, with power and sign in {+1, -1}.
struct Summand {
    int slot;
    int power = 1;
    int sign = 1;
};

/// Which summand of a binomial is expanded in nonnegative powers.
enum class ExpansionDirection { first, second };

/// Three named variables and the exponent box every distribution is stored on.
struct Frame {
    std::vector<std::string> names;
    std::array<Window, 3> windows;

    static Frame box(std::vector<std::string> names, int lo, int hi);
};

/// (a + b)^n. For n < 0 the summand picked by dir carries the nonnegative
/// powers and the result is stored on the frame's windows; n >= 0 is exact.
MultiLaurent expand_binomial(const Summand& a, const Summand& b, int n, ExpansionDirection dir, const Frame& frame);

/// The delta shapes used by the Jacobi identities. Slot 0 holds x0 (or z).
enum class DeltaShape {
    x0_x1_minus_x2,          // x0^-1 delta((x1 - x2)/x0)
    negx0_x2_minus_x1,       // x0^-1 delta((x2 - x1)/(-x0))
    x2_x1_minus_x0,          // x2^-1 delta((x1 - x0)/x2)
    z_inv_x2_minus_inv_x1,   // z^-1 delta((x2^-1 - x1^-1)/z)
    negz_inv_x1_minus_inv_x2, // z^-1 delta((x1^-1 - x2^-1)/(-z))
    inv_x2_inv_x1_plus_z,    // x2 delta((x1^-1 + z)/x2^-1)
    inv_x1_inv_x2_minus_z,   // x1 delta((x2^-1 - z)/x1^-1)
    x1_x2_plus_x0,           // x1^-1 delta((x2 + x0)/x1)
};

/// N/D with N = lead + tail (expanded in nonnegative powers of tail), and the
/// monomial prefactor x_{pre_slot}^{pre_exp}.
struct DeltaSpec {
    Summand lead;
    Summand tail;
    Summand denominator;
    int pre_slot;
    int pre_exp;
};

DeltaSpec spec_of(DeltaShape s);
std::string to_string(DeltaShape s);
/// Variable names for a shape: {x0, x1, x2} or {z, x1, x2}.
std::vector<std::string> names_of(DeltaShape s);

/// prefactor * sum_{n in Z} N^n D^-n, every coefficient inside the frame exact.
MultiLaurent delta_term(DeltaShape s, const Frame& frame);

/// sum_{n in Z} x_a^n x_b^(-n-1) on the frame.
MultiLaurent delta_kernel(int slot_a, int slot_b, const Frame& frame);

/// Monomial-exact comparison on the windows shrunk by margin.
Report check_delta_identity(const MultiLaurent& lhs, const MultiLaurent& rhs, int margin,
                            const std::string& name = "delta-identity");

/// Names accepted by check_named_identity.
std::vector<std::string> identity_names();

/// Builds both sides of a named identity on the box [lo, hi]^3 and compares them.
///
/// classical:        s1 - s2 = s3
/// phi1-proof:       s4 - s5 = s6
/// phi1-kernel:      s6 = s7
/// classical-kernel: s3 = s8
/// binomial-directions: (x1 - x2)^-1 expanded both ways differ by x1^-1 delta(x2/x1)
Report check_named_identity(const std::string& name, int lo, int hi, int margin);
/// The two sides check_named_identity compares.
std::pair<MultiLaurent, MultiLaurent> named_identity_sides(const std::string& name, int lo, int hi);

} // namespace phicoord
