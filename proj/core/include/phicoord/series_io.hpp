#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "phicoord/bivariate.hpp"
#include "phicoord/multi_laurent.hpp"

namespace phicoord {

// Text form: signed sums of terms `c*x^e`, rationals written `num/den`, with
// truncation recorded as `O(x^n)` (and `O(x^n)*z^k`, `O(z^n)` for bivariate
// series). parse_*(format(s)) reproduces s exactly.

std::string format(const Laurent& l, std::string_view var = "x");
std::string format(const TruncatedSeries& s, std::string_view var = "x");
std::string format(const Bivariate& b, std::string_view x = "x", std::string_view z = "z");
std::string format(const MultiLaurent& m);

/// Parses a Laurent series in one variable. Without an O-term the result is exact.
Laurent parse_laurent(std::string_view text, std::string_view var = "x");
/// Parses a power series; without an O-term `order` decides the truncation.
TruncatedSeries parse_truncated(std::string_view text, int order = -1, std::string_view var = "x");
/// Parses a bivariate series. Without O(z^n) the z-order is `zorder`, or
/// the largest z exponent present when zorder < 0.
Bivariate parse_bivariate(std::string_view text, int zorder = -1, std::string_view x = "x",
                          std::string_view z = "z");

nlohmann::json to_json(const Laurent& l, std::string_view var = "x");
nlohmann::json to_json(const TruncatedSeries& s, std::string_view var = "x");
nlohmann::json to_json(const Bivariate& b, std::string_view x = "x", std::string_view z = "z");
nlohmann::json to_json(const MultiLaurent& m);

Laurent laurent_from_json(const nlohmann::json& j);
TruncatedSeries truncated_from_json(const nlohmann::json& j);
Bivariate bivariate_from_json(const nlohmann::json& j);
MultiLaurent multi_from_json(const nlohmann::json& j);

} // namespace phicoord
