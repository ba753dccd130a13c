#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gyro {

/// Strict decimal parse: the whole string must be one finite number
/// (an optional leading '+' is accepted). Throws DomainError otherwise.
double parse_real(std::string_view text);

/// Comma-separated reals, e.g. "0.5,0,-0.25". Empty fields are errors.
std::vector<double> parse_real_list(std::string_view text);

/// Shortest decimal form that round-trips to the same double.
std::string format_real(double x);

/// Comma-joined format_real of every coordinate.
std::string format_point(std::span<const double> coords);

}  // namespace gyro
