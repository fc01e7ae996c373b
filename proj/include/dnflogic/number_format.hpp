#pragma once

#include <charconv>
#include <cstdio>
#include <string>
#include <system_error>

namespace dnflogic {

// 12 significant digits, %g style. glibc rounds the exact binary value, so
// ties resolve half-to-even.
inline std::string format_g12(double v) {
    if (v == 0.0) v = 0.0;  // drop the sign of negative zero
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

namespace detail {
inline bool looks_integral(const std::string& s) {
    return s.find_first_of(".eEn") == std::string::npos;  // n: nan/inf
}
}  // namespace detail

/// format_g12 with a trailing ".0" on integral results, so 1 prints "1.0".
inline std::string format_decimal(double v) {
    auto s = format_g12(v);
    if (detail::looks_integral(s)) s += ".0";
    return s;
}

/// Shortest round-trip spelling, used for literals in rendered equations.
inline std::string format_literal(double v, bool integral_style) {
    if (v == 0.0) v = 0.0;
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    std::string s(buf, res.ptr);
    if (!integral_style && detail::looks_integral(s)) s += ".0";
    return s;
}

}  // namespace dnflogic
