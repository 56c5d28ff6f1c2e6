#pragma once

#include <charconv>
#include <cmath>
#include <string>

namespace gossipsim {

// Shortest decimal form that parses back to the same double. Integral
// finite values keep a trailing ".0"; infinities print as "inf"/"-inf".
inline std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    std::string s(buf, end);
    if (s.find_first_of(".eE") == std::string::npos) s += ".0";
    return s;
}

}  // namespace gossipsim
