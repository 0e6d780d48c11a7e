#pragma once

#include <cstdio>
#include <string>

namespace simps {

// Compact decimal rendering for CSV cells: up to `digits` significant
// digits, trailing zeros trimmed by %g. The program never calls setlocale,
// so the C locale's '.' decimal separator always applies.
inline std::string fmt_g(double v, int digits = 10) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

}  // namespace simps
