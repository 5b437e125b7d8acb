#include "fracgreen/format.hpp"

#include <cstdio>

namespace fracgreen {
namespace {

std::string printf_double(const char* fmt, double v) {
    char buf[64];
    const int n = std::snprintf(buf, sizeof buf, fmt, v);
    return std::string(buf, n > 0 ? static_cast<std::size_t>(n) : 0);
}

}  // namespace

std::string format_full(double v) { return printf_double("%.17g", v); }
std::string format_sci4(double v) { return printf_double("%.4e", v); }
std::string format_fixed4(double v) { return printf_double("%.4f", v); }

}  // namespace fracgreen
