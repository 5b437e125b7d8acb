#pragma once

#include <string>

namespace fracgreen {

/// 17 significant digits, "C" locale, shortest of fixed/scientific (%.17g).
std::string format_full(double v);

/// Scientific with four decimals, e.g. 3.7361e-03.
std::string format_sci4(double v);

/// Fixed with four decimals, e.g. 1.4998.
std::string format_fixed4(double v);

}  // namespace fracgreen
