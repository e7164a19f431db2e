#pragma once

#include <string>

namespace qcorr {

/// Locale-independent shortest-general rendering with the given number of
/// significant digits ("nan", "inf" for non-finite values).
std::string format_number(double x, int significant_digits = 17);

}  // namespace qcorr
