#include "qcorr/format.hpp"

#include <array>
#include <charconv>
#include <cmath>

namespace qcorr {

std::string format_number(double x, int significant_digits) {
  if (std::isnan(x)) return "nan";
  if (x == 0.0) x = 0.0;  // drop the sign of negative zero
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x, std::chars_format::general,
                                 significant_digits);
  return std::string(buf.data(), res.ptr);
}

}  // namespace qcorr
