#include "psbraid/io.hpp"

#include <array>
#include <charconv>
#include <cmath>

namespace psbraid {

std::string format_real(double value, int significant_digits) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  std::array<char, 64> buffer{};
  const auto result = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value,
                                    std::chars_format::general, significant_digits);
  return std::string(buffer.data(), result.ptr);
}

}  // namespace psbraid
