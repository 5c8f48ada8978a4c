#pragma once

#include <string>

namespace psbraid {

// Locale-independent float rendering used for every CSV/JSON/table cell:
// 12 significant digits, '.' decimal separator, byte-stable across runs.
std::string format_real(double value, int significant_digits = 12);

}  // namespace psbraid
