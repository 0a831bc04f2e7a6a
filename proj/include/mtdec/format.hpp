#pragma once

#include <string>

namespace mtdec {

// Locale-independent scientific notation with explicit exponent,
// e.g. sci(3.3746e-14) == "3.375e-14". Default 4 significant digits.
std::string sci(double v, int significant_digits = 4);

// Round-trip precision ("%.16e"); used for CSV and JSON payloads where a
// reader must be able to reconstruct the exact double.
std::string full(double v);

}  // namespace mtdec
