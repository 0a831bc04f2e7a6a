#include "mtdec/format.hpp"

#include <cstdio>

namespace mtdec {

std::string sci(double v, int significant_digits) {
  if (significant_digits < 1) significant_digits = 1;
  if (significant_digits > 17) significant_digits = 17;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*e", significant_digits - 1, v);
  return buf;
}

std::string full(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

}  // namespace mtdec
