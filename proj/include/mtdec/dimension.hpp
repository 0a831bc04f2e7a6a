#pragma once

#include <array>
#include <cstddef>
#include <string>

#include "mtdec/rational.hpp"

namespace mtdec {

// SI base dimensions, in the fixed exponent-tuple order used throughout.
enum class BaseDim : std::size_t {
  Mass = 0,
  Length,
  Time,
  Current,
  Temperature,
  Amount,
  LuminousIntensity,
};

inline constexpr std::size_t kBaseDimCount = 7;

// A physical dimension: exact rational exponents over the seven SI base
// dimensions. Arithmetic is exact; there is no floating point in here.
class Dimension {
 public:
  Dimension() = default;  // dimensionless

  static Dimension base(BaseDim b) {
    Dimension d;
    d.e_[static_cast<std::size_t>(b)] = Rational(1);
    return d;
  }

  const Rational& exponent(BaseDim b) const {
    return e_[static_cast<std::size_t>(b)];
  }

  bool is_dimensionless() const {
    for (const auto& r : e_)
      if (!r.is_zero()) return false;
    return true;
  }

  Dimension operator*(const Dimension& o) const {
    Dimension d;
    for (std::size_t i = 0; i < kBaseDimCount; ++i) d.e_[i] = e_[i] + o.e_[i];
    return d;
  }
  Dimension operator/(const Dimension& o) const {
    Dimension d;
    for (std::size_t i = 0; i < kBaseDimCount; ++i) d.e_[i] = e_[i] - o.e_[i];
    return d;
  }
  Dimension pow(const Rational& r) const {
    Dimension d;
    for (std::size_t i = 0; i < kBaseDimCount; ++i) d.e_[i] = e_[i] * r;
    return d;
  }

  friend bool operator==(const Dimension&, const Dimension&) = default;

  // Compact rendering, e.g. "M L^2 T^-2"; dimensionless renders as "1".
  std::string str() const {
    static constexpr const char* symbols[kBaseDimCount] = {"M", "L", "T",
                                                           "I", "K", "N", "J"};
    std::string out;
    for (std::size_t i = 0; i < kBaseDimCount; ++i) {
      if (e_[i].is_zero()) continue;
      if (!out.empty()) out += ' ';
      out += symbols[i];
      if (!(e_[i] == Rational(1))) {
        out += '^';
        if (!e_[i].is_integer()) out += '(' + e_[i].str() + ')';
        else out += e_[i].str();
      }
    }
    return out.empty() ? "1" : out;
  }

 private:
  std::array<Rational, kBaseDimCount> e_{};
};

// Common derived dimensions.
namespace dims {

inline Dimension dimensionless() { return {}; }
inline Dimension mass() { return Dimension::base(BaseDim::Mass); }
inline Dimension length() { return Dimension::base(BaseDim::Length); }
inline Dimension time() { return Dimension::base(BaseDim::Time); }
inline Dimension current() { return Dimension::base(BaseDim::Current); }
inline Dimension temperature() { return Dimension::base(BaseDim::Temperature); }
inline Dimension amount() { return Dimension::base(BaseDim::Amount); }
inline Dimension luminous_intensity() {
  return Dimension::base(BaseDim::LuminousIntensity);
}

inline Dimension area() { return length().pow(2); }
inline Dimension volume() { return length().pow(3); }
inline Dimension frequency() { return dimensionless() / time(); }
inline Dimension velocity() { return length() / time(); }
inline Dimension force() { return mass() * length() / time().pow(2); }
inline Dimension energy() { return force() * length(); }
inline Dimension power() { return energy() / time(); }
inline Dimension pressure() { return force() / area(); }
inline Dimension charge() { return current() * time(); }
inline Dimension voltage() { return energy() / charge(); }
inline Dimension capacitance() { return charge() / voltage(); }
inline Dimension dipole_moment() { return charge() * length(); }
inline Dimension number_density() { return dimensionless() / volume(); }
inline Dimension concentration() { return amount() / volume(); }

}  // namespace dims

}  // namespace mtdec
