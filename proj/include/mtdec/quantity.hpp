#pragma once

#include <cmath>

#include "mtdec/dimension.hpp"
#include "mtdec/errors.hpp"

namespace mtdec {

// A scalar physical quantity: SI value plus exact dimension. Quantities are
// immutable values; every operation returns a new one. Addition and
// subtraction require identical dimensions, multiplication and division
// combine them, powers take exact rational exponents.
struct Quantity {
  double value_si = 0.0;
  Dimension dim;

  Quantity() = default;
  Quantity(double v, Dimension d) : value_si(v), dim(std::move(d)) {}

  bool is_dimensionless() const { return dim.is_dimensionless(); }
};

inline Quantity operator+(const Quantity& a, const Quantity& b) {
  if (!(a.dim == b.dim))
    throw DimensionError("dimension mismatch in addition", a.dim, b.dim);
  return {a.value_si + b.value_si, a.dim};
}

inline Quantity operator-(const Quantity& a, const Quantity& b) {
  if (!(a.dim == b.dim))
    throw DimensionError("dimension mismatch in subtraction", a.dim, b.dim);
  return {a.value_si - b.value_si, a.dim};
}

inline Quantity operator*(const Quantity& a, const Quantity& b) {
  return {a.value_si * b.value_si, a.dim * b.dim};
}

inline Quantity operator/(const Quantity& a, const Quantity& b) {
  return {a.value_si / b.value_si, a.dim / b.dim};
}

inline Quantity operator*(double s, const Quantity& q) {
  return {s * q.value_si, q.dim};
}
inline Quantity operator*(const Quantity& q, double s) { return s * q; }
inline Quantity operator/(const Quantity& q, double s) {
  return {q.value_si / s, q.dim};
}
inline Quantity operator/(double s, const Quantity& q) {
  return {s / q.value_si, q.dim.pow(-1)};
}
inline Quantity operator-(const Quantity& q) { return {-q.value_si, q.dim}; }

// q^(num/den) with exact exponent arithmetic on the dimension. Fractional
// powers of negative values have no real result and are rejected.
inline Quantity pow(const Quantity& q, const Rational& r) {
  if (q.value_si < 0.0 && !r.is_integer())
    throw DomainError("fractional power of a negative quantity");
  double v;
  if (r.is_integer()) {
    v = std::pow(q.value_si, static_cast<double>(r.num()));
  } else if (r.den() == 2) {
    v = std::sqrt(std::pow(q.value_si, static_cast<double>(r.num())));
  } else {
    v = std::pow(q.value_si, r.to_double());
  }
  return {v, q.dim.pow(r)};
}

inline Quantity sqrt(const Quantity& q) { return pow(q, Rational(1, 2)); }

// Dimensionless scalar helper.
inline Quantity scalar(double v) { return {v, dims::dimensionless()}; }

}  // namespace mtdec
