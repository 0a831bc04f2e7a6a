#pragma once

#include <map>
#include <string>
#include <string_view>

#include "mtdec/quantity.hpp"

namespace mtdec {

// A named unit: SI conversion factor plus dimension. Conversions only
// rescale the display value; the stored SI value of a Quantity never moves.
struct Unit {
  double si_factor = 1.0;
  Dimension dim;
};

// Fixed registry of recognized unit symbols plus a parser for compound
// unit expressions ("C*m", "mol/L", "m^-3", "J/(mol*K)"). The full symbol
// list is documented in the README.
class UnitRegistry {
 public:
  static const UnitRegistry& standard();

  const Unit* find(std::string_view symbol) const;

  // Evaluates a unit expression. Throws UnitError for unknown symbols and
  // ParseError for malformed text. Sums and derivatives are not units.
  Unit parse(std::string_view expr) const;

  Quantity make(double value, std::string_view unit_expr) const;

  // Display value of q in the given unit; dimensions must match exactly.
  double value_in(const Quantity& q, std::string_view unit_expr) const;

 private:
  UnitRegistry();
  void add(std::string symbol, double si_factor, Dimension dim);

  std::map<std::string, Unit, std::less<>> units_;
};

// Convenience wrappers against the standard registry.
Quantity make_quantity(double value, std::string_view unit_expr);
double value_in(const Quantity& q, std::string_view unit_expr);

// Preferred display symbol for a dimension ("s", "J", "C m") or the
// exponent rendering ("kg^1 m^2 s^-2") when no named unit matches.
std::string si_unit_symbol(const Dimension& dim);

}  // namespace mtdec
