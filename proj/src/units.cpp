#include "mtdec/units.hpp"

#include <functional>
#include <utility>
#include <vector>

#include "mtdec/errors.hpp"
#include "mtdec/expr.hpp"

namespace mtdec {

namespace {

// One Debye is taken as exactly (1/3)e-29 C·m, the convention used for the
// tubulin dipole table (so 1714 D is exactly 5.713e-27 C·m).
constexpr double kDebyeSI = 1e-29 / 3.0;
constexpr double kElementaryChargeSI = 1.602176634e-19;  // C
constexpr double kAtomicMassUnitSI = 1.66053906660e-27;  // kg

}  // namespace

UnitRegistry::UnitRegistry() {
  using namespace dims;

  // SI base
  add("m", 1.0, length());
  add("kg", 1.0, mass());
  add("s", 1.0, time());
  add("A", 1.0, current());
  add("K", 1.0, temperature());
  add("mol", 1.0, amount());
  add("cd", 1.0, luminous_intensity());
  add("1", 1.0, dimensionless());

  // SI derived
  add("Hz", 1.0, frequency());
  add("N", 1.0, force());
  add("Pa", 1.0, pressure());
  add("J", 1.0, energy());
  add("W", 1.0, power());
  add("C", 1.0, charge());
  add("V", 1.0, voltage());
  add("F", 1.0, capacitance());
  add("g", 1e-3, mass());
  add("L", 1e-3, volume());

  // lengths
  add("km", 1e3, length());
  add("cm", 1e-2, length());
  add("mm", 1e-3, length());
  add("um", 1e-6, length());
  add("nm", 1e-9, length());
  add("pm", 1e-12, length());
  add("fm", 1e-15, length());
  add("angstrom", 1e-10, length());

  // times
  add("ms", 1e-3, time());
  add("us", 1e-6, time());
  add("ns", 1e-9, time());
  add("ps", 1e-12, time());
  add("fs", 1e-15, time());

  // domain extras
  add("eV", kElementaryChargeSI, energy());
  add("amu", kAtomicMassUnitSI, mass());
  add("Da", kAtomicMassUnitSI, mass());
  add("kDa", 1e3 * kAtomicMassUnitSI, mass());
  add("Debye", kDebyeSI, dipole_moment());
  add("molar", 1e3, concentration());  // mol/L
  add("mM", 1.0, concentration());     // mmol/L = mol/m^3
}

void UnitRegistry::add(std::string symbol, double si_factor, Dimension dim) {
  units_.emplace(std::move(symbol), Unit{si_factor, std::move(dim)});
}

const UnitRegistry& UnitRegistry::standard() {
  static const UnitRegistry registry;
  return registry;
}

const Unit* UnitRegistry::find(std::string_view symbol) const {
  auto it = units_.find(symbol);
  return it == units_.end() ? nullptr : &it->second;
}

Unit UnitRegistry::parse(std::string_view expr) const {
  ExprPtr tree = parse_expression(expr);

  std::function<Unit(const ExprPtr&)> eval = [&](const ExprPtr& n) -> Unit {
    switch (n->kind) {
      case ExprNode::Kind::Symbol: {
        const Unit* u = find(n->name);
        if (!u)
          throw UnitError("unknown unit '" + n->name + "' in '" +
                          std::string(expr) + "'");
        return *u;
      }
      case ExprNode::Kind::Number:
        return Unit{n->number, dims::dimensionless()};
      case ExprNode::Kind::Product: {
        Unit a = eval(n->lhs), b = eval(n->rhs);
        return Unit{a.si_factor * b.si_factor, a.dim * b.dim};
      }
      case ExprNode::Kind::Quotient: {
        Unit a = eval(n->lhs), b = eval(n->rhs);
        return Unit{a.si_factor / b.si_factor, a.dim / b.dim};
      }
      case ExprNode::Kind::Power: {
        Unit a = eval(n->lhs);
        Quantity scaled = pow(Quantity{a.si_factor, a.dim}, n->exponent);
        return Unit{scaled.value_si, scaled.dim};
      }
      case ExprNode::Kind::Sum:
        throw UnitError("sums are not valid in unit expressions: '" +
                        std::string(expr) + "'");
      case ExprNode::Kind::Derivative:
        throw UnitError("derivatives are not valid in unit expressions: '" +
                        std::string(expr) + "'");
    }
    throw UnitError("unreachable unit expression node");
  };

  return eval(tree);
}

Quantity UnitRegistry::make(double value, std::string_view unit_expr) const {
  Unit u = parse(unit_expr);
  return {value * u.si_factor, u.dim};
}

double UnitRegistry::value_in(const Quantity& q,
                              std::string_view unit_expr) const {
  Unit u = parse(unit_expr);
  if (!(u.dim == q.dim))
    throw DimensionError("cannot express quantity in '" +
                             std::string(unit_expr) + "'",
                         q.dim, u.dim);
  return q.value_si / u.si_factor;
}

Quantity make_quantity(double value, std::string_view unit_expr) {
  return UnitRegistry::standard().make(value, unit_expr);
}

double value_in(const Quantity& q, std::string_view unit_expr) {
  return UnitRegistry::standard().value_in(q, unit_expr);
}

std::string si_unit_symbol(const Dimension& dim) {
  using namespace dims;
  static const std::vector<std::pair<Dimension, std::string>> named = {
      {dimensionless(), ""},   {length(), "m"},
      {mass(), "kg"},          {time(), "s"},
      {current(), "A"},        {temperature(), "K"},
      {amount(), "mol"},       {energy(), "J"},
      {force(), "N"},          {power(), "W"},
      {charge(), "C"},         {voltage(), "V"},
      {frequency(), "Hz"},     {dipole_moment(), "C m"},
      {area(), "m^2"},         {volume(), "m^3"},
      {number_density(), "m^-3"},
      {concentration(), "mol m^-3"},
      {energy() / area(), "J m^-2"},
  };
  for (const auto& [d, s] : named)
    if (d == dim) return s;

  static constexpr const char* base_symbols[kBaseDimCount] = {
      "kg", "m", "s", "A", "K", "mol", "cd"};
  std::string out;
  for (std::size_t i = 0; i < kBaseDimCount; ++i) {
    const Rational& e = dim.exponent(static_cast<BaseDim>(i));
    if (e.is_zero()) continue;
    if (!out.empty()) out += ' ';
    out += base_symbols[i];
    out += '^';
    if (!e.is_integer()) out += '(' + e.str() + ')';
    else out += e.str();
  }
  return out;
}

}  // namespace mtdec
