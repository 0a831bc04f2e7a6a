#include "mtdec/screening.hpp"

#include "mtdec/errors.hpp"
#include "mtdec/units.hpp"

namespace mtdec {

void IonSpecies::validate() const {
  if (!(concentration.value_si >= 0.0) ||
      !(concentration.dim == dims::concentration()))
    throw DomainError("ion concentration must be a nonnegative amount/volume");
  if (valence == 0) throw DomainError("ion valence must be nonzero");
  if (!(mass.value_si > 0.0) || !(mass.dim == dims::mass()))
    throw DomainError("ion mass must be a positive mass");
}

void Electrolyte::validate() const {
  if (species.empty()) throw DomainError("electrolyte needs at least one species");
  for (const auto& s : species) s.validate();
  if (!(epsilon_r >= 1.0)) throw DomainError("epsilon_r must be >= 1");
  if (!(temperature.value_si > 0.0) ||
      !(temperature.dim == dims::temperature()))
    throw DomainError("temperature must be positive");
}

Quantity debye_length(const Electrolyte& e, const ConstantsTable& k) {
  e.validate();

  Quantity ionic_strength{0.0, dims::number_density() * dims::charge().pow(2)};
  for (const auto& s : e.species) {
    Quantity number_density = s.concentration * k.avogadro;
    Quantity z_charge = static_cast<double>(s.valence) * k.elementary_charge;
    ionic_strength = ionic_strength + number_density * z_charge * z_charge;
  }
  if (ionic_strength.value_si == 0.0)
    throw DivergenceError(
        "zero ionic strength: screening length diverges (no finite Debye "
        "length)");

  return sqrt(e.epsilon_r * k.epsilon0 * k.k_boltzmann * e.temperature /
              ionic_strength);
}

ScreeningRegime screened_regime(const Quantity& distance,
                                const Quantity& lambda_d) {
  if (!(distance.dim == dims::length()) || !(lambda_d.dim == dims::length()))
    throw DomainError("screened_regime expects two lengths");
  if (!(distance.value_si > 0.0) || !(lambda_d.value_si > 0.0))
    throw DomainError("screened_regime expects positive lengths");
  const double ratio = distance.value_si / lambda_d.value_si;
  if (ratio > 3.0) return ScreeningRegime::Screened;
  if (ratio < 1.0) return ScreeningRegime::Unscreened;
  return ScreeningRegime::Marginal;
}

std::string_view to_string(ScreeningRegime r) {
  switch (r) {
    case ScreeningRegime::Screened:
      return "screened";
    case ScreeningRegime::Marginal:
      return "marginal";
    case ScreeningRegime::Unscreened:
      return "unscreened";
  }
  return "unknown";
}

Electrolyte physiological_electrolyte() {
  Electrolyte e;
  e.epsilon_r = 80.0;
  e.temperature = make_quantity(310, "K");
  e.species = {
      {"Na+", make_quantity(0.15, "molar"), +1, make_quantity(23, "amu")},
      {"Cl-", make_quantity(0.15, "molar"), -1, make_quantity(35, "amu")},
  };
  return e;
}

}  // namespace mtdec
