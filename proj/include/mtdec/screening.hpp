#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mtdec/constants.hpp"
#include "mtdec/quantity.hpp"

namespace mtdec {

struct IonSpecies {
  std::string name;
  Quantity concentration;  // amount/volume
  int valence = 1;         // signed, nonzero
  Quantity mass;           // kg

  void validate() const;
};

struct Electrolyte {
  std::vector<IonSpecies> species;
  double epsilon_r = 80.0;
  Quantity temperature;

  void validate() const;
};

// Debye screening length,
//   lambda_D = sqrt(eps_r eps0 kB T / sum_i n_i (z_i qe)^2),
// with n_i the number density of species i. An electrolyte with zero total
// ionic strength has no finite screening length; that raises
// DivergenceError explicitly rather than returning infinity.
Quantity debye_length(const Electrolyte& e, const ConstantsTable& k);

// Classification thresholds are conventions of this tool: interactions at
// range beyond 3 lambda_D count as screened, below 1 lambda_D as
// unscreened, in between as marginal.
enum class ScreeningRegime { Screened, Marginal, Unscreened };

ScreeningRegime screened_regime(const Quantity& distance,
                                const Quantity& lambda_d);

std::string_view to_string(ScreeningRegime r);

// Standard physiological electrolyte: 0.15 M monovalent 1:1 salt,
// eps_r = 80, T = 310 K. Lands inside the 0.6-1.0 nm band quoted for
// cytoplasm around microtubules.
Electrolyte physiological_electrolyte();

}  // namespace mtdec
