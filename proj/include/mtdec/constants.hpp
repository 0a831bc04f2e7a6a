#pragma once

#include <string>

#include "mtdec/quantity.hpp"

namespace mtdec {

// Pinned physical constants. Every number emitted by the library traces back
// to this one versioned table, so reports are reproducible bit for bit.
// Values are CODATA-2018; the water number density and the Debye unit follow
// the conventions documented in the README.
struct ConstantsTable {
  std::string version;

  Quantity epsilon0;              // vacuum permittivity, F/m
  Quantity k_boltzmann;           // J/K
  Quantity hbar;                  // J s
  Quantity gravitational;         // m^3 kg^-1 s^-2
  Quantity elementary_charge;     // C
  Quantity atomic_mass_unit;      // kg
  Quantity avogadro;              // mol^-1
  Quantity water_number_density;  // m^-3 (55.5 mol/L)
  Quantity debye_unit;            // C m, exactly (1/3)e-29

  static const ConstantsTable& codata2018();

  // Override table from a JSON file {"version": ..., "constants":
  // {name: {value, unit}}}; names not present keep their defaults.
  static ConstantsTable from_file(const std::string& path);
};

// Tubulin electrostatics (TINKER-derived values reported by Brown; see
// README references). The C-terminus tail is excluded from the net charge;
// its contribution is not available in the source data.
struct TubulinElectrostatics {
  Quantity net_charge;            // -10 e, tail excluded
  Quantity dipole_total;          // 1714 Debye
  Quantity dipole_x;              // 337 Debye, protofilament axis
  Quantity dipole_y;              // -1669 Debye
  Quantity dipole_z;              // 198 Debye
  bool tail_contribution_available = false;
};

const TubulinElectrostatics& tubulin_electrostatics();

// Published external estimates rendered in reports as annotations only,
// never recomputed here (Mavromatos & Nanopoulos 1998).
struct ExternalEstimates {
  double kink_state_low_s = 1e-7;
  double kink_state_high_s = 1e-6;
  double conformal_low_s = 1e-10;
  double coherent_dipole_high_s = 1e-4;
};

inline constexpr ExternalEstimates kExternalEstimates{};

}  // namespace mtdec
