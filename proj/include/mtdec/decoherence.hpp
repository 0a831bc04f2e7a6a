#pragma once

#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "mtdec/constants.hpp"
#include "mtdec/geometry.hpp"
#include "mtdec/quantity.hpp"

namespace mtdec {

// Inputs for the ion-Coulomb decoherence time (Tegmark 2000): a quantum
// state of N elementary charges, separation s, decohered by an ion of mass
// m at standoff a and temperature T.
struct IonCoulombInputs {
  Quantity temperature;   // K
  Quantity ion_mass;      // kg
  Quantity standoff;      // m
  double charge_count;    // N, dimensionless
  Quantity separation;    // m

  void validate() const;
};

// Inputs for the dipole-corrected decoherence time: the state couples to
// the environment through the tubulin electric dipole moment p, screened
// medium with relative permittivity eps_r, separation at nuclear scale.
struct DipoleInputs {
  Quantity temperature;    // K
  Quantity ion_mass;       // kg
  Quantity standoff;       // m
  Quantity dipole_moment;  // C m
  Quantity separation;     // m
  double epsilon_r = 1.0;
  OrientationTriple orientation;

  void validate() const;
};

// tau = 4 pi eps0 a^3 sqrt(m kB T) / (N qe^2 s).
Quantity tau_ion_coulomb(const IonCoulombInputs& in, const ConstantsTable& k);

// Geometric factor of the dipole decoherence time,
//   Omega = (5 ct^2 cf^2 - 4 ct cf cp + ct^2 + cf^2 + cp^2)^(-1/2).
// The bracket vanishes only when the three generating vectors are mutually
// orthogonal; brackets at or below 1e-30 are treated as that divergent
// configuration rather than roundoff.
double omega_dipole(const OrientationTriple& o);

inline constexpr double kOmegaDivergenceBracket = 1e-30;

// tau = 4 pi eps_r eps0 a^4 sqrt(m kB T) Omega / (3 qe p s).
Quantity tau_dipole(const DipoleInputs& in, const ConstantsTable& k);

// Tidal coupling matrix: Hessian of the dipole interaction potential at
// standoff vector a,
//   M = 3 q p / (4 pi eps_r eps0 a^4) [ (5 aa^T - I)(p.a) - (ap^T + pa^T) ].
// Entries are energy/length^2 in SI (J/m^2).
struct TidalHessian {
  Eigen::Matrix3d matrix;
  double prefactor = 0.0;  // 3 q p / (4 pi eps_r eps0 a^4)
};

TidalHessian tidal_hessian(const Quantity& charge,
                           const Eigen::Vector3d& dipole_moment_si,
                           const Eigen::Vector3d& standoff_si,
                           double epsilon_r, const ConstantsTable& k);

// tau over an ascending temperature grid. Both closed forms scale as
// sqrt(T), so the series necessarily vanishes toward absolute zero; the
// flag marks that trend as an artifact of the derivation, not physics.
struct TemperatureCurve {
  std::vector<std::pair<Quantity, Quantity>> points;  // (T, tau)
  std::string flag;
};

inline constexpr const char* kLowTemperatureFlag =
    "model-artifact: unphysical low-T limit";

TemperatureCurve temperature_curve(const IonCoulombInputs& base,
                                   std::span<const Quantity> temperature_grid,
                                   const ConstantsTable& k);
TemperatureCurve temperature_curve(const DipoleInputs& base,
                                   std::span<const Quantity> temperature_grid,
                                   const ConstantsTable& k);

}  // namespace mtdec
