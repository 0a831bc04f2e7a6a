#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "mtdec/constants.hpp"
#include "mtdec/quantity.hpp"

namespace mtdec {

// The three granularities at which the superposed mass distributions of a
// tubulin dimer may separate: a partial displacement of whole protein
// spheres, complete separation of atomic nuclei, complete separation of
// nucleons.
enum class SeparationLevel {
  ProteinSpherePartial,
  AtomicNuclei,
  Nucleons,
};

std::string_view to_string(SeparationLevel level);
SeparationLevel separation_level_from_string(std::string_view s);

// Elemental inventory of one tubulin dimer. Granule radii follow
// r = r0 * A^(1/3); mass numbers are integers, masses are A * amu.
struct GranularComposition {
  struct Entry {
    std::string element;
    int mass_number = 0;
    long long count = 0;
  };

  std::vector<Entry> entries;
  Quantity nuclear_radius_coefficient;  // r0, length

  Quantity total_mass(const ConstantsTable& k) const;
  long long total_mass_number() const;

  // Frozen default: standard protein elemental abundances scaled to a
  // 110 kDa dimer (totals 109,996 Da). Shipped verbatim as
  // data/protein_composition.txt so it can be audited or replaced.
  static GranularComposition default_protein();

  // Plain-text table `element,A,count` with one header line.
  static GranularComposition from_file(const std::string& path);
};

struct OrchOrScenario {
  SeparationLevel level = SeparationLevel::AtomicNuclei;
  Quantity monomer_mass;        // M, 55 kDa default
  Quantity monomer_radius;      // r; not reported in the source estimates,
                                // 2 nm assumption flagged in reports
  Quantity partial_separation;  // s, r/10 default
  GranularComposition composition;
  double n_tubulin = 1e9;          // participating (coherent) dimers
  double coherent_fraction = 0.1;  // fraction of contained tubulin coherent

  void validate() const;
};

// Gravitational self-energy of two partially displaced uniform spheres,
//   E = (G M^2 s^2 / 2 r^3) (1 - 3s/8r + s^3/80r^3),  valid for s <= 2r.
Quantity partial_sphere_energy(const Quantity& monomer_mass,
                               const Quantity& monomer_radius,
                               const Quantity& separation,
                               const ConstantsTable& k);

// Coincidence-to-contact estimate of the self-energy for complete
// separation: per granule of mass m and radius r the interaction-energy
// change is (6/5 - 1/2) G m^2 / r = 0.7 G m^2 / r, summed over the dimer
// inventory. For Nucleons every granule is one nucleon (m = amu, r = r0,
// count = total mass number).
Quantity granular_separation_energy(SeparationLevel level,
                                    const GranularComposition& comp,
                                    const ConstantsTable& k);

inline constexpr double kContactEnergyCoefficient = 6.0 / 5.0 - 0.5;

// Collapse time from the energy-time uncertainty relation, tau = hbar / E.
Quantity orch_or_tau(const Quantity& total_energy, const ConstantsTable& k);

// Per-dimer self-energy at every separation level, plus the level that
// dominates (maximal energy, hence shortest collapse time). Partial-sphere
// entries count both monomers of the dimer.
struct LevelEnergyTable {
  std::array<std::pair<SeparationLevel, Quantity>, 3> per_dimer;
};

std::pair<SeparationLevel, LevelEnergyTable> dominant_level(
    const OrchOrScenario& scenario, const ConstantsTable& k);

// Aggregate self-energy of n participating dimers at the scenario's level.
Quantity aggregate_energy(const OrchOrScenario& scenario,
                          const ConstantsTable& k);

}  // namespace mtdec
