#include "mtdec/orchor.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "mtdec/errors.hpp"
#include "mtdec/units.hpp"

namespace mtdec {

std::string_view to_string(SeparationLevel level) {
  switch (level) {
    case SeparationLevel::ProteinSpherePartial:
      return "protein_sphere_partial";
    case SeparationLevel::AtomicNuclei:
      return "atomic_nuclei";
    case SeparationLevel::Nucleons:
      return "nucleons";
  }
  return "unknown";
}

SeparationLevel separation_level_from_string(std::string_view s) {
  if (s == "protein_sphere_partial") return SeparationLevel::ProteinSpherePartial;
  if (s == "atomic_nuclei") return SeparationLevel::AtomicNuclei;
  if (s == "nucleons") return SeparationLevel::Nucleons;
  throw ValidationError("unknown separation level '" + std::string(s) + "'");
}

Quantity GranularComposition::total_mass(const ConstantsTable& k) const {
  return static_cast<double>(total_mass_number()) * k.atomic_mass_unit;
}

long long GranularComposition::total_mass_number() const {
  long long total = 0;
  for (const auto& e : entries) total += e.count * e.mass_number;
  return total;
}

GranularComposition GranularComposition::default_protein() {
  // H/C/N/O/S atom fractions ~0.49/0.32/0.09/0.10/0.003 scaled to 110 kDa.
  GranularComposition c;
  c.entries = {
      {"H", 1, 7398}, {"C", 12, 4831}, {"N", 14, 1359},
      {"O", 16, 1510}, {"S", 32, 45},
  };
  c.nuclear_radius_coefficient = make_quantity(1.2, "fm");
  return c;
}

GranularComposition GranularComposition::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open composition file: " + path);

  GranularComposition c;
  c.nuclear_radius_coefficient = make_quantity(1.2, "fm");

  std::string line;
  bool header_seen = false;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {  // first non-comment line is the header
      header_seen = true;
      continue;
    }
    std::istringstream row(line);
    std::string element, a_text, count_text;
    if (!std::getline(row, element, ',') || !std::getline(row, a_text, ',') ||
        !std::getline(row, count_text))
      throw ValidationError(path + ":" + std::to_string(lineno) +
                            ": expected 'element,A,count'");
    auto trim = [](std::string& s) {
      s.erase(0, s.find_first_not_of(" \t"));
      s.erase(s.find_last_not_of(" \t\r") + 1);
    };
    trim(element);
    trim(a_text);
    trim(count_text);
    try {
      c.entries.push_back({element, std::stoi(a_text), std::stoll(count_text)});
    } catch (const std::exception&) {
      throw ValidationError(path + ":" + std::to_string(lineno) +
                            ": malformed numeric field");
    }
  }
  if (!header_seen)
    throw ValidationError(path + ": missing header line");
  return c;
}

void OrchOrScenario::validate() const {
  if (!(monomer_mass.value_si > 0.0) || !(monomer_mass.dim == dims::mass()))
    throw DomainError("monomer mass must be a positive mass");
  if (!(monomer_radius.value_si > 0.0) ||
      !(monomer_radius.dim == dims::length()))
    throw DomainError("monomer radius must be a positive length");
  if (!(partial_separation.value_si >= 0.0) ||
      !(partial_separation.dim == dims::length()))
    throw DomainError("partial separation must be a nonnegative length");
  if (partial_separation.value_si > 2.0 * monomer_radius.value_si)
    throw OutOfRegimeError(
        "partial separation exceeds 2r, outside the partial-sphere regime");
  if (composition.entries.empty())
    throw DomainError("composition is empty");
  for (const auto& e : composition.entries)
    if (e.mass_number <= 0 || e.count <= 0)
      throw DomainError("composition entries must have positive A and count");
  if (!(composition.nuclear_radius_coefficient.value_si > 0.0) ||
      !(composition.nuclear_radius_coefficient.dim == dims::length()))
    throw DomainError("nuclear radius coefficient must be a positive length");
  // The composition must describe this dimer: total granule mass within 20%
  // of twice the monomer mass.
  const double comp_mass =
      composition.total_mass(ConstantsTable::codata2018()).value_si;
  const double dimer_mass = 2.0 * monomer_mass.value_si;
  if (comp_mass < 0.8 * dimer_mass || comp_mass > 1.2 * dimer_mass)
    throw DomainError(
        "composition mass deviates more than 20% from the dimer mass");
  if (!(n_tubulin >= 1.0)) throw DomainError("n_tubulin must be >= 1");
  if (!(coherent_fraction > 0.0 && coherent_fraction <= 1.0))
    throw DomainError("coherent fraction must lie in (0, 1]");
}

Quantity partial_sphere_energy(const Quantity& monomer_mass,
                               const Quantity& monomer_radius,
                               const Quantity& separation,
                               const ConstantsTable& k) {
  if (!(monomer_mass.value_si > 0.0) || !(monomer_mass.dim == dims::mass()))
    throw DomainError("monomer mass must be a positive mass");
  if (!(monomer_radius.value_si > 0.0) ||
      !(monomer_radius.dim == dims::length()))
    throw DomainError("monomer radius must be a positive length");
  if (!(separation.value_si >= 0.0) || !(separation.dim == dims::length()))
    throw DomainError("separation must be a nonnegative length");
  if (separation.value_si > 2.0 * monomer_radius.value_si)
    throw OutOfRegimeError("separation exceeds 2r for partial-sphere energy");

  const Quantity ratio = separation / monomer_radius;  // dimensionless
  const double x = ratio.value_si;
  const double poly = 1.0 - 3.0 * x / 8.0 + x * x * x / 80.0;
  return k.gravitational * monomer_mass * monomer_mass * separation *
         separation / (2.0 * pow(monomer_radius, 3)) * poly;
}

Quantity granular_separation_energy(SeparationLevel level,
                                    const GranularComposition& comp,
                                    const ConstantsTable& k) {
  if (level == SeparationLevel::ProteinSpherePartial)
    throw DomainError(
        "granular_separation_energy applies to complete-separation levels");
  if (comp.entries.empty()) throw DomainError("composition is empty");
  const Quantity& r0 = comp.nuclear_radius_coefficient;
  if (!(r0.value_si > 0.0) || !(r0.dim == dims::length()))
    throw DomainError("nuclear radius coefficient must be a positive length");

  Quantity total{0.0, dims::energy()};
  if (level == SeparationLevel::AtomicNuclei) {
    for (const auto& e : comp.entries) {
      if (e.mass_number <= 0 || e.count <= 0)
        throw DomainError("composition entries must have positive A and count");
      const double a = static_cast<double>(e.mass_number);
      const Quantity m = a * k.atomic_mass_unit;
      const Quantity r = std::cbrt(a) * r0;
      total = total + static_cast<double>(e.count) * kContactEnergyCoefficient *
                          k.gravitational * m * m / r;
    }
  } else {  // Nucleons: one granule per nucleon, radius r0
    const double count = static_cast<double>(comp.total_mass_number());
    if (!(count > 0.0)) throw DomainError("composition has no nucleons");
    const Quantity m = k.atomic_mass_unit;
    total = count * kContactEnergyCoefficient * k.gravitational * m * m / r0;
  }
  return total;
}

Quantity orch_or_tau(const Quantity& total_energy, const ConstantsTable& k) {
  if (!(total_energy.dim == dims::energy()))
    throw DomainError("orch_or_tau expects an energy");
  if (!(total_energy.value_si > 0.0))
    throw DomainError("orch_or_tau expects a positive energy");
  return k.hbar / total_energy;
}

std::pair<SeparationLevel, LevelEnergyTable> dominant_level(
    const OrchOrScenario& scenario, const ConstantsTable& k) {
  scenario.validate();

  // Per-dimer entries: the partial-sphere level displaces both monomers.
  const Quantity partial =
      2.0 * partial_sphere_energy(scenario.monomer_mass,
                                  scenario.monomer_radius,
                                  scenario.partial_separation, k);
  const Quantity nuclei = granular_separation_energy(
      SeparationLevel::AtomicNuclei, scenario.composition, k);
  const Quantity nucleons = granular_separation_energy(
      SeparationLevel::Nucleons, scenario.composition, k);

  LevelEnergyTable table;
  table.per_dimer = {{{SeparationLevel::ProteinSpherePartial, partial},
                      {SeparationLevel::AtomicNuclei, nuclei},
                      {SeparationLevel::Nucleons, nucleons}}};

  SeparationLevel winner = SeparationLevel::ProteinSpherePartial;
  double best = partial.value_si;
  for (const auto& [level, energy] : table.per_dimer) {
    if (energy.value_si > best) {
      best = energy.value_si;
      winner = level;
    }
  }
  return {winner, table};
}

Quantity aggregate_energy(const OrchOrScenario& scenario,
                          const ConstantsTable& k) {
  scenario.validate();
  Quantity per_dimer{0.0, dims::energy()};
  if (scenario.level == SeparationLevel::ProteinSpherePartial) {
    per_dimer = 2.0 * partial_sphere_energy(scenario.monomer_mass,
                                            scenario.monomer_radius,
                                            scenario.partial_separation, k);
  } else {
    per_dimer =
        granular_separation_energy(scenario.level, scenario.composition, k);
  }
  return scenario.n_tubulin * per_dimer;
}

}  // namespace mtdec
