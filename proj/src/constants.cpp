#include "mtdec/constants.hpp"

#include <fstream>

#include <json.hpp>

#include "mtdec/errors.hpp"
#include "mtdec/units.hpp"

namespace mtdec {

const ConstantsTable& ConstantsTable::codata2018() {
  static const ConstantsTable table = [] {
    ConstantsTable t;
    t.version = "CODATA-2018/mtdec-1";
    t.epsilon0 = make_quantity(8.8541878128e-12, "F/m");
    t.k_boltzmann = make_quantity(1.380649e-23, "J/K");
    t.hbar = make_quantity(1.054571817e-34, "J*s");
    t.gravitational = make_quantity(6.67430e-11, "m^3/(kg*s^2)");
    t.elementary_charge = make_quantity(1.602176634e-19, "C");
    t.atomic_mass_unit = make_quantity(1.66053906660e-27, "kg");
    t.avogadro = make_quantity(6.02214076e23, "1/mol");
    t.water_number_density = make_quantity(3.34e28, "m^-3");
    t.debye_unit = make_quantity(1.0, "Debye");
    return t;
  }();
  return table;
}

ConstantsTable ConstantsTable::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open constants file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError("constants file " + path + ": " + e.what());
  }

  ConstantsTable t = codata2018();
  try {
    if (j.contains("version")) t.version = j.at("version").get<std::string>();
    if (!j.contains("constants")) return t;

    const auto& c = j.at("constants");
    auto load = [&](const char* name, Quantity& slot) {
      if (!c.contains(name)) return;
      const auto& entry = c.at(name);
      Quantity q = make_quantity(entry.at("value").get<double>(),
                                 entry.at("unit").get<std::string>());
      if (!(q.dim == slot.dim))
        throw ValidationError(std::string("constant '") + name +
                              "' has wrong dimension in " + path);
      slot = q;
    };
    load("epsilon0", t.epsilon0);
    load("k_boltzmann", t.k_boltzmann);
    load("hbar", t.hbar);
    load("gravitational", t.gravitational);
    load("elementary_charge", t.elementary_charge);
    load("atomic_mass_unit", t.atomic_mass_unit);
    load("avogadro", t.avogadro);
    load("water_number_density", t.water_number_density);
    load("debye_unit", t.debye_unit);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError("constants file " + path + ": " + e.what());
  }
  return t;
}

const TubulinElectrostatics& tubulin_electrostatics() {
  static const TubulinElectrostatics table = [] {
    TubulinElectrostatics t;
    t.net_charge = -10.0 * make_quantity(1.602176634e-19, "C");
    t.dipole_total = make_quantity(1714, "Debye");
    t.dipole_x = make_quantity(337, "Debye");
    t.dipole_y = make_quantity(-1669, "Debye");
    t.dipole_z = make_quantity(198, "Debye");
    t.tail_contribution_available = false;
    return t;
  }();
  return table;
}

}  // namespace mtdec
