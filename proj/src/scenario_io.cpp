#include "mtdec/scenario_io.hpp"

#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <set>

#include "mtdec/errors.hpp"
#include "mtdec/units.hpp"

namespace mtdec {

namespace {

using nlohmann::json;

void reject_unknown_keys(const json& j, const std::string& context,
                         std::initializer_list<const char*> allowed) {
  if (!j.is_object())
    throw ValidationError(context + ": expected an object");
  const std::set<std::string> allowed_set(allowed.begin(), allowed.end());
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (!allowed_set.count(key))
      throw ValidationError(context + ": unknown key '" + key + "'");
  }
}

const json& field(const json& j, const std::string& context,
                  const char* name) {
  if (!j.contains(name))
    throw ValidationError(context + ": missing field '" + name + "'");
  return j.at(name);
}

Quantity quantity_field(const json& j, const std::string& context,
                        const char* name, const Dimension& expected) {
  const json& f = field(j, context, name);
  const std::string where = context + "." + name;
  reject_unknown_keys(f, where, {"value", "unit"});
  if (!f.contains("value") || !f.contains("unit"))
    throw ValidationError(where + ": expected {value, unit}");
  if (!f.at("value").is_number())
    throw ValidationError(where + ".value: expected a number");
  Quantity q;
  try {
    q = make_quantity(f.at("value").get<double>(),
                      f.at("unit").get<std::string>());
  } catch (const Error& e) {
    throw ValidationError(where + ": " + e.what());
  }
  if (!(q.dim == expected))
    throw ValidationError(where + ": unit has dimension [" + q.dim.str() +
                          "], expected [" + expected.str() + "]");
  return q;
}

double dimensionless_field(const json& j, const std::string& context,
                           const char* name) {
  return quantity_field(j, context, name, dims::dimensionless()).value_si;
}

json quantity_json(double value, const char* unit) {
  json q;
  q["value"] = value;
  q["unit"] = unit;
  return q;
}

}  // namespace

Scenario scenario_from_json(const json& j, const std::string& base_dir) {
  reject_unknown_keys(j, "scenario",
                      {"label", "seed", "ion_coulomb", "dipole", "standoff",
                       "electrolyte", "orchor", "dynamics"});

  Scenario s;
  s.label = field(j, "scenario", "label").get<std::string>();
  if (j.contains("seed")) {
    if (!j.at("seed").is_number_integer())
      throw ValidationError("scenario.seed: expected an integer");
    s.seed = j.at("seed").get<std::uint64_t>();
  }

  {
    const json& b = field(j, "scenario", "ion_coulomb");
    reject_unknown_keys(
        b, "ion_coulomb",
        {"temperature", "ion_mass", "charge_count", "separation"});
    s.ion_coulomb.temperature =
        quantity_field(b, "ion_coulomb", "temperature", dims::temperature());
    s.ion_coulomb.ion_mass =
        quantity_field(b, "ion_coulomb", "ion_mass", dims::mass());
    s.ion_coulomb.charge_count =
        dimensionless_field(b, "ion_coulomb", "charge_count");
    s.ion_coulomb.separation =
        quantity_field(b, "ion_coulomb", "separation", dims::length());
  }

  {
    const json& b = field(j, "scenario", "dipole");
    reject_unknown_keys(b, "dipole",
                        {"temperature", "ion_mass", "dipole_moment",
                         "separation", "epsilon_r", "orientation"});
    s.dipole.temperature =
        quantity_field(b, "dipole", "temperature", dims::temperature());
    s.dipole.ion_mass = quantity_field(b, "dipole", "ion_mass", dims::mass());
    s.dipole.dipole_moment =
        quantity_field(b, "dipole", "dipole_moment", dims::dipole_moment());
    s.dipole.separation =
        quantity_field(b, "dipole", "separation", dims::length());
    s.dipole.epsilon_r = dimensionless_field(b, "dipole", "epsilon_r");

    const json& o = field(b, "dipole", "orientation");
    reject_unknown_keys(o, "dipole.orientation",
                        {"cos_theta", "cos_phi", "cos_psi"});
    s.dipole.orientation.cos_theta =
        dimensionless_field(o, "dipole.orientation", "cos_theta");
    s.dipole.orientation.cos_phi =
        dimensionless_field(o, "dipole.orientation", "cos_phi");
    s.dipole.orientation.cos_psi =
        dimensionless_field(o, "dipole.orientation", "cos_psi");
  }

  {
    const json& b = field(j, "scenario", "standoff");
    reject_unknown_keys(b, "standoff", {"eta", "diameter", "gel_factor"});
    s.standoff.eta = dimensionless_field(b, "standoff", "eta");
    s.standoff.diameter =
        quantity_field(b, "standoff", "diameter", dims::length());
    s.standoff.gel_factor = dimensionless_field(b, "standoff", "gel_factor");
  }

  {
    const json& b = field(j, "scenario", "electrolyte");
    reject_unknown_keys(b, "electrolyte",
                        {"epsilon_r", "temperature", "species"});
    s.electrolyte.epsilon_r = dimensionless_field(b, "electrolyte", "epsilon_r");
    s.electrolyte.temperature =
        quantity_field(b, "electrolyte", "temperature", dims::temperature());
    const json& species = field(b, "electrolyte", "species");
    if (!species.is_array() || species.empty())
      throw ValidationError("electrolyte.species: expected a nonempty array");
    s.electrolyte.species.clear();
    for (const auto& entry : species) {
      reject_unknown_keys(entry, "electrolyte.species[]",
                          {"name", "concentration", "valence", "mass"});
      IonSpecies ion;
      ion.name = field(entry, "electrolyte.species[]", "name").get<std::string>();
      ion.concentration = quantity_field(entry, "electrolyte.species[]",
                                         "concentration", dims::concentration());
      const json& valence = field(entry, "electrolyte.species[]", "valence");
      if (!valence.is_number_integer())
        throw ValidationError(
            "electrolyte.species[].valence: expected an integer");
      ion.valence = valence.get<int>();
      ion.mass = quantity_field(entry, "electrolyte.species[]", "mass",
                                dims::mass());
      s.electrolyte.species.push_back(std::move(ion));
    }
  }

  {
    const json& b = field(j, "scenario", "orchor");
    reject_unknown_keys(b, "orchor",
                        {"level", "monomer_mass", "monomer_radius",
                         "partial_separation", "n_tubulin",
                         "coherent_fraction", "nuclear_radius_coefficient",
                         "composition_file"});
    s.orchor.level = separation_level_from_string(
        field(b, "orchor", "level").get<std::string>());
    s.orchor.monomer_mass =
        quantity_field(b, "orchor", "monomer_mass", dims::mass());
    s.orchor.monomer_radius =
        quantity_field(b, "orchor", "monomer_radius", dims::length());
    s.orchor.partial_separation =
        quantity_field(b, "orchor", "partial_separation", dims::length());
    s.orchor.n_tubulin = dimensionless_field(b, "orchor", "n_tubulin");
    s.orchor.coherent_fraction =
        dimensionless_field(b, "orchor", "coherent_fraction");
    if (b.contains("composition_file")) {
      std::filesystem::path p(b.at("composition_file").get<std::string>());
      if (p.is_relative() && !base_dir.empty())
        p = std::filesystem::path(base_dir) / p;
      s.orchor.composition = GranularComposition::from_file(p.string());
    } else {
      s.orchor.composition = GranularComposition::default_protein();
    }
    if (b.contains("nuclear_radius_coefficient"))
      s.orchor.composition.nuclear_radius_coefficient = quantity_field(
          b, "orchor", "nuclear_radius_coefficient", dims::length());
  }

  {
    const json& b = field(j, "scenario", "dynamics");
    reject_unknown_keys(b, "dynamics", {"tau_kink", "tau_neural"});
    s.dynamics.kink = quantity_field(b, "dynamics", "tau_kink", dims::time());
    s.dynamics.neural =
        quantity_field(b, "dynamics", "tau_neural", dims::time());
  }

  s.validate();
  return s;
}

Scenario scenario_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open scenario file: " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ValidationError("scenario file " + path + ": " + e.what());
  }
  try {
    return scenario_from_json(
        j, std::filesystem::path(path).parent_path().string());
  } catch (const json::exception& e) {
    throw ValidationError("scenario file " + path + ": " + e.what());
  }
}

nlohmann::ordered_json scenario_to_json(const Scenario& s) {
  nlohmann::ordered_json j;
  j["label"] = s.label;
  j["seed"] = s.seed;

  j["ion_coulomb"] = {
      {"temperature", quantity_json(s.ion_coulomb.temperature.value_si, "K")},
      {"ion_mass", quantity_json(s.ion_coulomb.ion_mass.value_si, "kg")},
      {"charge_count", quantity_json(s.ion_coulomb.charge_count, "1")},
      {"separation", quantity_json(s.ion_coulomb.separation.value_si, "m")},
  };
  j["dipole"] = {
      {"temperature", quantity_json(s.dipole.temperature.value_si, "K")},
      {"ion_mass", quantity_json(s.dipole.ion_mass.value_si, "kg")},
      {"dipole_moment",
       quantity_json(s.dipole.dipole_moment.value_si, "C*m")},
      {"separation", quantity_json(s.dipole.separation.value_si, "m")},
      {"epsilon_r", quantity_json(s.dipole.epsilon_r, "1")},
      {"orientation",
       {{"cos_theta", quantity_json(s.dipole.orientation.cos_theta, "1")},
        {"cos_phi", quantity_json(s.dipole.orientation.cos_phi, "1")},
        {"cos_psi", quantity_json(s.dipole.orientation.cos_psi, "1")}}},
  };
  j["standoff"] = {
      {"eta", quantity_json(s.standoff.eta, "1")},
      {"diameter", quantity_json(s.standoff.diameter.value_si, "m")},
      {"gel_factor", quantity_json(s.standoff.gel_factor, "1")},
  };

  nlohmann::ordered_json species = nlohmann::ordered_json::array();
  for (const auto& ion : s.electrolyte.species) {
    species.push_back({
        {"name", ion.name},
        {"concentration",
         quantity_json(ion.concentration.value_si, "mol/m^3")},
        {"valence", ion.valence},
        {"mass", quantity_json(ion.mass.value_si, "kg")},
    });
  }
  j["electrolyte"] = {
      {"epsilon_r", quantity_json(s.electrolyte.epsilon_r, "1")},
      {"temperature",
       quantity_json(s.electrolyte.temperature.value_si, "K")},
      {"species", species},
  };

  j["orchor"] = {
      {"level", std::string(to_string(s.orchor.level))},
      {"monomer_mass", quantity_json(s.orchor.monomer_mass.value_si, "kg")},
      {"monomer_radius",
       quantity_json(s.orchor.monomer_radius.value_si, "m")},
      {"partial_separation",
       quantity_json(s.orchor.partial_separation.value_si, "m")},
      {"n_tubulin", quantity_json(s.orchor.n_tubulin, "1")},
      {"coherent_fraction", quantity_json(s.orchor.coherent_fraction, "1")},
      {"nuclear_radius_coefficient",
       quantity_json(s.orchor.composition.nuclear_radius_coefficient.value_si,
                     "m")},
  };
  j["dynamics"] = {
      {"tau_kink", quantity_json(s.dynamics.kink.value_si, "s")},
      {"tau_neural", quantity_json(s.dynamics.neural.value_si, "s")},
  };
  return j;
}

}  // namespace mtdec
