#pragma once

#include <string>

#include <json.hpp>

#include "mtdec/scenario.hpp"

namespace mtdec {

// Scenario file schema (JSON): top-level keys label, seed, ion_coulomb,
// dipole, standoff, electrolyte, orchor, dynamics. Every physical numeric
// field is an object {value, unit}; seed and ion valences are plain
// integers. Unknown keys are rejected. Full schema in the README.
//
// `base_dir` resolves a relative orchor.composition_file reference.
Scenario scenario_from_json(const nlohmann::json& j,
                            const std::string& base_dir);

Scenario scenario_from_file(const std::string& path);

nlohmann::ordered_json scenario_to_json(const Scenario& s);

}  // namespace mtdec
