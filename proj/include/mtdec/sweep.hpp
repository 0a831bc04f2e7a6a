#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mtdec/manifest.hpp"
#include "mtdec/scenario.hpp"

namespace mtdec {

// Parameters accepted by sweep(); grid values are plain numbers in the
// parameter's canonical unit (K for T, m for a and s, C m for p, numbers
// for the dimensionless ones). See the README table.
const std::vector<std::string>& sweepable_parameters();

struct SweepRow {
  double value_si = 0.0;
  std::string model;
  std::optional<double> tau_seconds;
  std::string regime_kink;   // empty on error rows
  std::string regime_neural;
  std::string note;          // "error:<kind>" on failed rows, flags otherwise
};

struct SweepTable {
  std::string param;
  std::string scenario_label;
  std::uint64_t seed = 0;
  std::string constants_version;
  std::string rng_id;
  std::vector<std::string> flags;  // table-level notes (e.g. low-T artifact)
  std::vector<SweepRow> rows;      // ordered by (value, model)
};

// Varies one parameter over an ascending grid and evaluates every model the
// parameter applies to. Rows that violate a model precondition carry an
// error marker instead of aborting the run.
SweepTable sweep(const Scenario& s, std::string_view param,
                 std::span<const double> grid, const ConstantsTable& k);

// CSV serialization: manifest comment lines, then exactly
//   param,value_si,model,tau_seconds,regime_kink,regime_neural,note
// The data section (header row onward) is byte-identical across runs with
// the same scenario and seed.
std::string sweep_to_csv(const SweepTable& table, const RunManifest& manifest);

}  // namespace mtdec
