#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mtdec/decoherence.hpp"
#include "mtdec/geometry.hpp"
#include "mtdec/orchor.hpp"
#include "mtdec/screening.hpp"

namespace mtdec {

// Dynamical timescales the decoherence estimates are judged against:
// kink-excitation traversal (~5e-7 s) and neural firing (1e-4..1e-3 s;
// the stored default is the upper end, classification runs against both
// values separately).
struct DynamicalTimescales {
  Quantity kink;
  Quantity neural;
};

// Ion-Coulomb model parameters without the standoff; the standoff distance
// comes from the scenario's StandoffSpec at evaluation time.
struct IonCoulombSpec {
  Quantity temperature;
  Quantity ion_mass;
  double charge_count = 468.0;  // 18 ions x 13 protofilaments x valence 2
  Quantity separation;
};

struct DipoleSpec {
  Quantity temperature;
  Quantity ion_mass;
  Quantity dipole_moment;
  Quantity separation;
  double epsilon_r = 10.0;
  OrientationTriple orientation;
};

// One named physical situation: everything needed to evaluate all three
// models plus the dynamical timescales and the RNG seed echoed in outputs.
struct Scenario {
  std::string label;
  std::uint64_t seed = 1;
  IonCoulombSpec ion_coulomb;
  DipoleSpec dipole;
  StandoffSpec standoff;
  Electrolyte electrolyte;
  OrchOrScenario orchor;
  DynamicalTimescales dynamics;

  void validate() const;
};

// tau_dec below tau_dyn/10 counts as "falls far short"; this threshold is a
// convention of this tool.
inline constexpr double kRegimeMargin = 0.1;

inline constexpr const char* kRegimeConsistent = "derivation-consistent";
inline constexpr const char* kRegimeViolated = "assumption-violated";

std::string classify_regime(double tau_s, double tau_dyn_s);

// One echoed input: SI value plus display unit, enough to recompute tau by
// hand together with the constants-table version. Non-numeric inputs (the
// separation level) echo through `text` instead.
struct InputEcho {
  std::string name;
  double value_si = 0.0;
  std::string unit;
  std::string text;

  InputEcho() = default;
  InputEcho(std::string n, double v, std::string u, std::string t = {})
      : name(std::move(n)), value_si(v), unit(std::move(u)),
        text(std::move(t)) {}
};

struct ModelResult {
  std::string model;  // "ion_coulomb" | "dipole" | "orch_or"
  std::optional<Quantity> tau;
  std::string error;  // empty on success, "<kind>: <detail>" otherwise
  std::string regime_kink;
  std::string regime_neural;
  std::vector<InputEcho> inputs;
  std::vector<std::string> notes;
  std::string constants_version;
  std::string reference_label;  // published value this estimate is compared to
  std::optional<std::pair<double, double>> reference_band_seconds;
};

// Evaluates every model on the scenario. A model that raises a domain or
// divergence error contributes a ModelResult carrying the error; the other
// models still run.
std::vector<ModelResult> run_scenario(const Scenario& s,
                                      const ConstantsTable& k);

struct ComparisonRow {
  std::string model;
  std::optional<double> tau_seconds;
  std::string error;
};

struct ComparisonTable {
  std::vector<ComparisonRow> rows;
  // Pairwise ratios, keyed "modelA/modelB".
  std::vector<std::pair<std::string, double>> ratios;
  bool dipole_ion_ratio_ok = false;  // >= 1e8 expected for default presets
  std::vector<std::string> annotations;  // static reference rows, not computed
};

ComparisonTable compare(const Scenario& s, const ConstantsTable& k);

inline constexpr double kMinDipoleIonRatio = 1e8;

// Shipped presets: tegmark-baseline, dipole-corrected, gel-phase,
// orchor-500ms.
std::vector<std::string> preset_names();
Scenario preset(std::string_view name);  // throws ValidationError if unknown

struct FieldAnnotation {
  std::string field;
  std::string value;
  std::string source;
};

// Field-by-field provenance of a preset: published source or artifact
// default.
std::vector<FieldAnnotation> preset_annotations(std::string_view name);

}  // namespace mtdec
