#include "mtdec/sweep.hpp"

#include <algorithm>

#include "mtdec/errors.hpp"
#include "mtdec/format.hpp"

namespace mtdec {

const std::vector<std::string>& sweepable_parameters() {
  static const std::vector<std::string> params = {
      "T", "a", "s", "epsilon_r", "p", "N", "eta", "gel_factor", "n_tubulin"};
  return params;
}

namespace {

// Models a parameter applies to, in row-emission (lexicographic) order.
std::vector<std::string> applicable_models(const std::string& param) {
  if (param == "epsilon_r" || param == "p") return {"dipole"};
  if (param == "N") return {"ion_coulomb"};
  if (param == "n_tubulin") return {"orch_or"};
  return {"dipole", "ion_coulomb"};  // T, a, s, eta, gel_factor
}

struct RowEval {
  std::optional<double> tau_seconds;
  std::string error_kind;
};

RowEval eval_row(const Scenario& base, const std::string& model,
                 const std::string& param, double value,
                 const ConstantsTable& k) {
  RowEval out;
  try {
    Scenario s = base;
    if (param == "T") {
      Quantity t{value, dims::temperature()};
      s.ion_coulomb.temperature = t;
      s.dipole.temperature = t;
    } else if (param == "s") {
      Quantity sep{value, dims::length()};
      s.ion_coulomb.separation = sep;
      s.dipole.separation = sep;
    } else if (param == "epsilon_r") {
      s.dipole.epsilon_r = value;
    } else if (param == "p") {
      s.dipole.dipole_moment = Quantity{value, dims::dipole_moment()};
    } else if (param == "N") {
      s.ion_coulomb.charge_count = value;
    } else if (param == "eta") {
      s.standoff.eta = value;
    } else if (param == "gel_factor") {
      s.standoff.gel_factor = value;
    } else if (param == "n_tubulin") {
      s.orchor.n_tubulin = value;
    }

    if (model == "orch_or") {
      out.tau_seconds = orch_or_tau(aggregate_energy(s.orchor, k), k).value_si;
      return out;
    }

    const Quantity standoff = (param == "a")
                                  ? Quantity{value, dims::length()}
                                  : ion_standoff(s.standoff, k);
    if (model == "ion_coulomb") {
      IonCoulombInputs in{s.ion_coulomb.temperature, s.ion_coulomb.ion_mass,
                          standoff, s.ion_coulomb.charge_count,
                          s.ion_coulomb.separation};
      out.tau_seconds = tau_ion_coulomb(in, k).value_si;
    } else {
      DipoleInputs in{s.dipole.temperature, s.dipole.ion_mass,     standoff,
                      s.dipole.dipole_moment, s.dipole.separation,
                      s.dipole.epsilon_r,     s.dipole.orientation};
      out.tau_seconds = tau_dipole(in, k).value_si;
    }
  } catch (const DivergenceError&) {
    out.error_kind = "error:divergence";
  } catch (const OutOfRegimeError&) {
    out.error_kind = "error:out-of-regime";
  } catch (const DomainError&) {
    out.error_kind = "error:domain";
  }
  return out;
}

}  // namespace

SweepTable sweep(const Scenario& s, std::string_view param,
                 std::span<const double> grid, const ConstantsTable& k) {
  s.validate();
  const std::string param_name(param);
  const auto& known = sweepable_parameters();
  if (std::find(known.begin(), known.end(), param_name) == known.end())
    throw ValidationError("unknown sweep parameter '" + param_name + "'");
  if (grid.empty()) throw ValidationError("sweep grid is empty");
  for (std::size_t i = 1; i < grid.size(); ++i)
    if (!(grid[i] > grid[i - 1]))
      throw ValidationError("sweep grid must be strictly ascending");

  SweepTable table;
  table.param = param_name;
  table.scenario_label = s.label;
  table.seed = s.seed;
  table.constants_version = k.version;
  table.rng_id = kOrientationSamplerId;
  if (param_name == "T") table.flags.push_back(kLowTemperatureFlag);

  const auto models = applicable_models(param_name);
  for (double value : grid) {
    for (const auto& model : models) {
      SweepRow row;
      row.value_si = value;
      row.model = model;
      RowEval eval = eval_row(s, model, param_name, value, k);
      if (eval.error_kind.empty()) {
        row.tau_seconds = eval.tau_seconds;
        row.regime_kink =
            classify_regime(*eval.tau_seconds, s.dynamics.kink.value_si);
        row.regime_neural =
            classify_regime(*eval.tau_seconds, s.dynamics.neural.value_si);
      } else {
        row.note = eval.error_kind;
      }
      table.rows.push_back(std::move(row));
    }
  }
  return table;
}

std::string sweep_to_csv(const SweepTable& table, const RunManifest& manifest) {
  std::string out;
  for (const auto& line : manifest.csv_comment_lines()) {
    out += line;
    out += '\n';
  }
  out += "# param: " + table.param + "\n";
  for (const auto& flag : table.flags) out += "# flag: " + flag + "\n";
  out += "param,value_si,model,tau_seconds,regime_kink,regime_neural,note\n";
  for (const auto& row : table.rows) {
    out += table.param;
    out += ',';
    out += full(row.value_si);
    out += ',';
    out += row.model;
    out += ',';
    if (row.tau_seconds) out += full(*row.tau_seconds);
    out += ',';
    out += row.regime_kink;
    out += ',';
    out += row.regime_neural;
    out += ',';
    out += row.note;
    out += '\n';
  }
  return out;
}

}  // namespace mtdec
