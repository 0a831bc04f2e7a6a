// mtdec: decoherence and collapse timescales for microtubule-associated
// quantum states. Subcommands: compute, sweep, compare, audit, presets.
//
// Exit codes: 0 success, 1 audit mismatch, 2 input error, 3 model domain
// error. No other codes are produced.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mtdec/constants.hpp"
#include "mtdec/errors.hpp"
#include "mtdec/format.hpp"
#include "mtdec/formula.hpp"
#include "mtdec/manifest.hpp"
#include "mtdec/report.hpp"
#include "mtdec/scenario.hpp"
#include "mtdec/scenario_io.hpp"
#include "mtdec/sweep.hpp"

namespace {

constexpr int kExitSuccess = 0;
constexpr int kExitAuditMismatch = 1;
constexpr int kExitInputError = 2;
constexpr int kExitModelError = 3;

struct CommonOptions {
  std::string scenario_ref;
  std::string out_path;
  std::string constants_path;
  bool json = false;
  int digits = 4;
  bool seed_set = false;
  std::uint64_t seed = 0;
};

mtdec::ConstantsTable load_constants(const CommonOptions& opt) {
  if (!opt.constants_path.empty())
    return mtdec::ConstantsTable::from_file(opt.constants_path);
  if (const char* env = std::getenv("MTDEC_CONSTANTS"); env && *env)
    return mtdec::ConstantsTable::from_file(env);
  return mtdec::ConstantsTable::codata2018();
}

mtdec::Scenario load_scenario(const CommonOptions& opt) {
  const auto names = mtdec::preset_names();
  mtdec::Scenario s;
  if (std::find(names.begin(), names.end(), opt.scenario_ref) != names.end())
    s = mtdec::preset(opt.scenario_ref);
  else
    s = mtdec::scenario_from_file(opt.scenario_ref);
  if (opt.seed_set) s.seed = opt.seed;
  return s;
}

mtdec::RunManifest make_manifest(const std::string& command,
                                 const CommonOptions& opt,
                                 const mtdec::ConstantsTable& k,
                                 std::uint64_t seed) {
  mtdec::RunManifest m;
  m.command = command;
  m.scenario_ref = opt.scenario_ref;
  if (!opt.out_path.empty()) m.outputs.push_back(opt.out_path);
  m.seed = seed;
  m.constants_version = k.version;
  m.rng_id = mtdec::kOrientationSamplerId;
  m.timestamp = mtdec::RunManifest::now_utc();
  return m;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw mtdec::ValidationError("cannot write output: " + out_path);
  out << text;
}

int cmd_compute(const CommonOptions& opt) {
  const auto constants = load_constants(opt);
  const auto scenario = load_scenario(opt);
  const auto results = mtdec::run_scenario(scenario, constants);
  const auto manifest = make_manifest("compute", opt, constants, scenario.seed);

  if (opt.json) {
    emit(mtdec::results_to_json(scenario, results, manifest).dump(2) + "\n",
         opt.out_path);
  } else {
    std::string text;
    for (const auto& line : manifest.csv_comment_lines()) text += line + "\n";
    text += mtdec::render_results_text(scenario, results, opt.digits);
    emit(text, opt.out_path);
  }

  for (const auto& r : results)
    if (!r.error.empty()) return kExitModelError;
  return kExitSuccess;
}

int cmd_compare(const CommonOptions& opt) {
  const auto constants = load_constants(opt);
  const auto scenario = load_scenario(opt);
  const auto table = mtdec::compare(scenario, constants);
  const auto manifest = make_manifest("compare", opt, constants, scenario.seed);

  if (opt.json) {
    emit(mtdec::comparison_to_json(scenario, table, manifest).dump(2) + "\n",
         opt.out_path);
  } else {
    std::string text;
    for (const auto& line : manifest.csv_comment_lines()) text += line + "\n";
    text += mtdec::render_comparison_text(scenario, table, opt.digits);
    emit(text, opt.out_path);
  }

  for (const auto& row : table.rows)
    if (!row.error.empty()) return kExitModelError;
  return kExitSuccess;
}

std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> grid;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string item = text.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (item.empty())
      throw mtdec::ValidationError("empty grid entry in '" + text + "'");
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw mtdec::ValidationError("malformed grid value '" + item + "'");
    }
    if (used != item.size())
      throw mtdec::ValidationError("malformed grid value '" + item + "'");
    grid.push_back(v);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return grid;
}

int cmd_sweep(const CommonOptions& opt, const std::string& param,
              const std::string& grid_text) {
  const auto constants = load_constants(opt);
  const auto scenario = load_scenario(opt);
  const auto grid = parse_grid(grid_text);
  const auto table = mtdec::sweep(scenario, param, grid, constants);
  const auto manifest = make_manifest("sweep", opt, constants, scenario.seed);
  emit(mtdec::sweep_to_csv(table, manifest), opt.out_path);
  return kExitSuccess;
}

int cmd_audit(const CommonOptions& opt, const std::string& formula_path) {
  const auto constants = load_constants(opt);
  const auto file = mtdec::formula_file_from_path(formula_path);
  const auto verdicts = mtdec::audit_formula_file(file);

  CommonOptions manifest_opt = opt;
  manifest_opt.scenario_ref = formula_path;
  auto manifest = make_manifest("audit", manifest_opt, constants, 0);

  if (opt.json) {
    emit(mtdec::audit_to_json(verdicts, manifest).dump(2) + "\n",
         opt.out_path);
  } else {
    std::string text;
    for (const auto& line : manifest.csv_comment_lines()) text += line + "\n";
    text += mtdec::render_audit_text(verdicts);
    emit(text, opt.out_path);
  }

  for (const auto& v : verdicts)
    if (!v.report.consistent) return kExitAuditMismatch;
  return kExitSuccess;
}

int cmd_presets(const std::string& emit_name, const std::string& out_path) {
  if (!emit_name.empty()) {
    const auto scenario = mtdec::preset(emit_name);
    emit(mtdec::scenario_to_json(scenario).dump(2) + "\n", out_path);
    return kExitSuccess;
  }
  std::string text;
  for (const auto& name : mtdec::preset_names()) {
    text += name + "\n";
    for (const auto& a : mtdec::preset_annotations(name))
      text += "  " + a.field + " = " + a.value + "  [" + a.source + "]\n";
    text += "\n";
  }
  emit(text, out_path);
  return kExitSuccess;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"decoherence and collapse timescales for "
               "microtubule-associated quantum states"};
  app.require_subcommand(1);

  CommonOptions opt;
  std::string param, grid_text, formula_path, emit_name;

  auto add_common = [&](CLI::App* cmd, bool with_scenario) {
    if (with_scenario)
      cmd->add_option("scenario", opt.scenario_ref,
                      "preset name or scenario JSON file")
          ->required();
    cmd->add_option("--out", opt.out_path, "write output to this file");
    cmd->add_option("--constants", opt.constants_path,
                    "constants override file (or MTDEC_CONSTANTS env var)");
    cmd->add_option("--digits", opt.digits,
                    "significant digits in human-readable output");
    cmd->add_flag("--json", opt.json, "machine-readable JSON output");
    cmd->add_option_function<std::uint64_t>(
        "--seed",
        [&](std::uint64_t v) {
          opt.seed = v;
          opt.seed_set = true;
        },
        "override the scenario RNG seed");
  };

  auto* compute = app.add_subcommand("compute", "evaluate all models");
  add_common(compute, true);

  auto* sweep = app.add_subcommand("sweep", "vary one parameter over a grid");
  add_common(sweep, true);
  sweep->add_option("--param", param, "parameter to sweep")->required();
  sweep->add_option("--grid", grid_text,
                    "comma-separated ascending values (canonical SI units)")
      ->required();

  auto* cmp = app.add_subcommand("compare", "model comparison table");
  add_common(cmp, true);

  auto* audit = app.add_subcommand("audit", "dimensional audit of formulas");
  audit->add_option("file", formula_path, "formula file (JSON)")->required();
  audit->add_option("--out", opt.out_path, "write output to this file");
  audit->add_flag("--json", opt.json, "machine-readable JSON output");

  auto* presets = app.add_subcommand("presets", "list shipped presets");
  presets->add_option("--emit", emit_name, "emit one preset as scenario JSON");
  presets->add_option("--out", opt.out_path, "write output to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitSuccess : kExitInputError;
  }

  try {
    if (compute->parsed()) return cmd_compute(opt);
    if (sweep->parsed()) return cmd_sweep(opt, param, grid_text);
    if (cmp->parsed()) return cmd_compare(opt);
    if (audit->parsed()) return cmd_audit(opt, formula_path);
    if (presets->parsed()) return cmd_presets(emit_name, opt.out_path);
  } catch (const mtdec::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const mtdec::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const mtdec::UnitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const mtdec::AuditError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const mtdec::DimensionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const mtdec::Error& e) {
    // remaining library errors are model-domain failures
    std::cerr << "error: " << e.what() << "\n";
    return kExitModelError;
  } catch (const std::exception& e) {
    // anything else still maps into the documented exit-code partition
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitSuccess;
}
