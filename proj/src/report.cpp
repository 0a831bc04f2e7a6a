#include "mtdec/report.hpp"

#include <sstream>

#include "mtdec/format.hpp"
#include "mtdec/units.hpp"

namespace mtdec {

namespace {

std::string tau_cell(const ModelResult& r, int digits) {
  if (r.tau) return sci(r.tau->value_si, digits) + " s";
  return "-";
}

}  // namespace

std::string render_results_text(const Scenario& s,
                                const std::vector<ModelResult>& results,
                                int digits) {
  std::ostringstream out;
  out << "scenario: " << s.label << " (seed " << s.seed << ")\n";
  for (const auto& r : results) {
    out << "\n[" << r.model << "]\n";
    out << "  tau: " << tau_cell(r, digits);
    if (!r.error.empty()) out << "  ERROR " << r.error;
    out << "\n";
    if (r.reference_band_seconds) {
      out << "  reference: " << r.reference_label << "  (band "
          << sci(r.reference_band_seconds->first, 1) << ".."
          << sci(r.reference_band_seconds->second, 1) << " s)\n";
    }
    if (!r.regime_kink.empty()) {
      out << "  regime vs tau_dyn_kink="
          << sci(s.dynamics.kink.value_si, digits) << " s: " << r.regime_kink
          << "\n";
      out << "  regime vs tau_dyn_neural="
          << sci(s.dynamics.neural.value_si, digits)
          << " s: " << r.regime_neural << "\n";
    }
    out << "  inputs:\n";
    for (const auto& in : r.inputs) {
      if (!in.text.empty()) {
        out << "    " << in.name << " = " << in.text << "\n";
      } else {
        out << "    " << in.name << " = " << sci(in.value_si, digits);
        if (!in.unit.empty() && in.unit != "1") out << " " << in.unit;
        out << "\n";
      }
    }
    for (const auto& n : r.notes) out << "  note: " << n << "\n";
  }
  return out.str();
}

nlohmann::ordered_json results_to_json(const Scenario& s,
                                       const std::vector<ModelResult>& results,
                                       const RunManifest& manifest) {
  nlohmann::ordered_json j;
  j["manifest"] = manifest.to_json();
  j["scenario"] = s.label;
  j["seed"] = s.seed;
  j["tau_dyn_kink_seconds"] = s.dynamics.kink.value_si;
  j["tau_dyn_neural_seconds"] = s.dynamics.neural.value_si;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : results) {
    nlohmann::ordered_json m;
    m["model"] = r.model;
    if (r.tau)
      m["tau_seconds"] = r.tau->value_si;
    else
      m["tau_seconds"] = nullptr;
    m["error"] = r.error;
    m["regime_kink"] = r.regime_kink;
    m["regime_neural"] = r.regime_neural;
    if (r.reference_band_seconds) {
      m["reference_band_seconds"] = {r.reference_band_seconds->first,
                                     r.reference_band_seconds->second};
      m["reference"] = r.reference_label;
    }
    auto inputs = nlohmann::ordered_json::object();
    for (const auto& in : r.inputs) {
      if (!in.text.empty())
        inputs[in.name] = in.text;
      else
        inputs[in.name] = {{"value", in.value_si}, {"unit", in.unit}};
    }
    m["inputs"] = inputs;
    m["notes"] = r.notes;
    m["constants_version"] = r.constants_version;
    arr.push_back(std::move(m));
  }
  j["results"] = std::move(arr);
  return j;
}

std::string render_comparison_text(const Scenario& s,
                                   const ComparisonTable& table, int digits) {
  std::ostringstream out;
  out << "comparison for scenario: " << s.label << "\n";
  for (const auto& row : table.rows) {
    out << "  " << row.model << ": ";
    if (row.tau_seconds)
      out << sci(*row.tau_seconds, digits) << " s";
    else
      out << "ERROR " << row.error;
    out << "\n";
  }
  out << "ratios:\n";
  for (const auto& [name, ratio] : table.ratios)
    out << "  " << name << " = " << sci(ratio, digits) << "\n";
  out << "dipole/ion_coulomb >= 1e8: "
      << (table.dipole_ion_ratio_ok ? "yes" : "NO") << "\n";
  for (const auto& a : table.annotations) out << "  " << a << "\n";
  return out.str();
}

nlohmann::ordered_json comparison_to_json(const Scenario& s,
                                          const ComparisonTable& table,
                                          const RunManifest& manifest) {
  nlohmann::ordered_json j;
  j["manifest"] = manifest.to_json();
  j["scenario"] = s.label;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json r;
    r["model"] = row.model;
    if (row.tau_seconds)
      r["tau_seconds"] = *row.tau_seconds;
    else
      r["tau_seconds"] = nullptr;
    r["error"] = row.error;
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  auto ratios = nlohmann::ordered_json::object();
  for (const auto& [name, ratio] : table.ratios) ratios[name] = ratio;
  j["ratios"] = std::move(ratios);
  j["dipole_ion_ratio_ok"] = table.dipole_ion_ratio_ok;
  j["annotations"] = table.annotations;
  return j;
}

std::string render_audit_text(const std::vector<FormulaVerdict>& verdicts) {
  std::ostringstream out;
  for (const auto& v : verdicts) {
    out << (v.report.consistent ? "consistent" : "MISMATCH") << "  " << v.name;
    if (v.report.derived)
      out << "  derived [" << v.report.derived->str() << "]";
    out << "  claimed [" << v.report.claimed.str() << "]";
    if (!v.report.detail.empty()) out << "  -- " << v.report.detail;
    out << "\n";
  }
  out << verdicts.size() << " formula(s) audited\n";
  return out.str();
}

nlohmann::ordered_json audit_to_json(const std::vector<FormulaVerdict>& verdicts,
                                     const RunManifest& manifest) {
  nlohmann::ordered_json j;
  j["manifest"] = manifest.to_json();
  auto arr = nlohmann::ordered_json::array();
  for (const auto& v : verdicts) {
    nlohmann::ordered_json entry;
    entry["name"] = v.name;
    entry["consistent"] = v.report.consistent;
    entry["derived"] =
        v.report.derived ? v.report.derived->str() : std::string("");
    entry["claimed"] = v.report.claimed.str();
    entry["detail"] = v.report.detail;
    arr.push_back(std::move(entry));
  }
  j["verdicts"] = std::move(arr);
  return j;
}

}  // namespace mtdec
