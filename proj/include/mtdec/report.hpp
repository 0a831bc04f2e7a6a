#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "mtdec/formula.hpp"
#include "mtdec/manifest.hpp"
#include "mtdec/scenario.hpp"

namespace mtdec {

// Human and machine renderings share these structures so the two output
// modes cannot drift apart.

std::string render_results_text(const Scenario& s,
                                const std::vector<ModelResult>& results,
                                int digits);
nlohmann::ordered_json results_to_json(const Scenario& s,
                                       const std::vector<ModelResult>& results,
                                       const RunManifest& manifest);

std::string render_comparison_text(const Scenario& s,
                                   const ComparisonTable& table, int digits);
nlohmann::ordered_json comparison_to_json(const Scenario& s,
                                          const ComparisonTable& table,
                                          const RunManifest& manifest);

std::string render_audit_text(const std::vector<FormulaVerdict>& verdicts);
nlohmann::ordered_json audit_to_json(const std::vector<FormulaVerdict>& verdicts,
                                     const RunManifest& manifest);

}  // namespace mtdec
