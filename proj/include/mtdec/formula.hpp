#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mtdec/dimension.hpp"
#include "mtdec/expr.hpp"

namespace mtdec {

// Symbol bindings for a formula audit: every free symbol must map to a
// dimension. "pi" is bound to dimensionless automatically unless shadowed.
struct SymbolTable {
  std::map<std::string, Dimension, std::less<>> dims;
};

struct AuditReport {
  bool consistent = false;
  // Dimension derived for the whole tree; absent when a sum node mixes
  // dimensions (detail then names the offending node).
  std::optional<Dimension> derived;
  Dimension claimed;
  std::string detail;
};

// Derives the dimension of `tree` under `symbols` and compares with
// `claimed`. Sum nodes whose addends disagree yield an inconsistency report
// naming the offending subexpression. Unbound symbols throw AuditError.
AuditReport audit_formula(const ExprPtr& tree, const SymbolTable& symbols,
                          const Dimension& claimed);

// A formula file: one shared symbol block plus named formulas with claimed
// dimensions, both expressed as unit expressions (schema in the README).
struct FormulaEntry {
  std::string name;
  std::string expr;
  std::string claimed;
};

struct FormulaFile {
  SymbolTable symbols;
  std::vector<FormulaEntry> formulas;
};

FormulaFile formula_file_from_json_text(const std::string& text);
FormulaFile formula_file_from_path(const std::string& path);

struct FormulaVerdict {
  std::string name;
  AuditReport report;
};

std::vector<FormulaVerdict> audit_formula_file(const FormulaFile& file);

}  // namespace mtdec
