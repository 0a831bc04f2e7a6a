#include "mtdec/formula.hpp"

#include <fstream>
#include <functional>
#include <sstream>

#include <json.hpp>

#include "mtdec/errors.hpp"
#include "mtdec/units.hpp"

namespace mtdec {

namespace {

struct SumMismatch {
  std::string node;
  Dimension lhs, rhs;
};

// Dimension derivation over the tree. Sum mismatches are reported through
// the out-parameter rather than thrown, so the first offending node wins.
std::optional<Dimension> derive(const ExprPtr& n, const SymbolTable& symbols,
                                std::optional<SumMismatch>& mismatch) {
  auto lookup = [&](const std::string& name) -> Dimension {
    auto it = symbols.dims.find(name);
    if (it != symbols.dims.end()) return it->second;
    if (name == "pi") return dims::dimensionless();
    throw AuditError("unbound symbol '" + name + "'");
  };

  switch (n->kind) {
    case ExprNode::Kind::Symbol:
      return lookup(n->name);
    case ExprNode::Kind::Number:
      return dims::dimensionless();
    case ExprNode::Kind::Sum: {
      auto a = derive(n->lhs, symbols, mismatch);
      auto b = derive(n->rhs, symbols, mismatch);
      if (!a || !b) return std::nullopt;
      if (!(*a == *b)) {
        if (!mismatch) mismatch = SumMismatch{n->str(), *a, *b};
        return std::nullopt;
      }
      return a;
    }
    case ExprNode::Kind::Product: {
      auto a = derive(n->lhs, symbols, mismatch);
      auto b = derive(n->rhs, symbols, mismatch);
      if (!a || !b) return std::nullopt;
      return *a * *b;
    }
    case ExprNode::Kind::Quotient: {
      auto a = derive(n->lhs, symbols, mismatch);
      auto b = derive(n->rhs, symbols, mismatch);
      if (!a || !b) return std::nullopt;
      return *a / *b;
    }
    case ExprNode::Kind::Power: {
      auto a = derive(n->lhs, symbols, mismatch);
      if (!a) return std::nullopt;
      return a->pow(n->exponent);
    }
    case ExprNode::Kind::Derivative: {
      auto a = derive(n->lhs, symbols, mismatch);
      if (!a) return std::nullopt;
      return *a / lookup(n->name);
    }
  }
  return std::nullopt;
}

}  // namespace

AuditReport audit_formula(const ExprPtr& tree, const SymbolTable& symbols,
                          const Dimension& claimed) {
  AuditReport report;
  report.claimed = claimed;

  std::optional<SumMismatch> mismatch;
  report.derived = derive(tree, symbols, mismatch);

  if (mismatch) {
    report.consistent = false;
    report.detail = "sum mixes dimensions in " + mismatch->node + ": [" +
                    mismatch->lhs.str() + "] vs [" + mismatch->rhs.str() + "]";
    return report;
  }

  report.consistent = (*report.derived == claimed);
  return report;
}

FormulaFile formula_file_from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("formula file: ") + e.what(), e.byte);
  }

  FormulaFile file;
  const auto& registry = UnitRegistry::standard();

  for (const auto& [key, value] : j.items()) {
    if (key != "symbols" && key != "formulas")
      throw ValidationError("formula file: unknown top-level key '" + key +
                            "'");
    (void)value;
  }

  try {
    if (j.contains("symbols")) {
      for (const auto& [name, unit_expr] : j.at("symbols").items())
        file.symbols.dims[name] =
            registry.parse(unit_expr.get<std::string>()).dim;
    }

    if (j.contains("formulas")) {
      for (const auto& entry : j.at("formulas")) {
        for (const auto& [key, value] : entry.items()) {
          if (key != "name" && key != "expr" && key != "claimed")
            throw ValidationError("formula file: unknown formula key '" + key +
                                  "'");
          (void)value;
        }
        file.formulas.push_back({entry.at("name").get<std::string>(),
                                 entry.at("expr").get<std::string>(),
                                 entry.at("claimed").get<std::string>()});
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("formula file: ") + e.what());
  }
  return file;
}

FormulaFile formula_file_from_path(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open formula file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return formula_file_from_json_text(buf.str());
}

std::vector<FormulaVerdict> audit_formula_file(const FormulaFile& file) {
  const auto& registry = UnitRegistry::standard();
  std::vector<FormulaVerdict> verdicts;
  verdicts.reserve(file.formulas.size());
  for (const auto& f : file.formulas) {
    ExprPtr tree = parse_expression(f.expr);
    Dimension claimed = registry.parse(f.claimed).dim;
    verdicts.push_back({f.name, audit_formula(tree, file.symbols, claimed)});
  }
  return verdicts;
}

}  // namespace mtdec
