#include <doctest.h>

#include "mtdec/errors.hpp"
#include "mtdec/formula.hpp"
#include "mtdec/units.hpp"

using namespace mtdec;

namespace {

SymbolTable physics_symbols() {
  const auto& reg = UnitRegistry::standard();
  SymbolTable t;
  auto bind = [&](const char* name, const char* unit) {
    t.dims[name] = reg.parse(unit).dim;
  };
  bind("eps0", "F/m");
  bind("epsr", "1");
  bind("a", "m");
  bind("m", "kg");
  bind("k", "J/K");
  bind("T", "K");
  bind("N", "1");
  bind("qe", "C");
  bind("s", "m");
  bind("p", "C*m");
  bind("Omega", "1");
  bind("G", "m^3/(kg*s^2)");
  bind("M", "kg");
  bind("r", "m");
  bind("n", "m^-3");
  bind("z", "1");
  bind("x", "m");
  return t;
}

AuditReport audit(const std::string& expr, const SymbolTable& symbols,
                  const std::string& claimed_unit) {
  return audit_formula(parse_expression(expr), symbols,
                       UnitRegistry::standard().parse(claimed_unit).dim);
}

}  // namespace

TEST_CASE("ion-coulomb time formula derives dimension time") {
  const auto report = audit("(4*pi*eps0*a^3*(m*k*T)^(1/2))/(N*qe^2*s)",
                            physics_symbols(), "s");
  CHECK(report.consistent);
  REQUIRE(report.derived.has_value());
  CHECK(*report.derived == dims::time());
}

TEST_CASE("dipole time formula derives dimension time") {
  const auto report =
      audit("(4*pi*epsr*eps0*a^4*(m*k*T)^(1/2)*Omega)/(3*qe*p*s)",
            physics_symbols(), "s");
  CHECK(report.consistent);
  CHECK(*report.derived == dims::time());
}

TEST_CASE("partial-sphere energy formula derives dimension energy") {
  const auto report =
      audit("(G*M^2*s^2/(2*r^3))*(1 - 3*s/(8*r) + s^3/(80*r^3))",
            physics_symbols(), "J");
  CHECK(report.consistent);
  CHECK(*report.derived == dims::energy());
}

TEST_CASE("debye length formula derives dimension length") {
  const auto report = audit("((epsr*eps0*k*T)/(n*z^2*qe^2))^(1/2)",
                            physics_symbols(), "m");
  CHECK(report.consistent);
  CHECK(*report.derived == dims::length());
}

TEST_CASE("a polarization gradient is charge, not charge per length") {
  SymbolTable t;
  t.dims["p"] = dims::dipole_moment();  // charge * length
  t.dims["x"] = dims::length();

  const auto& reg = UnitRegistry::standard();
  const auto report =
      audit_formula(parse_expression("-d/dx[p]"), t, reg.parse("C/m").dim);
  CHECK_FALSE(report.consistent);
  REQUIRE(report.derived.has_value());
  CHECK(*report.derived == dims::charge());

  // the same tree is consistent with the dimension it actually has
  const auto fixed =
      audit_formula(parse_expression("-d/dx[p]"), t, reg.parse("C").dim);
  CHECK(fixed.consistent);
}

TEST_CASE("sums of equal dimensions are well-formed") {
  SymbolTable t;
  t.dims["x"] = dims::length();
  const auto report = audit("x + x", t, "m");
  CHECK(report.consistent);
  CHECK(*report.derived == dims::length());
}

TEST_CASE("sum-node inconsistency names the offending subexpression") {
  SymbolTable t;
  t.dims["a"] = dims::length();
  t.dims["t"] = dims::time();
  const auto report = audit("(a + t)*a", t, "m^2");
  CHECK_FALSE(report.consistent);
  CHECK_FALSE(report.derived.has_value());
  CHECK(report.detail.find("(a + t)") != std::string::npos);
  CHECK(report.detail.find("[L]") != std::string::npos);
  CHECK(report.detail.find("[T]") != std::string::npos);
}

TEST_CASE("unbound symbols raise an audit error naming the symbol") {
  SymbolTable t;
  t.dims["a"] = dims::length();
  try {
    audit("a*bogus", t, "m");
    FAIL("expected AuditError");
  } catch (const AuditError& e) {
    CHECK(std::string(e.what()).find("bogus") != std::string::npos);
  }
}

TEST_CASE("pi is bound to dimensionless unless shadowed") {
  SymbolTable t;
  CHECK(audit("2*pi", t, "1").consistent);
  t.dims["pi"] = dims::length();
  CHECK(audit("2*pi", t, "m").consistent);
}

TEST_CASE("rational exponents propagate through dimensions") {
  SymbolTable t;
  t.dims["A"] = dims::area();
  const auto report = audit("A^(1/2)", t, "m");
  CHECK(report.consistent);

  t.dims["v"] = dims::volume();
  CHECK(audit("v^(-1/3)", t, "m^-1").consistent);
}

TEST_CASE("derivatives divide by the differentiation symbol dimension") {
  SymbolTable t;
  t.dims["x"] = dims::length();
  const auto report = audit("d/dx[x*x]", t, "m");
  CHECK(report.consistent);
}

TEST_CASE("parse errors carry a byte position") {
  CHECK_THROWS_AS(parse_expression("(a"), ParseError);
  CHECK_THROWS_AS(parse_expression("a**b"), ParseError);
  CHECK_THROWS_AS(parse_expression(""), ParseError);
  CHECK_THROWS_AS(parse_expression("a^x"), ParseError);  // exponent not rational
  CHECK_THROWS_AS(parse_expression("a^(1/0)"), ParseError);
  try {
    parse_expression("a + ?");
  } catch (const ParseError& e) {
    CHECK(e.position == 4);
  }
}

TEST_CASE("formula files parse, audit, and reject unknown keys") {
  const std::string text = R"({
    "symbols": {"p": "C*m", "x": "m"},
    "formulas": [
      {"name": "grad", "expr": "d/dx[p]", "claimed": "C/m"},
      {"name": "ok", "expr": "p/x", "claimed": "C"}
    ]
  })";
  const auto file = formula_file_from_json_text(text);
  const auto verdicts = audit_formula_file(file);
  REQUIRE(verdicts.size() == 2);
  CHECK(verdicts[0].name == "grad");
  CHECK_FALSE(verdicts[0].report.consistent);
  CHECK(verdicts[1].report.consistent);

  CHECK_THROWS_AS(formula_file_from_json_text("{\"bogus\": 1}"),
                  ValidationError);
  CHECK_THROWS_AS(formula_file_from_json_text("{not json"), ParseError);

  // empty formula list: zero verdicts
  const auto empty = formula_file_from_json_text("{\"formulas\": []}");
  CHECK(audit_formula_file(empty).empty());
}
