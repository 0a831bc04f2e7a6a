#include <doctest.h>

#include "mtdec/errors.hpp"
#include "mtdec/geometry.hpp"
#include "mtdec/screening.hpp"
#include "mtdec/units.hpp"
#include "test_util.hpp"

using namespace mtdec;
using testutil::approx_rel;

TEST_CASE("physiological debye length lands in the cytoplasmic band") {
  const auto& k = ConstantsTable::codata2018();
  const Quantity lam = debye_length(physiological_electrolyte(), k);
  CHECK(lam.dim == dims::length());
  // frozen hand evaluation of the closed form at 0.15 M, eps_r 80, 310 K
  CHECK(approx_rel(lam.value_si, 8.08528576987365486e-10, 1e-12));
  CHECK(lam.value_si > 0.6e-9);
  CHECK(lam.value_si < 1.0e-9);
}

TEST_CASE("debye length scales exactly as inverse root concentration") {
  const auto& k = ConstantsTable::codata2018();
  Electrolyte e = physiological_electrolyte();
  const double lam1 = debye_length(e, k).value_si;
  for (auto& s : e.species)
    s.concentration = 4.0 * s.concentration;
  const double lam4 = debye_length(e, k).value_si;
  CHECK(2.0 * lam4 == lam1);  // bitwise: power-of-two rescaling commutes
}

TEST_CASE("debye length scales exactly as sqrt(T) and sqrt(eps_r)") {
  const auto& k = ConstantsTable::codata2018();
  Electrolyte e = physiological_electrolyte();
  const double lam = debye_length(e, k).value_si;

  Electrolyte hot = e;
  hot.temperature = 4.0 * e.temperature;
  CHECK(debye_length(hot, k).value_si == 2.0 * lam);

  Electrolyte polar = e;
  polar.epsilon_r = 4.0 * e.epsilon_r;
  CHECK(debye_length(polar, k).value_si == 2.0 * lam);

  // generic ratio at floating-point accuracy
  Electrolyte warm = e;
  warm.temperature = make_quantity(293, "K");
  const double expect = std::sqrt(293.0 / 310.0);
  CHECK(approx_rel(debye_length(warm, k).value_si / lam, expect, 1e-14));
}

TEST_CASE("zero ionic strength reports a divergence, not infinity") {
  const auto& k = ConstantsTable::codata2018();
  Electrolyte e = physiological_electrolyte();
  for (auto& s : e.species) s.concentration = 0.0 * s.concentration;
  CHECK_THROWS_AS(debye_length(e, k), DivergenceError);
}

TEST_CASE("species at zero concentration never move the debye length") {
  const auto& k = ConstantsTable::codata2018();
  Electrolyte e = physiological_electrolyte();
  const double lam = debye_length(e, k).value_si;
  e.species.push_back(
      {"Ca2+", make_quantity(0, "molar"), +2, make_quantity(40, "amu")});
  CHECK(debye_length(e, k).value_si == lam);
}

TEST_CASE("electrolyte validation catches bad inputs") {
  const auto& k = ConstantsTable::codata2018();
  Electrolyte e = physiological_electrolyte();
  e.species.clear();
  CHECK_THROWS_AS(debye_length(e, k), DomainError);

  e = physiological_electrolyte();
  e.species[0].valence = 0;
  CHECK_THROWS_AS(debye_length(e, k), DomainError);

  e = physiological_electrolyte();
  e.epsilon_r = 0.5;
  CHECK_THROWS_AS(debye_length(e, k), DomainError);

  e = physiological_electrolyte();
  e.temperature = make_quantity(-5, "K");
  CHECK_THROWS_AS(debye_length(e, k), DomainError);
}

TEST_CASE("screening regimes split at one and three debye lengths") {
  const Quantity lam = make_quantity(0.78, "nm");
  CHECK(screened_regime(make_quantity(14, "nm"), lam) ==
        ScreeningRegime::Screened);
  CHECK(screened_regime(make_quantity(0.5, "nm"), lam) ==
        ScreeningRegime::Unscreened);
  CHECK(screened_regime(make_quantity(2, "nm"), lam) ==
        ScreeningRegime::Marginal);
  CHECK(to_string(ScreeningRegime::Screened) == "screened");
  CHECK_THROWS_AS(screened_regime(make_quantity(-1, "nm"), lam), DomainError);
}

TEST_CASE("the baseline standoff sits outside the screened zone") {
  // This licenses replacing the bare Coulomb coupling with the dipole form:
  // the nearest free ion is many Debye lengths away.
  const auto& k = ConstantsTable::codata2018();
  StandoffSpec spec;
  spec.eta = 2e-4;
  spec.diameter = make_quantity(24, "nm");
  spec.gel_factor = 1.0;
  const Quantity a = ion_standoff(spec, k);
  const Quantity lam = debye_length(physiological_electrolyte(), k);
  CHECK(a.value_si > 3.0 * lam.value_si);
  CHECK(screened_regime(a, lam) == ScreeningRegime::Screened);
}
