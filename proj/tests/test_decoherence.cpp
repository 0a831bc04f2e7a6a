#include <doctest.h>

#include <Eigen/Dense>
#include <Eigen/Geometry>
#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "mtdec/decoherence.hpp"
#include "mtdec/errors.hpp"
#include "mtdec/units.hpp"
#include "test_util.hpp"

using namespace mtdec;
using testutil::approx_rel;

namespace {

IonCoulombInputs baseline_ion() {
  IonCoulombInputs in;
  in.temperature = make_quantity(310, "K");
  in.ion_mass = make_quantity(40, "amu");
  in.standoff = Quantity{1.73097553662748726e-8, dims::length()};
  in.charge_count = 468.0;
  in.separation = make_quantity(24, "nm");
  return in;
}

DipoleInputs corrected_dipole() {
  DipoleInputs in;
  in.temperature = make_quantity(310, "K");
  in.ion_mass = make_quantity(40, "amu");
  in.standoff = Quantity{1.73097553662748726e-8, dims::length()};
  in.dipole_moment = make_quantity(337, "Debye");
  in.separation = make_quantity(5, "fm");
  in.epsilon_r = 10.0;
  in.orientation = {0.0, 0.0, 1.0};  // Omega = 1
  return in;
}

// Finite-difference oracle for the tidal Hessian, evaluated in extended
// precision so the prescribed step h = 1e-6 |a| stays above roundoff.
long double dipole_potential_ld(long double rx, long double ry,
                                long double rz, long double px,
                                long double py, long double pz, long double q,
                                long double epsr) {
  const long double eps0 = 8.8541878128e-12L;
  const long double pi = 3.141592653589793238462643383279502884L;
  const long double rn = sqrtl(rx * rx + ry * ry + rz * rz);
  const long double dot = px * rx + py * ry + pz * rz;
  return q * dot / (4.0L * pi * epsr * eps0 * rn * rn * rn);
}

Eigen::Matrix3d fd_hessian(const Eigen::Vector3d& a, const Eigen::Vector3d& p,
                           double q, double epsr) {
  const long double h = 1e-6L * static_cast<long double>(a.norm());
  auto V = [&](long double dx, long double dy, long double dz) {
    return dipole_potential_ld(
        static_cast<long double>(a.x()) + dx,
        static_cast<long double>(a.y()) + dy,
        static_cast<long double>(a.z()) + dz, p.x(), p.y(), p.z(), q, epsr);
  };
  Eigen::Matrix3d out;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      long double d2;
      if (i == j) {
        long double sh[3] = {0.0L, 0.0L, 0.0L};
        sh[i] = h;
        d2 = (V(sh[0], sh[1], sh[2]) - 2.0L * V(0, 0, 0) +
              V(-sh[0], -sh[1], -sh[2])) /
             (h * h);
      } else {
        long double si[3] = {0.0L, 0.0L, 0.0L}, sj[3] = {0.0L, 0.0L, 0.0L};
        si[i] = h;
        sj[j] = h;
        d2 = (V(si[0] + sj[0], si[1] + sj[1], si[2] + sj[2]) -
              V(si[0] - sj[0], si[1] - sj[1], si[2] - sj[2]) -
              V(sj[0] - si[0], sj[1] - si[1], sj[2] - si[2]) +
              V(-si[0] - sj[0], -si[1] - sj[1], -si[2] - sj[2])) /
             (4.0L * h * h);
      }
      out(i, j) = static_cast<double>(d2);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("ion-coulomb time matches the hand-evaluated baseline") {
  const auto& k = ConstantsTable::codata2018();
  const Quantity tau = tau_ion_coulomb(baseline_ion(), k);
  CHECK(tau.dim == dims::time());  // dimensional closure, no override
  CHECK(approx_rel(tau.value_si, 3.37466397049440221e-14, 1e-12));
  CHECK(tau.value_si > 1e-14);
  CHECK(tau.value_si < 1e-12);
}

TEST_CASE("ion-coulomb time scales as sqrt(T), a^3, 1/N, 1/s") {
  const auto& k = ConstantsTable::codata2018();
  IonCoulombInputs in = baseline_ion();
  const double tau = tau_ion_coulomb(in, k).value_si;

  IonCoulombInputs hot = in;
  hot.temperature = 4.0 * in.temperature;
  CHECK(tau_ion_coulomb(hot, k).value_si == 2.0 * tau);  // bitwise

  IonCoulombInputs far = in;
  far.standoff = 2.0 * in.standoff;
  CHECK(approx_rel(tau_ion_coulomb(far, k).value_si, 8.0 * tau, 1e-13));

  IonCoulombInputs charged = in;
  charged.charge_count = 2.0 * in.charge_count;
  CHECK(approx_rel(tau_ion_coulomb(charged, k).value_si, tau / 2.0, 1e-13));

  IonCoulombInputs wide = in;
  wide.separation = 2.0 * in.separation;
  CHECK(approx_rel(tau_ion_coulomb(wide, k).value_si, tau / 2.0, 1e-13));
}

TEST_CASE("ion-coulomb inputs validate positivity") {
  const auto& k = ConstantsTable::codata2018();
  IonCoulombInputs in = baseline_ion();
  in.charge_count = 0.0;
  CHECK_THROWS_AS(tau_ion_coulomb(in, k), DomainError);
  in = baseline_ion();
  in.temperature = make_quantity(-1, "K");
  CHECK_THROWS_AS(tau_ion_coulomb(in, k), DomainError);
  in = baseline_ion();
  in.separation = Quantity{0.0, dims::length()};
  CHECK_THROWS_AS(tau_ion_coulomb(in, k), DomainError);
}

TEST_CASE("omega is one half for the fully aligned triple") {
  CHECK(omega_dipole({1.0, 1.0, 1.0}) == 0.5);  // bracket 5 - 4 + 3 = 4
}

TEST_CASE("omega diverges at mutual orthogonality") {
  CHECK_THROWS_AS(omega_dipole({0.0, 0.0, 0.0}), DivergenceError);
  CHECK_NOTHROW(omega_dipole({0.0, 0.0, 1.0}));
  CHECK(omega_dipole({0.0, 0.0, 1.0}) == 1.0);
}

TEST_CASE("omega over sampled orientations is of order one") {
  const auto samples = sample_orientations(7, 100000);
  std::vector<double> omegas;
  omegas.reserve(samples.size());
  for (const auto& t : samples) {
    try {
      omegas.push_back(omega_dipole(t));
    } catch (const DivergenceError&) {
      // measure-zero configuration; skip
    }
  }
  REQUIRE(omegas.size() > 99000);
  std::nth_element(omegas.begin(), omegas.begin() + omegas.size() / 2,
                   omegas.end());
  const double median = omegas[omegas.size() / 2];
  CHECK(median > 0.3);
  CHECK(median < 3.0);
  // frozen for this seed and sampler version
  CHECK(median == doctest::Approx(1.024154).epsilon(1e-3));
}

TEST_CASE("omega is invariant under simultaneous rotation of the triple") {
  std::mt19937 rng(17);
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
  for (int trial = 0; trial < 50; ++trial) {
    Eigen::Vector3d a, s, p, axis;
    for (auto* v : {&a, &s, &p, &axis}) {
      do {
        *v = Eigen::Vector3d(normal(rng), normal(rng), normal(rng));
      } while (v->norm() < 1e-6);
      v->normalize();
    }
    const Eigen::AngleAxisd rot(angle(rng), axis);
    const OrientationTriple before{a.dot(s), p.dot(a), s.dot(p)};
    const OrientationTriple after{(rot * a).dot(rot * s),
                                  (rot * p).dot(rot * a),
                                  (rot * s).dot(rot * p)};
    double omega_before, omega_after;
    try {
      omega_before = omega_dipole(before);
      omega_after = omega_dipole(after);
    } catch (const DivergenceError&) {
      continue;
    }
    CHECK(approx_rel(omega_after, omega_before, 1e-12));
  }
}

TEST_CASE("dipole time matches the hand-evaluated corrected value") {
  const auto& k = ConstantsTable::codata2018();
  const Quantity tau = tau_dipole(corrected_dipole(), k);
  CHECK(tau.dim == dims::time());
  CHECK(approx_rel(tau.value_si, 6.23862739937179004e-4, 1e-12));
  CHECK(tau.value_si > 1e-5);
  CHECK(tau.value_si < 1e-3);
}

TEST_CASE("dipole time at the full 1714 Debye moment stays in band") {
  const auto& k = ConstantsTable::codata2018();
  DipoleInputs in = corrected_dipole();
  in.dipole_moment = make_quantity(1714, "Debye");
  const double tau = tau_dipole(in, k).value_si;
  CHECK(approx_rel(tau, 1.2266e-4, 1e-3));
  CHECK(tau > 1e-5);
  CHECK(tau < 1e-3);
}

TEST_CASE("dipole band over femtometer separations and both presets") {
  const auto& k = ConstantsTable::codata2018();
  double lo = 1e300, hi = 0.0;
  for (double s_fm : {1.0, 2.0, 5.0, 10.0}) {
    for (double p_debye : {337.0, 1714.0}) {
      DipoleInputs in = corrected_dipole();
      in.separation = make_quantity(s_fm, "fm");
      in.dipole_moment = make_quantity(p_debye, "Debye");
      const double tau = tau_dipole(in, k).value_si;
      lo = std::min(lo, tau);
      hi = std::max(hi, tau);
    }
  }
  // the achieved band brackets the published 1e-5..1e-4 s estimate
  CHECK(lo < 1e-4);
  CHECK(hi > 1e-5);
  CHECK(lo > 1e-6);
  CHECK(hi < 1e-2);
}

TEST_CASE("dipole time scales as sqrt(T), a^4, eps_r, 1/p, 1/s") {
  const auto& k = ConstantsTable::codata2018();
  DipoleInputs in = corrected_dipole();
  const double tau = tau_dipole(in, k).value_si;

  DipoleInputs hot = in;
  hot.temperature = 4.0 * in.temperature;
  CHECK(tau_dipole(hot, k).value_si == 2.0 * tau);  // bitwise

  DipoleInputs gel = in;
  gel.standoff = 10.0 * in.standoff;
  CHECK(approx_rel(tau_dipole(gel, k).value_si, 1e4 * tau, 1e-12));

  DipoleInputs vacuum = in;
  vacuum.epsilon_r = 1.0;
  CHECK(approx_rel(tau_dipole(vacuum, k).value_si, tau / 10.0, 1e-13));

  DipoleInputs strong = in;
  strong.dipole_moment = 2.0 * in.dipole_moment;
  CHECK(approx_rel(tau_dipole(strong, k).value_si, tau / 2.0, 1e-13));

  DipoleInputs wide = in;
  wide.separation = 2.0 * in.separation;
  CHECK(approx_rel(tau_dipole(wide, k).value_si, tau / 2.0, 1e-13));
}

TEST_CASE("dipole time propagates omega divergence and validates inputs") {
  const auto& k = ConstantsTable::codata2018();
  DipoleInputs in = corrected_dipole();
  in.orientation = {0.0, 0.0, 0.0};
  CHECK_THROWS_AS(tau_dipole(in, k), DivergenceError);
  in = corrected_dipole();
  in.epsilon_r = 0.0;
  CHECK_THROWS_AS(tau_dipole(in, k), DomainError);
  in = corrected_dipole();
  in.dipole_moment = Quantity{-1e-27, dims::dipole_moment()};
  CHECK_THROWS_AS(tau_dipole(in, k), DomainError);
}

TEST_CASE("corrected dipole time dwarfs the ion-coulomb baseline") {
  const auto& k = ConstantsTable::codata2018();
  const double tau_ion = tau_ion_coulomb(baseline_ion(), k).value_si;

  // default presets
  const double tau_dip = tau_dipole(corrected_dipole(), k).value_si;
  CHECK(tau_dip / tau_ion >= 1e8);
  CHECK(approx_rel(tau_dip / tau_ion, 1.848666e10, 1e-5));

  // and across femtometer separations, both dipole presets and sampled
  // orientations
  const auto orientations = sample_orientations(23, 200);
  std::mt19937 rng(29);
  std::uniform_real_distribution<double> s_fm(1.0, 10.0);
  for (const auto& o : orientations) {
    DipoleInputs in = corrected_dipole();
    in.orientation = o;
    in.separation = make_quantity(s_fm(rng), "fm");
    in.dipole_moment =
        make_quantity(rng() % 2 == 0 ? 337.0 : 1714.0, "Debye");
    double tau;
    try {
      tau = tau_dipole(in, k).value_si;
    } catch (const DivergenceError&) {
      continue;
    }
    CHECK(tau / tau_ion >= 1e8);
  }
}

TEST_CASE("tidal hessian reduces to the cross term for orthogonal vectors") {
  const auto& k = ConstantsTable::codata2018();
  const Quantity q = k.elementary_charge;
  const Eigen::Vector3d a(1.7e-8, 0.0, 0.0);
  const Eigen::Vector3d p(0.0, 1.123e-27, 0.0);
  const TidalHessian h = tidal_hessian(q, p, a, 10.0, k);

  // p.a = 0 kills the diagonal branch; M = -pref (a p^T + p a^T)
  Eigen::Matrix3d expect = Eigen::Matrix3d::Zero();
  expect(0, 1) = expect(1, 0) = -h.prefactor;
  CHECK((h.matrix - expect).cwiseAbs().maxCoeff() <=
        1e-15 * std::fabs(h.prefactor));
}

TEST_CASE("tidal hessian matches central finite differences of the potential") {
  const auto& k = ConstantsTable::codata2018();
  const Quantity q = k.elementary_charge;
  std::mt19937 rng(31);
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> a_mag(5e-9, 5e-8);
  std::uniform_real_distribution<double> p_mag(5e-28, 6e-27);
  std::uniform_real_distribution<double> epsr(1.0, 80.0);

  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    Eigen::Vector3d a_dir(normal(rng), normal(rng), normal(rng));
    Eigen::Vector3d p_dir(normal(rng), normal(rng), normal(rng));
    if (a_dir.norm() < 1e-3 || p_dir.norm() < 1e-3) continue;
    const Eigen::Vector3d a = a_mag(rng) * a_dir.normalized();
    const Eigen::Vector3d p = p_mag(rng) * p_dir.normalized();
    const double er = epsr(rng);

    const TidalHessian h = tidal_hessian(q, p, a, er, k);
    const Eigen::Matrix3d fd = fd_hessian(a, p, q.value_si, er);

    const double scale = h.matrix.cwiseAbs().maxCoeff();
    REQUIRE(scale > 0.0);
    const double err =
        ((h.matrix - fd).cwiseAbs() /
         scale).maxCoeff();
    worst = std::max(worst, err);

    // symmetry
    CHECK((h.matrix - h.matrix.transpose()).cwiseAbs().maxCoeff() <=
          1e-12 * scale);
  }
  CHECK(worst < 1e-5);
}

TEST_CASE("tidal hessian scales as the inverse fourth power of standoff") {
  const auto& k = ConstantsTable::codata2018();
  const Quantity q = k.elementary_charge;
  const Eigen::Vector3d a(1.2e-8, -0.7e-8, 0.4e-8);
  const Eigen::Vector3d p(1e-27, 2e-28, -5e-28);
  const TidalHessian h1 = tidal_hessian(q, p, a, 10.0, k);
  const TidalHessian h2 = tidal_hessian(q, p, 2.0 * a, 10.0, k);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(approx_rel(h2.matrix(i, j), h1.matrix(i, j) / 16.0, 1e-13));
}

TEST_CASE("tidal hessian rejects zero vectors") {
  const auto& k = ConstantsTable::codata2018();
  const Quantity q = k.elementary_charge;
  CHECK_THROWS_AS(tidal_hessian(q, Eigen::Vector3d::Zero(),
                                Eigen::Vector3d(1e-8, 0, 0), 10.0, k),
                  DomainError);
  CHECK_THROWS_AS(tidal_hessian(q, Eigen::Vector3d(0, 1e-27, 0),
                                Eigen::Vector3d::Zero(), 10.0, k),
                  DomainError);
}

TEST_CASE("temperature curves follow the square-root law and carry the flag") {
  const auto& k = ConstantsTable::codata2018();
  const IonCoulombInputs in = baseline_ion();

  const std::vector<Quantity> grid = {make_quantity(1, "K"),
                                      make_quantity(4, "K")};
  const TemperatureCurve curve = temperature_curve(in, grid, k);
  REQUIRE(curve.points.size() == 2);
  CHECK(curve.points[1].second.value_si == 2.0 * curve.points[0].second.value_si);
  CHECK(curve.flag == std::string(kLowTemperatureFlag));

  // a single-point grid equals the direct call
  const std::vector<Quantity> single = {make_quantity(310, "K")};
  const TemperatureCurve one = temperature_curve(in, single, k);
  CHECK(one.points[0].second.value_si == tau_ion_coulomb(in, k).value_si);

  // generic ratio test across three decades
  const std::vector<Quantity> wide = {make_quantity(0.31, "K"),
                                      make_quantity(310, "K")};
  const TemperatureCurve low = temperature_curve(in, wide, k);
  const double ratio =
      low.points[1].second.value_si / low.points[0].second.value_si;
  CHECK(approx_rel(ratio, std::sqrt(1000.0), 1e-12));

  // dipole overload behaves identically
  const TemperatureCurve dip = temperature_curve(corrected_dipole(), grid, k);
  CHECK(dip.points[1].second.value_si == 2.0 * dip.points[0].second.value_si);
  CHECK(dip.flag == std::string(kLowTemperatureFlag));

  // grids must be ascending and positive
  const std::vector<Quantity> bad = {make_quantity(4, "K"),
                                     make_quantity(1, "K")};
  CHECK_THROWS_AS(temperature_curve(in, bad, k), DomainError);
  const std::vector<Quantity> zero = {make_quantity(0, "K")};
  CHECK_THROWS_AS(temperature_curve(in, zero, k), DomainError);
}
