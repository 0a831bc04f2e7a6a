#include "mtdec/decoherence.hpp"

#include <cmath>

#include "mtdec/errors.hpp"

namespace mtdec {

namespace {

constexpr double kPi = 3.14159265358979323846;

void require_positive(const Quantity& q, const Dimension& dim,
                      const char* what) {
  if (!(q.dim == dim))
    throw DomainError(std::string(what) + " has the wrong dimension");
  if (!(q.value_si > 0.0))
    throw DomainError(std::string(what) + " must be positive");
}

void check_temperature_grid(std::span<const Quantity> grid) {
  if (grid.empty()) throw DomainError("temperature grid is empty");
  double prev = 0.0;
  for (const auto& t : grid) {
    require_positive(t, dims::temperature(), "grid temperature");
    if (!(t.value_si > prev))
      throw DomainError("temperature grid must be strictly ascending");
    prev = t.value_si;
  }
}

}  // namespace

void IonCoulombInputs::validate() const {
  require_positive(temperature, dims::temperature(), "temperature");
  require_positive(ion_mass, dims::mass(), "ion mass");
  require_positive(standoff, dims::length(), "standoff");
  require_positive(separation, dims::length(), "separation");
  if (!(charge_count > 0.0)) throw DomainError("charge count must be positive");
}

void DipoleInputs::validate() const {
  require_positive(temperature, dims::temperature(), "temperature");
  require_positive(ion_mass, dims::mass(), "ion mass");
  require_positive(standoff, dims::length(), "standoff");
  require_positive(separation, dims::length(), "separation");
  if (!(dipole_moment.dim == dims::dipole_moment()))
    throw DomainError("dipole moment has the wrong dimension");
  if (!(dipole_moment.value_si > 0.0))
    throw DomainError("dipole moment must be positive");
  if (!(epsilon_r >= 1.0)) throw DomainError("epsilon_r must be >= 1");
  orientation.validate();
}

Quantity tau_ion_coulomb(const IonCoulombInputs& in, const ConstantsTable& k) {
  in.validate();
  const Quantity a3 = pow(in.standoff, 3);
  const Quantity thermal_momentum =
      sqrt(in.ion_mass * k.k_boltzmann * in.temperature);
  const Quantity qe2 = k.elementary_charge * k.elementary_charge;
  return (4.0 * kPi) * k.epsilon0 * a3 * thermal_momentum /
         (in.charge_count * qe2 * in.separation);
}

double omega_dipole(const OrientationTriple& o) {
  o.validate();
  const double ct = o.cos_theta, cf = o.cos_phi, cp = o.cos_psi;
  const double bracket =
      5.0 * ct * ct * cf * cf - 4.0 * ct * cf * cp + ct * ct + cf * cf +
      cp * cp;
  if (bracket <= kOmegaDivergenceBracket)
    throw DivergenceError(
        "omega_dipole diverges: orientation triple is mutually orthogonal");
  return 1.0 / std::sqrt(bracket);
}

Quantity tau_dipole(const DipoleInputs& in, const ConstantsTable& k) {
  in.validate();
  const double omega = omega_dipole(in.orientation);
  const Quantity a4 = pow(in.standoff, 4);
  const Quantity thermal_momentum =
      sqrt(in.ion_mass * k.k_boltzmann * in.temperature);
  return (4.0 * kPi) * in.epsilon_r * k.epsilon0 * a4 * thermal_momentum *
         omega / (3.0 * k.elementary_charge * in.dipole_moment *
                  in.separation);
}

TidalHessian tidal_hessian(const Quantity& charge,
                           const Eigen::Vector3d& dipole_moment_si,
                           const Eigen::Vector3d& standoff_si,
                           double epsilon_r, const ConstantsTable& k) {
  if (!(charge.dim == dims::charge()))
    throw DomainError("tidal_hessian charge has the wrong dimension");
  if (!(epsilon_r >= 1.0)) throw DomainError("epsilon_r must be >= 1");
  const double p = dipole_moment_si.norm();
  const double a = standoff_si.norm();
  if (!(p > 0.0)) throw DomainError("dipole moment vector must be nonzero");
  if (!(a > 0.0)) throw DomainError("standoff vector must be nonzero");

  const Eigen::Vector3d a_hat = standoff_si / a;
  const Eigen::Vector3d p_hat = dipole_moment_si / p;
  const double eps0 = k.epsilon0.value_si;

  TidalHessian h;
  h.prefactor = 3.0 * charge.value_si * p /
                (4.0 * kPi * epsilon_r * eps0 * a * a * a * a);
  const Eigen::Matrix3d radial =
      (5.0 * a_hat * a_hat.transpose() - Eigen::Matrix3d::Identity()) *
      p_hat.dot(a_hat);
  const Eigen::Matrix3d cross =
      a_hat * p_hat.transpose() + p_hat * a_hat.transpose();
  h.matrix = h.prefactor * (radial - cross);
  return h;
}

namespace {

template <typename Inputs>
TemperatureCurve curve_impl(Inputs base, std::span<const Quantity> grid,
                            const ConstantsTable& k) {
  check_temperature_grid(grid);
  TemperatureCurve curve;
  curve.flag = kLowTemperatureFlag;
  curve.points.reserve(grid.size());
  for (const auto& t : grid) {
    base.temperature = t;
    if constexpr (std::is_same_v<Inputs, IonCoulombInputs>)
      curve.points.emplace_back(t, tau_ion_coulomb(base, k));
    else
      curve.points.emplace_back(t, tau_dipole(base, k));
  }
  return curve;
}

}  // namespace

TemperatureCurve temperature_curve(const IonCoulombInputs& base,
                                   std::span<const Quantity> temperature_grid,
                                   const ConstantsTable& k) {
  return curve_impl(base, temperature_grid, k);
}

TemperatureCurve temperature_curve(const DipoleInputs& base,
                                   std::span<const Quantity> temperature_grid,
                                   const ConstantsTable& k) {
  return curve_impl(base, temperature_grid, k);
}

}  // namespace mtdec
