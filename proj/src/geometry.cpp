#include "mtdec/geometry.hpp"

#include <cmath>
#include <random>

#include "mtdec/errors.hpp"

namespace mtdec {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

void OrientationTriple::validate() const {
  for (double c : {cos_theta, cos_phi, cos_psi})
    if (!(c >= -1.0 && c <= 1.0))
      throw DomainError("orientation cosine outside [-1, 1]");
}

void StandoffSpec::validate() const {
  if (!(eta > 0.0)) throw DomainError("standoff eta must be positive");
  // D = 0 is allowed: the dense-ion limit collapses the standoff to the
  // mean ion spacing alone.
  if (!(diameter.value_si >= 0.0) || !(diameter.dim == dims::length()))
    throw DomainError("standoff diameter must be a nonnegative length");
  if (!(gel_factor >= 1.0)) throw DomainError("gel_factor must be >= 1");
}

Quantity ion_standoff(const StandoffSpec& spec, const ConstantsTable& k) {
  spec.validate();
  Quantity ion_density = spec.eta * k.water_number_density;
  Quantity mean_spacing = pow(ion_density, Rational(-1, 3));
  return spec.gel_factor * (0.5 * spec.diameter + mean_spacing);
}

namespace {

class UnitVectorSampler {
 public:
  explicit UnitVectorSampler(std::uint64_t seed) : rng_(seed) {}

  void next(double v[3]) {
    for (;;) {
      const double u1 = uniform(), u2 = uniform();
      const double u3 = uniform(), u4 = uniform();
      const double r1 = std::sqrt(-2.0 * std::log1p(-u1));
      const double z0 = r1 * std::cos(2.0 * kPi * u2);
      const double z1 = r1 * std::sin(2.0 * kPi * u2);
      const double r2 = std::sqrt(-2.0 * std::log1p(-u3));
      const double z2 = r2 * std::cos(2.0 * kPi * u4);
      const double n = std::sqrt(z0 * z0 + z1 * z1 + z2 * z2);
      if (n > 1e-8) {
        v[0] = z0 / n;
        v[1] = z1 / n;
        v[2] = z2 / n;
        return;
      }
    }
  }

 private:
  double uniform() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }
  std::mt19937_64 rng_;
};

double clamp_cosine(double c) { return c < -1.0 ? -1.0 : (c > 1.0 ? 1.0 : c); }

}  // namespace

std::vector<OrientationTriple> sample_orientations(std::uint64_t seed,
                                                   int count) {
  if (count < 1) throw DomainError("sample count must be >= 1");
  UnitVectorSampler sampler(seed);
  std::vector<OrientationTriple> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    double a[3], s[3], p[3];
    sampler.next(a);
    sampler.next(s);
    sampler.next(p);
    OrientationTriple t;
    t.cos_theta = clamp_cosine(a[0] * s[0] + a[1] * s[1] + a[2] * s[2]);
    t.cos_phi = clamp_cosine(p[0] * a[0] + p[1] * a[1] + p[2] * a[2]);
    t.cos_psi = clamp_cosine(s[0] * p[0] + s[1] * p[1] + s[2] * p[2]);
    out.push_back(t);
  }
  return out;
}

}  // namespace mtdec
