#pragma once

#include <cstdint>
#include <vector>

#include "mtdec/constants.hpp"
#include "mtdec/quantity.hpp"

namespace mtdec {

// Pairwise cosines among the standoff direction a, the separation direction
// s and the dipole direction p: cos(theta) = a.s, cos(phi) = p.a,
// cos(psi) = s.p. Each cosine lies in [-1, 1].
struct OrientationTriple {
  double cos_theta = 1.0;
  double cos_phi = 1.0;
  double cos_psi = 1.0;

  void validate() const;
};

// Standoff geometry: ionic fraction eta (environmental ion density is
// eta * n_H2O), microtubule diameter D, and a multiplicative gel-phase
// factor >= 1 enlarging the ion-free zone.
struct StandoffSpec {
  double eta = 2e-4;
  Quantity diameter;  // length
  double gel_factor = 1.0;

  void validate() const;
};

// Distance to the nearest decohering ion:
//   a = gel_factor * (D/2 + (eta * n_H2O)^(-1/3)).
Quantity ion_standoff(const StandoffSpec& spec, const ConstantsTable& k);

// Identifier of the deterministic orientation sampler; recorded in run
// manifests so archived CSV output stays reproducible.
inline constexpr const char* kOrientationSamplerId = "mt19937_64-boxmuller-v1";

// Draws `count` orientation triples from three independent unit vectors
// uniform on the sphere. Deterministic for a fixed seed: mt19937_64 drives
// 53-bit uniforms through Box-Muller (four uniforms per vector, the fourth
// normal deviate is discarded); near-zero normal triples are redrawn.
std::vector<OrientationTriple> sample_orientations(std::uint64_t seed,
                                                   int count);

}  // namespace mtdec
