#pragma once

#include <photonwf/algebra.hpp>

// Helicity polarization triads and the 4-vector polarization basis.
//
// eps(k,+1) is the right-circular vector; eps(k,-1) = conj(eps(k,+1));
// eps(k,0) = k/|k|.  On the third axis (k1 = k2 = 0) the closed form divides
// by k1 - i k2, so the triad there is fixed to the analytic limit at azimuth
// zero: (1, i, 0)/sqrt2 for k3 > 0 and (-1, i, 0)/sqrt2 for k3 < 0.

namespace photonwf {

struct PolarizationTriad {
  WaveVector k;
  Vec3c eps_plus;
  Vec3c eps_minus;
  Vec3c eps_zero;  // real-valued: k/|k|

  const Vec3c& eps(int lambda) const;
};

// Four 4-vectors e^mu(k,s), s = 0..3; e[s][mu] with mu = 0 the time component.
struct FourPolarizations {
  WaveVector k;
  std::array<std::array<cplx, 4>, 4> e;
};

// Throws std::domain_error for |k| = 0 (and for non-finite input).
PolarizationTriad polarization_triad(const WaveVector& k);
FourPolarizations four_polarizations(const WaveVector& k);

}  // namespace photonwf
