#include <photonwf/polarization.hpp>

#include <cmath>
#include <stdexcept>

namespace photonwf {

namespace {
constexpr double kSqrt2Inv = 0.7071067811865475244;
}

const Vec3c& PolarizationTriad::eps(int lambda) const {
  switch (lambda) {
    case 1: return eps_plus;
    case -1: return eps_minus;
    case 0: return eps_zero;
  }
  throw std::domain_error("PolarizationTriad::eps: lambda must be +1, -1 or 0");
}

PolarizationTriad polarization_triad(const WaveVector& kv) {
  const double kn = kv.omega;
  if (!(kn > 0.0) || !std::isfinite(kn))
    throw std::domain_error("polarization_triad: zero or non-finite wavevector");

  const double k1 = kv.k[0], k2 = kv.k[1], k3 = kv.k[2];
  PolarizationTriad t;
  t.k = kv;
  t.eps_zero = {k1 / kn, k2 / kn, k3 / kn};

  if (k1 == 0.0 && k2 == 0.0) {
    // analytic limit along the third axis (azimuth-zero branch)
    const double s = k3 > 0.0 ? 1.0 : -1.0;
    t.eps_plus = {cplx(s * kSqrt2Inv), cplx(0.0, kSqrt2Inv), cplx(0.0)};
  } else {
    const cplx d = cplx(k1, -k2);
    const double c = kSqrt2Inv / kn;
    t.eps_plus = {c * cplx(k1 * k3, -k2 * kn) / d,
                  c * cplx(k2 * k3, k1 * kn) / d,
                  -c * cplx(k1, k2)};
  }
  t.eps_minus = conj(t.eps_plus);
  return t;
}

FourPolarizations four_polarizations(const WaveVector& kv) {
  const PolarizationTriad t = polarization_triad(kv);
  FourPolarizations fp;
  fp.k = kv;
  fp.e[0] = {cplx(1.0), cplx(0.0), cplx(0.0), cplx(0.0)};
  const Vec3c* spatial[3] = {&t.eps_plus, &t.eps_minus, &t.eps_zero};
  for (int s = 1; s <= 3; ++s) {
    fp.e[s][0] = 0.0;
    for (int i = 0; i < 3; ++i) fp.e[s][i + 1] = (*spatial[s - 1])[i];
  }
  return fp;
}

}  // namespace photonwf
