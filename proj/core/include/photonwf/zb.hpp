#pragma once

#include <photonwf/modes.hpp>

#include <iosfwd>
#include <vector>

// Momentum-space zitterbewegung analysis: the R/T coefficient vectors, the
// closed-form momentum time series in both formalisms, and oscillation
// extraction from a sampled series.

namespace photonwf {

// R(l,l') = (l+l')/sqrt((1+l^2)(1+l'^2)) eps^+(k,l) tau eps(k,l')
// T(l,l') = (1+ll')/sqrt((1+l^2)(1+l'^2)) eps^+(k,l) tau eps(-k,l')
struct RTTable {
  WaveVector k;
  // indexed [lambda_index(l)][lambda_index(l')]
  std::array<std::array<Vec3c, 3>, 3> r;
  std::array<std::array<Vec3c, 3>, 3> t;

  static int lambda_index(int lambda);  // +1 -> 0, -1 -> 1, 0 -> 2
  const Vec3c& R(int lambda, int lambda_p) const;
  const Vec3c& T(int lambda, int lambda_p) const;
};

RTTable rt_vectors(const WaveVector& k);  // throws on |k| = 0

enum class Formalism { dual, traditional };

struct MomentumSeries {
  std::vector<double> times;
  std::vector<Vec3> j;
  Formalism formalism = Formalism::dual;
  // per-term breakdown: constant part and oscillatory (2w) part, j = constant + oscillatory
  std::vector<Vec3> j_constant;
  std::vector<Vec3> j_oscillatory;
};

// Coherent (c-number) evaluation of the mode-space momentum at the given
// times.  `dual` evaluates both photon and dual-photon branches; `traditional`
// uses only a-amplitudes with the 1/(2 sqrt2) oscillation coefficients.
MomentumSeries momentum_series(const AmplitudeSet& amps, const std::vector<double>& times,
                               Formalism formalism);

// Classical momentum at one time (dual formalism helper).
Vec3 momentum_at(const AmplitudeSet& amps, double time, Formalism formalism);

struct ZbSummary {
  Vec3 constant{};      // componentwise mean
  Vec3 zb_amplitude{};  // componentwise oscillation amplitude at the peak bin
  double frequency = 0.0;  // angular frequency of the DFT peak (0 for a constant series)
  int peak_bin = 0;
};

// Requires uniform sampling (throws std::invalid_argument otherwise).
ZbSummary zb_extract(const MomentumSeries& series);

// CSV: t,Jx,Jy,Jz and optionally the constant/oscillatory breakdown columns.
void write_csv(const MomentumSeries& series, std::ostream& out, bool breakdown = false);

}  // namespace photonwf
