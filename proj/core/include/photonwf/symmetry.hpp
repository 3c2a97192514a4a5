#pragma once

#include <photonwf/modes.hpp>

#include <vector>

// Discrete and continuous symmetry transforms on fields and amplitude sets.
//
// The amplitude maps are the printed mode-label transformation laws:
//   parity:        a(k,l) -> a(-k,l),   b(k,l) -> -b(-k,l)
//   time reversal: a(k,+-1) -> a(-k,-+1), a(k,0) -> a(k,0)   (no conjugation)
//   dual:          a(k,l) -> b(k,-l),   b(k,l) -> -a(k,-l)
//   gauge:         a -> e^{-i th} a,    b -> e^{+i th} b
// The field maps act on sampled grids (parity, dual, gauge) or re-synthesize
// at -t (time reversal).  dual and gauge commute exactly with synthesis; the
// parity and time-reversal label maps do not, because the helicity triad at
// -k is a phase times the opposite-helicity triad at +k (see README).

namespace photonwf {

AmplitudeSet parity(const AmplitudeSet& amps);
FieldGrid parity(const FieldGrid& field);

AmplitudeSet time_reversal(const AmplitudeSet& amps);
// Field form: re-synthesis of the mode description at -t.
FieldGrid time_reversal_field(const AmplitudeSet& amps, const GridSpec& grid, double t,
                              SynthesisVariant variant = SynthesisVariant::dual);

AmplitudeSet dual(const AmplitudeSet& amps);
FieldGrid dual(const FieldGrid& field);

AmplitudeSet gauge_phase(const AmplitudeSet& amps, double theta);
FieldGrid gauge_phase(const FieldGrid& field, double theta);

struct BoostParams {
  double rapidity = 0.0;
  Vec3 axis{0.0, 0.0, 1.0};  // unit vector (checked to 1e-14)
};

BoostParams make_boost(double rapidity, const Vec3& axis);  // normalizes axis

// One plane-wave component of a boosted field: psi(x) += spinor * e^{-i k.x}
// with k.x = kmu[0] t - k . x.  The spinor carries the mode amplitude.
struct BoostedMode {
  std::array<double, 4> kmu{};
  Vec6c spinor{};
};

struct BoostedModes {
  double rapidity = 0.0;
  Vec3 axis{};
  Vec3 source_box{};
  std::vector<BoostedMode> modes;
};

// Finite boost of the analytic mode description: each component (k^mu, v)
// maps to (Lambda k^mu, A v) with A = exp(-rapidity axis.chi).  Raw grids are
// not accepted anywhere in this API; boosts act on mode descriptions only.
BoostedModes boost(const AmplitudeSet& amps, const BoostParams& p);

Vec6c evaluate(const BoostedModes& bm, const Vec3& x, double t);

// Coordinate map x^mu -> Lambda x^mu matching the boost above.
std::array<double, 4> boost_coordinates(const BoostParams& p, const std::array<double, 4>& x);

// || k0 beta0 v - (beta.k) v ||_inf, zero for any solution plane wave.
double symbol_residual(const BoostedMode& m);

// integral of psibar psi over the box at time t (analytic modes, exact quadrature).
double lorentz_scalar_integral(const AmplitudeSet& amps, const GridSpec& grid, double t);
// Same integral evaluated through the boosted modes at the mapped sample points.
double lorentz_scalar_integral(const BoostedModes& bm, const GridSpec& grid, double t);

struct GeneratorSpec {
  enum class Kind { rotation, boost };
  Kind kind = Kind::rotation;
  Vec3 axis{0.0, 0.0, 1.0};
};

struct PseudoLagrangianReport {
  double lagrangian_max = 0.0;   // max |L| over the grid for the input field
  double delta_max = 0.0;        // max |L' - L| under the selected generator
  std::array<double, 3> a6_max{};  // direct boost-sector identity residuals
};

// Rotations are applied as exact finite group elements (delta is machine zero);
// boosts use the first-order generator, so delta scales as epsilon^2 on shell.
PseudoLagrangianReport pseudo_lagrangian_check(const AmplitudeSet& amps, const GeneratorSpec& gen,
                                               double epsilon, const GridSpec& grid, double t);

}  // namespace photonwf
