#pragma once

#include <photonwf/fieldgrid.hpp>
#include <photonwf/polarization.hpp>

#include <iosfwd>
#include <map>
#include <string>

// Mode spinors, amplitude sets over a periodic box, synthesis of the three
// general-solution expansions, the inverse projection, and the map from
// 4-potential amplitudes to field amplitudes.

namespace photonwf {

struct ModeKey {
  std::array<int, 3> n{};  // lattice harmonic; k = 2 pi n / L per axis
  int lambda = 1;          // +1, -1 or 0

  auto operator<=>(const ModeKey&) const = default;
};

struct ModeAmplitude {
  cplx a{};
  cplx b{};
  // Marks a lambda = 0 entry whose nonzero amplitude deliberately violates the
  // physical-state expectation constraint (virtual longitudinal/scalar admixture).
  bool virtual_admixture = false;
};

class AmplitudeSet {
 public:
  AmplitudeSet() = default;
  explicit AmplitudeSet(const Vec3& box);

  const Vec3& box() const { return box_; }
  double volume() const { return box_[0] * box_[1] * box_[2]; }

  void set(const ModeKey& key, const ModeAmplitude& amp);  // validates key
  void set(const ModeKey& key, cplx a, cplx b, bool virtual_admixture = false);
  ModeAmplitude get(const ModeKey& key) const;  // zero if absent
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }

  const std::map<ModeKey, ModeAmplitude>& entries() const { return entries_; }
  WaveVector wavevector(const ModeKey& key) const;

  // lambda = 0 entries with nonzero amplitude that are not marked virtual.
  std::vector<ModeKey> unflagged_virtual_content(double tol = 1e-14) const;

 private:
  Vec3 box_{2.0 * 3.14159265358979323846, 2.0 * 3.14159265358979323846,
            2.0 * 3.14159265358979323846};
  std::map<ModeKey, ModeAmplitude> entries_;
};

struct ModeSpinor {
  Vec6c f;
  Vec6c g;
};

// f(k,l) = (eps, l eps)/sqrt(1+l^2), g(k,l) = (l eps, eps)/sqrt(1+l^2).
ModeSpinor mode_spinor(const WaveVector& k, int lambda);

enum class SynthesisVariant {
  dual,             // sqrt(w/V) [a f e^{-i(wt-kx)} + b* g e^{+i(wt-kx)}]
  photon_only,      // sqrt(w/2V) f [a e^{-i(wt-kx)} + a* e^{+i(wt-kx)}]
  dualphoton_only,  // sqrt(w/2V) g [b e^{-i(wt-kx)} + b* e^{+i(wt-kx)}]
};

// Throws std::invalid_argument on box mismatch or a harmonic outside the grid
// band (the offending harmonic is named in the message).
FieldGrid synthesize_field(const AmplitudeSet& amps, const GridSpec& grid, double t,
                           SynthesisVariant variant = SynthesisVariant::dual);

// Pointwise analytic evaluation of the same expansion (no grid).
Vec6c evaluate_field(const AmplitudeSet& amps, const Vec3& x, double t,
                     SynthesisVariant variant = SynthesisVariant::dual);

// Recovers (a, b) from a band-limited field by discrete inner products against
// the f / g(-k) sectors; exact inverse of the dual synthesis.  Amplitudes below
// 1e-14 of the largest recovered magnitude are dropped.
AmplitudeSet project_amplitudes(const FieldGrid& field, double t);

// Total classical energy sum(w (|a|^2 + |b|^2)) over all entries.
double mode_energy(const AmplitudeSet& amps);

struct PotentialKey {
  std::array<int, 3> n{};
  int s = 0;  // photon kind 0..3

  auto operator<=>(const PotentialKey&) const = default;
};

class PotentialAmplitudes {
 public:
  PotentialAmplitudes() = default;
  explicit PotentialAmplitudes(const Vec3& box) : box_(box) {}

  const Vec3& box() const { return box_; }
  void set(const PotentialKey& key, cplx c);
  const std::map<PotentialKey, cplx>& entries() const { return entries_; }

 private:
  Vec3 box_{2.0 * 3.14159265358979323846, 2.0 * 3.14159265358979323846,
            2.0 * 3.14159265358979323846};
  std::map<PotentialKey, cplx> entries_;
};

// a(k,+1) = i c(k,1); a(k,-1) = i c(k,2); a(k,0) = i [c(k,3) - c(k,0)]/sqrt2;
// the dual branch stays empty.
AmplitudeSet amplitudes_from_potential(const PotentialAmplitudes& pot);

// Amplitude document (structured text; format documented in the README).
AmplitudeSet read_amplitude_document(std::istream& in);
AmplitudeSet read_amplitude_document_file(const std::string& path);
void write_amplitude_document(const AmplitudeSet& amps, std::ostream& out);

}  // namespace photonwf
