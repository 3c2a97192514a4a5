#pragma once

#include <photonwf/algebra.hpp>

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

// Periodic sampled 6-spinor fields and their observables.
//
// Layout: component-major, data[c * sites + site] with site = (ix*N2 + iy)*N3 + iz.
// A physical configuration stores psi = (E, iB)/sqrt2, so the upper block is
// real and the lower block purely imaginary at every site.
//
// DFT convention: forward transform carries exp(-ik.x) and is unnormalized;
// the inverse carries 1/N.  Mode coefficients of exp(+ik.x) are therefore
// forward-FFT values divided by the site count.

namespace photonwf {

struct GridSpec {
  std::array<int, 3> dims{};  // N1, N2, N3; each >= 4 and even
  Vec3 box{};                 // L1, L2, L3 > 0

  void validate() const;  // throws std::domain_error on violation
  std::int64_t sites() const { return std::int64_t(dims[0]) * dims[1] * dims[2]; }
  double volume() const { return box[0] * box[1] * box[2]; }
  double cell_volume() const { return volume() / double(sites()); }

  std::int64_t site_index(int ix, int iy, int iz) const {
    return (std::int64_t(ix) * dims[1] + iy) * dims[2] + iz;
  }
  Vec3 site_position(int ix, int iy, int iz) const {
    return {box[0] * ix / dims[0], box[1] * iy / dims[1], box[2] * iz / dims[2]};
  }
  // signed harmonic for FFT bin index i on axis a (range -N/2 .. N/2-1)
  int harmonic(int a, int i) const {
    const int n = dims[a];
    return i < n / 2 ? i : i - n;
  }
  Vec3 wavevector(const std::array<int, 3>& n) const;
  bool representable(const std::array<int, 3>& n) const;

  bool operator==(const GridSpec&) const = default;
};

struct FieldGrid {
  GridSpec spec;
  std::vector<cplx> data;  // 6 * sites()

  static FieldGrid zero(const GridSpec& spec);

  cplx& at(int c, std::int64_t site) { return data[std::size_t(c) * spec.sites() + site]; }
  const cplx& at(int c, std::int64_t site) const { return data[std::size_t(c) * spec.sites() + site]; }
  Vec6c spinor(std::int64_t site) const;
  void set_spinor(std::int64_t site, const Vec6c& v);
};

struct Observables {
  double j0 = 0.0;              // integral of psi^dag psi (energy)
  Vec3 j{};                     // integral of psi^dag chi psi (momentum, E x B)
  double scalar_integral = 0.0; // integral of psibar psi
  double j_im_max = 0.0;        // largest imaginary residue seen in j (reported, not dropped)
};

// psi = (E, iB)/sqrt2 sitewise.  E and B are component-major real grids
// (3 * sites each).  Throws std::invalid_argument on shape mismatch.
FieldGrid from_real_fields(const std::vector<double>& e_field,
                           const std::vector<double>& b_field, const GridSpec& spec);

Observables observables(const FieldGrid& field);

// Spectral divergence max-norms of the extracted E and B blocks.
std::array<double, 2> transversality_residual(const FieldGrid& field);

// Exact per-mode propagator exp(-i H(k) dt steps) via eigendecomposition.
FieldGrid evolve_spectral(const FieldGrid& field, double dt, int steps);

// Independent path: curl equations with spectral curls and the closed-form
// rotation per transverse mode; never touches H(k) or the 6x6 eigensolver.
// Requires a physical (real E, real B) field.
FieldGrid evolve_curl_reference(const FieldGrid& field, double dt, int steps);

// How far the field is from physical form: max |Im E|, max |Re (iB)| over sites.
double physicality_residual(const FieldGrid& field);

// Snapshot exports (formats documented in the README).
void write_csv(const FieldGrid& field, std::ostream& out);
void write_raw(const FieldGrid& field, const std::string& path);
FieldGrid read_raw(const std::string& path);

namespace spectral {

// In-place 3D FFT of one component array (length = sites of dims).
// sign = -1: forward (exp(-ik.x), unnormalized); sign = +1: inverse with 1/N.
void fft3(std::vector<cplx>& a, const std::array<int, 3>& dims, int sign);

// All six components of a grid, forward or inverse.
void fft_field(FieldGrid& f, int sign);

}  // namespace spectral

}  // namespace photonwf
