#include <photonwf/fieldgrid.hpp>

#include <fftw3.h>

#include <cstdio>
#include <cstring>
#include <fstream>
#include <numbers>
#include <ostream>
#include <stdexcept>

namespace photonwf {

void GridSpec::validate() const {
  for (int a = 0; a < 3; ++a) {
    if (dims[a] < 4 || dims[a] % 2 != 0)
      throw std::domain_error("GridSpec: dims must be even and >= 4");
    if (!(box[a] > 0.0)) throw std::domain_error("GridSpec: box lengths must be positive");
  }
}

Vec3 GridSpec::wavevector(const std::array<int, 3>& n) const {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  return {two_pi * n[0] / box[0], two_pi * n[1] / box[1], two_pi * n[2] / box[2]};
}

bool GridSpec::representable(const std::array<int, 3>& n) const {
  for (int a = 0; a < 3; ++a)
    if (std::abs(n[a]) >= dims[a] / 2) return false;
  return true;
}

FieldGrid FieldGrid::zero(const GridSpec& spec) {
  spec.validate();
  FieldGrid f;
  f.spec = spec;
  f.data.assign(std::size_t(6) * spec.sites(), cplx(0.0));
  return f;
}

Vec6c FieldGrid::spinor(std::int64_t site) const {
  Vec6c v;
  const std::int64_t n = spec.sites();
  for (int c = 0; c < 6; ++c) v[c] = data[std::size_t(c) * n + site];
  return v;
}

void FieldGrid::set_spinor(std::int64_t site, const Vec6c& v) {
  const std::int64_t n = spec.sites();
  for (int c = 0; c < 6; ++c) data[std::size_t(c) * n + site] = v[c];
}

namespace spectral {

void fft3(std::vector<cplx>& a, const std::array<int, 3>& dims, int sign) {
  const std::int64_t n = std::int64_t(dims[0]) * dims[1] * dims[2];
  if (std::int64_t(a.size()) != n) throw std::invalid_argument("fft3: size mismatch");
  fftw_complex* p = reinterpret_cast<fftw_complex*>(a.data());
  fftw_plan plan = fftw_plan_dft_3d(dims[0], dims[1], dims[2], p, p,
                                    sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD, FFTW_ESTIMATE);
  fftw_execute(plan);
  fftw_destroy_plan(plan);
  if (sign > 0) {
    const double inv = 1.0 / double(n);
    for (auto& x : a) x *= inv;
  }
}

void fft_field(FieldGrid& f, int sign) {
  const std::int64_t n = f.spec.sites();
  std::vector<cplx> buf(static_cast<std::size_t>(n));
  for (int c = 0; c < 6; ++c) {
    std::memcpy(buf.data(), f.data.data() + std::size_t(c) * n, std::size_t(n) * sizeof(cplx));
    fft3(buf, f.spec.dims, sign);
    std::memcpy(f.data.data() + std::size_t(c) * n, buf.data(), std::size_t(n) * sizeof(cplx));
  }
}

}  // namespace spectral

FieldGrid from_real_fields(const std::vector<double>& e_field,
                           const std::vector<double>& b_field, const GridSpec& spec) {
  spec.validate();
  const std::int64_t n = spec.sites();
  if (std::int64_t(e_field.size()) != 3 * n || std::int64_t(b_field.size()) != 3 * n)
    throw std::invalid_argument("from_real_fields: field size does not match grid");
  FieldGrid f = FieldGrid::zero(spec);
  constexpr double s = 0.7071067811865475244;
  for (int c = 0; c < 3; ++c)
    for (std::int64_t i = 0; i < n; ++i) {
      f.at(c, i) = s * e_field[std::size_t(c) * n + i];
      f.at(c + 3, i) = cplx(0.0, s * b_field[std::size_t(c) * n + i]);
    }
  return f;
}

Observables observables(const FieldGrid& field) {
  const auto& ms = matrices();
  const std::int64_t n = field.spec.sites();
  const double dv = field.spec.cell_volume();
  Observables obs;
  cplx j[3] = {0.0, 0.0, 0.0};
  cplx sc = 0.0;
  double j0 = 0.0;
  for (std::int64_t i = 0; i < n; ++i) {
    const Vec6c v = field.spinor(i);
    for (int c = 0; c < 6; ++c) j0 += std::norm(v[c]);
    for (int l = 0; l < 3; ++l) j[l] += dot(v, ms.chi[l].apply(v));
    sc += dot(v, ms.beta0.apply(v));
  }
  obs.j0 = j0 * dv;
  for (int l = 0; l < 3; ++l) {
    obs.j[l] = j[l].real() * dv;
    obs.j_im_max = std::max(obs.j_im_max, std::abs(j[l].imag()) * dv);
  }
  obs.scalar_integral = sc.real() * dv;
  return obs;
}

std::array<double, 2> transversality_residual(const FieldGrid& field) {
  constexpr double sqrt2 = 1.4142135623730950488;
  const std::int64_t n = field.spec.sites();
  const auto& dims = field.spec.dims;
  // E = sqrt2 * upper block, iB = sqrt2 * lower block; divergence is block-linear,
  // so work on the stored blocks and scale at the end.
  std::array<double, 2> res{0.0, 0.0};
  for (int blk = 0; blk < 2; ++blk) {
    std::array<std::vector<cplx>, 3> comp;
    for (int c = 0; c < 3; ++c) {
      comp[c].assign(field.data.begin() + std::size_t(blk * 3 + c) * n,
                     field.data.begin() + std::size_t(blk * 3 + c + 1) * n);
      spectral::fft3(comp[c], dims, -1);
    }
    std::vector<cplx> div(static_cast<std::size_t>(n));
    std::int64_t idx = 0;
    for (int i = 0; i < dims[0]; ++i)
      for (int j = 0; j < dims[1]; ++j)
        for (int l = 0; l < dims[2]; ++l, ++idx) {
          const Vec3 k = field.spec.wavevector({field.spec.harmonic(0, i),
                                                field.spec.harmonic(1, j),
                                                field.spec.harmonic(2, l)});
          div[idx] = kImag * (k[0] * comp[0][idx] + k[1] * comp[1][idx] + k[2] * comp[2][idx]);
        }
    spectral::fft3(div, dims, +1);
    double m = 0.0;
    for (const auto& x : div) m = std::max(m, std::abs(x));
    // lower block stores iB: |div(iB)| = |div B|
    res[blk] = m * sqrt2;
  }
  return res;
}

FieldGrid evolve_spectral(const FieldGrid& field, double dt, int steps) {
  if (!std::isfinite(dt)) throw std::invalid_argument("evolve_spectral: dt must be finite");
  if (steps < 0) throw std::invalid_argument("evolve_spectral: steps must be >= 0");
  const double t = dt * steps;
  FieldGrid f = field;
  if (t == 0.0) return f;
  spectral::fft_field(f, -1);
  const auto& dims = f.spec.dims;
  const std::int64_t n = f.spec.sites();
  std::int64_t idx = 0;
  for (int i = 0; i < dims[0]; ++i)
    for (int j = 0; j < dims[1]; ++j)
      for (int l = 0; l < dims[2]; ++l, ++idx) {
        const Vec3 k = f.spec.wavevector({f.spec.harmonic(0, i), f.spec.harmonic(1, j),
                                          f.spec.harmonic(2, l)});
        if (k[0] == 0.0 && k[1] == 0.0 && k[2] == 0.0) continue;
        const Mat6c u = hermitian_propagator(hamiltonian_symbol(WaveVector::of(k)), t);
        Vec6c v;
        for (int c = 0; c < 6; ++c) v[c] = f.data[std::size_t(c) * n + idx];
        v = u.apply(v);
        for (int c = 0; c < 6; ++c) f.data[std::size_t(c) * n + idx] = v[c];
      }
  spectral::fft_field(f, +1);
  return f;
}

double physicality_residual(const FieldGrid& field) {
  double r = 0.0;
  const std::int64_t n = field.spec.sites();
  for (int c = 0; c < 3; ++c)
    for (std::int64_t i = 0; i < n; ++i) {
      r = std::max(r, std::abs(field.at(c, i).imag()));
      r = std::max(r, std::abs(field.at(c + 3, i).real()));
    }
  return r;
}

FieldGrid evolve_curl_reference(const FieldGrid& field, double dt, int steps) {
  if (steps < 0) throw std::invalid_argument("evolve_curl_reference: steps must be >= 0");
  constexpr double sqrt2 = 1.4142135623730950488;
  const std::int64_t n = field.spec.sites();
  const auto& dims = field.spec.dims;

  double scale = 0.0;
  for (const auto& x : field.data) scale = std::max(scale, std::abs(x));
  if (physicality_residual(field) > 1e-10 * std::max(scale, 1.0))
    throw std::invalid_argument("evolve_curl_reference: input is not a physical (real E, B) field");

  const double t = dt * steps;
  if (t == 0.0) return field;

  // E-hat and B-hat per component
  std::array<std::vector<cplx>, 3> eh, bh;
  for (int c = 0; c < 3; ++c) {
    eh[c].resize(std::size_t(n));
    bh[c].resize(std::size_t(n));
    for (std::int64_t i = 0; i < n; ++i) {
      eh[c][i] = sqrt2 * field.at(c, i).real();
      bh[c][i] = sqrt2 * field.at(c + 3, i).imag();
    }
    spectral::fft3(eh[c], dims, -1);
    spectral::fft3(bh[c], dims, -1);
  }

  // Per mode: dE/dt = i k x B, dB/dt = -i k x E.  Parallel parts static;
  // perpendicular parts rotate:  E(t) = cos(wt) E0 + i sin(wt) khat x B0,
  //                              B(t) = cos(wt) B0 - i sin(wt) khat x E0.
  std::int64_t idx = 0;
  for (int i = 0; i < dims[0]; ++i)
    for (int j = 0; j < dims[1]; ++j)
      for (int l = 0; l < dims[2]; ++l, ++idx) {
        const Vec3 k = field.spec.wavevector({field.spec.harmonic(0, i),
                                              field.spec.harmonic(1, j),
                                              field.spec.harmonic(2, l)});
        const double w = norm(k);
        if (w == 0.0) continue;
        const Vec3 khat = (1.0 / w) * k;
        const Vec3c kc = to_complex(khat);
        Vec3c e0 = {eh[0][idx], eh[1][idx], eh[2][idx]};
        Vec3c b0 = {bh[0][idx], bh[1][idx], bh[2][idx]};
        const cplx epar = kc[0] * e0[0] + kc[1] * e0[1] + kc[2] * e0[2];
        const cplx bpar = kc[0] * b0[0] + kc[1] * b0[1] + kc[2] * b0[2];
        Vec3c eperp = e0 - epar * kc;
        Vec3c bperp = b0 - bpar * kc;
        const double c = std::cos(w * t), s = std::sin(w * t);
        const Vec3c kxb = cross(kc, bperp);
        const Vec3c kxe = cross(kc, eperp);
        for (int a = 0; a < 3; ++a) {
          eh[a][idx] = epar * kc[a] + c * eperp[a] + kImag * s * kxb[a];
          bh[a][idx] = bpar * kc[a] + c * bperp[a] - kImag * s * kxe[a];
        }
      }

  FieldGrid out = FieldGrid::zero(field.spec);
  for (int c = 0; c < 3; ++c) {
    spectral::fft3(eh[c], dims, +1);
    spectral::fft3(bh[c], dims, +1);
    for (std::int64_t i = 0; i < n; ++i) {
      out.at(c, i) = eh[c][i] / sqrt2;
      out.at(c + 3, i) = kImag * bh[c][i] / sqrt2;
    }
  }
  return out;
}

void write_csv(const FieldGrid& field, std::ostream& out) {
  out << "ix,iy,iz";
  for (int c = 0; c < 6; ++c) out << ",re" << c << ",im" << c;
  out << "\n";
  char buf[32];
  const auto& d = field.spec.dims;
  for (int ix = 0; ix < d[0]; ++ix)
    for (int iy = 0; iy < d[1]; ++iy)
      for (int iz = 0; iz < d[2]; ++iz) {
        const std::int64_t site = field.spec.site_index(ix, iy, iz);
        out << ix << ',' << iy << ',' << iz;
        for (int c = 0; c < 6; ++c) {
          const cplx v = field.at(c, site);
          std::snprintf(buf, sizeof buf, "%.17g", v.real());
          out << ',' << buf;
          std::snprintf(buf, sizeof buf, "%.17g", v.imag());
          out << ',' << buf;
        }
        out << "\n";
      }
}

namespace {
constexpr char kRawMagic[8] = {'P', 'W', 'F', 'G', 'R', 'I', 'D', '1'};
}

// 48-byte header: magic[8], dims 3 x int32, pad int32, box 3 x float64;
// then 6*sites complex128 (re, im) little-endian, component-major.
void write_raw(const FieldGrid& field, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("write_raw: cannot open " + path);
  out.write(kRawMagic, 8);
  std::int32_t dims[4] = {field.spec.dims[0], field.spec.dims[1], field.spec.dims[2], 0};
  out.write(reinterpret_cast<const char*>(dims), 16);
  out.write(reinterpret_cast<const char*>(field.spec.box.data()), 24);
  out.write(reinterpret_cast<const char*>(field.data.data()),
            std::streamsize(field.data.size() * sizeof(cplx)));
  if (!out) throw std::runtime_error("write_raw: write failed for " + path);
}

FieldGrid read_raw(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("read_raw: cannot open " + path);
  char magic[8];
  in.read(magic, 8);
  if (!in || std::memcmp(magic, kRawMagic, 8) != 0)
    throw std::runtime_error("read_raw: bad magic in " + path);
  std::int32_t dims[4];
  in.read(reinterpret_cast<char*>(dims), 16);
  GridSpec spec;
  spec.dims = {dims[0], dims[1], dims[2]};
  in.read(reinterpret_cast<char*>(spec.box.data()), 24);
  FieldGrid f = FieldGrid::zero(spec);
  in.read(reinterpret_cast<char*>(f.data.data()), std::streamsize(f.data.size() * sizeof(cplx)));
  if (!in) throw std::runtime_error("read_raw: truncated file " + path);
  return f;
}

}  // namespace photonwf
