#include <photonwf/modes.hpp>

#include <photonwf/textdoc.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace photonwf {

namespace {

void validate_key(const ModeKey& key) {
  if (key.n[0] == 0 && key.n[1] == 0 && key.n[2] == 0)
    throw std::domain_error("ModeKey: zero harmonic is not a mode");
  if (key.lambda != 1 && key.lambda != -1 && key.lambda != 0)
    throw std::domain_error("ModeKey: lambda must be +1, -1 or 0");
}

Vec3 wavevector_in_box(const std::array<int, 3>& n, const Vec3& box) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  return {two_pi * n[0] / box[0], two_pi * n[1] / box[1], two_pi * n[2] / box[2]};
}

bool boxes_match(const Vec3& a, const Vec3& b) {
  for (int i = 0; i < 3; ++i)
    if (std::abs(a[i] - b[i]) > 1e-12 * std::max(a[i], b[i])) return false;
  return true;
}

std::string harmonic_name(const std::array<int, 3>& n) {
  return "[" + std::to_string(n[0]) + "," + std::to_string(n[1]) + "," + std::to_string(n[2]) + "]";
}

}  // namespace

AmplitudeSet::AmplitudeSet(const Vec3& box) : box_(box) {
  if (!(volume() > 0.0)) throw std::domain_error("AmplitudeSet: box volume must be positive");
}

void AmplitudeSet::set(const ModeKey& key, const ModeAmplitude& amp) {
  validate_key(key);
  entries_[key] = amp;
}

void AmplitudeSet::set(const ModeKey& key, cplx a, cplx b, bool virtual_admixture) {
  set(key, ModeAmplitude{a, b, virtual_admixture});
}

ModeAmplitude AmplitudeSet::get(const ModeKey& key) const {
  auto it = entries_.find(key);
  return it == entries_.end() ? ModeAmplitude{} : it->second;
}

WaveVector AmplitudeSet::wavevector(const ModeKey& key) const {
  return WaveVector::of(wavevector_in_box(key.n, box_));
}

std::vector<ModeKey> AmplitudeSet::unflagged_virtual_content(double tol) const {
  std::vector<ModeKey> out;
  for (const auto& [key, amp] : entries_)
    if (key.lambda == 0 && !amp.virtual_admixture &&
        (std::abs(amp.a) > tol || std::abs(amp.b) > tol))
      out.push_back(key);
  return out;
}

ModeSpinor mode_spinor(const WaveVector& k, int lambda) {
  if (lambda != 1 && lambda != -1 && lambda != 0)
    throw std::domain_error("mode_spinor: lambda must be +1, -1 or 0");
  const PolarizationTriad t = polarization_triad(k);
  const Vec3c& e = t.eps(lambda);
  const double norm = 1.0 / std::sqrt(1.0 + lambda * lambda);
  ModeSpinor s;
  for (int i = 0; i < 3; ++i) {
    s.f[i] = norm * e[i];
    s.f[i + 3] = norm * double(lambda) * e[i];
    s.g[i] = norm * double(lambda) * e[i];
    s.g[i + 3] = norm * e[i];
  }
  return s;
}

FieldGrid synthesize_field(const AmplitudeSet& amps, const GridSpec& grid, double t,
                           SynthesisVariant variant) {
  grid.validate();
  if (!boxes_match(amps.box(), grid.box))
    throw std::invalid_argument("synthesize_field: amplitude box does not match grid box");

  FieldGrid out = FieldGrid::zero(grid);
  const double volume = grid.volume();
  const auto& d = grid.dims;

  // per-axis phase tables e^{i k_a x_a}
  std::array<std::vector<cplx>, 3> phase;

  for (const auto& [key, amp] : amps.entries()) {
    if (!grid.representable(key.n))
      throw std::invalid_argument("synthesize_field: harmonic " + harmonic_name(key.n) +
                                  " is outside the grid band");
    const WaveVector kv = amps.wavevector(key);
    const ModeSpinor ms = mode_spinor(kv, key.lambda);
    const double w = kv.omega;

    for (int a = 0; a < 3; ++a) {
      phase[a].resize(std::size_t(d[a]));
      const double step = 2.0 * std::numbers::pi * key.n[a] / d[a];
      for (int i = 0; i < d[a]; ++i) phase[a][i] = std::polar(1.0, step * i);
    }
    const cplx wt = std::polar(1.0, -w * t);

    // coefficient spinors for e^{+ik.x} and e^{-ik.x} content
    Vec6c cplus{}, cminus{};
    switch (variant) {
      case SynthesisVariant::dual: {
        const cplx ca = std::sqrt(w / volume) * amp.a * wt;
        const cplx cb = std::sqrt(w / volume) * std::conj(amp.b) * std::conj(wt);
        for (int c = 0; c < 6; ++c) {
          cplus[c] = ca * ms.f[c];
          cminus[c] = cb * ms.g[c];
        }
        break;
      }
      case SynthesisVariant::photon_only: {
        const cplx ca = std::sqrt(w / (2.0 * volume)) * amp.a * wt;
        for (int c = 0; c < 6; ++c) {
          cplus[c] = ca * ms.f[c];
          cminus[c] = std::conj(ca) * ms.f[c];
        }
        break;
      }
      case SynthesisVariant::dualphoton_only: {
        const cplx cb = std::sqrt(w / (2.0 * volume)) * amp.b * wt;
        for (int c = 0; c < 6; ++c) {
          cplus[c] = cb * ms.g[c];
          cminus[c] = std::conj(cb) * ms.g[c];
        }
        break;
      }
    }

    const std::int64_t nsites = grid.sites();
    std::int64_t site = 0;
    for (int ix = 0; ix < d[0]; ++ix)
      for (int iy = 0; iy < d[1]; ++iy) {
        const cplx pxy = phase[0][ix] * phase[1][iy];
        for (int iz = 0; iz < d[2]; ++iz, ++site) {
          const cplx p = pxy * phase[2][iz];
          const cplx q = std::conj(p);
          for (int c = 0; c < 6; ++c)
            out.data[std::size_t(c) * nsites + site] += cplus[c] * p + cminus[c] * q;
        }
      }
  }
  return out;
}

Vec6c evaluate_field(const AmplitudeSet& amps, const Vec3& x, double t,
                     SynthesisVariant variant) {
  Vec6c out{};
  const double volume = amps.volume();
  for (const auto& [key, amp] : amps.entries()) {
    const WaveVector kv = amps.wavevector(key);
    const ModeSpinor ms = mode_spinor(kv, key.lambda);
    const double w = kv.omega;
    const cplx ph = std::polar(1.0, dot(kv.k, x) - w * t);  // e^{-i(wt - k.x)}
    switch (variant) {
      case SynthesisVariant::dual:
        for (int c = 0; c < 6; ++c)
          out[c] += std::sqrt(w / volume) *
                    (amp.a * ms.f[c] * ph + std::conj(amp.b) * ms.g[c] * std::conj(ph));
        break;
      case SynthesisVariant::photon_only: {
        const cplx m = std::sqrt(w / (2.0 * volume)) * (amp.a * ph + std::conj(amp.a * ph));
        for (int c = 0; c < 6; ++c) out[c] += m * ms.f[c];
        break;
      }
      case SynthesisVariant::dualphoton_only: {
        const cplx m = std::sqrt(w / (2.0 * volume)) * (amp.b * ph + std::conj(amp.b * ph));
        for (int c = 0; c < 6; ++c) out[c] += m * ms.g[c];
        break;
      }
    }
  }
  return out;
}

AmplitudeSet project_amplitudes(const FieldGrid& field, double t) {
  const GridSpec& grid = field.spec;
  AmplitudeSet amps(grid.box);
  FieldGrid hat = field;
  spectral::fft_field(hat, -1);
  const std::int64_t nsites = grid.sites();
  const double inv_n = 1.0 / double(nsites);
  const double volume = grid.volume();

  struct Rec {
    ModeKey key;
    cplx a, b;
  };
  std::vector<Rec> recs;
  double largest = 0.0;

  const auto& d = grid.dims;
  std::int64_t idx = 0;
  for (int i = 0; i < d[0]; ++i)
    for (int j = 0; j < d[1]; ++j)
      for (int l = 0; l < d[2]; ++l, ++idx) {
        const std::array<int, 3> n = {grid.harmonic(0, i), grid.harmonic(1, j),
                                      grid.harmonic(2, l)};
        if (n[0] == 0 && n[1] == 0 && n[2] == 0) continue;
        Vec6c v;
        for (int c = 0; c < 6; ++c) v[c] = hat.data[std::size_t(c) * nsites + idx] * inv_n;
        if (norm_inf(v) == 0.0) continue;
        const WaveVector kv = WaveVector::of(grid.wavevector(n));
        const WaveVector kvr = WaveVector::of(-kv.k);
        const double w = kv.omega;
        const cplx et = std::polar(1.0, w * t);
        const double pref = 1.0 / std::sqrt(w / volume);
        const std::array<int, 3> nr = {-n[0], -n[1], -n[2]};
        for (int lambda : {1, -1, 0}) {
          const ModeSpinor mf = mode_spinor(kv, lambda);
          const ModeSpinor mg = mode_spinor(kvr, lambda);
          const cplx a = dot(mf.f, v) * et * pref;
          const cplx bstar = dot(mg.g, v) * std::conj(et) * pref;
          largest = std::max({largest, std::abs(a), std::abs(bstar)});
          if (a != 0.0) recs.push_back({ModeKey{n, lambda}, a, 0.0});
          if (bstar != 0.0) recs.push_back({ModeKey{nr, lambda}, 0.0, std::conj(bstar)});
        }
      }

  const double cut = 1e-14 * largest;
  for (const auto& r : recs) {
    if (std::abs(r.a) <= cut && std::abs(r.b) <= cut) continue;
    ModeAmplitude amp = amps.get(r.key);
    if (std::abs(r.a) > cut) amp.a += r.a;
    if (std::abs(r.b) > cut) amp.b += r.b;
    if (r.key.lambda == 0) amp.virtual_admixture = true;
    amps.set(r.key, amp);
  }
  return amps;
}

double mode_energy(const AmplitudeSet& amps) {
  double e = 0.0;
  for (const auto& [key, amp] : amps.entries())
    e += amps.wavevector(key).omega * (std::norm(amp.a) + std::norm(amp.b));
  return e;
}

void PotentialAmplitudes::set(const PotentialKey& key, cplx c) {
  if (key.n[0] == 0 && key.n[1] == 0 && key.n[2] == 0)
    throw std::domain_error("PotentialKey: zero harmonic is not a mode");
  if (key.s < 0 || key.s > 3) throw std::domain_error("PotentialKey: s must be 0..3");
  entries_[key] = c;
}

AmplitudeSet amplitudes_from_potential(const PotentialAmplitudes& pot) {
  constexpr double inv_sqrt2 = 0.7071067811865475244;
  std::map<ModeKey, cplx> acc;
  for (const auto& [key, c] : pot.entries()) {
    switch (key.s) {
      case 1: acc[ModeKey{key.n, 1}] += kImag * c; break;
      case 2: acc[ModeKey{key.n, -1}] += kImag * c; break;
      case 3: acc[ModeKey{key.n, 0}] += kImag * c * inv_sqrt2; break;
      default: acc[ModeKey{key.n, 0}] -= kImag * c * inv_sqrt2; break;
    }
  }
  AmplitudeSet amps(pot.box());
  for (const auto& [key, a] : acc) {
    if (a == 0.0) continue;  // exact cancellation (e.g. c(k,3) = c(k,0)) stays absent
    amps.set(key, a, 0.0, key.lambda == 0);
  }
  return amps;
}

namespace {

std::string fmt_real(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

AmplitudeSet read_amplitude_document(std::istream& in) {
  const textdoc::Document doc = textdoc::parse(in);
  if (!doc.has("box")) throw std::runtime_error("amplitude document: missing 'box'");
  const auto box = doc.at("box").numbers();
  if (box.size() != 3) throw std::runtime_error("amplitude document: 'box' must have 3 entries");
  AmplitudeSet amps(Vec3{box[0], box[1], box[2]});
  for (const textdoc::Value* rec : doc.all("mode")) {
    const auto n = rec->at("n").integers();
    if (n.size() != 3) throw std::runtime_error("amplitude document: 'n' must have 3 entries");
    ModeKey key{{int(n[0]), int(n[1]), int(n[2])}, int(rec->at("lambda").integer())};
    ModeAmplitude amp;
    if (rec->has("a")) {
      const auto a = rec->at("a").numbers();
      if (a.size() != 2) throw std::runtime_error("amplitude document: 'a' must be [re, im]");
      amp.a = cplx(a[0], a[1]);
    }
    if (rec->has("b")) {
      const auto b = rec->at("b").numbers();
      if (b.size() != 2) throw std::runtime_error("amplitude document: 'b' must be [re, im]");
      amp.b = cplx(b[0], b[1]);
    }
    if (rec->has("virtual")) amp.virtual_admixture = rec->at("virtual").boolean();
    amps.set(key, amp);
  }
  return amps;
}

AmplitudeSet read_amplitude_document_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open amplitude document " + path);
  return read_amplitude_document(in);
}

void write_amplitude_document(const AmplitudeSet& amps, std::ostream& out) {
  out << "box = [" << fmt_real(amps.box()[0]) << ", " << fmt_real(amps.box()[1]) << ", "
      << fmt_real(amps.box()[2]) << "]\n";
  for (const auto& [key, amp] : amps.entries()) {
    out << "mode = { n = [" << key.n[0] << ", " << key.n[1] << ", " << key.n[2]
        << "], lambda = " << (key.lambda > 0 ? "+1" : key.lambda < 0 ? "-1" : "0");
    out << ", a = [" << fmt_real(amp.a.real()) << ", " << fmt_real(amp.a.imag()) << "]";
    out << ", b = [" << fmt_real(amp.b.real()) << ", " << fmt_real(amp.b.imag()) << "]";
    if (amp.virtual_admixture) out << ", virtual = true";
    out << " }\n";
  }
}

}  // namespace photonwf
