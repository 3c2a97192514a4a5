#include <photonwf/symmetry.hpp>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace photonwf {

namespace {

std::array<int, 3> neg(const std::array<int, 3>& n) { return {-n[0], -n[1], -n[2]}; }

// Plane-wave components of the dual expansion: (k^mu, coefficient spinor).
struct ModeComponent {
  std::array<double, 4> kmu;
  Vec6c v;
};

std::vector<ModeComponent> components(const AmplitudeSet& amps) {
  std::vector<ModeComponent> out;
  const double vol = amps.volume();
  for (const auto& [key, amp] : amps.entries()) {
    const WaveVector kv = amps.wavevector(key);
    const ModeSpinor ms = mode_spinor(kv, key.lambda);
    const double w = kv.omega;
    if (amp.a != 0.0) {
      ModeComponent c;
      c.kmu = {w, kv.k[0], kv.k[1], kv.k[2]};
      const cplx coef = std::sqrt(w / vol) * amp.a;
      for (int i = 0; i < 6; ++i) c.v[i] = coef * ms.f[i];
      out.push_back(c);
    }
    if (amp.b != 0.0) {
      ModeComponent c;
      c.kmu = {-w, -kv.k[0], -kv.k[1], -kv.k[2]};
      const cplx coef = std::sqrt(w / vol) * std::conj(amp.b);
      for (int i = 0; i < 6; ++i) c.v[i] = coef * ms.g[i];
      out.push_back(c);
    }
  }
  return out;
}

Vec6c eval_components(const std::vector<ModeComponent>& cs, const Vec3& x, double t) {
  Vec6c out{};
  for (const auto& c : cs) {
    const cplx ph = std::polar(1.0, -(c.kmu[0] * t - (c.kmu[1] * x[0] + c.kmu[2] * x[1] +
                                                      c.kmu[3] * x[2])));
    for (int i = 0; i < 6; ++i) out[i] += c.v[i] * ph;
  }
  return out;
}

}  // namespace

AmplitudeSet parity(const AmplitudeSet& amps) {
  AmplitudeSet out(amps.box());
  for (const auto& [key, amp] : amps.entries())
    out.set(ModeKey{neg(key.n), key.lambda},
            ModeAmplitude{amp.a, -amp.b, amp.virtual_admixture});
  return out;
}

FieldGrid parity(const FieldGrid& field) {
  const auto& ms = matrices();
  FieldGrid out = FieldGrid::zero(field.spec);
  const auto& d = field.spec.dims;
  for (int ix = 0; ix < d[0]; ++ix)
    for (int iy = 0; iy < d[1]; ++iy)
      for (int iz = 0; iz < d[2]; ++iz) {
        const std::int64_t src = field.spec.site_index((d[0] - ix) % d[0], (d[1] - iy) % d[1],
                                                       (d[2] - iz) % d[2]);
        out.set_spinor(field.spec.site_index(ix, iy, iz), ms.beta0.apply(field.spinor(src)));
      }
  return out;
}

AmplitudeSet time_reversal(const AmplitudeSet& amps) {
  AmplitudeSet out(amps.box());
  for (const auto& [key, amp] : amps.entries()) {
    const ModeKey dst = key.lambda == 0 ? key : ModeKey{neg(key.n), -key.lambda};
    ModeAmplitude acc = out.get(dst);
    acc.a += amp.a;
    acc.b += amp.b;
    acc.virtual_admixture = acc.virtual_admixture || amp.virtual_admixture;
    out.set(dst, acc);
  }
  return out;
}

FieldGrid time_reversal_field(const AmplitudeSet& amps, const GridSpec& grid, double t,
                              SynthesisVariant variant) {
  return synthesize_field(amps, grid, -t, variant);
}

AmplitudeSet dual(const AmplitudeSet& amps) {
  AmplitudeSet out(amps.box());
  for (const auto& [key, amp] : amps.entries()) {
    const ModeKey dst{key.n, -key.lambda};
    ModeAmplitude acc = out.get(dst);
    acc.a += amp.b;   // new a(k,l) = b(k,-l)
    acc.b += -amp.a;  // new b(k,l) = -a(k,-l)
    acc.virtual_admixture = acc.virtual_admixture || amp.virtual_admixture;
    out.set(dst, acc);
  }
  return out;
}

FieldGrid dual(const FieldGrid& field) {
  FieldGrid out = FieldGrid::zero(field.spec);
  const std::int64_t n = field.spec.sites();
  for (std::int64_t i = 0; i < n; ++i)
    for (int c = 0; c < 3; ++c) {
      out.data[std::size_t(c) * n + i] = std::conj(field.data[std::size_t(c + 3) * n + i]);
      out.data[std::size_t(c + 3) * n + i] = -std::conj(field.data[std::size_t(c) * n + i]);
    }
  return out;
}

AmplitudeSet gauge_phase(const AmplitudeSet& amps, double theta) {
  const cplx ph = std::polar(1.0, -theta);
  AmplitudeSet out(amps.box());
  for (const auto& [key, amp] : amps.entries())
    out.set(key, ModeAmplitude{ph * amp.a, std::conj(ph) * amp.b, amp.virtual_admixture});
  return out;
}

FieldGrid gauge_phase(const FieldGrid& field, double theta) {
  const cplx ph = std::polar(1.0, -theta);
  FieldGrid out = field;
  for (auto& x : out.data) x *= ph;
  return out;
}

BoostParams make_boost(double rapidity, const Vec3& axis) {
  const double n = norm(axis);
  if (!(n > 0.0)) throw std::domain_error("make_boost: zero axis");
  return BoostParams{rapidity, (1.0 / n) * axis};
}

namespace {

void check_axis(const Vec3& axis) {
  if (std::abs(norm(axis) - 1.0) > 1e-14)
    throw std::domain_error("boost: axis must be a unit vector (use make_boost)");
}

std::array<double, 4> apply_lambda(double rapidity, const Vec3& n,
                                   const std::array<double, 4>& kmu) {
  const double g = std::cosh(rapidity), v = std::tanh(rapidity);
  const Vec3 k{kmu[1], kmu[2], kmu[3]};
  const double kpar = dot(k, n);
  const double w2 = g * (kmu[0] - v * kpar);
  const Vec3 k2 = k + ((g - 1.0) * kpar - g * v * kmu[0]) * n;
  return {w2, k2[0], k2[1], k2[2]};
}

}  // namespace

BoostedModes boost(const AmplitudeSet& amps, const BoostParams& p) {
  check_axis(p.axis);
  const auto& ms = matrices();
  Mat6c chin;
  for (int l = 0; l < 3; ++l) chin = chin + cplx(p.axis[l]) * ms.chi[l];
  const Mat6c a = hermitian_exp(chin, -p.rapidity);

  BoostedModes out;
  out.rapidity = p.rapidity;
  out.axis = p.axis;
  out.source_box = amps.box();
  for (const auto& c : components(amps)) {
    BoostedMode bm;
    bm.kmu = apply_lambda(p.rapidity, p.axis, c.kmu);
    bm.spinor = a.apply(c.v);
    out.modes.push_back(bm);
  }
  return out;
}

Vec6c evaluate(const BoostedModes& bm, const Vec3& x, double t) {
  Vec6c out{};
  for (const auto& m : bm.modes) {
    const cplx ph = std::polar(1.0, -(m.kmu[0] * t - (m.kmu[1] * x[0] + m.kmu[2] * x[1] +
                                                      m.kmu[3] * x[2])));
    for (int i = 0; i < 6; ++i) out[i] += m.spinor[i] * ph;
  }
  return out;
}

std::array<double, 4> boost_coordinates(const BoostParams& p, const std::array<double, 4>& x) {
  check_axis(p.axis);
  return apply_lambda(p.rapidity, p.axis, x);
}

double symbol_residual(const BoostedMode& m) {
  const auto& ms = matrices();
  Vec6c r = m.kmu[0] * ms.beta0.apply(m.spinor);
  for (int l = 0; l < 3; ++l) {
    const Vec6c bl = ms.beta[l].apply(m.spinor);
    for (int i = 0; i < 6; ++i) r[i] -= m.kmu[1 + l] * bl[i];
  }
  return norm_inf(r);
}

namespace {

double scalar_density(const Vec6c& v) {
  double s = 0.0;
  for (int i = 0; i < 3; ++i) s += std::norm(v[i]) - std::norm(v[i + 3]);
  return s;
}

}  // namespace

double lorentz_scalar_integral(const AmplitudeSet& amps, const GridSpec& grid, double t) {
  grid.validate();
  const std::vector<ModeComponent> cs = components(amps);
  double acc = 0.0;
  const auto& d = grid.dims;
  for (int ix = 0; ix < d[0]; ++ix)
    for (int iy = 0; iy < d[1]; ++iy)
      for (int iz = 0; iz < d[2]; ++iz)
        acc += scalar_density(eval_components(cs, grid.site_position(ix, iy, iz), t));
  return acc * grid.cell_volume();
}

double lorentz_scalar_integral(const BoostedModes& bm, const GridSpec& grid, double t) {
  grid.validate();
  const BoostParams p{bm.rapidity, bm.axis};
  double acc = 0.0;
  const auto& d = grid.dims;
  for (int ix = 0; ix < d[0]; ++ix)
    for (int iy = 0; iy < d[1]; ++iy)
      for (int iz = 0; iz < d[2]; ++iz) {
        const Vec3 x = grid.site_position(ix, iy, iz);
        const auto xp = boost_coordinates(p, {t, x[0], x[1], x[2]});
        acc += scalar_density(evaluate(bm, Vec3{xp[1], xp[2], xp[3]}, xp[0]));
      }
  return acc * grid.cell_volume();
}

namespace {

// psibar (i beta^mu d_mu) psi for a list of plane-wave components; the Dirac
// operator acts per mode as k0 beta0 - beta.k.
struct LagrangianEvaluator {
  std::vector<ModeComponent> field;
  std::vector<ModeComponent> dirac;  // same phases, spinor = (k0 b0 - beta.k) v

  explicit LagrangianEvaluator(const std::vector<ModeComponent>& cs) {
    const auto& ms = matrices();
    field = cs;
    dirac.reserve(cs.size());
    for (const auto& c : cs) {
      ModeComponent d = c;
      Vec6c r = c.kmu[0] * ms.beta0.apply(c.v);
      for (int l = 0; l < 3; ++l) {
        const Vec6c bl = ms.beta[l].apply(c.v);
        for (int i = 0; i < 6; ++i) r[i] -= c.kmu[1 + l] * bl[i];
      }
      d.v = r;
      dirac.push_back(d);
    }
  }

  cplx density(const Vec3& x, double t) const {
    const auto& ms = matrices();
    const Vec6c psi = eval_components(field, x, t);
    const Vec6c dpsi = eval_components(dirac, x, t);
    return dot(psi, ms.beta0.apply(dpsi));
  }
};

Mat3c rotation_matrix(const Vec3& axis, double angle) {
  // Rodrigues form
  const double c = std::cos(angle), s = std::sin(angle);
  Mat3c r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double v = (i == j ? c : 0.0) + (1.0 - c) * axis[i] * axis[j];
      r(i, j) = v;
    }
  r(0, 1) += -s * axis[2];
  r(1, 0) += s * axis[2];
  r(0, 2) += s * axis[1];
  r(2, 0) += -s * axis[1];
  r(1, 2) += -s * axis[0];
  r(2, 1) += s * axis[0];
  return r;
}

}  // namespace

PseudoLagrangianReport pseudo_lagrangian_check(const AmplitudeSet& amps, const GeneratorSpec& gen,
                                               double epsilon, const GridSpec& grid, double t) {
  grid.validate();
  const double axis_norm = norm(gen.axis);
  if (!(axis_norm > 0.0)) throw std::domain_error("pseudo_lagrangian_check: zero axis");
  const Vec3 n = (1.0 / axis_norm) * gen.axis;
  const auto& ms = matrices();

  const std::vector<ModeComponent> base = components(amps);
  std::vector<ModeComponent> transformed = base;

  if (gen.kind == GeneratorSpec::Kind::rotation) {
    // exact finite rotation: k' = R k, v' = exp(-i eps n.S) v
    const Mat3c r = rotation_matrix(n, epsilon);
    Mat6c sn;
    for (int l = 0; l < 3; ++l) sn = sn + cplx(n[l]) * ms.spin[l];
    const Mat6c a = hermitian_propagator(sn, epsilon);  // exp(-i eps Sn)
    for (auto& c : transformed) {
      const Vec3c k = r.apply(Vec3c{cplx(c.kmu[1]), cplx(c.kmu[2]), cplx(c.kmu[3])});
      c.kmu = {c.kmu[0], k[0].real(), k[1].real(), k[2].real()};
      c.v = a.apply(c.v);
    }
  } else {
    // first-order boost: w' = w - eps n.k, k' = k - eps w n, v' = (1 - eps n.chi) v
    Mat6c a = Mat6c::identity();
    for (int l = 0; l < 3; ++l) a = a - (cplx(epsilon * n[l])) * ms.chi[l];
    for (auto& c : transformed) {
      const Vec3 k{c.kmu[1], c.kmu[2], c.kmu[3]};
      const double w2 = c.kmu[0] - epsilon * dot(n, k);
      const Vec3 k2 = k - (epsilon * c.kmu[0]) * n;
      c.kmu = {w2, k2[0], k2[1], k2[2]};
      c.v = a.apply(c.v);
    }
  }

  const LagrangianEvaluator l0(base), l1(transformed);

  PseudoLagrangianReport rep;
  const auto& d = grid.dims;
  for (int ix = 0; ix < d[0]; ++ix)
    for (int iy = 0; iy < d[1]; ++iy)
      for (int iz = 0; iz < d[2]; ++iz) {
        const Vec3 x = grid.site_position(ix, iy, iz);
        const cplx v0 = l0.density(x, t);
        const cplx v1 = l1.density(x, t);
        rep.lagrangian_max = std::max(rep.lagrangian_max, std::abs(v0));
        rep.delta_max = std::max(rep.delta_max, std::abs(v1 - v0));

        // boost-sector operator identity: psibar[ -beta^i chi_l d_i + beta0 d_l ] psi
        const Vec6c psi = eval_components(base, x, t);
        for (int l = 0; l < 3; ++l) {
          Vec6c op{};
          for (const auto& c : base) {
            const cplx ph = std::polar(1.0, -(c.kmu[0] * t - (c.kmu[1] * x[0] + c.kmu[2] * x[1] +
                                                              c.kmu[3] * x[2])));
            const Vec6c cl = ms.chi[l].apply(c.v);
            Vec6c acc{};
            for (int m = 0; m < 3; ++m) {
              const Vec6c bm = ms.beta[m].apply(cl);
              const cplx ikm = kImag * c.kmu[1 + m];
              for (int i = 0; i < 6; ++i) acc[i] -= ikm * bm[i];
            }
            const Vec6c b0 = ms.beta0.apply(c.v);
            const cplx ikl = kImag * c.kmu[1 + l];
            for (int i = 0; i < 6; ++i) acc[i] += ikl * b0[i];
            for (int i = 0; i < 6; ++i) op[i] += acc[i] * ph;
          }
          rep.a6_max[l] = std::max(rep.a6_max[l], std::abs(dot(psi, ms.beta0.apply(op))));
        }
      }
  return rep;
}

}  // namespace photonwf
