#include <photonwf/diagnostics.hpp>

#include <photonwf/modes.hpp>
#include <photonwf/polarization.hpp>

#include <cmath>
#include <random>

namespace photonwf::diag {

namespace {

int levi_civita(int l, int m, int n) { return (l - m) * (m - n) * (n - l) / 2; }

double tol_of(const SuiteOptions& opt, const std::string& name, double fallback) {
  auto it = opt.tol_overrides.find(name);
  return it == opt.tol_overrides.end() ? fallback : it->second;
}

void push(std::vector<CheckResult>& out, const SuiteOptions& opt, const std::string& name,
          double value, double tol) {
  const double t = tol_of(opt, name, tol);
  out.push_back(CheckResult{name, value, t, value <= t});
}

Vec3 random_k(std::mt19937_64& rng, double lo = -5.0, double hi = 5.0, double min_norm = 1e-3) {
  std::uniform_real_distribution<double> u(lo, hi);
  while (true) {
    Vec3 k{u(rng), u(rng), u(rng)};
    if (norm(k) >= min_norm) return k;
  }
}

}  // namespace

std::vector<CheckResult> matrix_suite(const SuiteOptions& opt) {
  std::vector<CheckResult> out;
  const MatrixSet ms = build_matrix_set();
  std::mt19937_64 rng(opt.seed);

  double r = 0.0;
  for (int l = 0; l < 3; ++l)
    for (int m = 0; m < 3; ++m) {
      Mat3c comm = ms.tau[l] * ms.tau[m] - ms.tau[m] * ms.tau[l];
      for (int n = 0; n < 3; ++n)
        comm = comm - (kImag * double(levi_civita(l + 1, m + 1, n + 1))) * ms.tau[n];
      r = std::max(r, norm_inf(comm));
    }
  push(out, opt, "matrix.tau_commutators", r, 1e-15);

  push(out, opt, "matrix.beta0_involution", norm_inf(ms.beta0 * ms.beta0 - Mat6c::identity()),
       1e-15);
  push(out, opt, "matrix.beta0_hermitian", norm_inf(ms.beta0.adjoint() - ms.beta0), 1e-15);

  r = 0.0;
  for (int i = 0; i < 3; ++i) {
    r = std::max(r, norm_inf(ms.beta[i].adjoint() + ms.beta[i]));  // anti-Hermitian
    r = std::max(r, norm_inf(ms.chi[i].adjoint() - ms.chi[i]));    // Hermitian
  }
  push(out, opt, "matrix.hermiticity", r, 1e-15);

  r = 0.0;
  for (int i = 0; i < 3; ++i)
    r = std::max(r, norm_inf(ms.beta0 * ms.beta[i] + ms.beta[i] * ms.beta0));
  push(out, opt, "matrix.beta_anticommute", r, 1e-15);

  Mat6c ss;
  for (int i = 0; i < 3; ++i) ss = ss + ms.spin[i] * ms.spin[i];
  push(out, opt, "matrix.spin_casimir", norm_inf(ss - 2.0 * Mat6c::identity()), 1e-15);

  r = 0.0;
  for (int l = 1; l <= 3; ++l) {
    for (int m = 1; m <= 3; ++m) {
      Mat6c expect;
      for (int n = 0; n < 3; ++n)
        expect = expect + cplx(double(levi_civita(l, m, n + 1))) * ms.spin[n];
      r = std::max(r, norm_inf(ms.sigma(l, m) - expect));
    }
    r = std::max(r, norm_inf(ms.sigma(l, 0) - kImag * ms.chi[l - 1]));
    r = std::max(r, norm_inf(ms.sigma(0, l) + kImag * ms.chi[l - 1]));
  }
  push(out, opt, "matrix.sigma_structure", r, 1e-15);

  std::uniform_real_distribution<double> u(-3.0, 3.0);
  r = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double w = u(rng);
    const Vec3 k{u(rng), u(rng), u(rng)};
    r = std::max(r, factorization_residual(w, k));
  }
  r = std::max(r, factorization_residual(0.0, Vec3{0.0, 0.0, 0.0}));
  push(out, opt, "factorization.residual", r, 1e-13);

  double rs = 0.0, rh = 0.0;
  for (int i = 0; i < 50; ++i) {
    const Vec3 k = random_k(rng);
    const double w = norm(k);
    const Mat6c h = hamiltonian_symbol(WaveVector::of(k));
    rh = std::max(rh, norm_inf(h.adjoint() - h));
    cplx tr = 0.0;
    for (int d = 0; d < 6; ++d) tr += h(d, d);
    rh = std::max(rh, std::abs(tr));
    const auto ev = hermitian_eigenvalues(h);
    const double expect[6] = {-w, -w, 0.0, 0.0, w, w};
    for (int d = 0; d < 6; ++d) rs = std::max(rs, std::abs(ev[d] - expect[d]) / w);
  }
  push(out, opt, "hamiltonian.hermitian_traceless", rh, 1e-13);
  push(out, opt, "hamiltonian.spectrum", rs, 1e-12);
  return out;
}

std::vector<CheckResult> polarization_suite(const SuiteOptions& opt) {
  std::vector<CheckResult> out;
  const MatrixSet ms = build_matrix_set();
  std::mt19937_64 rng(opt.seed + 1);

  double orth = 0.0, comp = 0.0, hel = 0.0, lng = 0.0, conj_r = 0.0;
  const int lambdas[3] = {1, -1, 0};
  for (int trial = 0; trial < 1000; ++trial) {
    const Vec3 k = random_k(rng);
    const PolarizationTriad t = polarization_triad(WaveVector::of(k));
    for (int a = 0; a < 3; ++a) {
      for (int b = 0; b < 3; ++b) {
        const cplx g = dot(t.eps(lambdas[a]), t.eps(lambdas[b]));
        orth = std::max(orth, std::abs(g - (a == b ? 1.0 : 0.0)));
      }
    }
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        cplx c = 0.0;
        for (int a = 0; a < 3; ++a) c += t.eps(lambdas[a])[i] * std::conj(t.eps(lambdas[a])[j]);
        comp = std::max(comp, std::abs(c - (i == j ? 1.0 : 0.0)));
      }
    Mat3c tk;
    const double kn = norm(k);
    for (int l = 0; l < 3; ++l) tk = tk + cplx(k[l] / kn) * ms.tau[l];
    for (int a = 0; a < 3; ++a) {
      const Vec3c lhs = tk.apply(t.eps(lambdas[a]));
      const Vec3c rhs = cplx(double(lambdas[a])) * t.eps(lambdas[a]);
      hel = std::max(hel, norm_inf(lhs - rhs));
    }
    for (int i = 0; i < 3; ++i) {
      lng = std::max(lng, std::abs(t.eps_zero[i] - k[i] / kn));
      conj_r = std::max(conj_r, std::abs(t.eps_minus[i] - std::conj(t.eps_plus[i])));
    }
  }
  push(out, opt, "polarization.orthonormality", orth, 1e-12);
  push(out, opt, "polarization.completeness", comp, 1e-12);
  push(out, opt, "polarization.helicity", hel, 1e-12);
  push(out, opt, "polarization.longitudinal", lng, 1e-12);
  push(out, opt, "polarization.conjugation", conj_r, 1e-12);

  // continuity at the pole (first order in delta)
  const double delta = 1e-6;
  double pole = 0.0;
  for (double k3 : {2.0, -2.0}) {
    const PolarizationTriad t0 = polarization_triad(WaveVector::of(Vec3{0.0, 0.0, k3}));
    for (double phi : {0.0, 0.9, 2.2, 4.4}) {
      const Vec3 k{delta * std::cos(phi), delta * std::sin(phi), k3};
      const PolarizationTriad t = polarization_triad(WaveVector::of(k));
      double d;
      if (k3 > 0.0) {
        d = norm_inf(t.eps_plus - t0.eps_plus);
      } else {
        // azimuth-dependent phase below the pole: compare |eps| up to the
        // e^{2i phi} factor fixed by the convention branch
        const cplx ph = std::polar(1.0, 2.0 * phi);
        d = norm_inf(t.eps_plus - ph * t0.eps_plus);
      }
      pole = std::max(pole, d / delta);
    }
  }
  push(out, opt, "polarization.pole_limit", pole * delta, 1e-5);

  // four-polarization structure
  double fp = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const Vec3 k = random_k(rng);
    const FourPolarizations f = four_polarizations(WaveVector::of(k));
    const PolarizationTriad t = polarization_triad(WaveVector::of(k));
    fp = std::max(fp, std::abs(f.e[0][0] - 1.0));
    for (int s = 1; s <= 3; ++s) fp = std::max(fp, std::abs(f.e[s][0]));
    for (int i = 0; i < 3; ++i) {
      fp = std::max(fp, std::abs(f.e[0][i + 1]));
      fp = std::max(fp, std::abs(f.e[1][i + 1] - t.eps_plus[i]));
      fp = std::max(fp, std::abs(f.e[2][i + 1] - t.eps_minus[i]));
      fp = std::max(fp, std::abs(f.e[3][i + 1] - t.eps_zero[i]));
    }
  }
  push(out, opt, "polarization.four_vector_basis", fp, 1e-15);
  return out;
}

std::vector<CheckResult> mode_suite(const SuiteOptions& opt) {
  std::vector<CheckResult> out;
  std::mt19937_64 rng(opt.seed + 2);
  const int lambdas[3] = {1, -1, 0};

  double orth = 0.0, cross = 0.0, comp = 0.0, eig = 0.0;
  for (int trial = 0; trial < 500; ++trial) {
    const Vec3 k = random_k(rng);
    const WaveVector kv = WaveVector::of(k);
    const WaveVector kr = WaveVector::of(-k);
    const double w = kv.omega;
    const Mat6c h = hamiltonian_symbol(kv);
    Mat6c acc;
    for (int a = 0; a < 3; ++a) {
      const ModeSpinor ma = mode_spinor(kv, lambdas[a]);
      const ModeSpinor mar = mode_spinor(kr, lambdas[a]);
      for (int b = 0; b < 3; ++b) {
        const ModeSpinor mb = mode_spinor(kv, lambdas[b]);
        const ModeSpinor mbr = mode_spinor(kr, lambdas[b]);
        const double d = a == b ? 1.0 : 0.0;
        orth = std::max(orth, std::abs(dot(ma.f, mb.f) - d));
        orth = std::max(orth, std::abs(dot(ma.g, mb.g) - d));
        cross = std::max(cross, std::abs(dot(ma.f, mbr.g)));
        cross = std::max(cross, std::abs(dot(mar.g, mb.f)));
      }
      for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
          acc(i, j) += ma.f[i] * std::conj(ma.f[j]) + mar.g[i] * std::conj(mar.g[j]);

      const Vec6c hf = h.apply(ma.f);
      const Vec6c hg = h.apply(mar.g);
      if (lambdas[a] == 0) {
        eig = std::max(eig, norm_inf(hf) / w);
        eig = std::max(eig, norm_inf(hg) / w);
      } else {
        eig = std::max(eig, norm_inf(hf - cplx(w) * ma.f) / w);
        eig = std::max(eig, norm_inf(hg + cplx(w) * mar.g) / w);
      }
    }
    comp = std::max(comp, norm_inf(acc - Mat6c::identity()));
  }
  push(out, opt, "modes.orthonormality", orth, 1e-12);
  push(out, opt, "modes.fg_cross_orthogonality", cross, 1e-12);
  push(out, opt, "modes.completeness", comp, 1e-12);
  push(out, opt, "modes.eigenstructure", eig, 1e-12);

  // synthesis / projection round trip: 16^3 grid, 8 random modes
  GridSpec grid;
  grid.dims = {16, 16, 16};
  grid.box = {2.0 * 3.14159265358979323846, 2.0 * 3.14159265358979323846,
              2.0 * 3.14159265358979323846};
  AmplitudeSet amps(grid.box);
  std::uniform_int_distribution<int> un(-5, 5);
  std::uniform_int_distribution<int> ul(0, 2);
  std::uniform_real_distribution<double> ua(-1.0, 1.0);
  while (amps.size() < 8) {
    std::array<int, 3> n{un(rng), un(rng), un(rng)};
    if (n[0] == 0 && n[1] == 0 && n[2] == 0) continue;
    const ModeKey key{n, lambdas[ul(rng)]};
    amps.set(key, cplx(ua(rng), ua(rng)), cplx(ua(rng), ua(rng)), key.lambda == 0);
  }
  const double t = 0.37;
  const FieldGrid field = synthesize_field(amps, grid, t);
  const AmplitudeSet rec = project_amplitudes(field, t);
  double rt = 0.0;
  for (const auto& [key, amp] : amps.entries()) {
    const ModeAmplitude r = rec.get(key);
    rt = std::max({rt, std::abs(r.a - amp.a), std::abs(r.b - amp.b)});
  }
  for (const auto& [key, amp] : rec.entries()) {
    const ModeAmplitude r = amps.get(key);
    rt = std::max({rt, std::abs(r.a - amp.a), std::abs(r.b - amp.b)});
  }
  push(out, opt, "modes.roundtrip", rt, 1e-12);
  return out;
}

std::vector<CheckResult> run_identity_suite(const SuiteOptions& opt) {
  std::vector<CheckResult> out = matrix_suite(opt);
  auto pol = polarization_suite(opt);
  auto mod = mode_suite(opt);
  out.insert(out.end(), pol.begin(), pol.end());
  out.insert(out.end(), mod.begin(), mod.end());
  return out;
}

}  // namespace photonwf::diag
