#include <photonwf/zb.hpp>

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <set>
#include <stdexcept>

namespace photonwf {

int RTTable::lambda_index(int lambda) {
  switch (lambda) {
    case 1: return 0;
    case -1: return 1;
    case 0: return 2;
  }
  throw std::domain_error("RTTable: lambda must be +1, -1 or 0");
}

const Vec3c& RTTable::R(int lambda, int lambda_p) const {
  return r[lambda_index(lambda)][lambda_index(lambda_p)];
}

const Vec3c& RTTable::T(int lambda, int lambda_p) const {
  return t[lambda_index(lambda)][lambda_index(lambda_p)];
}

RTTable rt_vectors(const WaveVector& kv) {
  const auto& ms = matrices();
  const PolarizationTriad tp = polarization_triad(kv);
  const PolarizationTriad tm = polarization_triad(WaveVector::of(-kv.k));
  RTTable tab;
  tab.k = kv;
  constexpr int lambdas[3] = {1, -1, 0};
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      const int l = lambdas[a], lp = lambdas[b];
      const double den = std::sqrt((1.0 + l * l) * (1.0 + lp * lp));
      const double cr = (l + lp) / den;
      const double ct = (1.0 + l * lp) / den;
      for (int i = 0; i < 3; ++i) {
        tab.r[a][b][i] = cr * dot(tp.eps(l), ms.tau[i].apply(tp.eps(lp)));
        tab.t[a][b][i] = ct * dot(tp.eps(l), ms.tau[i].apply(tm.eps(lp)));
      }
    }
  return tab;
}

namespace {

constexpr double kInvSqrt2 = 0.7071067811865475244;

std::array<int, 3> neg(const std::array<int, 3>& n) { return {-n[0], -n[1], -n[2]}; }

// Exact mode-space momentum of the dual expansion: the R part is constant,
// the T parts carry e^{-2iwt} and its conjugate.
void dual_parts(const AmplitudeSet& amps, double t, Vec3* constant, Vec3* oscillatory) {
  cplx cst[3] = {0, 0, 0}, osc[3] = {0, 0, 0};
  for (const auto& [key, amp] : amps.entries()) {
    const WaveVector kv = amps.wavevector(key);
    const double w = kv.omega;
    const RTTable tab = rt_vectors(kv);
    for (const auto& [key2, amp2] : amps.entries()) {
      if (key2.n == key.n) {
        const cplx c = std::conj(amp.a) * amp2.a + amp.b * std::conj(amp2.b);
        const Vec3c& rv = tab.R(key.lambda, key2.lambda);
        for (int i = 0; i < 3; ++i) cst[i] += w * c * rv[i];
      }
      if (key2.n == neg(key.n)) {
        const Vec3c& tv = tab.T(key.lambda, key2.lambda);
        const cplx down = w * amp.b * amp2.a * std::polar(1.0, -2.0 * w * t);
        const cplx up = w * std::conj(amp.a) * std::conj(amp2.b) * std::polar(1.0, 2.0 * w * t);
        for (int i = 0; i < 3; ++i) osc[i] += (down + up) * tv[i];
      }
    }
  }
  for (int i = 0; i < 3; ++i) {
    (*constant)[i] = cst[i].real();
    (*oscillatory)[i] = osc[i].real();
  }
}

// Literal traditional-formalism series: transverse flow, the a(k,0)-a(k,l)
// cross term, and the two 2w lines with 1/(2 sqrt2) coefficients; each line
// enters together with its Hermitian conjugate.  The sum index runs over every
// harmonic reachable from the stored entries (n and -n), so terms that pair
// amplitudes at opposite harmonics are picked up regardless of which entry
// exists in the map.
void traditional_parts(const AmplitudeSet& amps, double t, Vec3* constant, Vec3* oscillatory) {
  std::set<std::array<int, 3>> harmonics;
  for (const auto& [key, amp] : amps.entries()) {
    harmonics.insert(key.n);
    harmonics.insert(neg(key.n));
  }
  cplx cst[3] = {0, 0, 0}, osc[3] = {0, 0, 0};
  for (const auto& n : harmonics) {
    const WaveVector kv = WaveVector::of(
        Vec3{2.0 * std::numbers::pi * n[0] / amps.box()[0],
             2.0 * std::numbers::pi * n[1] / amps.box()[1],
             2.0 * std::numbers::pi * n[2] / amps.box()[2]});
    const double w = kv.omega;
    const PolarizationTriad tp = polarization_triad(kv);
    const PolarizationTriad tm = polarization_triad(WaveVector::of(-kv.k));
    const cplx a0 = amps.get(ModeKey{n, 0}).a;
    const cplx a0m = amps.get(ModeKey{neg(n), 0}).a;
    const cplx e2 = std::polar(1.0, -2.0 * w * t);
    for (int lambda : {1, -1}) {
      const double l = lambda;
      const cplx al = amps.get(ModeKey{n, lambda}).a;
      // k a+(k,l) a(k,l)
      for (int i = 0; i < 3; ++i) cst[i] += kv.k[i] * std::norm(al);
      // -(w/sqrt2) eta(k,l) [a+(k,0) a(k,l) + H.c.]
      if (a0 != 0.0 && al != 0.0) {
        const cplx x = std::conj(a0) * al;
        const Vec3c& eta = tp.eps(lambda);
        for (int i = 0; i < 3; ++i)
          cst[i] -= w * kInvSqrt2 * (eta[i] * x + std::conj(eta[i] * x));
      }
      // -(l w / 2 sqrt2) eta(k,-l) [a(k,l) a(-k,0) e^{-2iwt} + H.c.]
      if (al != 0.0 && a0m != 0.0) {
        const cplx x = al * a0m * e2;
        const Vec3c& eta = tp.eps(-lambda);
        for (int i = 0; i < 3; ++i)
          osc[i] -= l * w * 0.5 * kInvSqrt2 * (eta[i] * x + std::conj(eta[i] * x));
      }
      // +(l w / 2 sqrt2) eta(-k,l) [a(k,0) a(-k,l) e^{-2iwt} + H.c.]
      const cplx am = amps.get(ModeKey{neg(n), lambda}).a;
      if (a0 != 0.0 && am != 0.0) {
        const cplx x = a0 * am * e2;
        const Vec3c& eta = tm.eps(lambda);
        for (int i = 0; i < 3; ++i)
          osc[i] += l * w * 0.5 * kInvSqrt2 * (eta[i] * x + std::conj(eta[i] * x));
      }
    }
  }
  for (int i = 0; i < 3; ++i) {
    (*constant)[i] = cst[i].real();
    (*oscillatory)[i] = osc[i].real();
  }
}

}  // namespace

Vec3 momentum_at(const AmplitudeSet& amps, double time, Formalism formalism) {
  Vec3 c{}, o{};
  if (formalism == Formalism::dual)
    dual_parts(amps, time, &c, &o);
  else
    traditional_parts(amps, time, &c, &o);
  return c + o;
}

MomentumSeries momentum_series(const AmplitudeSet& amps, const std::vector<double>& times,
                               Formalism formalism) {
  if (times.empty()) throw std::invalid_argument("momentum_series: times must be nonempty");
  MomentumSeries s;
  s.formalism = formalism;
  s.times = times;
  s.j.reserve(times.size());
  s.j_constant.reserve(times.size());
  s.j_oscillatory.reserve(times.size());
  for (double t : times) {
    Vec3 c{}, o{};
    if (formalism == Formalism::dual)
      dual_parts(amps, t, &c, &o);
    else
      traditional_parts(amps, t, &c, &o);
    s.j_constant.push_back(c);
    s.j_oscillatory.push_back(o);
    s.j.push_back(c + o);
  }
  return s;
}

ZbSummary zb_extract(const MomentumSeries& series) {
  const std::size_t n = series.times.size();
  if (n < 2) throw std::invalid_argument("zb_extract: need at least 2 samples");
  const double dt = series.times[1] - series.times[0];
  if (!(dt > 0.0)) throw std::invalid_argument("zb_extract: times must be increasing");
  for (std::size_t i = 1; i < n; ++i) {
    const double step = series.times[i] - series.times[i - 1];
    if (std::abs(step - dt) > 1e-9 * std::max(std::abs(dt), 1.0))
      throw std::invalid_argument("zb_extract: non-uniform sampling");
  }

  ZbSummary out;
  for (int c = 0; c < 3; ++c) {
    double mean = 0.0;
    for (const auto& j : series.j) mean += j[c];
    out.constant[c] = mean / double(n);
  }

  // plain DFT of the mean-removed series; peak over bins 1..n/2
  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (int c = 0; c < 3; ++c) scale = std::max(scale, std::abs(series.j[i][c] - out.constant[c]));
  if (scale == 0.0) return out;  // constant series: amplitude 0, frequency 0

  const std::size_t half = n / 2;
  std::vector<std::array<cplx, 3>> spec(half + 1);
  for (std::size_t m = 1; m <= half; ++m) {
    std::array<cplx, 3> acc{};
    for (std::size_t i = 0; i < n; ++i) {
      const cplx ph = std::polar(1.0, -2.0 * std::numbers::pi * double(m) * double(i) / double(n));
      for (int c = 0; c < 3; ++c) acc[c] += (series.j[i][c] - out.constant[c]) * ph;
    }
    spec[m] = acc;
  }
  std::size_t best = 1;
  double best_mag = -1.0;
  for (std::size_t m = 1; m <= half; ++m) {
    double mag = 0.0;
    for (int c = 0; c < 3; ++c) mag += std::norm(spec[m][c]);
    if (mag > best_mag) {
      best_mag = mag;
      best = m;
    }
  }
  if (std::sqrt(best_mag) / double(n) <= 1e-12 * scale) return out;

  out.peak_bin = int(best);
  out.frequency = 2.0 * std::numbers::pi * double(best) / (double(n) * dt);
  for (int c = 0; c < 3; ++c)
    out.zb_amplitude[c] = 2.0 * std::abs(spec[best][c]) / double(n);
  return out;
}

void write_csv(const MomentumSeries& series, std::ostream& out, bool breakdown) {
  out << "t,Jx,Jy,Jz";
  if (breakdown) out << ",Jconst_x,Jconst_y,Jconst_z,Jzb_x,Jzb_y,Jzb_z";
  out << "\n";
  char buf[32];
  auto emit = [&](double v) {
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out << ',' << buf;
  };
  for (std::size_t i = 0; i < series.times.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g", series.times[i]);
    out << buf;
    for (int c = 0; c < 3; ++c) emit(series.j[i][c]);
    if (breakdown) {
      for (int c = 0; c < 3; ++c) emit(series.j_constant[i][c]);
      for (int c = 0; c < 3; ++c) emit(series.j_oscillatory[i][c]);
    }
    out << "\n";
  }
}

}  // namespace photonwf
