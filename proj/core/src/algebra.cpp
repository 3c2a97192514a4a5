#include <photonwf/algebra.hpp>

#include <Eigen/Dense>

#include <stdexcept>

namespace photonwf {

namespace {

int levi_civita(int l, int m, int n) {
  return (l - m) * (m - n) * (n - l) / 2;
}

using EMat6 = Eigen::Matrix<cplx, 6, 6>;

EMat6 to_eigen(const Mat6c& a) {
  EMat6 r;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) r(i, j) = a(i, j);
  return r;
}

Mat6c from_eigen(const EMat6& a) {
  Mat6c r;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) r(i, j) = a(i, j);
  return r;
}

}  // namespace

MatrixSet build_matrix_set() {
  MatrixSet s;
  for (int l = 0; l < 3; ++l)
    for (int m = 0; m < 3; ++m)
      for (int n = 0; n < 3; ++n)
        s.tau[l](m, n) = -kImag * static_cast<double>(levi_civita(l + 1, m + 1, n + 1));

  for (int i = 0; i < 3; ++i) {
    s.beta0(i, i) = 1.0;
    s.beta0(i + 3, i + 3) = -1.0;
  }
  for (int l = 0; l < 3; ++l) {
    for (int m = 0; m < 3; ++m)
      for (int n = 0; n < 3; ++n) {
        const cplx t = s.tau[l](m, n);
        s.beta[l](m, n + 3) = t;
        s.beta[l](m + 3, n) = -t;
        s.spin[l](m, n) = t;
        s.spin[l](m + 3, n + 3) = t;
      }
    s.chi[l] = s.beta0 * s.beta[l];
  }
  return s;
}

const MatrixSet& matrices() {
  static const MatrixSet s = build_matrix_set();
  return s;
}

Mat6c MatrixSet::sigma(int mu, int nu) const {
  if (mu < 0 || mu > 3 || nu < 0 || nu > 3) throw std::domain_error("sigma: index out of range");
  if (mu == nu) return Mat6c{};
  if (mu == 0) return cplx(-1.0) * sigma(nu, 0);
  if (nu == 0) return kImag * chi[mu - 1];
  const int l = mu - 1, m = nu - 1;
  Mat6c r;
  for (int n = 0; n < 3; ++n) {
    const int e = levi_civita(l + 1, m + 1, n + 1);
    if (e != 0) r = r + cplx(static_cast<double>(e)) * spin[n];
  }
  return r;
}

Mat6c hamiltonian_symbol(const WaveVector& kv) {
  const auto& ms = matrices();
  Mat6c h;
  for (int l = 0; l < 3; ++l) h = h + cplx(kv.k[l]) * ms.chi[l];
  return h;
}

Mat6c omega_symbol(const WaveVector& kv) {
  Mat6c r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const cplx v = -kv.k[i] * kv.k[j];
      r(i, j) = v;
      r(i + 3, j + 3) = v;
    }
  return r;
}

Mat6c plane_wave_symbol(double omega, const Vec3& k) {
  const auto& ms = matrices();
  Mat6c r = (-kImag * omega) * ms.beta0;
  for (int l = 0; l < 3; ++l) r = r + (kImag * k[l]) * ms.beta[l];
  return r;
}

double factorization_residual(double omega, const Vec3& k) {
  const Mat6c m = plane_wave_symbol(omega, k);
  const double k2 = dot(k, k);
  Mat6c expect = omega_symbol(WaveVector::of(k));
  for (int i = 0; i < 6; ++i) expect(i, i) += k2 - omega * omega;
  return norm_inf(m * m - expect);
}

std::array<double, 6> hermitian_eigenvalues(const Mat6c& h) {
  Eigen::SelfAdjointEigenSolver<EMat6> es(to_eigen(h), Eigen::EigenvaluesOnly);
  std::array<double, 6> r;
  for (int i = 0; i < 6; ++i) r[i] = es.eigenvalues()(i);
  return r;
}

Mat6c hermitian_propagator(const Mat6c& h, double t) {
  Eigen::SelfAdjointEigenSolver<EMat6> es(to_eigen(h));
  Eigen::Matrix<cplx, 6, 1> ph;
  for (int i = 0; i < 6; ++i) ph(i) = std::exp(cplx(0.0, -es.eigenvalues()(i) * t));
  return from_eigen(es.eigenvectors() * ph.asDiagonal() * es.eigenvectors().adjoint());
}

Mat6c hermitian_exp(const Mat6c& h, double a) {
  Eigen::SelfAdjointEigenSolver<EMat6> es(to_eigen(h));
  Eigen::Matrix<cplx, 6, 1> ph;
  for (int i = 0; i < 6; ++i) ph(i) = std::exp(a * es.eigenvalues()(i));
  return from_eigen(es.eigenvectors() * ph.asDiagonal() * es.eigenvectors().adjoint());
}

}  // namespace photonwf
