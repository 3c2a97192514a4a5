#pragma once

#include <photonwf/linalg.hpp>

// Fixed matrices of the (1,0)+(0,1) representation and the Fourier symbols of
// the field operators.
//
// Conventions (used consistently across the toolkit):
//   - spin-1 generators (tau_l)_{mn} = -i eps_{lmn}
//   - beta0 = diag(I3, -I3), beta_i = [[0, tau_i], [-tau_i, 0]]
//   - chi = beta0 * beta (Hermitian boost generators)
//   - S = I2 (x) tau, with S.S = 2 I6
//   - plane waves carry exp(-i(w t - k.x)), so d_t -> -iw and grad -> +ik.

namespace photonwf {

struct WaveVector {
  Vec3 k{};
  double omega = 0.0;  // |k|

  static WaveVector of(const Vec3& k) { return {k, norm(k)}; }
};

struct MatrixSet {
  std::array<Mat3c, 3> tau;
  Mat6c beta0;
  std::array<Mat6c, 3> beta;
  std::array<Mat6c, 3> spin;  // S_l = I2 (x) tau_l
  std::array<Mat6c, 3> chi;   // chi_l = beta0 beta_l

  // Lorentz generators: Sigma_{lm} = eps_{lmn} S_n, Sigma_{l0} = -Sigma_{0l} = i chi_l.
  Mat6c sigma(int mu, int nu) const;
};

const MatrixSet& matrices();
MatrixSet build_matrix_set();

// H(k) = beta0 (beta . k) = chi . k; Hermitian, spectrum {+|k|,+|k|,0,0,-|k|,-|k|}.
Mat6c hamiltonian_symbol(const WaveVector& k);

// Fourier symbol of the transversality operator Omega: -I2 (x) (k k^T).
Mat6c omega_symbol(const WaveVector& k);

// Plane-wave symbol of beta^mu d_mu: M(w,k) = -iw beta0 + i beta.k.
Mat6c plane_wave_symbol(double omega, const Vec3& k);

// max-norm of M(w,k)^2 - [(|k|^2 - w^2) I6 + Omega(k)]; zero for all (w,k).
double factorization_residual(double omega, const Vec3& k);

// Eigenvalues of a Hermitian 6x6, ascending (dense solver).
std::array<double, 6> hermitian_eigenvalues(const Mat6c& h);

// exp(-i h t) for Hermitian h, via eigendecomposition.
Mat6c hermitian_propagator(const Mat6c& h, double t);

// exp(a h) for Hermitian h (real exponent), via eigendecomposition.
Mat6c hermitian_exp(const Mat6c& h, double a);

}  // namespace photonwf
