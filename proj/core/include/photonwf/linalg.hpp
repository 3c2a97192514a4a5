#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>

// Small fixed-size complex vectors and matrices. Everything in the toolkit is
// 3- or 6-dimensional, so the types are plain arrays with value semantics;
// dense storage throughout.

namespace photonwf {

using cplx = std::complex<double>;

using Vec3 = std::array<double, 3>;
using Vec3c = std::array<cplx, 3>;
using Vec6c = std::array<cplx, 6>;

inline constexpr cplx kImag{0.0, 1.0};

template <std::size_t N>
struct MatC {
  std::array<cplx, N * N> m{};

  cplx& operator()(std::size_t i, std::size_t j) { return m[i * N + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const { return m[i * N + j]; }

  static MatC identity() {
    MatC r;
    for (std::size_t i = 0; i < N; ++i) r(i, i) = 1.0;
    return r;
  }

  MatC adjoint() const {
    MatC r;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) r(i, j) = std::conj((*this)(j, i));
    return r;
  }

  friend MatC operator+(const MatC& a, const MatC& b) {
    MatC r;
    for (std::size_t i = 0; i < N * N; ++i) r.m[i] = a.m[i] + b.m[i];
    return r;
  }
  friend MatC operator-(const MatC& a, const MatC& b) {
    MatC r;
    for (std::size_t i = 0; i < N * N; ++i) r.m[i] = a.m[i] - b.m[i];
    return r;
  }
  friend MatC operator*(const MatC& a, const MatC& b) {
    MatC r;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t k = 0; k < N; ++k) {
        const cplx aik = a(i, k);
        if (aik == 0.0) continue;
        for (std::size_t j = 0; j < N; ++j) r(i, j) += aik * b(k, j);
      }
    return r;
  }
  friend MatC operator*(cplx s, const MatC& a) {
    MatC r;
    for (std::size_t i = 0; i < N * N; ++i) r.m[i] = s * a.m[i];
    return r;
  }

  std::array<cplx, N> apply(const std::array<cplx, N>& v) const {
    std::array<cplx, N> r{};
    for (std::size_t i = 0; i < N; ++i) {
      cplx acc = 0.0;
      for (std::size_t j = 0; j < N; ++j) acc += (*this)(i, j) * v[j];
      r[i] = acc;
    }
    return r;
  }
};

using Mat3c = MatC<3>;
using Mat6c = MatC<6>;

template <std::size_t N>
double norm_inf(const MatC<N>& a) {
  double r = 0.0;
  for (const auto& x : a.m) r = std::max(r, std::abs(x));
  return r;
}

template <std::size_t N>
double norm_inf(const std::array<cplx, N>& v) {
  double r = 0.0;
  for (const auto& x : v) r = std::max(r, std::abs(x));
  return r;
}

template <std::size_t N>
double norm2(const std::array<cplx, N>& v) {
  double r = 0.0;
  for (const auto& x : v) r += std::norm(x);
  return std::sqrt(r);
}

template <std::size_t N>
cplx dot(const std::array<cplx, N>& a, const std::array<cplx, N>& b) {
  cplx r = 0.0;
  for (std::size_t i = 0; i < N; ++i) r += std::conj(a[i]) * b[i];
  return r;
}

template <std::size_t N>
std::array<cplx, N> operator+(const std::array<cplx, N>& a, const std::array<cplx, N>& b) {
  std::array<cplx, N> r;
  for (std::size_t i = 0; i < N; ++i) r[i] = a[i] + b[i];
  return r;
}

template <std::size_t N>
std::array<cplx, N> operator-(const std::array<cplx, N>& a, const std::array<cplx, N>& b) {
  std::array<cplx, N> r;
  for (std::size_t i = 0; i < N; ++i) r[i] = a[i] - b[i];
  return r;
}

template <std::size_t N>
std::array<cplx, N> operator*(cplx s, const std::array<cplx, N>& v) {
  std::array<cplx, N> r;
  for (std::size_t i = 0; i < N; ++i) r[i] = s * v[i];
  return r;
}

inline double norm(const Vec3& v) { return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]); }

inline Vec3 operator+(const Vec3& a, const Vec3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
inline Vec3 operator-(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
inline Vec3 operator-(const Vec3& a) { return {-a[0], -a[1], -a[2]}; }
inline Vec3 operator*(double s, const Vec3& a) { return {s * a[0], s * a[1], s * a[2]}; }
inline double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

inline Vec3c cross(const Vec3c& a, const Vec3c& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

inline Vec3c conj(const Vec3c& v) { return {std::conj(v[0]), std::conj(v[1]), std::conj(v[2])}; }

inline Vec3c to_complex(const Vec3& v) { return {cplx(v[0]), cplx(v[1]), cplx(v[2])}; }

// Upper/lower 3-blocks of a 6-spinor.
inline Vec3c upper(const Vec6c& v) { return {v[0], v[1], v[2]}; }
inline Vec3c lower(const Vec6c& v) { return {v[3], v[4], v[5]}; }
inline Vec6c join(const Vec3c& u, const Vec3c& l) { return {u[0], u[1], u[2], l[0], l[1], l[2]}; }

}  // namespace photonwf
