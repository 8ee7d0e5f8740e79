#pragma once

#include <array>
#include <complex>
#include <cstddef>

namespace spinorlab {

using cplx = std::complex<double>;

// Fixed-size complex vector. Value type, no allocation.
template <std::size_t N>
struct CVec {
  std::array<cplx, N> e{};

  cplx& operator[](std::size_t i) { return e[i]; }
  const cplx& operator[](std::size_t i) const { return e[i]; }

  friend CVec operator+(const CVec& a, const CVec& b) {
    CVec r;
    for (std::size_t i = 0; i < N; ++i) r.e[i] = a.e[i] + b.e[i];
    return r;
  }
  friend CVec operator-(const CVec& a, const CVec& b) {
    CVec r;
    for (std::size_t i = 0; i < N; ++i) r.e[i] = a.e[i] - b.e[i];
    return r;
  }
  friend CVec operator-(const CVec& a) {
    CVec r;
    for (std::size_t i = 0; i < N; ++i) r.e[i] = -a.e[i];
    return r;
  }
  friend CVec operator*(cplx s, const CVec& a) {
    CVec r;
    for (std::size_t i = 0; i < N; ++i) r.e[i] = s * a.e[i];
    return r;
  }

  CVec conjugate() const {
    CVec r;
    for (std::size_t i = 0; i < N; ++i) r.e[i] = std::conj(e[i]);
    return r;
  }

  double max_abs() const {
    double m = 0.0;
    for (const auto& x : e) m = std::max(m, std::abs(x));
    return m;
  }
};

using CVec2 = CVec<2>;
using CVec4 = CVec<4>;

// Inner product, antilinear in the first argument.
template <std::size_t N>
cplx dot(const CVec<N>& a, const CVec<N>& b) {
  cplx s = 0.0;
  for (std::size_t i = 0; i < N; ++i) s += std::conj(a.e[i]) * b.e[i];
  return s;
}

// Fixed-size complex matrix, row-major: (row, col).
template <std::size_t N>
struct CMat {
  std::array<cplx, N * N> e{};

  cplx& operator()(std::size_t r, std::size_t c) { return e[r * N + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const { return e[r * N + c]; }

  static CMat identity() {
    CMat m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
    return m;
  }

  friend CMat operator+(const CMat& a, const CMat& b) {
    CMat r;
    for (std::size_t i = 0; i < N * N; ++i) r.e[i] = a.e[i] + b.e[i];
    return r;
  }
  friend CMat operator-(const CMat& a, const CMat& b) {
    CMat r;
    for (std::size_t i = 0; i < N * N; ++i) r.e[i] = a.e[i] - b.e[i];
    return r;
  }
  friend CMat operator-(const CMat& a) {
    CMat r;
    for (std::size_t i = 0; i < N * N; ++i) r.e[i] = -a.e[i];
    return r;
  }
  friend CMat operator*(cplx s, const CMat& a) {
    CMat r;
    for (std::size_t i = 0; i < N * N; ++i) r.e[i] = s * a.e[i];
    return r;
  }
  friend CMat operator*(const CMat& a, const CMat& b) {
    CMat r;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t k = 0; k < N; ++k) {
        const cplx aik = a(i, k);
        for (std::size_t j = 0; j < N; ++j) r(i, j) += aik * b(k, j);
      }
    return r;
  }
  friend CVec<N> operator*(const CMat& a, const CVec<N>& v) {
    CVec<N> r;
    for (std::size_t i = 0; i < N; ++i) {
      cplx s = 0.0;
      for (std::size_t j = 0; j < N; ++j) s += a(i, j) * v.e[j];
      r.e[i] = s;
    }
    return r;
  }

  CMat transpose() const {
    CMat r;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) r(i, j) = (*this)(j, i);
    return r;
  }
  CMat conjugate() const {
    CMat r;
    for (std::size_t i = 0; i < N * N; ++i) r.e[i] = std::conj(e[i]);
    return r;
  }
  CMat adjoint() const { return conjugate().transpose(); }

  double max_abs() const {
    double m = 0.0;
    for (const auto& x : e) m = std::max(m, std::abs(x));
    return m;
  }
};

using CMat2 = CMat<2>;
using CMat4 = CMat<4>;

template <std::size_t N>
double max_abs_diff(const CMat<N>& a, const CMat<N>& b) {
  return (a - b).max_abs();
}
template <std::size_t N>
double max_abs_diff(const CVec<N>& a, const CVec<N>& b) {
  return (a - b).max_abs();
}

// Block helpers for the 2+2 chiral split.
CMat4 block_diag(const CMat2& upper, const CMat2& lower);
CVec4 join(const CVec2& upper, const CVec2& lower);
CVec2 upper_block(const CVec4& v);
CVec2 lower_block(const CVec4& v);

// Partial-pivot LU; the matrices here are tiny and well conditioned.
CMat4 inverse(const CMat4& a);
cplx determinant(const CMat4& a);

// Gamma matrices in the chiral basis, metric (+,-,-,-):
//   gamma0 = offdiag(1,1) blocks, gamma^j = [[0, sigma_j], [-sigma_j, 0]],
//   gamma5 = diag(1,1,-1,-1).
// In this basis gamma5 = -i gamma0 gamma1 gamma2 gamma3 (note the sign), and the
// upper-right block of gamma2 is exactly i*Theta.
struct GammaBasis {
  CMat4 gamma0, gamma1, gamma2, gamma3, gamma5;
  CMat2 sigma1, sigma2, sigma3;
  CMat2 theta;  // Wigner time-reversal matrix [[0,-1],[1,0]], Theta^2 = -1

  const CMat4& gamma(int mu) const;
  // eta^{mu nu}: diag(+1,-1,-1,-1).
  static double metric(int mu, int nu);
};

const GammaBasis& gamma_basis();

CMat2 wigner_theta();

// sigma . phat for phat = (sin t cos f, sin t sin f, cos t).
CMat2 helicity_operator(double theta, double phi);

}  // namespace spinorlab
