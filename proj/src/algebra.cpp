#include "spinorlab/algebra.hpp"

#include <cmath>
#include <stdexcept>

namespace spinorlab {

namespace {
constexpr cplx I{0.0, 1.0};
}

CMat4 block_diag(const CMat2& upper, const CMat2& lower) {
  CMat4 m;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      m(i, j) = upper(i, j);
      m(i + 2, j + 2) = lower(i, j);
    }
  return m;
}

CVec4 join(const CVec2& upper, const CVec2& lower) {
  return CVec4{{upper[0], upper[1], lower[0], lower[1]}};
}

CVec2 upper_block(const CVec4& v) { return CVec2{{v[0], v[1]}}; }
CVec2 lower_block(const CVec4& v) { return CVec2{{v[2], v[3]}}; }

CMat4 inverse(const CMat4& a) {
  // Gauss-Jordan with partial pivoting on an augmented [a | 1] pair.
  CMat4 lhs = a;
  CMat4 rhs = CMat4::identity();
  for (std::size_t col = 0; col < 4; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < 4; ++r)
      if (std::abs(lhs(r, col)) > std::abs(lhs(piv, col))) piv = r;
    if (std::abs(lhs(piv, col)) == 0.0)
      throw std::domain_error("inverse: singular matrix");
    if (piv != col)
      for (std::size_t c = 0; c < 4; ++c) {
        std::swap(lhs(piv, c), lhs(col, c));
        std::swap(rhs(piv, c), rhs(col, c));
      }
    const cplx inv_p = 1.0 / lhs(col, col);
    for (std::size_t c = 0; c < 4; ++c) {
      lhs(col, c) *= inv_p;
      rhs(col, c) *= inv_p;
    }
    for (std::size_t r = 0; r < 4; ++r) {
      if (r == col) continue;
      const cplx f = lhs(r, col);
      if (f == 0.0) continue;
      for (std::size_t c = 0; c < 4; ++c) {
        lhs(r, c) -= f * lhs(col, c);
        rhs(r, c) -= f * rhs(col, c);
      }
    }
  }
  return rhs;
}

cplx determinant(const CMat4& a) {
  CMat4 u = a;
  cplx det = 1.0;
  for (std::size_t col = 0; col < 4; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < 4; ++r)
      if (std::abs(u(r, col)) > std::abs(u(piv, col))) piv = r;
    if (std::abs(u(piv, col)) == 0.0) return 0.0;
    if (piv != col) {
      for (std::size_t c = 0; c < 4; ++c) std::swap(u(piv, c), u(col, c));
      det = -det;
    }
    det *= u(col, col);
    for (std::size_t r = col + 1; r < 4; ++r) {
      const cplx f = u(r, col) / u(col, col);
      for (std::size_t c = col; c < 4; ++c) u(r, c) -= f * u(col, c);
    }
  }
  return det;
}

namespace {

GammaBasis make_basis() {
  GammaBasis b;

  b.sigma1 = CMat2{{0.0, 1.0, 1.0, 0.0}};
  b.sigma2 = CMat2{{0.0, -I, I, 0.0}};
  b.sigma3 = CMat2{{1.0, 0.0, 0.0, -1.0}};
  b.theta = CMat2{{0.0, -1.0, 1.0, 0.0}};

  const CMat2 id2 = CMat2::identity();
  b.gamma0 = CMat4{};
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      b.gamma0(i, j + 2) = id2(i, j);
      b.gamma0(i + 2, j) = id2(i, j);
    }

  auto spatial = [](const CMat2& s) {
    CMat4 g;
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) {
        g(i, j + 2) = s(i, j);
        g(i + 2, j) = -s(i, j);
      }
    return g;
  };
  b.gamma1 = spatial(b.sigma1);
  b.gamma2 = spatial(b.sigma2);
  b.gamma3 = spatial(b.sigma3);

  b.gamma5 = block_diag(id2, -id2);
  return b;
}

}  // namespace

const CMat4& GammaBasis::gamma(int mu) const {
  switch (mu) {
    case 0: return gamma0;
    case 1: return gamma1;
    case 2: return gamma2;
    case 3: return gamma3;
  }
  throw std::out_of_range("gamma index must be 0..3");
}

double GammaBasis::metric(int mu, int nu) {
  if (mu != nu) return 0.0;
  return mu == 0 ? 1.0 : -1.0;
}

const GammaBasis& gamma_basis() {
  static const GammaBasis b = make_basis();
  return b;
}

CMat2 wigner_theta() { return gamma_basis().theta; }

CMat2 helicity_operator(double theta, double phi) {
  const GammaBasis& b = gamma_basis();
  const double nx = std::sin(theta) * std::cos(phi);
  const double ny = std::sin(theta) * std::sin(phi);
  const double nz = std::cos(theta);
  return cplx(nx) * b.sigma1 + cplx(ny) * b.sigma2 + cplx(nz) * b.sigma3;
}

}  // namespace spinorlab
