#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "spinorlab/dualspace.hpp"
#include "spinorlab/errors.hpp"
#include "spinorlab/sampling.hpp"

using namespace spinorlab;

namespace {
const Kinematics kRef(1.0, 0.75, M_PI / 2, 0.0);  // E = 5/4
const PhasePair kRefPhases(cplx(2.0), cplx(0.5));
}  // namespace

TEST_CASE("Dirac dual is the adjoint against gamma0") {
  CVec4 psi;
  psi[0] = cplx(1, 2);
  psi[1] = cplx(3, 0);
  psi[2] = cplx(0, -1);
  psi[3] = cplx(5, 0);
  const DualRow bar = dirac_dual(psi);
  CHECK(bar[0] == cplx(0, 1));
  CHECK(bar[1] == cplx(5, 0));
  CHECK(bar[2] == cplx(1, -2));
  CHECK(bar[3] == cplx(3, 0));

  // Pairing is a plain contraction: (conj psi)^T gamma0 psi.
  const cplx direct = std::conj(psi[0]) * psi[2] + std::conj(psi[1]) * psi[3] +
                      std::conj(psi[2]) * psi[0] + std::conj(psi[3]) * psi[1];
  CHECK(std::abs(bar * psi - direct) < 1e-15);
}

TEST_CASE("row-matrix action associates with the column action") {
  SampleStream stream(53);
  CVec4 v, w;
  CMat4 m;
  for (std::size_t i = 0; i < 4; ++i) {
    v[i] = cplx(stream.uniform(-1, 1), stream.uniform(-1, 1));
    w[i] = cplx(stream.uniform(-1, 1), stream.uniform(-1, 1));
    for (std::size_t j = 0; j < 4; ++j)
      m(i, j) = cplx(stream.uniform(-1, 1), stream.uniform(-1, 1));
  }
  const DualRow bar = dirac_dual(v);
  CHECK(std::abs((bar * m) * w - bar * (m * w)) < 1e-14);

  CVec4 lhs = outer(v, bar) * w;
  CVec4 rhs = (bar * w) * v;
  CHECK(max_abs_diff(lhs, rhs) < 1e-14);
}

TEST_CASE("Dirac Gram table has the antidiagonal 2m / -2m pattern") {
  SampleStream stream(59);
  CMat4 pattern;
  pattern(0, 1) = 2.0;
  pattern(1, 0) = 2.0;
  pattern(2, 3) = -2.0;
  pattern(3, 2) = -2.0;

  for (int i = 0; i < 300; ++i) {
    const Kinematics k = stream.kinematics();
    const PhasePair ph = stream.phases();
    const CMat4 table = cplx(1.0 / k.m) * gram_dirac(k, ph);
    CHECK(max_abs_diff(table, pattern) < 1e-10);
  }
}

TEST_CASE("spin-sum operator: involution, inverse, chirality, blocks") {
  SampleStream stream(61);
  const CMat4& g5 = gamma_basis().gamma5;
  for (int i = 0; i < 300; ++i) {
    const Kinematics k = stream.kinematics();
    const PhasePair ph = stream.phases();
    const CMat4 G = gamma_from_spin_sums(k, ph).matrix;
    const double sc = std::max(1.0, G.max_abs());

    CHECK(max_abs_diff(G * G, CMat4::identity()) < 1e-10 * sc);
    CHECK(max_abs_diff(G, inverse(G)) < 1e-10 * sc);
    CHECK(max_abs_diff(G * g5, g5 * G) < 1e-10 * sc);
    for (std::size_t r = 0; r < 2; ++r)
      for (std::size_t c = 0; c < 2; ++c) {
        CHECK(std::abs(G(r, c + 2)) < 1e-10 * sc);
        CHECK(std::abs(G(r + 2, c)) < 1e-10 * sc);
      }
  }
}

TEST_CASE("operator exchanges the helicity labels within each kind") {
  SampleStream stream(67);
  for (int i = 0; i < 300; ++i) {
    const Kinematics k = stream.kinematics();
    const PhasePair ph = stream.phases();
    const CMat4 G = gamma_from_spin_sums(k, ph).matrix;
    const auto fam = build_family(k, ph);
    for (std::size_t a : {std::size_t{0}, std::size_t{2}}) {
      const double sc = std::max(fam[a].psi.max_abs(), fam[a + 1].psi.max_abs());
      CHECK(max_abs_diff(G * fam[a].psi, fam[a + 1].psi) < 1e-10 * sc);
      CHECK(max_abs_diff(G * fam[a + 1].psi, fam[a].psi) < 1e-10 * sc);
    }
  }
}

TEST_CASE("closed-form entry functions at the reference point") {
  const ClosedFormFunctions f = closed_form_functions(kRef, kRefPhases);
  CHECK(std::abs(f.g - 4.0625) < 1e-12);
  CHECK(std::abs(f.f1 - 3.9375) < 1e-12);
  CHECK(std::abs(f.f2 - (-3.9375)) < 1e-12);
  CHECK(std::abs(f.g * f.g + f.f1 * f.f2 - 1.0) < 1e-10);
}

TEST_CASE("closed-form operator at rest along z is antidiagonal in each block") {
  const Kinematics rest(1.0, 0.0, 0.0, 0.0);
  const CMat4 G = gamma_closed_form(rest, kRefPhases).matrix;
  CMat4 expected;
  expected(0, 1) = 4.0;
  expected(1, 0) = 0.25;
  expected(2, 3) = 0.25;
  expected(3, 2) = 4.0;
  CHECK(max_abs_diff(G, expected) < 1e-15);
}

TEST_CASE("entry functions satisfy g^2 + f1 f2 = 1 for complex phases") {
  SampleStream stream(71);
  for (int i = 0; i < 500; ++i) {
    const Kinematics k = stream.kinematics();
    const PhasePair ph = stream.phases();
    const ClosedFormFunctions f = closed_form_functions(k, ph);
    const double sc = std::max(1.0, std::norm(f.g));
    CHECK(std::abs(f.g * f.g + f.f1 * f.f2 - 1.0) < 1e-10 * sc);
  }
}

TEST_CASE("closed form reproduces the spin sum") {
  SampleStream stream(73);
  for (int i = 0; i < 300; ++i) {
    const Kinematics k = stream.kinematics();

    // Real phases, the asserted regime.
    const PhasePair ph = stream.phases();
    const PhasePair real_ph(std::abs(ph.beta_plus), std::abs(ph.beta_minus));
    const CMat4 a = gamma_from_spin_sums(k, real_ph).matrix;
    const CMat4 b = gamma_closed_form(k, real_ph).matrix;
    CHECK(max_abs_diff(a, b) < 1e-10 * std::max(1.0, a.max_abs()));

    // The conjugated upper block keeps the match for complex phases as well.
    const CMat4 ac = gamma_from_spin_sums(k, ph).matrix;
    const CMat4 bc = gamma_closed_form(k, ph).matrix;
    CHECK(max_abs_diff(ac, bc) < 1e-10 * std::max(1.0, ac.max_abs()));
  }
}

TEST_CASE("new-dual Gram is diagonal +2m, +2m, -2m, -2m") {
  SampleStream stream(79);
  for (int i = 0; i < 300; ++i) {
    const Kinematics k = stream.kinematics();
    const PhasePair ph = stream.phases();
    const auto fam = build_family(k, ph);
    const GammaOperator G = gamma_from_spin_sums(k, ph);

    for (std::size_t a = 0; a < 4; ++a) {
      const DualRow dual = flag_dipole_dual(fam[a], G);
      for (std::size_t b = 0; b < 4; ++b) {
        const cplx pairing = (dual * fam[b].psi) / cplx(k.m);
        const cplx expected =
            a == b ? cplx(fam[a].label.kind == Kind::S ? 2.0 : -2.0) : cplx(0.0);
        CHECK(std::abs(pairing - expected) < 1e-10);
      }
      // Norms are real and frame-independent.
      const cplx self = (dual * fam[a].psi) / cplx(k.m);
      CHECK(std::abs(self.imag()) < 1e-12);
      const auto rest_fam = build_family(k.rest(), ph);
      const GammaOperator rest_G = gamma_from_spin_sums(k.rest(), ph);
      const cplx self_rest =
          (flag_dipole_dual(rest_fam[a], rest_G) * rest_fam[a].psi) / cplx(k.m);
      CHECK(std::abs(self - self_rest) < 1e-10);
    }
  }
}

TEST_CASE("operator equals the signed Dirac spin sums over 2m") {
  SampleStream stream(83);
  for (int i = 0; i < 200; ++i) {
    const Kinematics k = stream.kinematics();
    const PhasePair ph = stream.phases();
    const CMat4 sum_s = spin_sum(Kind::S, k, ph, DualKind::dirac);
    const CMat4 sum_a = spin_sum(Kind::A, k, ph, DualKind::dirac);
    const CMat4 G = gamma_from_spin_sums(k, ph).matrix;
    const CMat4 rebuilt = cplx(1.0 / (2.0 * k.m)) * (sum_s - sum_a);
    CHECK(max_abs_diff(G, rebuilt) < 1e-12 * std::max(1.0, G.max_abs()));
  }
}

TEST_CASE("new-dual spin sums act as +-2m projectors onto their kind") {
  SampleStream stream(89);
  for (int i = 0; i < 200; ++i) {
    const Kinematics k = stream.kinematics();
    const PhasePair ph = stream.phases();
    const CMat4 sum_s = spin_sum(Kind::S, k, ph, DualKind::flag_dipole);
    const CMat4 sum_a = spin_sum(Kind::A, k, ph, DualKind::flag_dipole);

    for (const auto& s : build_family(k, ph)) {
      const double sc = 2.0 * k.m * s.psi.max_abs();
      const cplx own = s.label.kind == Kind::S ? 2.0 * k.m : -2.0 * k.m;
      const CMat4& matching = s.label.kind == Kind::S ? sum_s : sum_a;
      const CMat4& other = s.label.kind == Kind::S ? sum_a : sum_s;
      CHECK(max_abs_diff(matching * s.psi, own * s.psi) < 1e-10 * sc);
      CHECK((other * s.psi).max_abs() < 1e-10 * sc);
    }
  }
}

TEST_CASE("context mismatch between spinor and operator is rejected") {
  const auto s = build_spinor({Kind::S, Helicity::PlusMinus}, kRef, kRefPhases);
  const GammaOperator other_point =
      gamma_from_spin_sums(Kinematics(1.0, 0.5, M_PI / 2, 0.0), kRefPhases);
  CHECK_THROWS_AS(flag_dipole_dual(s, other_point), MismatchedContext);

  const GammaOperator other_phases =
      gamma_from_spin_sums(kRef, PhasePair(cplx(2.0), cplx(0.4)));
  CHECK_THROWS_AS(flag_dipole_dual(s, other_phases), MismatchedContext);
}

TEST_CASE("boost covariance holds; scrambled transport does not") {
  SampleStream stream(97);
  for (int i = 0; i < 200; ++i) {
    const Kinematics k = stream.kinematics();
    const PhasePair ph = stream.phases();
    CHECK(gamma_boost_covariance_check(k, ph) < 1e-10);
  }

  // Transporting an operator built from different phases must show up.
  const Kinematics k = kRef;
  const PhasePair scrambled(cplx(1.7) * kRefPhases.beta_plus,
                            kRefPhases.beta_minus / cplx(1.6));
  const CMat4 right = gamma_from_spin_sums(k, kRefPhases).matrix;
  const CMat4 wrong = boost_matrix(k) *
                      gamma_from_spin_sums(k.rest(), scrambled).matrix *
                      inverse(boost_matrix(k));
  CHECK(max_abs_diff(right, wrong) / std::max(1.0, right.max_abs()) > 1e-3);
}

TEST_CASE("unit-modulus phases keep the involution: no degeneracy trip") {
  SampleStream stream(101);
  for (int i = 0; i < 100; ++i) {
    const Kinematics k = stream.kinematics();
    const PhasePair boundary = stream.boundary_phases();
    CHECK(boundary.degenerate());
    const CMat4 G = gamma_from_spin_sums(k, boundary).matrix;  // must not throw
    CHECK(max_abs_diff(G * G, CMat4::identity()) < 1e-10 * std::max(1.0, G.max_abs()));
  }
}
