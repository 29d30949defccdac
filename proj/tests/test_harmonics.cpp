#include <catch2/catch_amalgamated.hpp>
#include <cmath>

#include "gibc/modes.hpp"
#include "gibc/quadrature.hpp"
#include "gibc/spherical_harmonics.hpp"
#include "test_helpers.hpp"

using namespace gibc;

TEST_CASE("scalar harmonic reference values") {
  CHECK(std::abs(ylm(0, 0, 0.3, 1.2) - Complex(0.282094791773878, 0.0)) < 1e-14);
  CHECK(std::abs(ylm(1, 0, 0.0, 0.0) - Complex(0.488602511902920, 0.0)) < 1e-14);
  // Condon-Shortley: Y_1^1 = -sqrt(3/8pi) sin(theta) e^{i phi}
  const double th = 0.9, ph = 0.4;
  const Complex y11 = ylm(1, 1, th, ph);
  const Complex ref = -std::sqrt(3.0 / (8.0 * kPi)) * std::sin(th) * std::exp(Complex(0.0, ph));
  CHECK(std::abs(y11 - ref) < 1e-14);
  CHECK_THROWS_AS(ylm(2, 3, 0.1, 0.1), std::domain_error);
}

TEST_CASE("scalar harmonics are orthonormal under quadrature") {
  const int N = 5;
  SphereGrid grid = sphere_grid(N + 1, 1.0);
  // Gram matrix over all (n, m) with n <= N, including n = 0
  std::vector<std::pair<int, int>> modes;
  for (int n = 0; n <= N; ++n)
    for (int m = -n; m <= n; ++m) modes.emplace_back(n, m);
  for (size_t p = 0; p < modes.size(); ++p) {
    for (size_t q = p; q < modes.size(); ++q) {
      Complex g = grid.integrate([&](double th, double ph) {
        return ylm(modes[p].first, modes[p].second, th, ph) *
               std::conj(ylm(modes[q].first, modes[q].second, th, ph));
      });
      const double expect = (p == q) ? 1.0 : 0.0;
      CHECK(std::abs(g - expect) < 1e-10);
    }
  }
}

TEST_CASE("vector harmonics: tangentiality and pointwise rotation") {
  for (int n : {1, 2, 5}) {
    for (int m = -n; m <= n; ++m) {
      const ModeIndex mode{n, m};
      for (double th : {0.2, 1.1, 2.7}) {
        for (double ph : {0.0, 0.8, 4.1}) {
          const double a = 1.7;
          const CVec3 U = vsh_eval(Polarization::GradType, mode, th, ph, a);
          const CVec3 V = vsh_eval(Polarization::CurlType, mode, th, ph, a);
          const Vec3 nu = sph_unit_r(th, ph);
          CHECK(std::abs(vec::dot(U, nu)) < 1e-14);
          CHECK(std::abs(vec::dot(V, nu)) < 1e-14);
          // nu x U = V and nu x V = -U
          const CVec3 nxu = vec::cross(nu, U);
          const CVec3 nxv = vec::cross(nu, V);
          for (int k = 0; k < 3; ++k) {
            CHECK(std::abs(nxu[k] - V[k]) < 1e-12);
            CHECK(std::abs(nxv[k] + U[k]) < 1e-12);
          }
        }
      }
    }
  }
}

TEST_CASE("U_1^0 direction from analytic differentiation") {
  // Y_1^0 = sqrt(3/4pi) cos(theta): grad_Gamma Y = -sqrt(3/4pi) sin(theta)/a that,
  // so U_1^0 = -sqrt(3/8pi) sin(theta) that / a  (normalization sqrt(n(n+1)) = sqrt 2).
  const double a = 2.0;
  for (double th : {0.4, 1.3, 2.2}) {
    const double ph = 0.6;
    const CVec3 U = vsh_eval(Polarization::GradType, ModeIndex{1, 0}, th, ph, a);
    const Vec3 that = sph_unit_theta(th, ph);
    const double coeff = -std::sqrt(3.0 / (8.0 * kPi)) * std::sin(th) / a;
    for (int k = 0; k < 3; ++k) CHECK(std::abs(U[k] - coeff * that[k]) < 1e-13);
  }
  // cross-check against surface finite differences of Y_1^0 along theta
  const double h = 1e-6, th = 1.0;
  const double dYdth =
      (ylm(1, 0, th + h, 0.0).real() - ylm(1, 0, th - h, 0.0).real()) / (2.0 * h);
  const CVec3 U = vsh_eval(Polarization::GradType, ModeIndex{1, 0}, th, 0.0, a);
  const Vec3 that = sph_unit_theta(th, 0.0);
  CHECK(std::abs(vec::dot(U, that).real() - dYdth / (a * std::sqrt(2.0))) < 1e-8);
}

TEST_CASE("vector harmonic Gram matrix is the identity") {
  const int N = 4;
  const double a = 1.3;
  SphereGrid grid = sphere_grid(N + 2, a);
  std::vector<std::pair<Polarization, ModeIndex>> basis;
  for (int n = 1; n <= N; ++n)
    for (int m = -n; m <= n; ++m) {
      basis.push_back({Polarization::GradType, ModeIndex{n, m}});
      basis.push_back({Polarization::CurlType, ModeIndex{n, m}});
    }
  for (size_t p = 0; p < basis.size(); ++p) {
    for (size_t q = p; q < basis.size(); ++q) {
      Complex g = grid.integrate([&](double th, double ph) {
        const CVec3 u = vsh_eval(basis[p].first, basis[p].second, th, ph, a);
        const CVec3 v = vsh_eval(basis[q].first, basis[q].second, th, ph, a);
        return u[0] * std::conj(v[0]) + u[1] * std::conj(v[1]) + u[2] * std::conj(v[2]);
      });
      const double expect = (p == q) ? 1.0 : 0.0;
      CHECK(std::abs(g - expect) < 1e-10);
    }
  }
}

TEST_CASE("pole evaluation is finite and matches nearby values") {
  for (double th0 : {0.0, kPi}) {
    const CVec3 U = vsh_eval(Polarization::GradType, ModeIndex{3, 1}, th0, 0.7, 1.0);
    for (auto c : U) CHECK(std::isfinite(c.real()));
    const CVec3 Un = vsh_eval(Polarization::GradType, ModeIndex{3, 1},
                              th0 == 0.0 ? 1e-7 : kPi - 1e-7, 0.7, 1.0);
    for (int k = 0; k < 3; ++k) CHECK(std::abs(U[k] - Un[k]) < 1e-5);
  }
}

TEST_CASE("field evaluate/project round trip") {
  const int N = 6;
  const double a = 0.8;
  SpectralTangentField u = test::random_field(N, a);
  auto f = [&](double th, double ph) { return u.evaluate(th, ph); };
  SpectralTangentField v = project_onto_modes(f, N, a);
  u.for_each_mode([&](const ModeIndex& mode) {
    CHECK(std::abs(u.alpha(mode) - v.alpha(mode)) < 1e-11);
    CHECK(std::abs(u.beta(mode) - v.beta(mode)) < 1e-11);
  });
}
