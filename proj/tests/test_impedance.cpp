#include <catch2/catch_amalgamated.hpp>
#include <cmath>

#include "gibc/calderon.hpp"
#include "gibc/impedance.hpp"
#include "test_helpers.hpp"

using namespace gibc;

TEST_CASE("impedance eigenvalues") {
  // multiplication operator
  auto s = ImpedanceModel::scalar(Complex(2.0, -0.5));
  for (int n : {1, 3, 9}) {
    auto z = impedance_eigenvalues(s, n, 1.4);
    CHECK(z.z_u == Complex(2.0, -0.5));
    CHECK(z.z_v == Complex(2.0, -0.5));
  }

  auto f = ImpedanceModel::full_second_order(1.0, 2.0, -3.0);
  auto z = impedance_eigenvalues(f, 1, 1.0);
  CHECK(std::abs(z.z_u - Complex(7.0, 0.0)) < 1e-15);
  CHECK(std::abs(z.z_v - Complex(5.0, 0.0)) < 1e-15);

  // the curl part annihilates gradient modes
  auto c = ImpedanceModel::curl_only(Complex(0.3, 0.7), Complex(5.0, 1.0));
  for (int n : {1, 2, 7}) CHECK(impedance_eigenvalues(c, n, 2.0).z_u == Complex(0.3, 0.7));
}

TEST_CASE("thin-coating preset resolves to curl-only coefficients") {
  auto m = ImpedanceModel::thin_coating(0.01, Complex(1.0, 0.0), Complex(1.0, 0.0), 1.0);
  // independent hand computation: lambda = -i*1*1*0.01, eta = i*0.01/(1*1)
  CHECK(std::abs(m.lambda() - Complex(0.0, -0.01)) < 1e-18);
  CHECK(std::abs(m.eta() - Complex(0.0, 0.01)) < 1e-18);
  CHECK(m.has_eta());
  CHECK(!m.has_gamma());
}

TEST_CASE("sign-condition checks select routes") {
  auto ok41 = hypothesis_check(
      ImpedanceModel::full_second_order(1.0, Complex(1.0, 1.0), Complex(-1.0, -1.0)));
  CHECK(ok41.uniqueness_ok);
  CHECK(ok41.existence_route == ExistenceRoute::SurfaceCoercive);
  CHECK(ok41.violated_conditions.empty());

  auto bad41 = hypothesis_check(
      ImpedanceModel::full_second_order(1.0, Complex(1.0, 1.0), Complex(-1.0, 1.0)));
  CHECK(bad41.uniqueness_ok);  // real-part conditions still hold
  CHECK(bad41.existence_route == ExistenceRoute::None);
  REQUIRE(bad41.violated_conditions.size() == 1);
  CHECK(bad41.violated_conditions[0] == "Im(eta), Im(gamma) of opposite sign");

  auto div = hypothesis_check(ImpedanceModel::div_only(Complex(0.0, 1.0), Complex(0.0, -1.0)));
  CHECK(div.uniqueness_ok);
  CHECK(div.existence_route == ExistenceRoute::VolumeThdiv);

  // curl-only: same-sign imaginary parts are coercive, opposite signs go
  // through the gradient/complement splitting
  auto same = hypothesis_check(ImpedanceModel::curl_only(Complex(1.0, 1.0), Complex(1.0, 2.0)));
  CHECK(same.existence_route == ExistenceRoute::SurfaceCoercive);
  auto opp = hypothesis_check(ImpedanceModel::curl_only(Complex(1.0, 1.0), Complex(1.0, -2.0)));
  CHECK(opp.existence_route == ExistenceRoute::SurfaceHelmholtz);

  auto neg = hypothesis_check(ImpedanceModel::scalar(Complex(-1.0, 0.0)));
  CHECK(!neg.uniqueness_ok);
}

TEST_CASE("Re<Zu,u> is nonnegative for models passing the uniqueness condition") {
  const int N = 12;
  std::vector<ImpedanceModel> models = {
      ImpedanceModel::scalar(Complex(1.0, 0.5)),
      ImpedanceModel::curl_only(Complex(0.5, -1.0), Complex(2.0, 3.0)),
      ImpedanceModel::div_only(Complex(0.0, 1.0), Complex(0.0, -1.0)),
      ImpedanceModel::full_second_order(Complex(1.0, 2.0), Complex(1.0, 1.0), Complex(-1.0, -1.0)),
      ImpedanceModel::thin_coating(0.01, Complex(-2.0, 0.1), Complex(1.0, 0.0), 1.0),
  };
  for (const auto& m : models) {
    REQUIRE(hypothesis_check(m).uniqueness_ok);
    for (int trial = 0; trial < 100; ++trial) {
      SpectralTangentField u = test::random_field(N, 1.0);
      const Complex p = pairing(apply_impedance(m, u), u);
      const double l2 = u.norm(FieldNorm::L2);
      CHECK(p.real() >= -1e-12 * l2 * l2);
    }
  }
}

TEST_CASE("pairing behaves sesquilinearly and vanishes on zero") {
  const int N = 5;
  SpectralTangentField u = test::random_field(N, 1.0);
  SpectralTangentField v = test::random_field(N, 1.0);
  SpectralTangentField zero(N, 1.0);
  auto m = ImpedanceModel::scalar(Complex(0.3, 0.8));
  const SpectralTangentField Au = apply_impedance(m, u);
  CHECK(pairing(Au, zero) == Complex(0.0, 0.0));
  const Complex c(1.3, -0.4);
  CHECK(std::abs(pairing(Au, c * v) - std::conj(c) * pairing(Au, v)) < 1e-13);

  // Scalar(0) maps everything to zero
  const SpectralTangentField z = apply_impedance(ImpedanceModel::scalar(0.0), u);
  CHECK(z.max_abs_coeff() == 0.0);

  // radius mismatch is a parameter error
  SpectralTangentField w(N, 2.0);
  CHECK_THROWS_AS(pairing(Au, w), std::invalid_argument);
}

TEST_CASE("impedance eigenvalues confirmed by mode application") {
  SpectralTangentField u(3, 1.0);
  u.alpha(ModeIndex{1, 0}) = 1.0;
  auto out = apply_impedance(ImpedanceModel::full_second_order(1.0, 2.0, -3.0), u);
  CHECK(std::abs(out.alpha(ModeIndex{1, 0}) - Complex(7.0, 0.0)) < 1e-15);
  CHECK(out.beta(ModeIndex{1, 0}) == Complex(0.0, 0.0));
}
