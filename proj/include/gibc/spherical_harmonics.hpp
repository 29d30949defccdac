#pragma once

// Orthonormal scalar spherical harmonics Y_n^m (Condon-Shortley phase,
// unit L2 norm on the unit sphere) and the tangential vector harmonics
//
//   U_n^m = grad_Gamma Y_n^m / sqrt(n(n+1)),   V_n^m = nu x U_n^m,
//
// which form an L2-orthonormal basis of tangential fields on a sphere of
// any radius.  The theta-derivative and m/sin(theta) factors are built
// from shifted-order Legendre identities, so evaluation is finite at the
// poles (needed for exact forward/backscatter directions).

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "gibc/bessel.hpp"

namespace gibc {

inline constexpr double kPi = 3.14159265358979323846;

struct ModeIndex {
  int n = 1;  // degree >= 1
  int m = 0;  // order, |m| <= n
};

inline void check_mode(const ModeIndex& mode) {
  if (mode.n < 1) throw std::domain_error("ModeIndex: degree must be >= 1");
  if (std::abs(mode.m) > mode.n) throw std::domain_error("ModeIndex: |m| <= n required");
}

enum class Polarization { GradType, CurlType };

/// Normalized associated Legendre values Pbar_n^m(cos theta) for
/// 0 <= m <= n <= nmax, with int_0^pi 2*pi*Pbar^2 sin = 1.  Row-major
/// triangle: entry(n, m).
class LegendreTable {
 public:
  LegendreTable(int nmax, double theta) : nmax_(nmax) {
    if (nmax < 0) throw std::domain_error("LegendreTable: negative degree");
    values_.assign((nmax + 1) * (nmax + 2) / 2, 0.0);
    const double mu = std::cos(theta);
    const double s = std::sin(theta);
    at(0, 0) = 1.0 / std::sqrt(4.0 * kPi);
    for (int m = 1; m <= nmax; ++m)
      at(m, m) = -std::sqrt((2.0 * m + 1.0) / (2.0 * m)) * s * at(m - 1, m - 1);
    for (int m = 0; m < nmax; ++m) at(m + 1, m) = std::sqrt(2.0 * m + 3.0) * mu * at(m, m);
    for (int m = 0; m <= nmax; ++m) {
      for (int n = m + 2; n <= nmax; ++n) {
        const double a = std::sqrt((4.0 * n * n - 1.0) / (double(n) * n - double(m) * m));
        const double ap =
            std::sqrt((4.0 * (n - 1.0) * (n - 1.0) - 1.0) / ((n - 1.0) * (n - 1.0) - double(m) * m));
        at(n, m) = a * (mu * at(n - 1, m) - at(n - 2, m) / ap);
      }
    }
  }

  /// Pbar_n^m for any sign of m (Pbar_n^{-m} = (-1)^m Pbar_n^m).
  double operator()(int n, int m) const {
    const int am = std::abs(m);
    if (n < 0 || n > nmax_ || am > n) return 0.0;
    const double v = values_[n * (n + 1) / 2 + am];
    return (m < 0 && (am & 1)) ? -v : v;
  }

  /// d/dtheta Pbar_n^m, pole-safe shifted-order form.
  double dtheta(int n, int m) const {
    const auto& P = *this;
    return 0.5 * (std::sqrt(double(n - m) * (n + m + 1)) * P(n, m + 1) -
                  std::sqrt(double(n + m) * (n - m + 1)) * P(n, m - 1));
  }

  /// m * Pbar_n^m / sin(theta), pole-safe shifted-degree form.
  double m_over_sin(int n, int m) const {
    const auto& P = *this;
    if (m == 0) return 0.0;
    const double c = -0.5 * std::sqrt((2.0 * n + 1.0) / (2.0 * n - 1.0));
    return c * (std::sqrt(double(n - m) * (n - m - 1)) * P(n - 1, m + 1) +
                std::sqrt(double(n + m) * (n + m - 1)) * P(n - 1, m - 1));
  }

  int nmax() const { return nmax_; }

 private:
  double& at(int n, int m) { return values_[n * (n + 1) / 2 + m]; }
  int nmax_;
  std::vector<double> values_;
};

/// Fully normalized Y_n^m(theta, phi).
inline Complex ylm(int n, int m, double theta, double phi) {
  if (n < 0) throw std::domain_error("ylm: negative degree");
  if (std::abs(m) > n) throw std::domain_error("ylm: |m| > n");
  LegendreTable P(n, theta);
  return P(n, m) * std::exp(Complex(0.0, m * phi));
}

using Vec3 = std::array<double, 3>;
using CVec3 = std::array<Complex, 3>;

inline Vec3 sph_unit_r(double theta, double phi) {
  return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}
inline Vec3 sph_unit_theta(double theta, double phi) {
  return {std::cos(theta) * std::cos(phi), std::cos(theta) * std::sin(phi), -std::sin(theta)};
}
inline Vec3 sph_unit_phi(double /*theta*/, double phi) { return {-std::sin(phi), std::cos(phi), 0.0}; }

/// Angular factors of one tangential mode at a point:
///   U = (tau * that + i*pi * phat) * e^{im phi} / (a sqrt(n(n+1)))
///   V = (-i*pi * that + tau * phat) * e^{im phi} / (a sqrt(n(n+1)))
/// where tau = dPbar/dtheta and pi = m Pbar / sin(theta).
struct VshAngular {
  double tau = 0.0;
  double pi = 0.0;
  Complex phase{1.0, 0.0};
};

inline VshAngular vsh_angular(const LegendreTable& P, const ModeIndex& mode, double phi) {
  VshAngular a;
  a.tau = P.dtheta(mode.n, mode.m);
  a.pi = P.m_over_sin(mode.n, mode.m);
  a.phase = std::exp(Complex(0.0, mode.m * phi));
  return a;
}

/// U_n^m or V_n^m at a surface point of the radius-a sphere, as a complex
/// Cartesian 3-vector.  Tangential by construction; unit L2(S_a) norm.
inline CVec3 vsh_eval(Polarization pol, const ModeIndex& mode, double theta, double phi, double a) {
  check_mode(mode);
  if (!(a > 0.0)) throw std::domain_error("vsh_eval: radius must be positive");
  LegendreTable P(mode.n, theta);
  const VshAngular ang = vsh_angular(P, mode, phi);
  const double scale = 1.0 / (a * std::sqrt(double(mode.n) * (mode.n + 1)));
  const Vec3 that = sph_unit_theta(theta, phi);
  const Vec3 phat = sph_unit_phi(theta, phi);
  Complex ct, cp;
  if (pol == Polarization::GradType) {
    ct = ang.tau * ang.phase * scale;
    cp = Complex(0.0, 1.0) * ang.pi * ang.phase * scale;
  } else {
    ct = Complex(0.0, -1.0) * ang.pi * ang.phase * scale;
    cp = ang.tau * ang.phase * scale;
  }
  CVec3 out;
  for (int k = 0; k < 3; ++k) out[k] = ct * that[k] + cp * phat[k];
  return out;
}

}  // namespace gibc
