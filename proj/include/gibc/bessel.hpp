#pragma once

// Spherical Bessel functions j_n, y_n and outgoing Hankel functions
// h_n = j_n + i*y_n of real positive argument, plus the Riccati-Bessel
// derivatives d/dx [x z_n(x)] used by the Calderon blocks and the Mie
// series.  j_n uses Miller's downward recurrence (normalized against
// j_0/j_1) when the order exceeds the argument; y_n always recurses
// upward, which is stable because y is the dominant solution.

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace gibc {

using Complex = std::complex<double>;

/// Hard cap on the supported degree.
inline constexpr int kMaxBesselDegree = 200;

enum class BesselKind { J, Y, H1 };

namespace detail {

inline void check_bessel_args(int n, double x) {
  if (!(x > 0.0)) throw std::domain_error("sph_bessel: argument must be positive");
  if (n < 0) throw std::domain_error("sph_bessel: negative order");
  if (n > kMaxBesselDegree)
    throw std::out_of_range("sph_bessel: order " + std::to_string(n) +
                            " exceeds supported maximum " + std::to_string(kMaxBesselDegree));
}

}  // namespace detail

/// j_0..j_nmax by Miller's downward recurrence with rescaling.
inline std::vector<double> sph_bessel_j_array(int nmax, double x) {
  detail::check_bessel_args(nmax, x);
  std::vector<double> j(nmax + 1, 0.0);
  const double j0 = std::sin(x) / x;
  const double j1 = (std::sin(x) / x - std::cos(x)) / x;
  j[0] = j0;
  if (nmax == 0) return j;

  if (x > nmax + 0.5) {
    // upward is stable once the order is below the argument
    j[1] = j1;
    for (int n = 1; n < nmax; ++n) j[n + 1] = (2 * n + 1) / x * j[n] - j[n - 1];
    return j;
  }

  const int start = nmax + 16 + static_cast<int>(std::sqrt(40.0 * nmax));
  constexpr double kBig = 1e250, kSmall = 1e-250;
  double jp = 0.0, jc = 1.0;  // unnormalized trial values at orders start+1, start
  std::vector<double> raw(nmax + 2, 0.0);
  for (int n = start; n >= 1; --n) {
    const double jm = (2 * n + 1) / x * jc - jp;
    jp = jc;
    jc = jm;
    if (std::abs(jc) > kBig) {
      jc *= kSmall;
      jp *= kSmall;
      for (double& v : raw) v *= kSmall;
    }
    if (n - 1 <= nmax + 1) raw[n - 1] = jc;
  }
  // normalize against whichever anchor sits away from a zero of sin/cos
  const double scale = (std::abs(j0) >= std::abs(j1)) ? j0 / raw[0] : j1 / raw[1];
  for (int n = 0; n <= nmax; ++n) j[n] = raw[n] * scale;
  return j;
}

/// y_0..y_nmax by upward recurrence.  Entries that would overflow are
/// saturated to +/-inf; callers that need large orders should consult
/// max_stable_degree first.
inline std::vector<double> sph_bessel_y_array(int nmax, double x) {
  detail::check_bessel_args(nmax, x);
  std::vector<double> y(nmax + 1, 0.0);
  y[0] = -std::cos(x) / x;
  if (nmax == 0) return y;
  y[1] = -(std::cos(x) / x + std::sin(x)) / x;
  for (int n = 1; n < nmax; ++n) {
    y[n + 1] = (2 * n + 1) / x * y[n] - y[n - 1];
    if (!std::isfinite(y[n + 1])) {
      const double inf = std::numeric_limits<double>::infinity();
      y[n + 1] = (y[n] > 0 ? 1.0 : -1.0) * inf;
    }
  }
  return y;
}

/// Largest degree n <= nmax for which |y_n(x)| stays below 1e280 (so that
/// Hankel ratios remain representable).  Used to clamp spectral truncation.
inline int max_stable_degree(int nmax, double x) {
  auto y = sph_bessel_y_array(std::min(nmax, kMaxBesselDegree), x);
  for (int n = 0; n < static_cast<int>(y.size()); ++n)
    if (!(std::abs(y[n]) < 1e280)) return n - 1;
  return static_cast<int>(y.size()) - 1;
}

inline std::vector<Complex> sph_hankel1_array(int nmax, double x) {
  auto j = sph_bessel_j_array(nmax, x);
  auto y = sph_bessel_y_array(nmax, x);
  std::vector<Complex> h(nmax + 1);
  for (int n = 0; n <= nmax; ++n) h[n] = Complex(j[n], y[n]);
  return h;
}

inline Complex sph_bessel(BesselKind kind, int n, double x) {
  detail::check_bessel_args(n, x);
  switch (kind) {
    case BesselKind::J:
      return sph_bessel_j_array(n, x)[n];
    case BesselKind::Y:
      return sph_bessel_y_array(n, x)[n];
    case BesselKind::H1:
      return sph_hankel1_array(n, x)[n];
  }
  throw std::logic_error("sph_bessel: bad kind");
}

/// d/dx [x z_n(x)] via (x z_n)' = x z_{n-1} - n z_n  (z_{-1} := cos(x)/x for J,
/// i.e. (x j_0)' = cos x; the Y-partner is sin(x)/x).
inline Complex riccati_deriv(BesselKind kind, int n, double x) {
  detail::check_bessel_args(n, x);
  if (n == 0) {
    switch (kind) {
      case BesselKind::J:
        return std::cos(x);
      case BesselKind::Y:
        return std::sin(x);
      case BesselKind::H1:
        return Complex(std::cos(x), std::sin(x));
    }
  }
  const Complex zn = sph_bessel(kind, n, x);
  const Complex znm1 = sph_bessel(kind, n - 1, x);
  return x * znm1 - static_cast<double>(n) * zn;
}

/// Riccati-Bessel pair at a point: psi_n(x) = x j_n(x), xi_n(x) = x h_n^(1)(x)
/// and their derivatives, batched over degree.  This is the working set of
/// every per-degree boundary block.
struct RiccatiTable {
  std::vector<double> psi, psi_d;  // x j_n, (x j_n)'
  std::vector<Complex> xi, xi_d;   // x h_n, (x h_n)'
};

inline RiccatiTable riccati_table(int nmax, double x) {
  RiccatiTable t;
  auto j = sph_bessel_j_array(nmax, x);
  auto y = sph_bessel_y_array(nmax, x);
  t.psi.resize(nmax + 1);
  t.psi_d.resize(nmax + 1);
  t.xi.resize(nmax + 1);
  t.xi_d.resize(nmax + 1);
  for (int n = 0; n <= nmax; ++n) {
    t.psi[n] = x * j[n];
    t.xi[n] = x * Complex(j[n], y[n]);
    if (n == 0) {
      t.psi_d[n] = std::cos(x);
      t.xi_d[n] = Complex(std::cos(x), std::sin(x));
    } else {
      t.psi_d[n] = x * j[n - 1] - n * j[n];
      t.xi_d[n] = x * Complex(j[n - 1], y[n - 1]) - static_cast<double>(n) * Complex(j[n], y[n]);
    }
  }
  return t;
}

}  // namespace gibc
