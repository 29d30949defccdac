#pragma once

// Gauss-Legendre rules and the product quadrature on spheres used for all
// spectral projections: Gauss-Legendre in cos(theta) (exact for spherical
// harmonic products up to the band limit) and a uniform trapezoid rule in
// phi (exact per azimuthal order below the sample count).

#include <cmath>
#include <functional>
#include <vector>

#include "gibc/spherical_harmonics.hpp"

namespace gibc {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on [-1, 1] by Newton iteration on P_n.
inline QuadratureRule gauss_legendre(int n) {
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * pp * pp);
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

/// Mapped Gauss-Legendre rule on [a, b].
inline QuadratureRule gauss_legendre(int n, double a, double b) {
  QuadratureRule rule = gauss_legendre(n);
  for (int i = 0; i < n; ++i) {
    rule.nodes[i] = 0.5 * (a + b) + 0.5 * (b - a) * rule.nodes[i];
    rule.weights[i] *= 0.5 * (b - a);
  }
  return rule;
}

/// Product grid on the radius-r sphere.  Weights carry the full surface
/// measure r^2 sin(theta) dtheta dphi.
struct SphereGrid {
  std::vector<double> theta, phi;        // node angles
  std::vector<double> theta_w;           // GL weights in mu = cos(theta)
  double phi_w = 0.0;                    // uniform phi weight
  double radius = 1.0;

  int n_theta() const { return static_cast<int>(theta.size()); }
  int n_phi() const { return static_cast<int>(phi.size()); }

  /// ds weight of node (i, j).
  double weight(int i, int /*j*/) const { return theta_w[i] * phi_w * radius * radius; }

  /// Integrate f(theta, phi, point) over the sphere.
  template <typename F>
  Complex integrate(F&& f) const {
    Complex acc = 0.0;
    for (int i = 0; i < n_theta(); ++i)
      for (int j = 0; j < n_phi(); ++j) acc += weight(i, j) * f(theta[i], phi[j]);
    return acc;
  }
};

/// Grid resolving spherical-harmonic products of degree <= band: GL in
/// cos(theta) with 2*band+2 nodes, 4*band+4 uniform phi samples.
inline SphereGrid sphere_grid(int band, double radius) {
  SphereGrid g;
  g.radius = radius;
  const int nt = 2 * band + 2;
  const int np = 4 * band + 4;
  QuadratureRule gl = gauss_legendre(nt);
  g.theta.resize(nt);
  g.theta_w = gl.weights;
  for (int i = 0; i < nt; ++i) g.theta[i] = std::acos(gl.nodes[i]);
  g.phi.resize(np);
  for (int j = 0; j < np; ++j) g.phi[j] = 2.0 * kPi * j / np;
  g.phi_w = 2.0 * kPi / np;
  return g;
}

}  // namespace gibc
