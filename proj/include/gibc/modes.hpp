#pragma once

// SpectralTangentField: a truncated vector-spherical-harmonic coefficient
// set representing a tangential field on the radius-a sphere,
//
//   u = sum_{n=1..N} sum_{|m|<=n}  alpha_{nm} U_n^m + beta_{nm} V_n^m.
//
// Because the basis is L2-orthonormal, the same container also holds dual
// data (functionals) through the L2_t pivot: pairing(f, v) contracts f
// against conj(v) coefficientwise.

#include <complex>
#include <functional>
#include <stdexcept>
#include <vector>

#include "gibc/quadrature.hpp"
#include "gibc/spherical_harmonics.hpp"

namespace gibc {

enum class FieldNorm { L2, H1Curl, H1Div, Hm12Curl };

class SpectralTangentField {
 public:
  SpectralTangentField() = default;
  SpectralTangentField(int n_max, double radius)
      : n_max_(n_max), radius_(radius), alpha_(size_for(n_max)), beta_(size_for(n_max)) {
    if (n_max < 1) throw std::domain_error("SpectralTangentField: N_max must be >= 1");
    if (!(radius > 0.0)) throw std::domain_error("SpectralTangentField: radius must be positive");
  }

  static int size_for(int n_max) { return n_max * (n_max + 2); }
  static int index(const ModeIndex& mode) { return mode.n * mode.n - 1 + mode.m + mode.n; }

  int n_max() const { return n_max_; }
  double radius() const { return radius_; }
  int size() const { return static_cast<int>(alpha_.size()); }

  Complex& alpha(const ModeIndex& mode) { return alpha_[index(mode)]; }
  Complex& beta(const ModeIndex& mode) { return beta_[index(mode)]; }
  Complex alpha(const ModeIndex& mode) const { return alpha_[index(mode)]; }
  Complex beta(const ModeIndex& mode) const { return beta_[index(mode)]; }
  Complex coeff(Polarization pol, const ModeIndex& mode) const {
    return pol == Polarization::GradType ? alpha(mode) : beta(mode);
  }

  /// Visit all modes in the canonical order (n ascending, m ascending).
  template <typename F>
  void for_each_mode(F&& f) const {
    for (int n = 1; n <= n_max_; ++n)
      for (int m = -n; m <= n; ++m) f(ModeIndex{n, m});
  }

  SpectralTangentField& operator+=(const SpectralTangentField& o) {
    require_compatible(o);
    for (int i = 0; i < size(); ++i) {
      alpha_[i] += o.alpha_[i];
      beta_[i] += o.beta_[i];
    }
    return *this;
  }
  SpectralTangentField& operator*=(Complex c) {
    for (int i = 0; i < size(); ++i) {
      alpha_[i] *= c;
      beta_[i] *= c;
    }
    return *this;
  }
  friend SpectralTangentField operator+(SpectralTangentField a, const SpectralTangentField& b) {
    a += b;
    return a;
  }
  friend SpectralTangentField operator*(Complex c, SpectralTangentField a) {
    a *= c;
    return a;
  }

  void require_compatible(const SpectralTangentField& o) const {
    if (o.n_max_ != n_max_ || o.radius_ != radius_)
      throw std::invalid_argument("SpectralTangentField: incompatible index sets");
  }

  double norm(FieldNorm kind) const {
    double acc = 0.0;
    const double a2 = radius_ * radius_;
    for_each_mode([&](const ModeIndex& mode) {
      const double lap = mode.n * (mode.n + 1.0);
      const double sa = std::norm(alpha(mode));
      const double sb = std::norm(beta(mode));
      switch (kind) {
        case FieldNorm::L2:
          acc += sa + sb;
          break;
        case FieldNorm::H1Curl:
          acc += sa + sb + (lap / a2) * sb;
          break;
        case FieldNorm::H1Div:
          acc += sa + sb + (lap / a2) * sa;
          break;
        case FieldNorm::Hm12Curl: {
          const double w = 1.0 / std::sqrt(1.0 + lap);
          acc += w * (sa + sb) + w * (lap / a2) * sb;
          break;
        }
      }
    });
    return std::sqrt(acc);
  }

  double max_abs_coeff() const {
    double m = 0.0;
    for (int i = 0; i < size(); ++i)
      m = std::max({m, std::abs(alpha_[i]), std::abs(beta_[i])});
    return m;
  }

  /// Largest magnitude over the coefficients of one degree.
  double degree_max(int n) const {
    double m = 0.0;
    for (int mm = -n; mm <= n; ++mm) {
      const ModeIndex mode{n, mm};
      m = std::max({m, std::abs(alpha(mode)), std::abs(beta(mode))});
    }
    return m;
  }

  /// Evaluate the represented field at a surface point.
  CVec3 evaluate(double theta, double phi) const {
    CVec3 out{0.0, 0.0, 0.0};
    LegendreTable P(n_max_, theta);
    const Vec3 that = sph_unit_theta(theta, phi);
    const Vec3 phat = sph_unit_phi(theta, phi);
    for_each_mode([&](const ModeIndex& mode) {
      const Complex ca = alpha(mode);
      const Complex cb = beta(mode);
      if (ca == 0.0 && cb == 0.0) return;
      const VshAngular ang = vsh_angular(P, mode, phi);
      const double scale = 1.0 / (radius_ * std::sqrt(double(mode.n) * (mode.n + 1)));
      const Complex ip(0.0, ang.pi);
      const Complex ct = (ca * ang.tau - cb * ip) * ang.phase * scale;
      const Complex cp = (ca * ip + cb * ang.tau) * ang.phase * scale;
      for (int k = 0; k < 3; ++k) out[k] += ct * that[k] + cp * phat[k];
    });
    return out;
  }

 private:
  int n_max_ = 1;
  double radius_ = 1.0;
  std::vector<Complex> alpha_, beta_;
};

/// L2_t-pivot duality pairing: sum over modes of coefficient products with
/// conjugation on v.
inline Complex pairing(const SpectralTangentField& f, const SpectralTangentField& v) {
  f.require_compatible(v);
  Complex acc = 0.0;
  f.for_each_mode([&](const ModeIndex& mode) {
    acc += f.alpha(mode) * std::conj(v.alpha(mode)) + f.beta(mode) * std::conj(v.beta(mode));
  });
  return acc;
}

/// Project a pointwise tangential field onto the truncated basis by sphere
/// quadrature.  `field(theta, phi)` returns a Cartesian complex 3-vector on
/// the radius-a sphere.
inline SpectralTangentField project_onto_modes(
    const std::function<CVec3(double, double)>& field, int n_max, double radius,
    const SphereGrid& grid) {
  SpectralTangentField out(n_max, radius);
  const int nt = grid.n_theta(), np = grid.n_phi();
  // cache field samples and per-node Legendre tables
  std::vector<CVec3> samples(static_cast<size_t>(nt) * np);
  for (int i = 0; i < nt; ++i)
    for (int j = 0; j < np; ++j) samples[i * np + j] = field(grid.theta[i], grid.phi[j]);

  for (int i = 0; i < nt; ++i) {
    LegendreTable P(n_max, grid.theta[i]);
    const double theta = grid.theta[i];
    for (int j = 0; j < np; ++j) {
      const double phi = grid.phi[j];
      const double w = grid.weight(i, j);
      const Vec3 that = sph_unit_theta(theta, phi);
      const Vec3 phat = sph_unit_phi(theta, phi);
      const CVec3& fv = samples[i * np + j];
      const Complex ft = fv[0] * that[0] + fv[1] * that[1] + fv[2] * that[2];
      const Complex fp = fv[0] * phat[0] + fv[1] * phat[1] + fv[2] * phat[2];
      out.for_each_mode([&](const ModeIndex& mode) {
        const VshAngular ang = vsh_angular(P, mode, phi);
        const double scale = 1.0 / (radius * std::sqrt(double(mode.n) * (mode.n + 1)));
        const Complex ip(0.0, ang.pi);
        // conj(U) . f and conj(V) . f
        const Complex cu = std::conj(ang.tau * ang.phase * scale) * ft +
                           std::conj(ip * ang.phase * scale) * fp;
        const Complex cv = std::conj(-ip * ang.phase * scale) * ft +
                           std::conj(ang.tau * ang.phase * scale) * fp;
        out.alpha(mode) += w * cu;
        out.beta(mode) += w * cv;
      });
    }
  }
  return out;
}

inline SpectralTangentField project_onto_modes(
    const std::function<CVec3(double, double)>& field, int n_max, double radius) {
  return project_onto_modes(field, n_max, radius, sphere_grid(n_max + 2, radius));
}

/// Default spectral truncation for frequency omega and radius a
/// (multipole heuristic, exposed as a config override).
inline int default_truncation(double omega, double a) {
  const double x = omega * a;
  return static_cast<int>(std::ceil(x + 6.0 * std::cbrt(x) + 8.0));
}

}  // namespace gibc
