#pragma once

// Incident fields and their projection onto the boundary data
//
//   f = -( nu x E^i  +  Z H^i_T )   on the radius-a sphere.
//
// Both incident kinds are closed-form solutions of
// curl H + i omega E = 0, curl E - i omega H = 0 in a neighbourhood of the
// sphere: a plane wave E = p e^{i omega x.d}, H = (d x p) e^{i omega x.d},
// and a point dipole (electric or, by the duality (E,H) -> (-H,E),
// magnetic).  The trace projection is done by sphere quadrature; for the
// canonical plane wave (d = z, p = x) a closed-form multipole expansion is
// also provided and the two must agree.

#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>

#include "gibc/calderon.hpp"
#include "gibc/impedance.hpp"
#include "gibc/modes.hpp"

namespace gibc {

struct EHPair {
  CVec3 E{0.0, 0.0, 0.0};
  CVec3 H{0.0, 0.0, 0.0};
};

namespace vec {

inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
inline CVec3 cross(const Vec3& a, const CVec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
inline CVec3 cross(const CVec3& a, const CVec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
inline Complex dot(const CVec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
inline double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
inline CVec3 operator*(Complex c, const CVec3& v) { return {c * v[0], c * v[1], c * v[2]}; }
inline CVec3 operator*(Complex c, const Vec3& v) { return {c * v[0], c * v[1], c * v[2]}; }
inline CVec3 operator+(const CVec3& a, const CVec3& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}
inline CVec3 operator-(const CVec3& a, const CVec3& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}
inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }
inline double norm(const CVec3& v) {
  return std::sqrt(std::norm(v[0]) + std::norm(v[1]) + std::norm(v[2]));
}

}  // namespace vec

struct IncidentField {
  enum class Kind { PlaneWave, Dipole };
  Kind kind = Kind::PlaneWave;
  double omega = 1.0;
  Vec3 direction{0.0, 0.0, 1.0};   // unit propagation direction d
  CVec3 polarization{1.0, 0.0, 0.0};  // p, with d.p = 0
  CVec3 moment{0.0, 0.0, 1.0};     // dipole moment
  Vec3 position{0.0, 0.0, 0.0};    // dipole location (inside the scatterer)
  bool magnetic_dipole = false;

  static IncidentField plane_wave(const Vec3& d, const CVec3& p, double omega) {
    IncidentField f;
    f.kind = Kind::PlaneWave;
    f.omega = omega;
    const double dn = vec::norm(d);
    if (!(dn > 0.0)) throw std::domain_error("plane_wave: zero direction");
    f.direction = {d[0] / dn, d[1] / dn, d[2] / dn};
    f.polarization = p;
    if (std::abs(vec::dot(p, f.direction)) > 1e-12 * (vec::norm(p) + 1e-300))
      throw std::domain_error("plane_wave: polarization must be orthogonal to direction");
    return f;
  }
  static IncidentField dipole(const CVec3& moment, const Vec3& position, double omega,
                              bool magnetic = false) {
    IncidentField f;
    f.kind = Kind::Dipole;
    f.omega = omega;
    f.moment = moment;
    f.position = position;
    f.magnetic_dipole = magnetic;
    return f;
  }

  EHPair evaluate(const Vec3& x) const {
    if (kind == Kind::PlaneWave) {
      const Complex ph = std::exp(Complex(0.0, omega * vec::dot(direction, x)));
      EHPair out;
      out.E = ph * polarization;
      const CVec3 dxp = vec::cross(Complex(1.0, 0.0) * direction, polarization);
      out.H = ph * dxp;
      return out;
    }
    return dipole_field(moment, position, omega, x, magnetic_dipole);
  }

  /// Point-dipole fields: for the electric dipole
  ///   H = w^2 (xh x p) (e^{iwr}/r) (1 - 1/(iwr))
  ///   E = w^2 (xh x p) x xh (e^{iwr}/r) + (3 xh (xh.p) - p)(1/r^3 - iw/r^2) e^{iwr}
  /// (an outgoing solution of the first-order system; the overall constant
  /// is immaterial).  The magnetic dipole is the dual pair (-H, E).
  static EHPair dipole_field(const CVec3& p, const Vec3& x0, double omega, const Vec3& x,
                             bool magnetic) {
    using namespace vec;
    const Vec3 rel{x[0] - x0[0], x[1] - x0[1], x[2] - x0[2]};
    const double r = norm(rel);
    if (!(r > 0.0)) throw std::domain_error("dipole_field: evaluation at the source point");
    const Vec3 xh{rel[0] / r, rel[1] / r, rel[2] / r};
    const Complex i(0.0, 1.0);
    const Complex eikr = std::exp(i * omega * r);
    const CVec3 xh_x_p = cross(xh, p);
    const Complex px = dot(p, xh);
    CVec3 trans = cross(xh_x_p, CVec3{xh[0], xh[1], xh[2]});  // (xh x p) x xh
    const CVec3 longit = (3.0 * px) * xh - p;
    EHPair dip;
    dip.H = (omega * omega * eikr / r * (1.0 - 1.0 / (i * omega * r))) * xh_x_p;
    dip.E = (omega * omega * eikr / r) * trans +
            (Complex(1.0 / (r * r * r), 0.0) - i * omega / (r * r)) * eikr * longit;
    if (!magnetic) return dip;
    EHPair out;
    out.E = Complex(-1.0, 0.0) * dip.H;
    out.H = dip.E;
    return out;
  }
};

/// Tangential-trace projections of a closed-form field pair on |x| = a.
struct TraceProjections {
  SpectralTangentField nu_cross_e;  // nu x E
  SpectralTangentField h_tangential;  // (nu x H) x nu
};

inline TraceProjections project_traces(const std::function<EHPair(const Vec3&)>& field, int n_max,
                                       double a, const SphereGrid& grid) {
  auto nu_cross_e = [&](double theta, double phi) -> CVec3 {
    const Vec3 nu = sph_unit_r(theta, phi);
    const Vec3 x{a * nu[0], a * nu[1], a * nu[2]};
    return vec::cross(nu, field(x).E);
  };
  auto h_tan = [&](double theta, double phi) -> CVec3 {
    const Vec3 nu = sph_unit_r(theta, phi);
    const Vec3 x{a * nu[0], a * nu[1], a * nu[2]};
    const CVec3 H = field(x).H;
    const Complex hn = vec::dot(H, nu);
    return {H[0] - hn * nu[0], H[1] - hn * nu[1], H[2] - hn * nu[2]};
  };
  TraceProjections tp{project_onto_modes(nu_cross_e, n_max, a, grid),
                      project_onto_modes(h_tan, n_max, a, grid)};
  return tp;
}

/// Boundary data f = -(nu x E^i + Z H^i_T) by quadrature projection.
/// Under-resolution is detected from the tail coefficients; the grid is
/// refined once before giving up.
inline SpectralTangentField incident_trace(const IncidentField& inc, const ImpedanceModel& model,
                                           double a, int n_max) {
  auto field = [&](const Vec3& x) { return inc.evaluate(x); };
  int band = n_max + 2;
  for (int attempt = 0; attempt < 2; ++attempt) {
    const SphereGrid grid = sphere_grid(band, a);
    TraceProjections tp = project_traces(field, n_max, a, grid);
    // tail check against a projection on a finer grid
    const SphereGrid finer = sphere_grid(band + 8, a);
    TraceProjections tp2 = project_traces(field, n_max, a, finer);
    double diff = 0.0, scale = 1e-300;
    tp.nu_cross_e.for_each_mode([&](const ModeIndex& mode) {
      diff = std::max(diff, std::abs(tp.nu_cross_e.alpha(mode) - tp2.nu_cross_e.alpha(mode)));
      diff = std::max(diff, std::abs(tp.nu_cross_e.beta(mode) - tp2.nu_cross_e.beta(mode)));
      diff = std::max(diff, std::abs(tp.h_tangential.alpha(mode) - tp2.h_tangential.alpha(mode)));
      diff = std::max(diff, std::abs(tp.h_tangential.beta(mode) - tp2.h_tangential.beta(mode)));
      scale = std::max({scale, std::abs(tp.nu_cross_e.alpha(mode)),
                        std::abs(tp.nu_cross_e.beta(mode)), std::abs(tp.h_tangential.alpha(mode)),
                        std::abs(tp.h_tangential.beta(mode))});
    });
    if (diff <= 1e-11 * scale || attempt == 1) {
      if (diff > 1e-9 * scale)
        throw std::runtime_error("incident_trace: quadrature under-resolved after refinement");
      SpectralTangentField zh = apply_impedance(model, tp2.h_tangential);
      SpectralTangentField f(n_max, a);
      f.for_each_mode([&](const ModeIndex& mode) {
        f.alpha(mode) = -(tp2.nu_cross_e.alpha(mode) + zh.alpha(mode));
        f.beta(mode) = -(tp2.nu_cross_e.beta(mode) + zh.beta(mode));
      });
      return f;
    }
    band += 12;
  }
  throw std::logic_error("incident_trace: unreachable");
}

/// Closed-form multipole coefficients of the canonical plane wave
/// (d = z, p = x).  Writing the regular fields as
///   H = sum A_nm M_nm + B_nm N_nm,  E = i sum (A_nm N_nm + B_nm M_nm)
/// with M_nm = curl(x j_n(w r) Y_n^m), N_nm = curl M_nm / w, only m = +/-1
/// contribute:
///   A_{n,+1} = E_n/(2 c_n),  A_{n,-1} = -E_n/(2 c_n),  B_{n,+/-1} = E_n/(2 c_n)
/// with E_n = i^n (2n+1)/(n(n+1)) and c_n = sqrt((2n+1)/(4 pi n(n+1))).
struct PlaneWaveMultipole {
  int n_max;
  std::vector<Complex> A_plus, A_minus, B_plus, B_minus;  // index n-1
};

inline PlaneWaveMultipole plane_wave_multipole(int n_max) {
  PlaneWaveMultipole pw;
  pw.n_max = n_max;
  pw.A_plus.resize(n_max);
  pw.A_minus.resize(n_max);
  pw.B_plus.resize(n_max);
  pw.B_minus.resize(n_max);
  Complex i_pow(1.0, 0.0);
  const Complex i(0.0, 1.0);
  for (int n = 1; n <= n_max; ++n) {
    i_pow *= i;  // i^n
    const double nn1 = double(n) * (n + 1);
    const Complex En = i_pow * (2.0 * n + 1.0) / nn1;
    const double cn = std::sqrt((2.0 * n + 1.0) / (4.0 * kPi * nn1));
    const Complex g = En / (2.0 * cn);
    pw.A_plus[n - 1] = g;
    pw.A_minus[n - 1] = -g;
    pw.B_plus[n - 1] = g;
    pw.B_minus[n - 1] = g;
  }
  return pw;
}

/// Traces of the canonical plane wave from the closed-form expansion, on
/// the radius-a sphere:
///   H_T:    alpha = s psi_n'(wa)/w * B,  beta = -s psi_n(wa)/w * A
///   nu x E: alpha = i s psi_n(wa)/w * B, beta = i s psi_n'(wa)/w * A
/// with s = sqrt(n(n+1)), psi_n(x) = x j_n(x).
inline TraceProjections plane_wave_traces_closed_form(double omega, double a, int n_max) {
  TraceProjections tp{SpectralTangentField(n_max, a), SpectralTangentField(n_max, a)};
  const PlaneWaveMultipole pw = plane_wave_multipole(n_max);
  const RiccatiTable t = riccati_table(n_max, omega * a);
  const Complex i(0.0, 1.0);
  for (int n = 1; n <= n_max; ++n) {
    const double s = std::sqrt(double(n) * (n + 1));
    for (int pm = 0; pm < 2; ++pm) {
      const ModeIndex mode{n, pm == 0 ? 1 : -1};
      const Complex A = pm == 0 ? pw.A_plus[n - 1] : pw.A_minus[n - 1];
      const Complex B = pm == 0 ? pw.B_plus[n - 1] : pw.B_minus[n - 1];
      tp.h_tangential.alpha(mode) = s * t.psi_d[n] / omega * B;
      tp.h_tangential.beta(mode) = -s * t.psi[n] / omega * A;
      tp.nu_cross_e.alpha(mode) = i * s * t.psi[n] / omega * B;
      tp.nu_cross_e.beta(mode) = i * s * t.psi_d[n] / omega * A;
    }
  }
  return tp;
}

}  // namespace gibc
