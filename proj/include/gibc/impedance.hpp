#pragma once

// Impedance operators Z acting on tangential fields of the sphere.  All
// variants are built from constant complex coefficients
//
//   Z = rot_Gamma eta curl_Gamma + grad_Gamma gamma div_Gamma + lambda,
//
// with per-variant subsets, so Z is diagonal on the (U, V) mode basis:
//   Z U_n^m = (lambda - gamma n(n+1)/a^2) U_n^m
//   Z V_n^m = (lambda + eta   n(n+1)/a^2) V_n^m.
// The thin-coating model of thickness delta with coating constants
// (eps, mu) resolves to the curl-only operator with eta = i delta/(omega eps)
// and lambda = -i omega mu delta.

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "gibc/modes.hpp"

namespace gibc {

enum class ImpedanceVariant { Scalar, CurlOnly, DivOnly, FullSecondOrder, ThinCoating };

class ImpedanceModel {
 public:
  static ImpedanceModel scalar(Complex lambda) {
    ImpedanceModel m;
    m.variant_ = ImpedanceVariant::Scalar;
    m.lambda_ = lambda;
    return m;
  }
  static ImpedanceModel curl_only(Complex lambda, Complex eta) {
    ImpedanceModel m;
    m.variant_ = ImpedanceVariant::CurlOnly;
    m.lambda_ = lambda;
    m.eta_ = eta;
    return m;
  }
  static ImpedanceModel div_only(Complex lambda, Complex gamma) {
    ImpedanceModel m;
    m.variant_ = ImpedanceVariant::DivOnly;
    m.lambda_ = lambda;
    m.gamma_ = gamma;
    return m;
  }
  static ImpedanceModel full_second_order(Complex lambda, Complex eta, Complex gamma) {
    ImpedanceModel m;
    m.variant_ = ImpedanceVariant::FullSecondOrder;
    m.lambda_ = lambda;
    m.eta_ = eta;
    m.gamma_ = gamma;
    return m;
  }
  /// First-order thin-coating model: resolved against the working
  /// frequency at construction.
  static ImpedanceModel thin_coating(double delta, Complex eps, Complex mu, double omega) {
    if (!(delta > 0.0)) throw std::domain_error("thin_coating: thickness must be positive");
    if (!(omega > 0.0)) throw std::domain_error("thin_coating: frequency must be positive");
    if (eps == 0.0) throw std::domain_error("thin_coating: eps must be nonzero");
    ImpedanceModel m;
    m.variant_ = ImpedanceVariant::ThinCoating;
    m.eta_ = Complex(0.0, 1.0) * delta / (omega * eps);
    m.lambda_ = Complex(0.0, -1.0) * omega * mu * delta;
    m.delta_ = delta;
    m.coating_eps_ = eps;
    m.coating_mu_ = mu;
    m.coating_omega_ = omega;
    return m;
  }

  ImpedanceVariant variant() const { return variant_; }
  Complex lambda() const { return lambda_; }
  Complex eta() const { return eta_; }
  Complex gamma() const { return gamma_; }
  bool has_eta() const {
    return variant_ == ImpedanceVariant::CurlOnly || variant_ == ImpedanceVariant::FullSecondOrder ||
           variant_ == ImpedanceVariant::ThinCoating;
  }
  bool has_gamma() const {
    return variant_ == ImpedanceVariant::DivOnly || variant_ == ImpedanceVariant::FullSecondOrder;
  }

  std::string describe() const {
    auto c = [](Complex z) {
      return "(" + std::to_string(z.real()) + (z.imag() < 0 ? "" : "+") + std::to_string(z.imag()) +
             "i)";
    };
    switch (variant_) {
      case ImpedanceVariant::Scalar:
        return "scalar lambda=" + c(lambda_);
      case ImpedanceVariant::CurlOnly:
        return "curl_only lambda=" + c(lambda_) + " eta=" + c(eta_);
      case ImpedanceVariant::DivOnly:
        return "div_only lambda=" + c(lambda_) + " gamma=" + c(gamma_);
      case ImpedanceVariant::FullSecondOrder:
        return "full lambda=" + c(lambda_) + " eta=" + c(eta_) + " gamma=" + c(gamma_);
      case ImpedanceVariant::ThinCoating:
        return "thin_coating delta=" + std::to_string(delta_) + " eps=" + c(coating_eps_) +
               " mu=" + c(coating_mu_) + " -> lambda=" + c(lambda_) + " eta=" + c(eta_);
    }
    return "?";
  }

 private:
  ImpedanceVariant variant_ = ImpedanceVariant::Scalar;
  Complex lambda_{0.0, 0.0};
  Complex eta_{0.0, 0.0};
  Complex gamma_{0.0, 0.0};
  double delta_ = 0.0;
  Complex coating_eps_{0.0, 0.0}, coating_mu_{0.0, 0.0};
  double coating_omega_ = 0.0;
};

struct ImpedanceEigenvalues {
  Complex z_u;  // action on U_n^m (gradient family)
  Complex z_v;  // action on V_n^m (curl family)
};

inline ImpedanceEigenvalues impedance_eigenvalues(const ImpedanceModel& model, int n, double a) {
  if (n < 1) throw std::domain_error("impedance_eigenvalues: degree must be >= 1");
  if (!(a > 0.0)) throw std::domain_error("impedance_eigenvalues: radius must be positive");
  const double lap = double(n) * (n + 1) / (a * a);
  return {model.lambda() - model.gamma() * lap, model.lambda() + model.eta() * lap};
}

enum class ExistenceRoute { SurfaceCoercive, SurfaceHelmholtz, VolumeThdiv, None };

inline const char* route_name(ExistenceRoute r) {
  switch (r) {
    case ExistenceRoute::SurfaceCoercive:
      return "surface_coercive";
    case ExistenceRoute::SurfaceHelmholtz:
      return "surface_helmholtz";
    case ExistenceRoute::VolumeThdiv:
      return "volume_thdiv";
    case ExistenceRoute::None:
      return "none";
  }
  return "?";
}

struct HypothesisReport {
  bool uniqueness_ok = false;
  ExistenceRoute existence_route = ExistenceRoute::None;
  std::vector<std::string> violated_conditions;
};

/// Evaluate the sign conditions on the constant coefficients.
///
/// Uniqueness needs Re<Zv, v> >= 0 for all v, i.e. Re lambda >= 0,
/// Re eta >= 0 (when present) and Re gamma <= 0 (when present).  The
/// existence route is the applicable well-posedness argument:
///  - full second-order operator: principal part coercive when
///    |eta|, |gamma| > 0 and Im eta, Im gamma have opposite signs;
///  - curl-only operator with |lambda|, |eta| > 0: coercive when the
///    imaginary parts share a sign, otherwise the gradient/complement
///    splitting of the trace space applies;
///  - div-only (and scalar) operators with a strictly positive-imaginary
///    form: bounded-domain variational route.
/// Constant coefficients make every "does not change sign" clause automatic.
inline HypothesisReport hypothesis_check(const ImpedanceModel& model) {
  HypothesisReport rep;
  const Complex lam = model.lambda();
  const Complex eta = model.eta();
  const Complex gam = model.gamma();

  rep.uniqueness_ok = lam.real() >= 0.0 && (!model.has_eta() || eta.real() >= 0.0) &&
                      (!model.has_gamma() || gam.real() <= 0.0);
  if (lam.real() < 0.0) rep.violated_conditions.push_back("Re(lambda) >= 0");
  if (model.has_eta() && eta.real() < 0.0) rep.violated_conditions.push_back("Re(eta) >= 0");
  if (model.has_gamma() && gam.real() > 0.0) rep.violated_conditions.push_back("Re(gamma) <= 0");

  switch (model.variant()) {
    case ImpedanceVariant::FullSecondOrder: {
      bool ok = rep.uniqueness_ok;
      if (std::abs(eta) == 0.0) {
        rep.violated_conditions.push_back("|eta| >= c > 0");
        ok = false;
      }
      if (std::abs(gam) == 0.0) {
        rep.violated_conditions.push_back("|gamma| >= c > 0");
        ok = false;
      }
      if (eta.imag() * gam.imag() > 0.0) {
        rep.violated_conditions.push_back("Im(eta), Im(gamma) of opposite sign");
        ok = false;
      }
      rep.existence_route = ok ? ExistenceRoute::SurfaceCoercive : ExistenceRoute::None;
      break;
    }
    case ImpedanceVariant::CurlOnly:
    case ImpedanceVariant::ThinCoating: {
      bool ok = rep.uniqueness_ok;
      if (std::abs(lam) == 0.0) {
        rep.violated_conditions.push_back("|lambda| >= c > 0");
        ok = false;
      }
      if (std::abs(eta) == 0.0) {
        rep.violated_conditions.push_back("|eta| >= c > 0");
        ok = false;
      }
      if (!ok)
        rep.existence_route = ExistenceRoute::None;
      else if (lam.imag() * eta.imag() >= 0.0)
        rep.existence_route = ExistenceRoute::SurfaceCoercive;
      else
        rep.existence_route = ExistenceRoute::SurfaceHelmholtz;
      break;
    }
    case ImpedanceVariant::DivOnly: {
      bool ok = rep.uniqueness_ok;
      if (!(lam.imag() > 0.0)) {
        rep.violated_conditions.push_back("Im(lambda) >= c > 0");
        ok = false;
      }
      if (!(gam.imag() < 0.0)) {
        rep.violated_conditions.push_back("Im(gamma) <= -c < 0");
        ok = false;
      }
      rep.existence_route = ok ? ExistenceRoute::VolumeThdiv : ExistenceRoute::None;
      break;
    }
    case ImpedanceVariant::Scalar: {
      rep.existence_route = (rep.uniqueness_ok && lam.imag() > 0.0) ? ExistenceRoute::VolumeThdiv
                                                                    : ExistenceRoute::None;
      break;
    }
  }
  return rep;
}

/// Apply Z modewise; the result carries dual coefficients over the same
/// index set.
inline SpectralTangentField apply_impedance(const ImpedanceModel& model,
                                            const SpectralTangentField& u) {
  SpectralTangentField out(u.n_max(), u.radius());
  u.for_each_mode([&](const ModeIndex& mode) {
    const ImpedanceEigenvalues z = impedance_eigenvalues(model, mode.n, u.radius());
    out.alpha(mode) = z.z_u * u.alpha(mode);
    out.beta(mode) = z.z_v * u.beta(mode);
  });
  return out;
}

}  // namespace gibc
