#pragma once

// Magnetic-to-Electric Calderon operator on the sphere.  For the exterior
// radiating Maxwell pair (curl H + i omega E = 0, curl E - i omega H = 0)
// with tangential magnetic trace H_T prescribed on |x| = r, the map
// H_T -> nu x E is diagonal per degree in the (U, V) basis:
//
//   S_U = i  xi_n(x) / xi_n'(x),    S_V = -i xi_n'(x) / xi_n(x),
//
// with x = omega r and xi_n(x) = x h_n^(1)(x).  Both entries have positive
// real part (1/|xi'|^2 and 1/|xi|^2 by the Wronskian), which is the
// radiated-power sign.  The block depends on (n, omega r) only.  The
// entry formulas are gated by the closed-form dipole oracle in the test
// suite before anything downstream trusts them.

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>

#include "gibc/bessel.hpp"
#include "gibc/impedance.hpp"
#include "gibc/modes.hpp"

namespace gibc {

struct CalderonBlock {
  int n = 1;
  Eigen::Matrix2cd M;      // sends (alpha, beta) of H_T to (U, V) coefficients of nu x E
  bool degraded = false;   // set when h_n(omega r) is not representable at this degree
};

inline CalderonBlock calderon_block(int n, double omega, double r) {
  if (n < 1) throw std::domain_error("calderon_block: degree must be >= 1");
  if (!(omega > 0.0) || !(r > 0.0))
    throw std::domain_error("calderon_block: omega and radius must be positive");
  const double x = omega * r;
  CalderonBlock blk;
  blk.n = n;
  blk.M.setZero();
  if (max_stable_degree(n, x) < n) {
    blk.degraded = true;
    return blk;
  }
  const RiccatiTable t = riccati_table(n, x);
  const Complex i(0.0, 1.0);
  blk.M(0, 0) = i * t.xi[n] / t.xi_d[n];
  blk.M(1, 1) = -i * t.xi_d[n] / t.xi[n];
  return blk;
}

/// Per-degree table of blocks for one (omega, r).
inline std::vector<CalderonBlock> calderon_blocks(int n_max, double omega, double r) {
  std::vector<CalderonBlock> blocks;
  blocks.reserve(n_max);
  const double x = omega * r;
  const int stable = max_stable_degree(n_max, x);
  const RiccatiTable t = riccati_table(std::max(1, stable), x);
  const Complex i(0.0, 1.0);
  for (int n = 1; n <= n_max; ++n) {
    CalderonBlock blk;
    blk.n = n;
    blk.M.setZero();
    if (n > stable) {
      blk.degraded = true;
    } else {
      blk.M(0, 0) = i * t.xi[n] / t.xi_d[n];
      blk.M(1, 1) = -i * t.xi_d[n] / t.xi[n];
    }
    blocks.push_back(blk);
  }
  return blocks;
}

struct CalderonOperator {
  double omega = 1.0;
};
struct ImpedanceOperator {
  ImpedanceModel model;
};

/// Apply S_Gamma modewise; output carries dual coefficients on the same
/// index set (L2_t pivot).
inline SpectralTangentField apply_calderon(double omega, const SpectralTangentField& u) {
  SpectralTangentField out(u.n_max(), u.radius());
  auto blocks = calderon_blocks(u.n_max(), omega, u.radius());
  u.for_each_mode([&](const ModeIndex& mode) {
    const Eigen::Matrix2cd& M = blocks[mode.n - 1].M;
    const Eigen::Vector2cd in(u.alpha(mode), u.beta(mode));
    const Eigen::Vector2cd res = M * in;
    out.alpha(mode) = res(0);
    out.beta(mode) = res(1);
  });
  return out;
}

inline SpectralTangentField apply_operator(const ImpedanceOperator& op,
                                           const SpectralTangentField& u) {
  return apply_impedance(op.model, u);
}
inline SpectralTangentField apply_operator(const CalderonOperator& op,
                                           const SpectralTangentField& u) {
  return apply_calderon(op.omega, u);
}

}  // namespace gibc
