#pragma once

#include "psa/fwm.hpp"

namespace psa {

/// Rotation - squeeze - rotation factors of a 2x2 symplectic transfer:
///   M = c_sign * R(theta) * diag(squeeze_x, 1/squeeze_x) * R(phi)^T.
///
/// Branch normalization: theta and phi are reported in (-pi/2, pi/2]; each
/// pi-fold flips c_sign. squeeze_x is the gain along X after the input
/// rotation; it equals s_plus in the signal/plus bases and s_minus in the
/// minus basis (the two bases share theta and phi, with swapped gains).
struct BMFactors {
  double theta = 0.0;  ///< output rotation, rad
  double phi = 0.0;    ///< input rotation, rad
  double s_plus = 1.0;   ///< |mu| + |nu| >= 1
  double s_minus = 1.0;  ///< |mu| - |nu| <= 1, s_plus * s_minus = 1
  double c_sign = 1.0;   ///< +1 or -1
  QuadBasis basis = QuadBasis::signal;

  double squeeze_x() const { return basis == QuadBasis::minus ? s_minus : s_plus; }
  double squeeze_y() const { return basis == QuadBasis::minus ? s_plus : s_minus; }
};

/// Closed-form decomposition from the Bogoliubov pair:
/// theta = (theta_mu + theta_nu)/2, phi = -(theta_mu - theta_nu)/2,
/// gains |mu| +- |nu|, then branch-normalized. For |nu| = 0 the rotations
/// are not unique; convention: theta carries the whole rotation, phi = 0.
BMFactors decompose(const BogoliubovPair& coeffs, QuadBasis basis = QuadBasis::signal);

/// c_sign * R(theta) * Sigma * R(phi)^T.
QuadTransfer reconstruct(const BMFactors& factors);

/// Brute-force factorization of an arbitrary det-1 matrix by orthogonal
/// diagonalization of M^T M; same normalization contract as decompose().
BMFactors numeric_oracle(const QuadTransfer& transfer);

/// Tangents of twice the decomposition angles, evaluated directly from the
/// fiber and pump parameters (no complex arithmetic). Consistent with
/// decompose() up to the tan branch. Throws PoleDetected on a vanishing
/// denominator.
struct TangentAngles {
  double tan_two_theta;
  double tan_two_phi;
};
TangentAngles tangent_angles(const FiberParams& fiber, const DualPumpConfig& pumps);
TangentAngles tangent_angles(const FiberParams& fiber, const SinglePumpConfig& pump,
                             BPhaseConvention convention = BPhaseConvention::pump_phase_included);

}  // namespace psa
