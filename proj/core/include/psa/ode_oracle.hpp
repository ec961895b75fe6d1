#pragma once

#include "psa/fwm.hpp"

namespace psa {

/// The three interacting complex amplitudes at position z.
struct FieldState3 {
  FieldAmplitude a1{0.0, 0.0};
  FieldAmplitude a2{0.0, 0.0};
  FieldAmplitude a3{0.0, 0.0};
  double z = 0.0;
};

struct IntegratorConfig {
  double step = 1.0;       ///< initial step, m
  double rel_tol = 1e-10;
  double abs_tol = 1e-10;
  long max_steps = 2000000;

  void validate() const;
};

/// Exact right-hand sides of the full nonlinear three-wave system, including
/// self- and cross-phase modulation and the e^{+-i delta_beta z} mixing
/// terms. The returned state holds dA_k/dz in a1..a3 and dz/dz = 1 in z.
FieldState3 rhs(const FieldState3& state, const FiberParams& fiber);

/// Integrate the full system from state.z to fiber.length with classic
/// 4th-order steps, step-doubling error control and local extrapolation.
/// Throws MaxStepsExceeded when the step budget runs out.
FieldState3 integrate(const FieldState3& initial, const FiberParams& fiber,
                      const IntegratorConfig& cfg = {});

/// |A1|^2 + |A2|^2 + |A3|^2 — conserved along lossless trajectories.
double total_power(const FieldState3& state);

/// Recover (mu, nu) numerically by probing the linearized channel with two
/// tiny inputs (phases 0 and pi/2) and solving the resulting 2x2 system.
/// probe_eps <= 0 picks a probe small enough for the expected gain. Throws
/// ProbeTooLarge when the probe precondition fails or pump depletion above
/// 1e-6 relative is detected.
BogoliubovPair extract_mu_nu(const FiberParams& fiber, const DualPumpConfig& pumps,
                             double probe_eps = 0.0, const IntegratorConfig& cfg = {});
BogoliubovPair extract_mu_nu(const FiberParams& fiber, const SinglePumpConfig& pump,
                             double probe_eps = 0.0, const IntegratorConfig& cfg = {});

}  // namespace psa
