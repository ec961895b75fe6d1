#pragma once

#include <string>

#include "psa/fwm.hpp"

namespace psa {

/// Input choice that reaches the maximal noiseless gain (|mu| + |nu|)^2.
/// Returned as data; callers apply it themselves.
struct OptimalInput {
  double theta_s0 = 0.0;                  ///< signal input phase, rad
  FieldAmplitude idler_amplitude{0.0, 0.0};  ///< single-pump scheme only
  double predicted_gain = 1.0;            ///< (|mu| + |nu|)^2
};

/// Dual-pump scheme: theta_s0 = (theta_nu - theta_mu)/2 = -phi aligns the
/// full mean field with the amplified quadrature.
OptimalInput optimal_signal_phase(const BogoliubovPair& coeffs);

/// Single-pump scheme: the idler input A_i0 = A_s0* e^{-i(theta_mu - theta_nu)}
/// gives both outputs amplitude gain |mu| + |nu|.
OptimalInput optimal_idler(const BogoliubovPair& coeffs, FieldAmplitude a_s0);

/// Vacuum-idler fallback: phase-insensitive gain |mu|^2.
struct PiaStats {
  double gain;
  std::string description;
};
PiaStats pia_stats(const BogoliubovPair& coeffs);

}  // namespace psa
