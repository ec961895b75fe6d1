#include "psa/optimum_input.hpp"

#include <cmath>

namespace psa {

OptimalInput optimal_signal_phase(const BogoliubovPair& coeffs) {
  OptimalInput opt;
  opt.theta_s0 = detail::wrap_pi((coeffs.theta_nu() - coeffs.theta_mu()) / 2.0);
  opt.predicted_gain = gain_extrema(coeffs).g_max;
  return opt;
}

OptimalInput optimal_idler(const BogoliubovPair& coeffs, FieldAmplitude a_s0) {
  OptimalInput opt;
  opt.theta_s0 = std::arg(a_s0);
  opt.idler_amplitude =
      std::conj(a_s0) * std::polar(1.0, -(coeffs.theta_mu() - coeffs.theta_nu()));
  opt.predicted_gain = gain_extrema(coeffs).g_max;
  return opt;
}

PiaStats pia_stats(const BogoliubovPair& coeffs) {
  return {std::norm(coeffs.mu),
          "vacuum-idler (phase-insensitive) signal gain |mu|^2, independent of the input phase"};
}

}  // namespace psa
