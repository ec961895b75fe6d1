#include "psa/loss_model.hpp"

#include <cmath>

namespace psa {

void LossChannel::validate() const {
  detail::require_finite(tau, "tau");
  if (!(tau > 0.0) || tau > 1.0) throw ValidationError("tau must be in (0, 1]");
}

namespace {

double g_of(const BogoliubovPair& coeffs, PumpScheme scheme) {
  return scheme == PumpScheme::dual_pump ? gain_extrema(coeffs).g_max
                                         : std::norm(coeffs.mu) + std::norm(coeffs.nu);
}

// (G tau^2 - tau^2 + 1) / (G tau^2), written so that tau = 1 gives exactly 1
double al_factor(double g, double tau) {
  const double tau2 = tau * tau;
  return 1.0 + (1.0 - tau2) / (g * tau2);
}

}  // namespace

HomodyneStats lossy_homodyne_stats(const BogoliubovPair& coeffs, const LinkLayout& layout,
                                   const LossChannel& loss, const LinkInputs& inputs, double phi,
                                   std::optional<LossChannel> idler_loss) {
  loss.validate();
  const LossChannel loss_i = idler_loss.value_or(loss);
  loss_i.validate();
  const double tau_s = loss.tau;
  const double tau_i = loss_i.tau;

  HomodyneStats stats;
  if (layout.scheme == PumpScheme::dual_pump) {
    const HomodyneStats lossless = homodyne_stats(coeffs, inputs.alpha_s0, phi);
    stats.mean = tau_s * lossless.mean;
    stats.variance = layout.order == LinkOrder::amplifier_then_loss
                         ? tau_s * tau_s * lossless.variance + (1.0 - tau_s * tau_s) / 4.0
                         : lossless.variance;
    return stats;
  }

  // single-pump scheme, signal mode
  const HomodyneSetting signal{phi, HomodyneSetting::Mode::signal};
  if (layout.order == LinkOrder::amplifier_then_loss) {
    const HomodyneStats lossless = homodyne_stats_single(coeffs, inputs.alpha_s0, inputs.alpha_i0,
                                                         signal);
    stats.mean = tau_s * lossless.mean;
    stats.variance = tau_s * tau_s * lossless.variance + (1.0 - tau_s * tau_s) / 4.0;
  } else {
    // loss first: the amplifier sees attenuated means, vacuum-level noise
    const HomodyneStats attenuated = homodyne_stats_single(
        coeffs, tau_s * inputs.alpha_s0, tau_i * inputs.alpha_i0, signal);
    stats.mean = attenuated.mean;
    stats.variance = attenuated.variance;
  }
  return stats;
}

SnrReport nf_with_loss(const BogoliubovPair& coeffs, const LinkLayout& layout,
                       const LossChannel& loss, const LinkInputs& inputs, double phi,
                       std::optional<LossChannel> idler_loss) {
  loss.validate();
  if (idler_loss) idler_loss->validate();
  const double tau = loss.tau;
  const double tau2 = tau * tau;

  SnrReport lossless;
  double factor = 1.0;
  if (layout.scheme == PumpScheme::dual_pump) {
    const double mag = std::abs(inputs.alpha_s0) > 0.0 ? std::abs(inputs.alpha_s0) : 1.0;
    lossless = noise_figure(coeffs, std::arg(inputs.alpha_s0), phi, mag);
    if (layout.order == LinkOrder::amplifier_then_loss) {
      const double lambda_phi = 4.0 * homodyne_stats(coeffs, FieldAmplitude{1.0, 0.0}, phi).variance;
      factor = al_factor(lambda_phi, tau);
    } else {
      factor = 1.0 / tau2;
    }
  } else {
    lossless = noise_figure_joint(coeffs, inputs.alpha_s0, inputs.alpha_i0, phi);
    if (layout.order == LinkOrder::amplifier_then_loss) {
      factor = al_factor(std::norm(coeffs.mu) + std::norm(coeffs.nu), tau);
    } else {
      factor = 1.0 / tau2;
    }
  }

  SnrReport report;
  report.noise_figure = lossless.noise_figure * factor;
  report.snr_in = lossless.snr_in;
  report.snr_out = report.snr_in / report.noise_figure;
  return report;
}

double nf_optimum(const BogoliubovPair& coeffs, const LinkLayout& layout, const LossChannel& loss) {
  loss.validate();
  if (layout.order == LinkOrder::loss_then_amplifier) {
    return 1.0 / (loss.tau * loss.tau);
  }
  return al_factor(g_of(coeffs, layout.scheme), loss.tau);
}

double layout_ratio(const BogoliubovPair& coeffs, const LossChannel& loss) {
  loss.validate();
  const double g = g_of(coeffs, coeffs.scheme);
  const double tau2 = loss.tau * loss.tau;
  return (g * tau2 - tau2 + 1.0) / g;
}

}  // namespace psa
