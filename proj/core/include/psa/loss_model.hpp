#pragma once

#include <optional>

#include "psa/fwm.hpp"
#include "psa/quantum_noise.hpp"

namespace psa {

/// Lumped beamsplitter loss: amplitude transmissivity tau, coupling
/// rho = sqrt(1 - tau^2) to a vacuum mode.
struct LossChannel {
  double tau = 1.0;

  double rho() const { return std::sqrt(std::max(0.0, 1.0 - tau * tau)); }
  void validate() const;
};

enum class LinkOrder {
  amplifier_then_loss,  ///< AL: amplifying fiber followed by the lossy line
  loss_then_amplifier,  ///< LA: lossy line followed by the amplifying fiber
};

struct LinkLayout {
  LinkOrder order = LinkOrder::amplifier_then_loss;
  PumpScheme scheme = PumpScheme::dual_pump;
};

/// Coherent inputs entering the link (idler ignored for the dual-pump scheme).
struct LinkInputs {
  FieldAmplitude alpha_s0{0.0, 0.0};
  FieldAmplitude alpha_i0{0.0, 0.0};
};

/// Signal-mode homodyne mean and variance of the lossy link. The idler arm
/// may carry its own transmissivity in the single-pump scheme; by default
/// both arms share loss.tau.
HomodyneStats lossy_homodyne_stats(const BogoliubovPair& coeffs, const LinkLayout& layout,
                                   const LossChannel& loss, const LinkInputs& inputs, double phi,
                                   std::optional<LossChannel> idler_loss = std::nullopt);

/// Noise figure of the lossy link. For the dual-pump scheme this is the
/// lossless homodyne noise figure times the layout factor; for the
/// single-pump scheme the lossless reference is the joint-detection noise
/// figure (exactly 1 at the optimal input), scaled by the same factors with
/// the isotropic gain G0 = |mu|^2 + |nu|^2 in place of G_max.
SnrReport nf_with_loss(const BogoliubovPair& coeffs, const LinkLayout& layout,
                       const LossChannel& loss, const LinkInputs& inputs, double phi,
                       std::optional<LossChannel> idler_loss = std::nullopt);

/// Minimum of nf_with_loss over input and detection phases:
/// amplifier-then-loss: 1 - 1/G + 1/(G tau^2) with G = G_max (dual pump) or
/// G0 (single pump); loss-then-amplifier: 1/tau^2.
double nf_optimum(const BogoliubovPair& coeffs, const LinkLayout& layout, const LossChannel& loss);

/// NF^AL_opt / NF^LA_opt = (G tau^2 - tau^2 + 1)/G; below 1 whenever G > 1
/// and tau < 1, i.e. amplifying before the lossy line always wins.
double layout_ratio(const BogoliubovPair& coeffs, const LossChannel& loss);

}  // namespace psa
