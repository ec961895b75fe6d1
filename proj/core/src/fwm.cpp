#include "psa/fwm.hpp"

#include <cmath>
#include <numbers>

namespace psa {

namespace detail {

void require_finite(double v, const char* name) {
  if (!std::isfinite(v)) {
    throw ValidationError(std::string(name) + " must be finite");
  }
}

double wrap_pi(double angle) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double a = std::remainder(angle, two_pi);
  if (a <= -std::numbers::pi) a += two_pi;
  return a;
}

double wrap_half_pi(double angle) {
  double a = std::remainder(angle, std::numbers::pi);
  if (a <= -std::numbers::pi / 2.0) a += std::numbers::pi;
  return a;
}

}  // namespace detail

void FiberParams::validate() const {
  detail::require_finite(gamma, "gamma");
  detail::require_finite(delta_beta, "delta_beta");
  detail::require_finite(length, "length");
  if (gamma <= 0.0) throw ValidationError("gamma must be > 0");
  if (length < 0.0) throw ValidationError("length must be >= 0");
}

void DualPumpConfig::validate() const {
  detail::require_finite(p1, "p1");
  detail::require_finite(p3, "p3");
  detail::require_finite(theta10, "theta10");
  detail::require_finite(theta30, "theta30");
  if (p1 < 0.0 || p3 < 0.0) throw ValidationError("pump powers must be >= 0");
}

void SinglePumpConfig::validate() const {
  detail::require_finite(p2, "p2");
  detail::require_finite(theta20, "theta20");
  if (p2 < 0.0) throw ValidationError("p2 must be >= 0");
}

GrowthFactors growth_factors(double g_squared, double z) {
  const double w = g_squared * z * z;
  if (std::abs(w) < 1e-8) {
    // series in w = (g z)^2; next omitted term is O(w^3) ~ 1e-25
    const double c = 1.0 + w / 2.0 + w * w / 24.0;
    const double s = z * (1.0 + w / 6.0 + w * w / 120.0);
    return {c, s};
  }
  if (g_squared > 0.0) {
    const double g = std::sqrt(g_squared);
    return {std::cosh(g * z), std::sinh(g * z) / g};
  }
  const double a = std::sqrt(-g_squared);
  return {std::cos(a * z), std::sin(a * z) / a};
}

BogoliubovPair dual_pump_coeffs(const FiberParams& fiber, const DualPumpConfig& pumps) {
  fiber.validate();
  pumps.validate();

  const double gamma = fiber.gamma;
  const double z = fiber.length;
  const double kappa = fiber.delta_beta + gamma * (pumps.p1 + pumps.p3);
  const double g2 = 4.0 * gamma * gamma * pumps.p1 * pumps.p3 - (kappa / 2.0) * (kappa / 2.0);
  const double delta = (3.0 * gamma * (pumps.p1 + pumps.p3) - fiber.delta_beta) / 2.0;

  const auto [c, s] = growth_factors(g2, z);
  const complexd phase = std::polar(1.0, delta * z);
  const complexd mu = (complexd(c, 0.0) + complexd(0.0, kappa / 2.0) * s) * phase;
  const complexd nu = complexd(0.0, 2.0 * gamma) * std::sqrt(pumps.p1 * pumps.p3) *
                      std::polar(1.0, pumps.theta10 + pumps.theta30) * s * phase;
  return {mu, nu, kappa, g2, PumpScheme::dual_pump};
}

BogoliubovPair single_pump_coeffs(const FiberParams& fiber, const SinglePumpConfig& pump,
                                  BPhaseConvention convention) {
  fiber.validate();
  pump.validate();

  const double gamma = fiber.gamma;
  const double z = fiber.length;
  const double kappa = 2.0 * gamma * pump.p2 - fiber.delta_beta;
  const double g2 = gamma * gamma * pump.p2 * pump.p2 - (kappa / 2.0) * (kappa / 2.0);

  if (pump.p2 == 0.0) {
    // no pump, exact identity propagator
    return {complexd(1.0, 0.0), complexd(0.0, 0.0), kappa, g2, PumpScheme::single_pump};
  }

  const auto [c, s] = growth_factors(g2, z);
  double overall = fiber.delta_beta / 2.0 * z;
  if (convention == BPhaseConvention::pump_phase_included) overall += gamma * pump.p2 * z;
  const complexd phase = std::polar(1.0, overall);
  const complexd mu = (complexd(c, 0.0) + complexd(0.0, kappa / 2.0) * s) * phase;
  const complexd nu = complexd(0.0, gamma * pump.p2) * std::polar(1.0, 2.0 * pump.theta20) * s * phase;
  return {mu, nu, kappa, g2, PumpScheme::single_pump};
}

// Cross term from |mu A + nu A*|^2: the relative phase is
// theta_mu - theta_nu + 2 theta_s0, maximal gain at theta_s0 = (theta_nu - theta_mu)/2.
double power_gain_degenerate(const BogoliubovPair& coeffs, double theta_s0) {
  detail::require_finite(theta_s0, "theta_s0");
  const double am = std::abs(coeffs.mu);
  const double an = std::abs(coeffs.nu);
  return am * am + an * an +
         2.0 * am * an * std::cos(coeffs.theta_mu() - coeffs.theta_nu() + 2.0 * theta_s0);
}

double power_gain_signal(const BogoliubovPair& coeffs, double theta_s0, double theta_i0, double eta) {
  detail::require_finite(theta_s0, "theta_s0");
  detail::require_finite(theta_i0, "theta_i0");
  detail::require_finite(eta, "eta");
  if (eta < 0.0) throw ValidationError("eta must be >= 0");
  const double am = std::abs(coeffs.mu);
  const double an = std::abs(coeffs.nu);
  return am * am + eta * eta * an * an +
         2.0 * eta * am * an * std::cos(coeffs.theta_mu() - coeffs.theta_nu() + theta_s0 + theta_i0);
}

double power_gain_idler(const BogoliubovPair& coeffs, double theta_s0, double theta_i0, double eta) {
  if (!(eta > 0.0)) throw ValidationError("eta must be > 0 for the idler gain");
  return power_gain_signal(coeffs, theta_s0, theta_i0, 1.0 / eta);
}

GainExtrema gain_extrema(const BogoliubovPair& coeffs) {
  const double sp = coeffs.s_plus();
  const double sm = coeffs.s_minus();
  return {sp * sp, sm * sm};
}

QuadTransfer quad_transfer(const BogoliubovPair& coeffs, QuadBasis basis) {
  const complexd nu = (basis == QuadBasis::minus) ? -coeffs.nu : coeffs.nu;
  const complexd mu = coeffs.mu;
  Eigen::Matrix2d m;
  m << (mu + nu).real(), -(mu - nu).imag(),
       (mu + nu).imag(), (mu - nu).real();
  return {m, basis};
}

std::pair<FieldAmplitude, FieldAmplitude> pm_basis(FieldAmplitude a_s, FieldAmplitude a_i,
                                                   PmDirection direction) {
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  // the map coincides with its inverse; both directions kept for call-site clarity
  (void)direction;
  return {(a_s + a_i) * inv_sqrt2, (a_s - a_i) * inv_sqrt2};
}

SinglePumpConfig map_dual_to_single(const DualPumpConfig& pumps) {
  pumps.validate();
  return {2.0 * std::sqrt(pumps.p1 * pumps.p3), (pumps.theta10 + pumps.theta30) / 2.0};
}

}  // namespace psa
