#include "psa/bloch_messiah.hpp"

#include <cmath>
#include <numbers>

#include "psa/linalg.hpp"

namespace psa {

namespace {

// Fold an angle into (-pi/2, pi/2]; every pi-fold flips the sign carried by c.
void fold_half_pi(double& angle, double& c_sign) {
  const double folded = detail::wrap_half_pi(angle);
  const auto folds = std::llround((angle - folded) / std::numbers::pi);
  if (folds & 1) c_sign = -c_sign;
  angle = folded;
}

BMFactors normalized(double theta_raw, double phi_raw, double sigma_max, double sigma_min,
                     QuadBasis basis) {
  BMFactors f;
  f.basis = basis;
  f.s_plus = sigma_max;
  f.s_minus = sigma_min;
  f.theta = theta_raw;
  f.phi = phi_raw;
  f.c_sign = 1.0;
  fold_half_pi(f.theta, f.c_sign);
  fold_half_pi(f.phi, f.c_sign);
  return f;
}

}  // namespace

BMFactors decompose(const BogoliubovPair& coeffs, QuadBasis basis) {
  const double am = std::abs(coeffs.mu);
  const double an = std::abs(coeffs.nu);

  double theta_raw, phi_raw;
  if (an == 0.0) {
    theta_raw = coeffs.theta_mu();
    phi_raw = 0.0;
  } else {
    theta_raw = (coeffs.theta_mu() + coeffs.theta_nu()) / 2.0;
    phi_raw = -(coeffs.theta_mu() - coeffs.theta_nu()) / 2.0;
  }
  return normalized(theta_raw, phi_raw, am + an, am - an, basis);
}

QuadTransfer reconstruct(const BMFactors& factors) {
  Eigen::Matrix2d sigma = Eigen::Matrix2d::Zero();
  sigma(0, 0) = factors.squeeze_x();
  sigma(1, 1) = factors.squeeze_y();
  Eigen::Matrix2d m = factors.c_sign * rotation2(factors.theta) * sigma *
                      rotation2(factors.phi).transpose();
  return {m, factors.basis};
}

BMFactors numeric_oracle(const QuadTransfer& transfer) {
  const Eigen::Matrix2d& m = transfer.m;
  if (std::abs(m.determinant() - 1.0) > 1e-9) {
    throw ValidationError("numeric_oracle requires det(m) = 1");
  }

  const Eigen::Matrix2d a = m.transpose() * m;
  const double diff = a(0, 0) - a(1, 1);
  const double off = a(0, 1);
  const double spread = std::hypot(diff, 2.0 * off);

  if (spread < 1e-14) {
    // equal singular values: m is (up to sign) a pure rotation
    const double theta_raw = std::atan2(m(1, 0), m(0, 0));
    return normalized(theta_raw, 0.0, 1.0, 1.0, transfer.basis);
  }

  const double tr = a(0, 0) + a(1, 1);
  const double sigma_max = std::sqrt((tr + spread) / 2.0);
  const double sigma_min = std::sqrt((tr - spread) / 2.0);

  // eigenvector angle of M^T M for the larger eigenvalue
  double phi_raw = 0.5 * std::atan2(2.0 * off, diff);
  double sx = sigma_max, sy = sigma_min;
  if (transfer.basis == QuadBasis::minus) {
    phi_raw += std::numbers::pi / 2.0;  // small gain first in the minus basis
    sx = sigma_min;
    sy = sigma_max;
  }

  const Eigen::Matrix2d w = rotation2(phi_raw);
  Eigen::Matrix2d sigma_inv = Eigen::Matrix2d::Zero();
  sigma_inv(0, 0) = 1.0 / sx;
  sigma_inv(1, 1) = 1.0 / sy;
  const Eigen::Matrix2d u = m * w * sigma_inv;
  const double theta_raw = std::atan2(u(1, 0), u(0, 0));

  return normalized(theta_raw, phi_raw, sigma_max, sigma_min, transfer.basis);
}

namespace {

TangentAngles tangents_from(double kappa, double g_squared, double z, double theta_g,
                            double theta_pump_sum) {
  const auto [c, s] = growth_factors(g_squared, z);
  const double chi = (kappa / 2.0) * s / c;  // (kappa/2g) tanh(gz), continued
  if (!std::isfinite(chi)) throw PoleDetected("growth-factor ratio diverges (cos(gz) = 0)");

  const double tg = std::tan(theta_g);
  const double tp = std::tan(theta_pump_sum);

  const double den_theta = chi + tg;
  if (std::abs(den_theta) < 1e-14) throw PoleDetected("tan(2 theta) denominator below 1e-14");
  const double den_phi = chi - tp;
  if (std::abs(den_phi) < 1e-14) throw PoleDetected("tan(2 phi) denominator below 1e-14");

  return {(chi * tg - 1.0) / den_theta, (chi * tp + 1.0) / den_phi};
}

}  // namespace

TangentAngles tangent_angles(const FiberParams& fiber, const DualPumpConfig& pumps) {
  fiber.validate();
  pumps.validate();
  const double gamma = fiber.gamma;
  const double kappa = fiber.delta_beta + gamma * (pumps.p1 + pumps.p3);
  const double g2 = 4.0 * gamma * gamma * pumps.p1 * pumps.p3 - (kappa / 2.0) * (kappa / 2.0);
  const double delta = (3.0 * gamma * (pumps.p1 + pumps.p3) - fiber.delta_beta) / 2.0;
  const double pump_sum = pumps.theta10 + pumps.theta30;
  return tangents_from(kappa, g2, fiber.length, pump_sum + 2.0 * delta * fiber.length, pump_sum);
}

TangentAngles tangent_angles(const FiberParams& fiber, const SinglePumpConfig& pump,
                             BPhaseConvention convention) {
  fiber.validate();
  pump.validate();
  const double gamma = fiber.gamma;
  const double kappa = 2.0 * gamma * pump.p2 - fiber.delta_beta;
  const double g2 = gamma * gamma * pump.p2 * pump.p2 - (kappa / 2.0) * (kappa / 2.0);
  double theta_g = 2.0 * pump.theta20 + fiber.delta_beta * fiber.length;
  if (convention == BPhaseConvention::pump_phase_included) {
    theta_g += 2.0 * gamma * pump.p2 * fiber.length;
  }
  return tangents_from(kappa, g2, fiber.length, theta_g, 2.0 * pump.theta20);
}

}  // namespace psa
