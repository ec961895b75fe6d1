#include "psa/quantum_noise.hpp"

#include <cmath>
#include <numbers>

namespace psa {

Eigen::Matrix2d rotation2(double angle) {
  Eigen::Matrix2d r;
  r << std::cos(angle), -std::sin(angle),
       std::sin(angle), std::cos(angle);
  return r;
}

Eigen::Matrix4d symplectic_form() {
  Eigen::Matrix4d j = Eigen::Matrix4d::Zero();
  j.block<2, 2>(0, 2) = Eigen::Matrix2d::Identity();
  j.block<2, 2>(2, 0) = -Eigen::Matrix2d::Identity();
  return j;
}

Eigen::Vector2d symplectic_eigenvalues(const Eigen::Matrix4d& cov) {
  const Eigen::Matrix4d jc = symplectic_form() * cov;
  Eigen::EigenSolver<Eigen::Matrix4d> solver(jc, /*computeEigenvectors=*/false);
  Eigen::Vector4d mods = solver.eigenvalues().cwiseAbs();
  std::sort(mods.data(), mods.data() + 4);
  return {0.5 * (mods[0] + mods[1]), 0.5 * (mods[2] + mods[3])};
}

bool GaussianState::is_physical(double tol) const {
  if (cov.rows() != cov.cols() || cov.rows() != mean.size()) return false;
  if (((cov - cov.transpose()).array().abs() > 1e-12).any()) return false;
  if (cov.rows() == 2) {
    const double det = cov.determinant();
    return det >= 0.0 && std::sqrt(det) >= vacuum_variance - tol;
  }
  if (cov.rows() == 4) {
    return symplectic_eigenvalues(cov).minCoeff() >= vacuum_variance - tol;
  }
  return false;
}

namespace {

double signal_mean_dual(const BogoliubovPair& c, double alpha_mag, double theta_s0, double phi) {
  return alpha_mag * (std::abs(c.mu) * std::cos(c.theta_mu() + theta_s0 - phi) +
                      std::abs(c.nu) * std::cos(c.theta_nu() - theta_s0 - phi));
}

double g0(const BogoliubovPair& c) { return std::norm(c.mu) + std::norm(c.nu); }

double signal_mean_single(const BogoliubovPair& c, FieldAmplitude as0, FieldAmplitude ai0,
                          double phi) {
  return std::abs(c.mu) * std::abs(as0) * std::cos(c.theta_mu() + std::arg(as0) - phi) +
         std::abs(c.nu) * std::abs(ai0) * std::cos(c.theta_nu() - std::arg(ai0) - phi);
}

double idler_mean_single(const BogoliubovPair& c, FieldAmplitude as0, FieldAmplitude ai0,
                         double phi) {
  return std::abs(c.nu) * std::abs(as0) * std::cos(c.theta_nu() - std::arg(as0) - phi) +
         std::abs(c.mu) * std::abs(ai0) * std::cos(c.theta_mu() + std::arg(ai0) - phi);
}

}  // namespace

HomodyneStats homodyne_stats(const BogoliubovPair& coeffs, FieldAmplitude alpha_s0, double phi) {
  const double am = std::abs(coeffs.mu);
  const double an = std::abs(coeffs.nu);
  HomodyneStats stats;
  stats.mean = signal_mean_dual(coeffs, std::abs(alpha_s0), std::arg(alpha_s0), phi);
  stats.variance =
      (2.0 * am * an * std::cos(coeffs.theta_mu() + coeffs.theta_nu() - 2.0 * phi) + am * am +
       an * an) / 4.0;
  return stats;
}

SnrReport noise_figure(const BogoliubovPair& coeffs, double theta_s0, double phi,
                       double alpha_mag) {
  if (!(alpha_mag > 0.0)) throw ValidationError("alpha magnitude must be > 0");
  const HomodyneStats out = homodyne_stats(coeffs, std::polar(alpha_mag, theta_s0), phi);
  SnrReport report;
  report.snr_in = 4.0 * alpha_mag * alpha_mag;
  report.snr_out = out.mean * out.mean / out.variance;
  report.noise_figure = report.snr_in / report.snr_out;
  return report;
}

HomodyneStats homodyne_stats_single(const BogoliubovPair& coeffs, FieldAmplitude alpha_s0,
                                    FieldAmplitude alpha_i0, const HomodyneSetting& setting) {
  const double phi = setting.phi;
  HomodyneStats stats;
  switch (setting.mode) {
    case HomodyneSetting::Mode::signal:
      stats.mean = signal_mean_single(coeffs, alpha_s0, alpha_i0, phi);
      stats.variance = g0(coeffs) / 4.0;
      break;
    case HomodyneSetting::Mode::idler:
      stats.mean = idler_mean_single(coeffs, alpha_s0, alpha_i0, phi);
      stats.variance = g0(coeffs) / 4.0;
      break;
    case HomodyneSetting::Mode::joint_sum: {
      stats.mean = (signal_mean_single(coeffs, alpha_s0, alpha_i0, phi) +
                    idler_mean_single(coeffs, alpha_s0, alpha_i0, phi)) / std::numbers::sqrt2;
      const double corr = std::abs(coeffs.mu) * std::abs(coeffs.nu) *
                          std::cos(coeffs.theta_mu() + coeffs.theta_nu() - 2.0 * phi);
      stats.variance = g0(coeffs) / 4.0 + corr / 2.0;
      break;
    }
  }
  return stats;
}

SnrReport noise_figure_joint(const BogoliubovPair& coeffs, FieldAmplitude alpha_s0,
                             FieldAmplitude alpha_i0, double phi) {
  const double amp_sum = std::abs(alpha_s0) + std::abs(alpha_i0);
  if (!(amp_sum > 0.0)) throw ValidationError("joint noise figure needs a nonzero input");
  const HomodyneStats out =
      homodyne_stats_single(coeffs, alpha_s0, alpha_i0,
                            {phi, HomodyneSetting::Mode::joint_sum});
  SnrReport report;
  report.snr_in = 2.0 * amp_sum * amp_sum;
  report.snr_out = out.mean * out.mean / out.variance;
  report.noise_figure = report.snr_in / report.snr_out;
  return report;
}

SnrReport joint_mode_nf(const BogoliubovPair& coeffs, FieldAmplitude alpha_s0) {
  const double p_s = std::norm(alpha_s0);
  if (!(p_s > 0.0)) throw ValidationError("joint noise figure needs a nonzero input");
  const double theta_s0 = std::arg(alpha_s0);

  // optimal per-mode detection phases for the conjugate-idler input
  const double theta_s = coeffs.theta_mu() + theta_s0;
  const double theta_i = coeffs.theta_nu() - theta_s0;

  const Eigen::Matrix4d sigma = output_covariance(coeffs, CovBasis::signal_idler);
  const Eigen::Matrix4d transf = joint_sum_transform(theta_s, theta_i);
  const double variance = (transf * sigma * transf.transpose())(0, 0);
  const double mean = std::numbers::sqrt2 * coeffs.s_plus() * std::abs(alpha_s0);

  SnrReport report;
  report.snr_in = 8.0 * p_s;
  report.snr_out = mean * mean / variance;
  report.noise_figure = report.snr_in / report.snr_out;
  return report;
}

SnrReport signal_only_nf(const BogoliubovPair& coeffs, FieldAmplitude alpha_s0,
                         FieldAmplitude alpha_i0, double phi, InputSnrConvention convention) {
  if (!(std::abs(alpha_s0) > 0.0)) throw ValidationError("signal input must be nonzero");
  const HomodyneStats out =
      homodyne_stats_single(coeffs, alpha_s0, alpha_i0, {phi, HomodyneSetting::Mode::signal});
  SnrReport report;
  if (convention == InputSnrConvention::joint_input) {
    const double amp_sum = std::abs(alpha_s0) + std::abs(alpha_i0);
    report.snr_in = 2.0 * amp_sum * amp_sum;
  } else {
    report.snr_in = 4.0 * std::norm(alpha_s0);
  }
  report.snr_out = out.mean * out.mean / out.variance;
  report.noise_figure = report.snr_in / report.snr_out;
  return report;
}

SnrReport vacuum_idler_nf(const BogoliubovPair& coeffs, FieldAmplitude alpha_s0) {
  if (!(std::abs(alpha_s0) > 0.0)) throw ValidationError("signal input must be nonzero");
  const double phi = coeffs.theta_mu() + std::arg(alpha_s0);  // optimal detection
  const HomodyneStats out = homodyne_stats_single(coeffs, alpha_s0, FieldAmplitude{0.0, 0.0},
                                                  {phi, HomodyneSetting::Mode::signal});
  SnrReport report;
  report.snr_in = 4.0 * std::norm(alpha_s0);
  report.snr_out = out.mean * out.mean / out.variance;
  report.noise_figure = report.snr_in / report.snr_out;
  return report;
}

Eigen::Matrix4d two_mode_transfer(const BogoliubovPair& coeffs) {
  const double mr = coeffs.mu.real(), mi = coeffs.mu.imag();
  const double nr = coeffs.nu.real(), ni = coeffs.nu.imag();
  Eigen::Matrix4d s;
  s << mr, nr, -mi, ni,
       nr, mr, ni, -mi,
       mi, ni, mr, -nr,
       ni, mi, -nr, mr;
  return s;
}

Eigen::Matrix4d output_covariance(const BogoliubovPair& coeffs, CovBasis basis) {
  if (basis == CovBasis::signal_idler) {
    const Eigen::Matrix4d s = two_mode_transfer(coeffs);
    return s * s.transpose() * vacuum_variance;
  }
  const double sp2 = coeffs.s_plus() * coeffs.s_plus();
  const double sm2 = coeffs.s_minus() * coeffs.s_minus();
  Eigen::Vector4d diag(sp2, sm2, sm2, sp2);
  return (diag * vacuum_variance).asDiagonal();
}

Eigen::Matrix4d pm_basis_matrix() {
  Eigen::Matrix4d t = Eigen::Matrix4d::Zero();
  const double s = 1.0 / std::numbers::sqrt2;
  t(0, 0) = s; t(0, 1) = s;
  t(1, 0) = s; t(1, 1) = -s;
  t(2, 2) = s; t(2, 3) = s;
  t(3, 2) = s; t(3, 3) = -s;
  return t;
}

Eigen::Matrix4d joint_sum_transform(double theta_s, double theta_i) {
  const double cs = std::cos(theta_s), ss = std::sin(theta_s);
  const double ci = std::cos(theta_i), si = std::sin(theta_i);
  Eigen::Matrix4d t;
  t << cs, ci, ss, si,
       cs, -ci, ss, -si,
       -ss, -si, cs, ci,
       -ss, si, cs, -ci;
  return t / std::numbers::sqrt2;
}

double duan_criterion_lhs(const BogoliubovPair& coeffs) {
  const Eigen::Matrix4d sigma = output_covariance(coeffs, CovBasis::rotated_pm);
  return sigma(1, 1) + sigma(2, 2);
}

}  // namespace psa
