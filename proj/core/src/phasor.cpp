#include "psa/phasor.hpp"

#include <cmath>
#include <numbers>

#include "psa/linalg.hpp"
#include "psa/quantum_noise.hpp"

namespace psa {

namespace {

struct RawAngles {
  double theta;
  double phi;
};

// decomposition angles before branch normalization, so that the stage
// composition R(theta) Sigma R(phi)^T equals the transfer with no sign fix
RawAngles raw_angles(const BogoliubovPair& coeffs) {
  if (std::abs(coeffs.nu) == 0.0) return {coeffs.theta_mu(), 0.0};
  return {(coeffs.theta_mu() + coeffs.theta_nu()) / 2.0,
          -(coeffs.theta_mu() - coeffs.theta_nu()) / 2.0};
}

Eigen::Vector2d quad(FieldAmplitude a) { return {a.real(), a.imag()}; }

PhasorMode make_mode(std::string name, const Eigen::Vector2d& mean, const Eigen::Matrix2d& cov) {
  return {std::move(name), mean, cov};
}

}  // namespace

PhasorTrace phasor_trace(const BogoliubovPair& coeffs, FieldAmplitude alpha_s0) {
  const auto [theta, phi] = raw_angles(coeffs);
  const Eigen::Matrix2d vac = Eigen::Matrix2d::Identity() * vacuum_variance;
  const Eigen::Matrix2d rot_in = rotation2(-phi);
  const Eigen::Matrix2d squeeze = Eigen::Vector2d(coeffs.s_plus(), coeffs.s_minus()).asDiagonal();
  const Eigen::Matrix2d rot_out = rotation2(theta);

  PhasorTrace trace;
  Eigen::Vector2d mean = quad(alpha_s0);
  Eigen::Matrix2d cov = vac;
  trace.stages.push_back({"input", {make_mode("signal", mean, cov)}});

  mean = rot_in * mean;
  cov = rot_in * cov * rot_in.transpose();
  trace.stages.push_back({"after_input_rotation", {make_mode("signal", mean, cov)}});

  mean = squeeze * mean;
  cov = squeeze * cov * squeeze.transpose();
  trace.stages.push_back({"after_squeeze", {make_mode("signal", mean, cov)}});

  mean = rot_out * mean;
  cov = rot_out * cov * rot_out.transpose();
  trace.stages.push_back({"output", {make_mode("signal", mean, cov)}});

  const Eigen::Matrix2d direct = quad_transfer(coeffs, QuadBasis::signal).m;
  trace.composition_error = (rot_out * squeeze * rot_in - direct).cwiseAbs().maxCoeff();
  return trace;
}

PhasorTrace phasor_trace(const BogoliubovPair& coeffs, FieldAmplitude alpha_s0,
                         FieldAmplitude alpha_i0) {
  const auto [theta, phi] = raw_angles(coeffs);
  const Eigen::Matrix2d vac = Eigen::Matrix2d::Identity() * vacuum_variance;
  const Eigen::Matrix2d rot_in = rotation2(-phi);
  const Eigen::Matrix2d rot_out = rotation2(theta);
  const Eigen::Matrix2d squeeze_p = Eigen::Vector2d(coeffs.s_plus(), coeffs.s_minus()).asDiagonal();
  const Eigen::Matrix2d squeeze_m = Eigen::Vector2d(coeffs.s_minus(), coeffs.s_plus()).asDiagonal();

  PhasorTrace trace;
  trace.stages.push_back({"input",
                          {make_mode("signal", quad(alpha_s0), vac),
                           make_mode("idler", quad(alpha_i0), vac)}});

  const auto [a_plus, a_minus] = pm_basis(alpha_s0, alpha_i0, PmDirection::to_pm);
  Eigen::Vector2d mp = quad(a_plus), mm = quad(a_minus);
  Eigen::Matrix2d cp = vac, cm = vac;
  trace.stages.push_back({"input_pm", {make_mode("plus", mp, cp), make_mode("minus", mm, cm)}});

  mp = rot_in * mp; mm = rot_in * mm;
  cp = rot_in * cp * rot_in.transpose();
  cm = rot_in * cm * rot_in.transpose();
  trace.stages.push_back(
      {"after_input_rotation", {make_mode("plus", mp, cp), make_mode("minus", mm, cm)}});

  mp = squeeze_p * mp; mm = squeeze_m * mm;
  cp = squeeze_p * cp * squeeze_p.transpose();
  cm = squeeze_m * cm * squeeze_m.transpose();
  trace.stages.push_back(
      {"after_squeeze", {make_mode("plus", mp, cp), make_mode("minus", mm, cm)}});

  mp = rot_out * mp; mm = rot_out * mm;
  cp = rot_out * cp * rot_out.transpose();
  cm = rot_out * cm * rot_out.transpose();
  trace.stages.push_back({"output_pm", {make_mode("plus", mp, cp), make_mode("minus", mm, cm)}});

  // back to signal/idler; covariances from the full two-mode output state
  const Eigen::Vector2d mean_s = (mp + mm) / std::numbers::sqrt2;
  const Eigen::Vector2d mean_i = (mp - mm) / std::numbers::sqrt2;
  const Eigen::Matrix4d sigma = output_covariance(coeffs, CovBasis::signal_idler);
  Eigen::Matrix2d cov_s, cov_i;
  cov_s << sigma(0, 0), sigma(0, 2), sigma(2, 0), sigma(2, 2);
  cov_i << sigma(1, 1), sigma(1, 3), sigma(3, 1), sigma(3, 3);
  trace.stages.push_back(
      {"output", {make_mode("signal", mean_s, cov_s), make_mode("idler", mean_i, cov_i)}});

  // composition check in the full 4x4 quadrature space
  const Eigen::Matrix2d m_plus = rot_out * squeeze_p * rot_in;
  const Eigen::Matrix2d m_minus = rot_out * squeeze_m * rot_in;
  Eigen::Matrix4d block = Eigen::Matrix4d::Zero();  // ordering (x+, x-, y+, y-)
  block(0, 0) = m_plus(0, 0); block(0, 2) = m_plus(0, 1);
  block(2, 0) = m_plus(1, 0); block(2, 2) = m_plus(1, 1);
  block(1, 1) = m_minus(0, 0); block(1, 3) = m_minus(0, 1);
  block(3, 1) = m_minus(1, 0); block(3, 3) = m_minus(1, 1);
  const Eigen::Matrix4d pm = pm_basis_matrix();
  const Eigen::Matrix4d composed = pm.transpose() * block * pm;
  trace.composition_error =
      (composed - two_mode_transfer(coeffs)).cwiseAbs().maxCoeff();
  return trace;
}

}  // namespace psa
