#pragma once

#include <Eigen/Dense>

#include "psa/fwm.hpp"
#include "psa/linalg.hpp"

namespace psa {

/// Quadrature variance of the vacuum, x = (a e^{-i phi} + a^+ e^{i phi})/2.
inline constexpr double vacuum_variance = 0.25;

/// Quadrature mean vector and covariance matrix. Two-mode states are ordered
/// (x_s, x_i, y_s, y_i); single-mode states (x, y).
struct GaussianState {
  Eigen::VectorXd mean;
  Eigen::MatrixXd cov;

  /// Symmetric and above the vacuum bound (symplectic eigenvalues, or
  /// sqrt(det) for a single mode, >= 1/4 - tol).
  bool is_physical(double tol = 1e-10) const;
};

struct HomodyneSetting {
  enum class Mode { signal, idler, joint_sum };
  double phi = 0.0;  ///< local-oscillator phase, rad
  Mode mode = Mode::signal;
};

/// Input/output signal-to-noise ratios of a homodyne measurement and their
/// ratio. noise_figure = snr_in / snr_out, in linear units.
struct SnrReport {
  double snr_in = 0.0;
  double snr_out = 0.0;
  double noise_figure = 1.0;
};

struct HomodyneStats {
  double mean = 0.0;
  double variance = vacuum_variance;
};

/// Which input power enters the reference SNR when only the signal is
/// detected at the output of the single-pump scheme: the full two-mode input
/// or the signal alone (the "idler-ignorant" accounting).
enum class InputSnrConvention { joint_input, signal_only_input };

// -- dual-pump scheme (degenerate signal) ------------------------------------

/// Homodyne mean and variance of the amplified degenerate signal at
/// local-oscillator phase phi, for a coherent input alpha_s0.
HomodyneStats homodyne_stats(const BogoliubovPair& coeffs, FieldAmplitude alpha_s0, double phi);

/// Noise figure of the dual-pump amplifier; independent of |alpha_s0|.
/// Equals 1 at theta_s0 = (theta_nu - theta_mu)/2, phi = (theta_mu + theta_nu)/2.
SnrReport noise_figure(const BogoliubovPair& coeffs, double theta_s0, double phi,
                       double alpha_mag = 1.0);

// -- single-pump scheme (distinct signal and idler) ---------------------------

/// Homodyne statistics of the signal, the idler, or their normalized sum at
/// a common local-oscillator phase. Signal and idler variances are isotropic,
/// (|mu|^2 + |nu|^2)/4.
HomodyneStats homodyne_stats_single(const BogoliubovPair& coeffs, FieldAmplitude alpha_s0,
                                    FieldAmplitude alpha_i0, const HomodyneSetting& setting);

/// Joint-sum noise figure at a common local-oscillator phase, for arbitrary
/// inputs; reference SNR counts both input modes. Exactly 1 at the optimal
/// input and phase.
SnrReport noise_figure_joint(const BogoliubovPair& coeffs, FieldAmplitude alpha_s0,
                             FieldAmplitude alpha_i0, double phi);

/// Joint-sum noise figure at the optimal conjugate idler input, with each
/// mode detected at its own optimal phase: exactly 1 for any coefficients.
SnrReport joint_mode_nf(const BogoliubovPair& coeffs, FieldAmplitude alpha_s0);

/// Noise figure when only the signal is detected at the output.
SnrReport signal_only_nf(const BogoliubovPair& coeffs, FieldAmplitude alpha_s0,
                         FieldAmplitude alpha_i0, double phi,
                         InputSnrConvention convention = InputSnrConvention::joint_input);

/// Vacuum idler input: the phase-insensitive figure of merit
/// (|mu|^2 + |nu|^2)/|mu|^2 -> 2 in the large-gain limit.
SnrReport vacuum_idler_nf(const BogoliubovPair& coeffs, FieldAmplitude alpha_s0);

// -- two-mode covariance layer -------------------------------------------------

/// 4x4 symplectic quadrature transfer of the signal-idler pair in the
/// ordering (x_s, x_i, y_s, y_i).
Eigen::Matrix4d two_mode_transfer(const BogoliubovPair& coeffs);

enum class CovBasis {
  signal_idler,  ///< output covariance in the bare signal/idler quadratures
  rotated_pm,    ///< output-rotated +- basis, where the covariance is diagonal
};

/// Output covariance for a coherent (or vacuum) input, cov_in = I/4.
Eigen::Matrix4d output_covariance(const BogoliubovPair& coeffs, CovBasis basis);

/// Change of basis (x_s, x_i, y_s, y_i) -> (x_+, x_-, y_+, y_-).
Eigen::Matrix4d pm_basis_matrix();

/// Rotate each mode by its own phase, then form the normalized sum and
/// difference; row 0 is the joint-sum quadrature.
Eigen::Matrix4d joint_sum_transform(double theta_s, double theta_i);

/// Left-hand side of the Duan inseparability bound in the rotated +- basis:
/// (|mu| - |nu|)^2 / 2. Values below 1/2 witness signal-idler entanglement.
double duan_criterion_lhs(const BogoliubovPair& coeffs);

}  // namespace psa
