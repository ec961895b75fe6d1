#pragma once

#include <complex>
#include <utility>

#include <Eigen/Dense>

#include "psa/errors.hpp"

namespace psa {

using complexd = std::complex<double>;

/// Complex field amplitude in sqrt(W), A = |A| e^{i theta}.
using FieldAmplitude = complexd;

/// Fiber segment seen by the mixing process. SI units throughout.
struct FiberParams {
  double gamma = 0.0;       ///< nonlinear coefficient, W^-1 m^-1
  double delta_beta = 0.0;  ///< linear phase mismatch, m^-1
  double length = 0.0;      ///< propagation distance, m

  void validate() const;
};

/// Two non-degenerate pumps; the amplified wave carries signal and idler
/// degenerately ("dual-pump" scheme, scenario tag A).
struct DualPumpConfig {
  double p1 = 0.0;       ///< pump 1 power, W
  double p3 = 0.0;       ///< pump 3 power, W
  double theta10 = 0.0;  ///< pump 1 input phase, rad
  double theta30 = 0.0;  ///< pump 3 input phase, rad

  void validate() const;
};

/// One degenerate pump driving distinct signal and idler waves
/// ("single-pump" scheme, scenario tag B).
struct SinglePumpConfig {
  double p2 = 0.0;       ///< pump power, W
  double theta20 = 0.0;  ///< pump input phase, rad

  void validate() const;
};

enum class PumpScheme { dual_pump, single_pump };

/// Overall phase of (mu, nu) in the single-pump scheme. The physically
/// correct propagator carries the pump-induced phase e^{i gamma P2 z} on top
/// of e^{i delta_beta z / 2}; the reduced convention omits it. Magnitudes,
/// gains and the input rotation angle phi are identical in both conventions;
/// only the output rotation angle theta shifts. The ODE oracle reproduces
/// pump_phase_included.
enum class BPhaseConvention { pump_phase_included, pump_phase_omitted };

/// Bogoliubov pair of the linear input-output map a -> mu a + nu a*,
/// with |mu|^2 - |nu|^2 = 1.
struct BogoliubovPair {
  complexd mu{1.0, 0.0};
  complexd nu{0.0, 0.0};
  double kappa = 0.0;      ///< nonlinear phase mismatch, m^-1
  double g_squared = 0.0;  ///< squared parametric gain coefficient, m^-2
  PumpScheme scheme = PumpScheme::dual_pump;

  double theta_mu() const { return std::arg(mu); }
  double theta_nu() const { return std::arg(nu); }
  double s_plus() const { return std::abs(mu) + std::abs(nu); }
  double s_minus() const { return std::abs(mu) - std::abs(nu); }
  /// |mu|^2 - |nu|^2 - 1; zero for a symplectic pair.
  double symplectic_defect() const { return std::norm(mu) - std::norm(nu) - 1.0; }
};

/// cosh(g z) and sinh(g z)/g expressed through g^2, continued analytically
/// through g^2 <= 0 (cos / sinc branch, series near the branch point).
struct GrowthFactors {
  double c;         ///< cosh(g z)
  double s_over_g;  ///< sinh(g z)/g, finite at g = 0
};
GrowthFactors growth_factors(double g_squared, double z);

/// Propagator pair for the dual-pump scheme.
BogoliubovPair dual_pump_coeffs(const FiberParams& fiber, const DualPumpConfig& pumps);

/// Propagator pair for the single-pump scheme. p2 == 0 yields the exact
/// identity pair.
BogoliubovPair single_pump_coeffs(const FiberParams& fiber, const SinglePumpConfig& pump,
                                  BPhaseConvention convention = BPhaseConvention::pump_phase_included);

/// Classical power gain of the degenerate signal (dual-pump scheme) as a
/// function of its input phase.
double power_gain_degenerate(const BogoliubovPair& coeffs, double theta_s0);

/// Signal power gain in the single-pump scheme; eta = sqrt(P_i0 / P_s0) >= 0.
double power_gain_signal(const BogoliubovPair& coeffs, double theta_s0, double theta_i0, double eta);

/// Idler power gain in the single-pump scheme; same expression with eta -> 1/eta.
double power_gain_idler(const BogoliubovPair& coeffs, double theta_s0, double theta_i0, double eta);

struct GainExtrema {
  double g_max;  ///< (|mu| + |nu|)^2
  double g_min;  ///< (|mu| - |nu|)^2, g_max * g_min = 1
};
GainExtrema gain_extrema(const BogoliubovPair& coeffs);

/// Quadrature basis of a 2x2 transfer matrix: the degenerate signal itself,
/// or the symmetric/antisymmetric signal-idler combinations.
enum class QuadBasis { signal, plus, minus };

/// Real 2x2 symplectic quadrature transfer, det = 1.
struct QuadTransfer {
  Eigen::Matrix2d m = Eigen::Matrix2d::Identity();
  QuadBasis basis = QuadBasis::signal;

  double det() const { return m.determinant(); }
};

/// Quadrature transfer matrix of the pair in the given basis; the minus
/// basis flips the sign of nu.
QuadTransfer quad_transfer(const BogoliubovPair& coeffs, QuadBasis basis);

enum class PmDirection { to_pm, from_pm };

/// Change of basis A_pm = (A_s +- A_i)/sqrt(2) and its inverse. Involutive
/// and power conserving.
std::pair<FieldAmplitude, FieldAmplitude> pm_basis(FieldAmplitude a_s, FieldAmplitude a_i,
                                                   PmDirection direction);

/// Single-pump parameters whose propagator magnitudes reproduce a dual-pump
/// configuration: P2 = 2 sqrt(P1 P3), 2 theta20 = theta10 + theta30. The
/// phase factors correspond under the substitution of the dual-pump
/// effective mismatch delta for delta_beta / 2; for a magnitude-level match
/// the single-pump delta_beta must be chosen so that the two nonlinear
/// mismatches kappa coincide. Cross-check helper only.
SinglePumpConfig map_dual_to_single(const DualPumpConfig& pumps);

namespace detail {
void require_finite(double v, const char* name);
/// Wrap an angle into (-pi, pi].
double wrap_pi(double angle);
/// Wrap an angle into (-pi/2, pi/2].
double wrap_half_pi(double angle);
}  // namespace detail

}  // namespace psa
