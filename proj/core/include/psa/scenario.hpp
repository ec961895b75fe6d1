#pragma once

#include <istream>
#include <optional>
#include <string>

#include "psa/fwm.hpp"
#include "psa/loss_model.hpp"

namespace psa {

/// One sweep specification. nf_grid sweeps theta_s0 on the primary axis and
/// the detection phase on the secondary one.
struct ScanSpec {
  std::string variable;  ///< theta_s0 | pump_power | tau | nf_grid
  double from = 0.0;
  double to = 0.0;
  int steps = 0;
  // secondary axis, nf_grid only
  double phi_from = 0.0;
  double phi_to = 0.0;
  int phi_steps = 0;
};

struct LossSection {
  LossChannel channel;
  LinkOrder order = LinkOrder::amplifier_then_loss;
  std::optional<double> tau_idler;
};

/// Parsed scenario file: sectioned key-value text with units in key names.
/// Sections: fiber, config, pumps, signal, idler, loss, detection, scan.
struct Scenario {
  FiberParams fiber;
  PumpScheme scheme = PumpScheme::dual_pump;
  BPhaseConvention convention = BPhaseConvention::pump_phase_included;
  std::optional<DualPumpConfig> dual_pumps;
  std::optional<SinglePumpConfig> single_pump;
  std::optional<FieldAmplitude> signal_in;
  std::optional<FieldAmplitude> idler_in;
  bool idler_optimal = false;  ///< [idler] optimal = true: conjugate idler input
  std::optional<LossSection> loss;
  std::optional<double> detection_phi;
  std::optional<ScanSpec> scan;

  /// Propagator pair for the configured scheme.
  BogoliubovPair coeffs() const;
  /// Signal input, defaulting to a unit-amplitude field on the real axis.
  FieldAmplitude signal_or_default() const;
  /// Idler input: explicit value, the optimal conjugate idler, or vacuum.
  FieldAmplitude idler_or_default(const BogoliubovPair& coeffs) const;
};

/// Throws ParseError (malformed line, unknown key, bad number) with the line
/// number, or ValidationError when a required section or key is missing.
Scenario parse_scenario(std::istream& in);
Scenario parse_scenario_file(const std::string& path);

}  // namespace psa
