#pragma once

#include <ostream>

#include "psa/report.hpp"
#include "psa/scenario.hpp"

namespace psa {

/// Single-point report: propagator pair, decomposition factors, gain extrema.
void cmd_coeffs(const Scenario& scenario, std::ostream& out,
                OutputFormat format = OutputFormat::kv);

/// Parameter sweep to CSV (scan section required). Throws UnknownScanVariable
/// for a variable outside {theta_s0, pump_power, tau, nf_grid}.
void cmd_scan(const Scenario& scenario, std::ostream& out,
              OutputFormat format = OutputFormat::csv);

/// Stage-by-stage phase-space trace of the transfer.
void cmd_phasor(const Scenario& scenario, std::ostream& out,
                OutputFormat format = OutputFormat::kv);

/// Compare the closed-form pair against the numerical extraction from the
/// full nonlinear system. Returns false when the error norm exceeds 1e-6.
bool cmd_oracle_check(const Scenario& scenario, std::ostream& out,
                      OutputFormat format = OutputFormat::kv);

}  // namespace psa
