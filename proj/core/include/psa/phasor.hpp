#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "psa/fwm.hpp"

namespace psa {

/// Mean quadratures and 2x2 covariance of one mode at one stage.
struct PhasorMode {
  std::string mode;  ///< signal | idler | plus | minus
  Eigen::Vector2d mean;
  Eigen::Matrix2d cov;
};

struct PhasorStage {
  std::string label;  ///< input | input_pm | after_input_rotation | after_squeeze | output_pm | output
  std::vector<PhasorMode> modes;
};

/// Stage-by-stage phase-space evolution through the rotation - squeeze -
/// rotation steps of the transfer, for coherent inputs (covariance I/4).
/// composition_error is the max-abs deviation of the stage composition from
/// the direct transfer.
struct PhasorTrace {
  std::vector<PhasorStage> stages;
  double composition_error = 0.0;
};

/// Dual-pump scheme: the degenerate signal walks through the three steps.
PhasorTrace phasor_trace(const BogoliubovPair& coeffs, FieldAmplitude alpha_s0);

/// Single-pump scheme: signal/idler are first combined into the +- modes,
/// each of which walks through its own squeezer, then converted back.
PhasorTrace phasor_trace(const BogoliubovPair& coeffs, FieldAmplitude alpha_s0,
                         FieldAmplitude alpha_i0);

}  // namespace psa
