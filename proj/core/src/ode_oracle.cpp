#include "psa/ode_oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace psa {

namespace {

using Fields = std::array<complexd, 3>;

Fields derivatives(double z, const Fields& a, const FiberParams& fiber) {
  const double g = fiber.gamma;
  const double p1 = std::norm(a[0]);
  const double p2 = std::norm(a[1]);
  const double p3 = std::norm(a[2]);
  const complexd mix = std::polar(1.0, fiber.delta_beta * z);
  const complexd i_g(0.0, g);
  return {
      i_g * ((p1 + 2.0 * p2 + 2.0 * p3) * a[0] + a[1] * a[1] * std::conj(a[2]) * mix),
      i_g * ((2.0 * p1 + p2 + 2.0 * p3) * a[1] + 2.0 * a[0] * a[2] * std::conj(a[1]) / mix),
      i_g * ((2.0 * p1 + 2.0 * p2 + p3) * a[2] + std::conj(a[0]) * a[1] * a[1] * mix),
  };
}

Fields rk4_step(double z, const Fields& a, double h, const FiberParams& fiber) {
  const Fields k1 = derivatives(z, a, fiber);
  Fields t;
  for (int i = 0; i < 3; ++i) t[i] = a[i] + 0.5 * h * k1[i];
  const Fields k2 = derivatives(z + 0.5 * h, t, fiber);
  for (int i = 0; i < 3; ++i) t[i] = a[i] + 0.5 * h * k2[i];
  const Fields k3 = derivatives(z + 0.5 * h, t, fiber);
  for (int i = 0; i < 3; ++i) t[i] = a[i] + h * k3[i];
  const Fields k4 = derivatives(z + h, t, fiber);
  Fields out;
  for (int i = 0; i < 3; ++i) out[i] = a[i] + (h / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  return out;
}

}  // namespace

void IntegratorConfig::validate() const {
  detail::require_finite(step, "step");
  detail::require_finite(rel_tol, "rel_tol");
  detail::require_finite(abs_tol, "abs_tol");
  if (step <= 0.0) throw ValidationError("step must be > 0");
  if (rel_tol <= 0.0 || abs_tol <= 0.0) throw ValidationError("tolerances must be > 0");
  if (max_steps <= 0) throw ValidationError("max_steps must be > 0");
}

FieldState3 rhs(const FieldState3& state, const FiberParams& fiber) {
  fiber.validate();
  const Fields d = derivatives(state.z, {state.a1, state.a2, state.a3}, fiber);
  return {d[0], d[1], d[2], 1.0};
}

FieldState3 integrate(const FieldState3& initial, const FiberParams& fiber,
                      const IntegratorConfig& cfg) {
  fiber.validate();
  cfg.validate();
  for (const complexd& f : {initial.a1, initial.a2, initial.a3}) {
    detail::require_finite(f.real(), "field amplitude");
    detail::require_finite(f.imag(), "field amplitude");
  }
  detail::require_finite(initial.z, "z");

  Fields a{initial.a1, initial.a2, initial.a3};
  double z = initial.z;
  const double z_end = fiber.length;
  if (z > z_end) throw ValidationError("initial z beyond fiber length");

  double h = std::min(cfg.step, z_end - z);
  long steps = 0;
  while (z < z_end) {
    if (++steps > cfg.max_steps) throw MaxStepsExceeded("integration exceeded max_steps");
    h = std::min(h, z_end - z);

    const Fields coarse = rk4_step(z, a, h, fiber);
    Fields fine = rk4_step(z, a, 0.5 * h, fiber);
    fine = rk4_step(z + 0.5 * h, fine, 0.5 * h, fiber);

    // step-doubling estimate: the half-step result is in error by ~diff/15
    double ratio = 0.0;
    for (int i = 0; i < 3; ++i) {
      const double err = std::abs(coarse[i] - fine[i]) / 15.0;
      const double scale = cfg.abs_tol + cfg.rel_tol * std::max(std::abs(a[i]), std::abs(fine[i]));
      ratio = std::max(ratio, err / scale);
    }

    if (ratio <= 1.0) {
      for (int i = 0; i < 3; ++i) a[i] = fine[i] + (fine[i] - coarse[i]) / 15.0;
      z += h;
      h *= std::clamp(0.9 * std::pow(std::max(ratio, 1e-16), -0.2), 1.0, 5.0);
    } else {
      h *= std::clamp(0.9 * std::pow(ratio, -0.2), 0.2, 0.9);
    }
  }
  return {a[0], a[1], a[2], z};
}

double total_power(const FieldState3& state) {
  return std::norm(state.a1) + std::norm(state.a2) + std::norm(state.a3);
}

namespace {

struct ProbeRuns {
  complexd out_probe[2];    // probe-mode output for probe phases {0, pi/2}
  complexd out_partner[2];  // conjugate-partner output (single-pump only)
};

void check_depletion(const FieldState3& out, const FieldState3& in, int mode_a, int mode_b) {
  const complexd in_f[3] = {in.a1, in.a2, in.a3};
  const complexd out_f[3] = {out.a1, out.a2, out.a3};
  for (int m : {mode_a, mode_b}) {
    if (m < 0) continue;
    const double p_in = std::norm(in_f[m]);
    if (p_in == 0.0) continue;
    if (std::abs(std::norm(out_f[m]) - p_in) / p_in > 1e-6) {
      throw ProbeTooLarge("pump depletion above 1e-6 relative detected");
    }
  }
}

// The leading extraction error is the probe's second-order feedback on the
// pump phase, linear in the probe power and in the gain; keep it near 1e-8.
double auto_probe(double pump_power_min, double gain_estimate) {
  const double ratio = std::min(1e-10, 1e-8 / std::max(gain_estimate, 1.0));
  return std::sqrt(pump_power_min * ratio);
}

void check_probe_precondition(double probe_eps, double pump_power_min) {
  if (probe_eps <= 0.0 || !std::isfinite(probe_eps)) {
    throw ProbeTooLarge("probe_eps must be finite and > 0");
  }
  if (probe_eps * probe_eps / pump_power_min > 1e-8) {
    throw ProbeTooLarge("probe power exceeds 1e-8 of the pump power");
  }
}

}  // namespace

BogoliubovPair extract_mu_nu(const FiberParams& fiber, const DualPumpConfig& pumps,
                             double probe_eps, const IntegratorConfig& cfg) {
  fiber.validate();
  pumps.validate();
  const BogoliubovPair analytic = dual_pump_coeffs(fiber, pumps);  // probe sizing only

  const double p_min = std::min(pumps.p1, pumps.p3);
  if (p_min <= 0.0) throw ValidationError("dual-pump extraction requires both pump powers > 0");
  const double eps = probe_eps > 0.0 ? probe_eps : auto_probe(p_min, gain_extrema(analytic).g_max);
  check_probe_precondition(eps, p_min);

  const complexd a1 = std::polar(std::sqrt(pumps.p1), pumps.theta10);
  const complexd a3 = std::polar(std::sqrt(pumps.p3), pumps.theta30);

  complexd resp[2];
  for (int k = 0; k < 2; ++k) {
    const complexd probe = (k == 0) ? complexd(eps, 0.0) : complexd(0.0, eps);
    const FieldState3 in{a1, probe, a3, 0.0};
    const FieldState3 out = integrate(in, fiber, cfg);
    check_depletion(out, in, 0, 2);
    resp[k] = out.a2;
  }

  const complexd r0 = resp[0] / eps;
  const complexd r1 = resp[1] / complexd(0.0, eps);
  BogoliubovPair pair = analytic;
  pair.mu = 0.5 * (r0 + r1);
  pair.nu = 0.5 * (r0 - r1);
  return pair;
}

BogoliubovPair extract_mu_nu(const FiberParams& fiber, const SinglePumpConfig& pump,
                             double probe_eps, const IntegratorConfig& cfg) {
  fiber.validate();
  pump.validate();
  const BogoliubovPair analytic = single_pump_coeffs(fiber, pump);  // probe sizing only

  if (pump.p2 <= 0.0) {
    return analytic;  // no pump: exact identity, nothing to probe
  }
  const double eps = probe_eps > 0.0 ? probe_eps : auto_probe(pump.p2, gain_extrema(analytic).g_max);
  check_probe_precondition(eps, pump.p2);

  const complexd a2 = std::polar(std::sqrt(pump.p2), pump.theta20);

  complexd mu_est[2], nu_est[2];
  for (int k = 0; k < 2; ++k) {
    const complexd probe = (k == 0) ? complexd(eps, 0.0) : complexd(0.0, eps);
    const FieldState3 in{probe, a2, complexd(0.0, 0.0), 0.0};
    const FieldState3 out = integrate(in, fiber, cfg);
    check_depletion(out, in, 1, -1);
    mu_est[k] = out.a1 / probe;
    nu_est[k] = out.a3 / std::conj(probe);
  }

  BogoliubovPair pair = analytic;
  pair.mu = 0.5 * (mu_est[0] + mu_est[1]);
  pair.nu = 0.5 * (nu_est[0] + nu_est[1]);
  return pair;
}

}  // namespace psa
