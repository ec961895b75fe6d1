#include "psa/commands.hpp"

#include <cmath>
#include <sstream>

#include "psa/bloch_messiah.hpp"
#include "psa/loss_model.hpp"
#include "psa/ode_oracle.hpp"
#include "psa/optimum_input.hpp"
#include "psa/phasor.hpp"
#include "psa/quantum_noise.hpp"

namespace psa {

namespace {

const char* scheme_tag(PumpScheme scheme) {
  return scheme == PumpScheme::dual_pump ? "A" : "B";
}

double grid_point(double from, double to, int steps, int k) {
  if (steps <= 1) return from;
  return from + (to - from) * static_cast<double>(k) / static_cast<double>(steps - 1);
}

struct CoeffsSummary {
  BogoliubovPair pair;
  BMFactors factors;
  GainExtrema extrema;
};

CoeffsSummary summarize(const Scenario& sc) {
  const BogoliubovPair pair = sc.coeffs();
  return {pair, decompose(pair, QuadBasis::signal), gain_extrema(pair)};
}

void write_coeffs_kv(const Scenario& sc, const CoeffsSummary& s, std::ostream& out) {
  KvWriter kv(out);
  kv.add("scheme", scheme_tag(sc.scheme));
  if (sc.scheme == PumpScheme::single_pump) {
    kv.add("pump_phase", sc.convention == BPhaseConvention::pump_phase_included ? "included"
                                                                                : "omitted");
  }
  kv.add("mu_re", s.pair.mu.real());
  kv.add("mu_im", s.pair.mu.imag());
  kv.add("mu_abs", std::abs(s.pair.mu));
  kv.add_angle("mu_arg_rad", s.pair.theta_mu());
  kv.add("nu_re", s.pair.nu.real());
  kv.add("nu_im", s.pair.nu.imag());
  kv.add("nu_abs", std::abs(s.pair.nu));
  kv.add_angle("nu_arg_rad", s.pair.theta_nu());
  kv.add("kappa_per_m", s.pair.kappa);
  kv.add("g_squared_per_m2", s.pair.g_squared);
  kv.add_angle("theta_rad", s.factors.theta);
  kv.add_angle("phi_rad", s.factors.phi);
  kv.add("s_plus", s.factors.s_plus);
  kv.add("s_minus", s.factors.s_minus);
  kv.add("c_sign", s.factors.c_sign);
  kv.add_linear_db("g_max", s.extrema.g_max);
  kv.add_linear_db("g_min", s.extrema.g_min);
  if (sc.loss) {
    kv.add("loss_tau", sc.loss->channel.tau);
    kv.add("loss_order",
           sc.loss->order == LinkOrder::amplifier_then_loss ? "AL" : "LA");
  }

  // point homodyne report at the requested local-oscillator phase
  if (sc.detection_phi) {
    const double phi = *sc.detection_phi;
    const FieldAmplitude alpha_s0 = sc.signal_or_default();
    const FieldAmplitude alpha_i0 = sc.idler_or_default(s.pair);
    kv.add_angle("detection_phi_rad", phi);

    HomodyneStats stats;
    SnrReport report;
    if (sc.loss) {
      const LinkLayout layout{sc.loss->order, sc.scheme};
      std::optional<LossChannel> idler_loss;
      if (sc.loss->tau_idler) idler_loss = LossChannel{*sc.loss->tau_idler};
      stats = lossy_homodyne_stats(s.pair, layout, sc.loss->channel, {alpha_s0, alpha_i0}, phi,
                                   idler_loss);
      report = nf_with_loss(s.pair, layout, sc.loss->channel, {alpha_s0, alpha_i0}, phi,
                            idler_loss);
    } else if (sc.scheme == PumpScheme::dual_pump) {
      stats = homodyne_stats(s.pair, alpha_s0, phi);
      report = noise_figure(s.pair, std::arg(alpha_s0), phi,
                            std::abs(alpha_s0) > 0.0 ? std::abs(alpha_s0) : 1.0);
    } else {
      stats = homodyne_stats_single(s.pair, alpha_s0, alpha_i0,
                                    {phi, HomodyneSetting::Mode::signal});
      report = noise_figure_joint(s.pair, alpha_s0, alpha_i0, phi);
    }
    kv.add("homodyne_mean", stats.mean);
    kv.add("homodyne_variance", stats.variance);
    kv.add("snr_in", report.snr_in);
    kv.add("snr_out", report.snr_out);
    kv.add_linear_db("nf", report.noise_figure);
  }
}

void write_coeffs_csv(const Scenario& sc, const CoeffsSummary& s, std::ostream& out) {
  CsvWriter csv(out, {"scheme", "mu_re", "mu_im", "nu_re", "nu_im", "kappa_per_m",
                      "g_squared_per_m2", "theta_rad", "phi_rad", "s_plus", "s_minus", "c_sign",
                      "g_max", "g_min"});
  csv.raw_row({scheme_tag(sc.scheme), format_double(s.pair.mu.real()),
               format_double(s.pair.mu.imag()), format_double(s.pair.nu.real()),
               format_double(s.pair.nu.imag()), format_double(s.pair.kappa),
               format_double(s.pair.g_squared), format_double(s.factors.theta),
               format_double(s.factors.phi), format_double(s.factors.s_plus),
               format_double(s.factors.s_minus), format_double(s.factors.c_sign),
               format_double(s.extrema.g_max), format_double(s.extrema.g_min)});
}

double scan_nf_value(const Scenario& sc, const BogoliubovPair& pair, double theta_s0, double phi) {
  if (sc.scheme == PumpScheme::dual_pump) {
    if (sc.loss) {
      const LinkInputs inputs{std::polar(std::abs(sc.signal_or_default()), theta_s0), {0.0, 0.0}};
      const LinkLayout layout{sc.loss->order, sc.scheme};
      std::optional<LossChannel> idler_loss;
      if (sc.loss->tau_idler) idler_loss = LossChannel{*sc.loss->tau_idler};
      return nf_with_loss(pair, layout, sc.loss->channel, inputs, phi, idler_loss).noise_figure;
    }
    return noise_figure(pair, theta_s0, phi).noise_figure;
  }
  // single pump: conjugate idler input at the scanned signal phase
  const FieldAmplitude alpha_s0 = std::polar(std::abs(sc.signal_or_default()), theta_s0);
  const FieldAmplitude alpha_i0 = optimal_idler(pair, alpha_s0).idler_amplitude;
  if (sc.loss) {
    const LinkInputs inputs{alpha_s0, alpha_i0};
    const LinkLayout layout{sc.loss->order, sc.scheme};
    std::optional<LossChannel> idler_loss;
    if (sc.loss->tau_idler) idler_loss = LossChannel{*sc.loss->tau_idler};
    return nf_with_loss(pair, layout, sc.loss->channel, inputs, phi, idler_loss).noise_figure;
  }
  return noise_figure_joint(pair, alpha_s0, alpha_i0, phi).noise_figure;
}

}  // namespace

void cmd_coeffs(const Scenario& sc, std::ostream& out, OutputFormat format) {
  const CoeffsSummary s = summarize(sc);
  std::ostringstream buffer;
  if (format == OutputFormat::kv) {
    write_coeffs_kv(sc, s, buffer);
  } else {
    write_coeffs_csv(sc, s, buffer);
  }
  out << buffer.str();
}

void cmd_scan(const Scenario& sc, std::ostream& out, OutputFormat) {
  if (!sc.scan) throw ValidationError("scan command requires a [scan] section");
  const ScanSpec& spec = *sc.scan;
  std::ostringstream buffer;

  if (spec.variable == "theta_s0") {
    const BogoliubovPair pair = sc.coeffs();
    CsvWriter csv(buffer, {"theta_s0_rad", "gain", "gain_db"});
    const FieldAmplitude alpha_i0 = sc.idler_or_default(pair);
    const double mag_s = std::abs(sc.signal_or_default());
    for (int k = 0; k < spec.steps; ++k) {
      const double theta = grid_point(spec.from, spec.to, spec.steps, k);
      double gain;
      if (sc.scheme == PumpScheme::dual_pump) {
        gain = power_gain_degenerate(pair, theta);
      } else {
        if (mag_s <= 0.0) throw ValidationError("gain scan requires a nonzero signal input");
        gain = power_gain_signal(pair, theta, std::arg(alpha_i0), std::abs(alpha_i0) / mag_s);
      }
      csv.row({theta, gain, 10.0 * std::log10(gain)});
    }
  } else if (spec.variable == "pump_power") {
    if (sc.scheme != PumpScheme::single_pump) {
      throw ValidationError("pump_power scan is defined for the single-pump scheme (type B)");
    }
    CsvWriter csv(buffer, {"pump_power_W", "duan_lhs", "g_max", "g_min"});
    for (int k = 0; k < spec.steps; ++k) {
      const double p2 = grid_point(spec.from, spec.to, spec.steps, k);
      SinglePumpConfig pump = *sc.single_pump;
      pump.p2 = p2;
      const BogoliubovPair pair = single_pump_coeffs(sc.fiber, pump, sc.convention);
      const GainExtrema ext = gain_extrema(pair);
      csv.row({p2, duan_criterion_lhs(pair), ext.g_max, ext.g_min});
    }
  } else if (spec.variable == "tau") {
    const BogoliubovPair pair = sc.coeffs();
    CsvWriter csv(buffer, {"tau", "nf_al_opt", "nf_la_opt", "nf_ratio"});
    for (int k = 0; k < spec.steps; ++k) {
      const double tau = grid_point(spec.from, spec.to, spec.steps, k);
      const LossChannel channel{tau};
      const double al = nf_optimum(pair, {LinkOrder::amplifier_then_loss, sc.scheme}, channel);
      const double la = nf_optimum(pair, {LinkOrder::loss_then_amplifier, sc.scheme}, channel);
      csv.row({tau, al, la, layout_ratio(pair, channel)});
    }
  } else if (spec.variable == "nf_grid") {
    const BogoliubovPair pair = sc.coeffs();
    CsvWriter csv(buffer, {"theta_s0_rad", "phi_rad", "nf", "nf_db"});
    for (int i = 0; i < spec.steps; ++i) {
      const double theta = grid_point(spec.from, spec.to, spec.steps, i);
      for (int j = 0; j < spec.phi_steps; ++j) {
        const double phi = grid_point(spec.phi_from, spec.phi_to, spec.phi_steps, j);
        const double nf = scan_nf_value(sc, pair, theta, phi);
        csv.row({theta, phi, nf, 10.0 * std::log10(nf)});
      }
    }
  } else {
    throw UnknownScanVariable("unknown scan variable: " + spec.variable);
  }

  out << buffer.str();
}

void cmd_phasor(const Scenario& sc, std::ostream& out, OutputFormat format) {
  const BogoliubovPair pair = sc.coeffs();
  const FieldAmplitude alpha_s0 = sc.signal_or_default();
  const PhasorTrace trace = sc.scheme == PumpScheme::dual_pump
                                ? phasor_trace(pair, alpha_s0)
                                : phasor_trace(pair, alpha_s0, sc.idler_or_default(pair));

  std::ostringstream buffer;
  if (format == OutputFormat::kv) {
    KvWriter kv(buffer);
    kv.add("scheme", scheme_tag(sc.scheme));
    kv.add("stages", static_cast<double>(trace.stages.size()));
    for (std::size_t i = 0; i < trace.stages.size(); ++i) {
      const PhasorStage& stage = trace.stages[i];
      const std::string prefix = "stage" + std::to_string(i) + "_";
      kv.add(prefix + "label", stage.label);
      for (const PhasorMode& mode : stage.modes) {
        const std::string mp = prefix + mode.mode + "_";
        kv.add(mp + "mean_x", mode.mean.x());
        kv.add(mp + "mean_y", mode.mean.y());
        kv.add(mp + "cov_xx", mode.cov(0, 0));
        kv.add(mp + "cov_xy", mode.cov(0, 1));
        kv.add(mp + "cov_yy", mode.cov(1, 1));
      }
    }
    kv.add("composition_max_abs_error", trace.composition_error);
  } else {
    CsvWriter csv(buffer,
                  {"stage", "label", "mode", "mean_x", "mean_y", "cov_xx", "cov_xy", "cov_yy"});
    for (std::size_t i = 0; i < trace.stages.size(); ++i) {
      for (const PhasorMode& mode : trace.stages[i].modes) {
        csv.raw_row({std::to_string(i), trace.stages[i].label, mode.mode,
                     format_double(mode.mean.x()), format_double(mode.mean.y()),
                     format_double(mode.cov(0, 0)), format_double(mode.cov(0, 1)),
                     format_double(mode.cov(1, 1))});
      }
    }
  }
  out << buffer.str();
}

bool cmd_oracle_check(const Scenario& sc, std::ostream& out, OutputFormat) {
  constexpr double tolerance = 1e-6;
  std::ostringstream buffer;
  KvWriter kv(buffer);
  kv.add("scheme", scheme_tag(sc.scheme));

  const auto err_norm = [](const BogoliubovPair& a, const BogoliubovPair& b) {
    const double scale = std::max({1.0, std::abs(b.mu), std::abs(b.nu)});
    return std::max(std::abs(a.mu - b.mu), std::abs(a.nu - b.nu)) / scale;
  };

  BogoliubovPair analytic = sc.coeffs();
  BogoliubovPair oracle;
  double err = 0.0;
  if (sc.scheme == PumpScheme::dual_pump) {
    oracle = extract_mu_nu(sc.fiber, *sc.dual_pumps);
    err = err_norm(oracle, analytic);
  } else {
    oracle = extract_mu_nu(sc.fiber, *sc.single_pump);
    const BogoliubovPair with_pump =
        single_pump_coeffs(sc.fiber, *sc.single_pump, BPhaseConvention::pump_phase_included);
    const BogoliubovPair without_pump =
        single_pump_coeffs(sc.fiber, *sc.single_pump, BPhaseConvention::pump_phase_omitted);
    const double err_inc = err_norm(oracle, with_pump);
    const double err_omit = err_norm(oracle, without_pump);
    kv.add("err_norm_pump_phase_included", err_inc);
    kv.add("err_norm_pump_phase_omitted", err_omit);
    if (err_inc <= err_omit) {
      kv.add("matched_convention", "included");
      analytic = with_pump;
      err = err_inc;
    } else {
      kv.add("matched_convention", "omitted");
      analytic = without_pump;
      err = err_omit;
    }
  }

  kv.add("mu_analytic_re", analytic.mu.real());
  kv.add("mu_analytic_im", analytic.mu.imag());
  kv.add("nu_analytic_re", analytic.nu.real());
  kv.add("nu_analytic_im", analytic.nu.imag());
  kv.add("mu_oracle_re", oracle.mu.real());
  kv.add("mu_oracle_im", oracle.mu.imag());
  kv.add("nu_oracle_re", oracle.nu.real());
  kv.add("nu_oracle_im", oracle.nu.imag());
  kv.add("abs_err_mu", std::abs(oracle.mu - analytic.mu));
  kv.add("abs_err_nu", std::abs(oracle.nu - analytic.nu));
  kv.add("err_norm", err);
  kv.add("tolerance", tolerance);
  kv.add("sympl_defect_oracle", oracle.symplectic_defect());
  const bool pass = err <= tolerance;
  kv.add("pass", pass ? "true" : "false");

  out << buffer.str();
  return pass;
}

}  // namespace psa
