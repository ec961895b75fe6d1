#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "psa/optimum_input.hpp"
#include "psa/quantum_noise.hpp"
#include "support/test_support.hpp"

using namespace psa;
using namespace psa::testing;

namespace {
constexpr double pi = std::numbers::pi;

BogoliubovPair synthetic_pair(double r, double theta_mu, double theta_nu) {
  BogoliubovPair pair;
  pair.mu = std::polar(std::cosh(r), theta_mu);
  pair.nu = std::polar(std::sinh(r), theta_nu);
  pair.scheme = PumpScheme::single_pump;
  return pair;
}
}  // namespace

TEST_CASE("homodyne statistics of the degenerate signal") {
  BogoliubovPair id;
  for (double phi : {0.0, 0.4, 1.9, -2.2}) {
    CHECK(homodyne_stats(id, {0.5, 0.2}, phi).variance == doctest::Approx(0.25).epsilon(1e-14));
  }

  // optimal input, detection along the output quadrature
  const BogoliubovPair pair = dual_pump_coeffs(dual_ref_fiber(), dual_ref_pumps());
  const OptimalInput opt = optimal_signal_phase(pair);
  const double phi = (pair.theta_mu() + pair.theta_nu()) / 2.0;
  const FieldAmplitude alpha = std::polar(0.7, opt.theta_s0);
  const HomodyneStats stats = homodyne_stats(pair, alpha, phi);
  CHECK(stats.variance == doctest::Approx(pair.s_plus() * pair.s_plus() / 4.0).epsilon(1e-12));
  CHECK(stats.mean == doctest::Approx(0.7 * pair.s_plus()).epsilon(1e-12));

  // Monte-Carlo cross-check at an arbitrary phase
  const double phi2 = 0.83;
  const auto mc = mc_homodyne(12345, 200000, phi2, [&](VacuumSampler& s) {
    const complexd a0 = alpha + s.noise();
    return pair.mu * a0 + pair.nu * std::conj(a0);
  });
  const HomodyneStats cf = homodyne_stats(pair, alpha, phi2);
  CHECK(std::abs(mc.variance - cf.variance) <= 3.0 * McVariance::stderr_of(cf.variance, mc.samples));
}

TEST_CASE("noise figure of the dual-pump amplifier") {
  const BogoliubovPair pair = dual_pump_coeffs(dual_ref_fiber(), dual_ref_pumps());
  const OptimalInput opt = optimal_signal_phase(pair);
  const double phi_opt = (pair.theta_mu() + pair.theta_nu()) / 2.0;
  CHECK(noise_figure(pair, opt.theta_s0, phi_opt).noise_figure ==
        doctest::Approx(1.0).epsilon(1e-12));

  // the noise figure does not depend on the input magnitude
  CHECK(noise_figure(pair, 0.3, 0.9, 0.01).noise_figure ==
        doctest::Approx(noise_figure(pair, 0.3, 0.9, 100.0).noise_figure).epsilon(1e-12));

  // nu = 0: 1/cos^2 of the detection mismatch
  BogoliubovPair rot;
  rot.mu = std::polar(1.0, 0.4);
  for (double mismatch : {0.0, 0.3, 1.2}) {
    const double nf = noise_figure(rot, 0.1, 0.4 + 0.1 + mismatch).noise_figure;
    CHECK(nf == doctest::Approx(1.0 / std::pow(std::cos(mismatch), 2)).epsilon(1e-12));
  }

  // scanning the detection phase at optimal input: minimum sits at phi = theta
  double best = 1e300, best_phi = 0.0;
  for (int k = 0; k < 4000; ++k) {
    const double phi = -pi + 2.0 * pi * k / 4000.0;
    const double nf = noise_figure(pair, opt.theta_s0, phi).noise_figure;
    CHECK(nf >= 1.0 - 1e-12);
    if (nf < best) { best = nf; best_phi = phi; }
  }
  CHECK(angle_dist_mod_pi(best_phi, phi_opt) <= 2.0 * (2.0 * pi / 4000.0));

  // the 200 x 200 grid stays at or above 1; equality happens exactly on the
  // locus |mu| sin(theta_mu + theta_s0 - phi) = |nu| sin(theta_nu - theta_s0 - phi),
  // since NF - 1 = (|mu| sin a - |nu| sin b)^2 / mean^2
  const int n = 200;
  const double am = std::abs(pair.mu), an = std::abs(pair.nu);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double ths = -pi + 2.0 * pi * i / n;
      const double phi = -pi + 2.0 * pi * j / n;
      const double nf = noise_figure(pair, ths, phi).noise_figure;
      CHECK(nf >= 1.0 - 1e-12);
      if (nf < 1.0 + 1e-6) {
        // NF <= 1 + 1e-6 implies |resid| <= 1e-3 |mean| <= 1e-3 (|mu| + |nu|)
        const double a = pair.theta_mu() + ths - phi;
        const double b = pair.theta_nu() - ths - phi;
        CHECK(std::abs(am * std::sin(a) - an * std::sin(b)) <= 1e-3 * (am + an) + 1e-12);
      }
    }
  }
}

TEST_CASE("joint-mode noise figure is exactly one at the optimal input") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 50; ++i) {
    const BogoliubovPair pair = random_pair(rng, 0.0, 2.5, PumpScheme::single_pump);
    const SnrReport report = joint_mode_nf(pair, std::polar(0.4, 0.7));
    CHECK(report.noise_figure == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(report.snr_in == doctest::Approx(8.0 * 0.16).epsilon(1e-12));
  }

  // zero-length fiber: trivially one
  FiberParams fiber = single_ref_fiber();
  fiber.length = 0.0;
  const BogoliubovPair id = single_pump_coeffs(fiber, single_ref_pump());
  CHECK(joint_mode_nf(id, {1.0, 0.0}).noise_figure == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("joint-sum transform diagonalizes the output fluctuations") {
  const BogoliubovPair pair = single_pump_coeffs(single_ref_fiber(), single_ref_pump());
  const double theta_s0 = 0.35;
  const Eigen::Matrix4d sigma = output_covariance(pair, CovBasis::signal_idler);
  const Eigen::Matrix4d transf =
      joint_sum_transform(pair.theta_mu() + theta_s0, pair.theta_nu() - theta_s0);
  const Eigen::Matrix4d rotated = transf * sigma * transf.transpose();
  CHECK(rotated(0, 0) == doctest::Approx(pair.s_plus() * pair.s_plus() / 4.0).epsilon(1e-12));
}

TEST_CASE("signal-only noise figure, both input conventions") {
  // joint-input convention at the optimal point: 2 (|mu|^2 + |nu|^2)/(|mu|+|nu|)^2
  const BogoliubovPair ref = single_pump_coeffs(single_ref_fiber(), single_ref_pump());
  const FieldAmplitude alpha_s0(0.4, 0.0);
  const FieldAmplitude alpha_i0 = optimal_idler(ref, alpha_s0).idler_amplitude;
  const double phi = ref.theta_mu() + std::arg(alpha_s0);
  const double g0 = std::norm(ref.mu) + std::norm(ref.nu);
  const double sp2 = ref.s_plus() * ref.s_plus();

  const double nf_joint =
      signal_only_nf(ref, alpha_s0, alpha_i0, phi, InputSnrConvention::joint_input).noise_figure;
  CHECK(nf_joint == doctest::Approx(2.0 * g0 / sp2).epsilon(1e-12));

  const double nf_ignorant =
      signal_only_nf(ref, alpha_s0, alpha_i0, phi, InputSnrConvention::signal_only_input)
          .noise_figure;
  CHECK(nf_ignorant == doctest::Approx(nf_joint / 2.0).epsilon(1e-12));
  CHECK(nf_ignorant == doctest::Approx(g0 / sp2).epsilon(1e-12));

  // no squeezing: the idler input is wasted, NF = 2
  const BogoliubovPair id = synthetic_pair(0.0, 0.0, 0.0);
  CHECK(signal_only_nf(id, {0.4, 0.0}, {0.4, 0.0}, 0.0, InputSnrConvention::joint_input)
            .noise_figure == doctest::Approx(2.0).epsilon(1e-12));

  // large gain: approaches one (|mu|^2 >= 100)
  for (double mu2 : {100.0, 400.0, 10000.0}) {
    const double r = std::acosh(std::sqrt(mu2));
    const BogoliubovPair big = synthetic_pair(r, 0.2, -0.5);
    const FieldAmplitude as(0.3, 0.0);
    const FieldAmplitude ai = optimal_idler(big, as).idler_amplitude;
    const double nf = signal_only_nf(big, as, ai, big.theta_mu() + std::arg(as),
                                     InputSnrConvention::joint_input)
                          .noise_figure;
    CHECK(std::abs(nf - 1.0) <= 1e-2);
  }
}

TEST_CASE("vacuum-idler noise figure approaches the 3 dB limit") {
  const BogoliubovPair id = synthetic_pair(0.0, 0.0, 0.0);
  CHECK(vacuum_idler_nf(id, {0.5, 0.0}).noise_figure == doctest::Approx(1.0).epsilon(1e-14));

  // |mu|^2 = 100: (100 + 99)/100 = 1.99
  const BogoliubovPair big = synthetic_pair(std::acosh(10.0), 0.3, 1.1);
  CHECK(vacuum_idler_nf(big, {0.5, 0.0}).noise_figure == doctest::Approx(1.99).epsilon(1e-12));

  for (double mu2 : {100.0, 1000.0, 1e4}) {
    const BogoliubovPair p = synthetic_pair(std::acosh(std::sqrt(mu2)), -0.7, 0.4);
    CHECK(std::abs(vacuum_idler_nf(p, {0.5, 0.0}).noise_figure - 2.0) <= 1e-2);
  }
}

TEST_CASE("two-mode transfer is symplectic and block-reduces in the pm basis") {
  BogoliubovPair id;
  id.scheme = PumpScheme::single_pump;
  CHECK((two_mode_transfer(id) - Eigen::Matrix4d::Identity()).cwiseAbs().maxCoeff() <= 1e-15);

  const Eigen::Matrix4d j = symplectic_form();
  std::mt19937_64 rng(29);
  for (int i = 0; i < 300; ++i) {
    const BogoliubovPair pair = random_pair(rng, 0.0, 2.5, PumpScheme::single_pump);
    const Eigen::Matrix4d s = two_mode_transfer(pair);
    CHECK((s * j * s.transpose() - j).cwiseAbs().maxCoeff() <= 1e-10);

    // conjugating by the pm change of basis scatters the 2x2 blocks of M+-
    const Eigen::Matrix4d pm = pm_basis_matrix();
    const Eigen::Matrix4d block = pm * s * pm.transpose();
    const Eigen::Matrix2d mp = quad_transfer(pair, QuadBasis::plus).m;
    const Eigen::Matrix2d mm = quad_transfer(pair, QuadBasis::minus).m;
    Eigen::Matrix4d expected = Eigen::Matrix4d::Zero();
    expected(0, 0) = mp(0, 0); expected(0, 2) = mp(0, 1);
    expected(2, 0) = mp(1, 0); expected(2, 2) = mp(1, 1);
    expected(1, 1) = mm(0, 0); expected(1, 3) = mm(0, 1);
    expected(3, 1) = mm(1, 0); expected(3, 3) = mm(1, 1);
    CHECK((block - expected).cwiseAbs().maxCoeff() <= 1e-12);
  }
}

TEST_CASE("two-mode transfer reproduces the complex input-output map") {
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    const BogoliubovPair pair = random_pair(rng, 0.0, 2.5, PumpScheme::single_pump);
    const complexd as(u(rng), u(rng)), ai(u(rng), u(rng));
    const complexd out_s = pair.mu * as + pair.nu * std::conj(ai);
    const complexd out_i = pair.nu * std::conj(as) + pair.mu * ai;

    Eigen::Vector4d in;
    in << as.real(), ai.real(), as.imag(), ai.imag();
    const Eigen::Vector4d out = two_mode_transfer(pair) * in;
    CHECK(std::abs(out(0) - out_s.real()) <= 1e-12);
    CHECK(std::abs(out(1) - out_i.real()) <= 1e-12);
    CHECK(std::abs(out(2) - out_s.imag()) <= 1e-12);
    CHECK(std::abs(out(3) - out_i.imag()) <= 1e-12);
  }
}

TEST_CASE("output covariance: isotropy, purity, and the diagonal basis") {
  BogoliubovPair id;
  id.scheme = PumpScheme::single_pump;
  CHECK((output_covariance(id, CovBasis::signal_idler) - Eigen::Matrix4d::Identity() * 0.25)
            .cwiseAbs().maxCoeff() <= 1e-15);

  std::mt19937_64 rng(37);
  for (int i = 0; i < 100; ++i) {
    const BogoliubovPair pair = random_pair(rng, 0.0, 2.5, PumpScheme::single_pump);
    const Eigen::Matrix4d sigma = output_covariance(pair, CovBasis::signal_idler);
    const double iso = (std::norm(pair.mu) + std::norm(pair.nu)) / 4.0;
    for (int d = 0; d < 4; ++d) CHECK(sigma(d, d) == doctest::Approx(iso).epsilon(1e-12));

    // pure state: both symplectic eigenvalues at the vacuum value
    const Eigen::Vector2d nus = symplectic_eigenvalues(sigma);
    CHECK(nus(0) == doctest::Approx(0.25).epsilon(1e-10));
    CHECK(nus(1) == doctest::Approx(0.25).epsilon(1e-10));

    GaussianState state{Eigen::VectorXd::Zero(4), sigma};
    CHECK(state.is_physical());

    // congruence by the rotate-then-pm change of basis diagonalizes it
    const double theta = (pair.theta_mu() + pair.theta_nu()) / 2.0;
    Eigen::Matrix4d rot = Eigen::Matrix4d::Zero();
    const Eigen::Matrix2d r = rotation2(-theta);
    rot.block<2, 2>(0, 0) = r(0, 0) * Eigen::Matrix2d::Identity();
    rot.block<2, 2>(0, 2) = r(0, 1) * Eigen::Matrix2d::Identity();
    rot.block<2, 2>(2, 0) = r(1, 0) * Eigen::Matrix2d::Identity();
    rot.block<2, 2>(2, 2) = r(1, 1) * Eigen::Matrix2d::Identity();
    const Eigen::Matrix4d to_pm = pm_basis_matrix() * rot;
    const Eigen::Matrix4d diag = to_pm * sigma * to_pm.transpose();
    CHECK((diag - output_covariance(pair, CovBasis::rotated_pm)).cwiseAbs().maxCoeff() <= 1e-10);
  }
}

TEST_CASE("signal/idler variances are phase independent, rotated ones extremal") {
  const BogoliubovPair pair = single_pump_coeffs(single_ref_fiber(), single_ref_pump());
  const double iso = (std::norm(pair.mu) + std::norm(pair.nu)) / 4.0;
  for (int k = 0; k < 64; ++k) {
    const double phi = -pi + 2.0 * pi * k / 64.0;
    CHECK(homodyne_stats_single(pair, {0.1, 0.0}, {0.0, 0.0},
                                {phi, HomodyneSetting::Mode::signal}).variance ==
          doctest::Approx(iso).epsilon(1e-12));
    CHECK(homodyne_stats_single(pair, {0.1, 0.0}, {0.0, 0.0},
                                {phi, HomodyneSetting::Mode::idler}).variance ==
          doctest::Approx(iso).epsilon(1e-12));
  }
  const Eigen::Matrix4d diag = output_covariance(pair, CovBasis::rotated_pm);
  CHECK(diag(0, 0) == doctest::Approx(pair.s_plus() * pair.s_plus() / 4.0).epsilon(1e-12));
  CHECK(diag(1, 1) == doctest::Approx(pair.s_minus() * pair.s_minus() / 4.0).epsilon(1e-12));
}

TEST_CASE("Duan witness") {
  // zero pump: exactly at the separability boundary
  FiberParams fiber = single_ref_fiber();
  SinglePumpConfig pump{0.0, 0.0};
  CHECK(duan_criterion_lhs(single_pump_coeffs(fiber, pump)) == 0.5);

  // reference operating point
  const BogoliubovPair pair = single_pump_coeffs(single_ref_fiber(), single_ref_pump());
  CHECK(duan_criterion_lhs(pair) == doctest::Approx(single_ref_duan).epsilon(1e-10));
  CHECK(duan_criterion_lhs(pair) < 0.5);

  // strictly decreasing with pump power over the documented sweep
  double previous = 0.5 + 1e-15;
  for (int k = 0; k <= 100; ++k) {
    pump.p2 = 0.5 * k / 100.0;
    const double lhs = duan_criterion_lhs(single_pump_coeffs(fiber, pump));
    CHECK(lhs < previous);
    previous = lhs;
  }

  // reciprocal-squeeze identity: s_minus^2 s_plus^2 = 1
  std::mt19937_64 rng(41);
  for (int i = 0; i < 200; ++i) {
    const BogoliubovPair p = random_pair(rng, 0.0, 2.5, PumpScheme::single_pump);
    const double lhs = duan_criterion_lhs(p);
    const double partner = p.s_plus() * p.s_plus() / 2.0;
    CHECK(std::abs(4.0 * lhs * partner - 1.0) <= 1e-10);
  }
}

TEST_CASE("homodyne means match the complex-arithmetic route") {
  std::mt19937_64 rng(71);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_real_distribution<double> uphi(-pi, pi);
  for (int i = 0; i < 200; ++i) {
    const BogoliubovPair pair = random_pair(rng, 0.0, 2.5, PumpScheme::single_pump);
    const FieldAmplitude as(u(rng), u(rng)), ai(u(rng), u(rng));
    const double phi = uphi(rng);

    const complexd out_s = pair.mu * as + pair.nu * std::conj(ai);
    const complexd out_i = pair.nu * std::conj(as) + pair.mu * ai;
    const double direct_s = (out_s * std::polar(1.0, -phi)).real();
    const double direct_i = (out_i * std::polar(1.0, -phi)).real();

    const double tol = 1e-11 * (1.0 + std::abs(out_s) + std::abs(out_i));
    CHECK(std::abs(homodyne_stats_single(pair, as, ai, {phi, HomodyneSetting::Mode::signal}).mean -
                   direct_s) <= tol);
    CHECK(std::abs(homodyne_stats_single(pair, as, ai, {phi, HomodyneSetting::Mode::idler}).mean -
                   direct_i) <= tol);
    CHECK(std::abs(homodyne_stats_single(pair, as, ai, {phi, HomodyneSetting::Mode::joint_sum}).mean -
                   (direct_s + direct_i) / std::numbers::sqrt2) <= tol);

    const complexd out_deg = pair.mu * as + pair.nu * std::conj(as);
    CHECK(std::abs(homodyne_stats(pair, as, phi).mean -
                   (out_deg * std::polar(1.0, -phi)).real()) <= tol);
  }
}

TEST_CASE("Monte-Carlo agreement for the single-pump output variances") {
  const BogoliubovPair pair = single_pump_coeffs(single_ref_fiber(), single_ref_pump());
  const FieldAmplitude as(0.4, 0.1), ai(-0.2, 0.3);
  const double phi = 0.6;

  const auto mc_s = mc_homodyne(777, 200000, phi, [&](VacuumSampler& s) {
    const complexd s0 = as + s.noise();
    const complexd i0 = ai + s.noise();
    return pair.mu * s0 + pair.nu * std::conj(i0);
  });
  const HomodyneStats cf = homodyne_stats_single(pair, as, ai, {phi, HomodyneSetting::Mode::signal});
  CHECK(std::abs(mc_s.variance - cf.variance) <=
        3.0 * McVariance::stderr_of(cf.variance, mc_s.samples));
  CHECK(std::abs(mc_s.mean - cf.mean) <= 3.0 * std::sqrt(cf.variance / mc_s.samples));
}
