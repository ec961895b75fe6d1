#include <benchmark/benchmark.h>

#include <random>

#include "psa/bloch_messiah.hpp"
#include "psa/ode_oracle.hpp"
#include "psa/quantum_noise.hpp"

namespace {

using namespace psa;

const FiberParams fiber{11.3e-3, 4.53e-11, 300.0};
const DualPumpConfig pumps{0.2, 0.2, 0.0, 0.0};
const FiberParams fiber_b{11.3e-3, -4.54e-11, 300.0};
const SinglePumpConfig pump_b{0.23, 0.0};

void BM_dual_pump_coeffs(benchmark::State& state) {
  for (auto _ : state) {
    const BogoliubovPair pair = dual_pump_coeffs(fiber, pumps);
    benchmark::DoNotOptimize(pair);
  }
}
BENCHMARK(BM_dual_pump_coeffs);

void BM_decompose(benchmark::State& state) {
  const BogoliubovPair pair = dual_pump_coeffs(fiber, pumps);
  for (auto _ : state) {
    const BMFactors f = decompose(pair);
    benchmark::DoNotOptimize(f);
  }
}
BENCHMARK(BM_decompose);

void BM_numeric_oracle(benchmark::State& state) {
  const QuadTransfer t = quad_transfer(dual_pump_coeffs(fiber, pumps), QuadBasis::signal);
  for (auto _ : state) {
    const BMFactors f = numeric_oracle(t);
    benchmark::DoNotOptimize(f);
  }
}
BENCHMARK(BM_numeric_oracle);

void BM_output_covariance(benchmark::State& state) {
  const BogoliubovPair pair = single_pump_coeffs(fiber_b, pump_b);
  for (auto _ : state) {
    const Eigen::Matrix4d sigma = output_covariance(pair, CovBasis::signal_idler);
    benchmark::DoNotOptimize(sigma);
  }
}
BENCHMARK(BM_output_covariance);

void BM_symplectic_eigenvalues(benchmark::State& state) {
  const Eigen::Matrix4d sigma =
      output_covariance(single_pump_coeffs(fiber_b, pump_b), CovBasis::signal_idler);
  for (auto _ : state) {
    const Eigen::Vector2d nus = symplectic_eigenvalues(sigma);
    benchmark::DoNotOptimize(nus);
  }
}
BENCHMARK(BM_symplectic_eigenvalues);

void BM_integrate_reference(benchmark::State& state) {
  const FieldState3 in{std::sqrt(0.2), complexd(1e-6, 0.0), std::sqrt(0.2), 0.0};
  for (auto _ : state) {
    const FieldState3 out = integrate(in, fiber);
    benchmark::DoNotOptimize(out);
  }
}
BENCHMARK(BM_integrate_reference);

void BM_extract_mu_nu(benchmark::State& state) {
  for (auto _ : state) {
    const BogoliubovPair pair = extract_mu_nu(fiber, pumps);
    benchmark::DoNotOptimize(pair);
  }
}
BENCHMARK(BM_extract_mu_nu);

}  // namespace

BENCHMARK_MAIN();
