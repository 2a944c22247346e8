// Microbenchmarks for the hot paths of the library: collective rotations,
// the exact-oracle fast path, the full-register ring circuit, the Monte
// Carlo estimator loop, and the quadrature integrator.
#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "bpl/correlation.hpp"
#include "bpl/cost_family.hpp"
#include "bpl/dicke.hpp"
#include "bpl/estimator.hpp"
#include "bpl/rng.hpp"
#include "bpl/statevec.hpp"

namespace {

constexpr double kPi = 3.14159265358979323846;

void BM_RngUniform(benchmark::State& state) {
  bpl::RngStream rng(42, 0);
  double acc = 0.0;
  for (auto _ : state) acc += rng.uniform(0.0, 1.0);
  benchmark::DoNotOptimize(acc);
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_RngUniform);

void BM_DickeRotate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto psi = bpl::dicke::zero_state(n);
  for (auto _ : state) {
    psi = bpl::dicke::rotate(psi, bpl::dicke::Axis::Y, 0.3);
    benchmark::DoNotOptimize(psi.amps.data());
  }
}
BENCHMARK(BM_DickeRotate)->Arg(16)->Arg(64)->Arg(128);

void BM_GroverCostExact(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int L = static_cast<int>(state.range(1));
  double acc = 0.0;
  for (auto _ : state) acc += bpl::dicke::grover_cost_exact(0.7, kPi, n, L);
  benchmark::DoNotOptimize(acc);
}
BENCHMARK(BM_GroverCostExact)->Args({8, 8})->Args({24, 48})->Args({28, 48});

void BM_GroverSweepPerDepth(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int l_max = 4 << (n / 2);
  for (auto _ : state) {
    auto costs = bpl::dicke::grover_cost_exact_sweep(2.0 * kPi / n, kPi, n, l_max);
    benchmark::DoNotOptimize(costs.data());
  }
  state.SetItemsProcessed(state.iterations() * (4 << (n / 2)));
}
BENCHMARK(BM_GroverSweepPerDepth)->Arg(12)->Arg(16);

void BM_RingQaoaState(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const std::vector<double> beta(4, 0.4), gamma(4, 0.2);
  for (auto _ : state) {
    auto psi = bpl::statevec::ring_qaoa_state(beta, gamma, n);
    benchmark::DoNotOptimize(psi.amps.data());
  }
}
BENCHMARK(BM_RingQaoaState)->Arg(8)->Arg(12)->Arg(14);

void BM_McMomentsSeparable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const bpl::CostFamily fam{bpl::FamilyTag::SeparablePure, n, 4};
  const auto scheme = bpl::CorrelationScheme::uncorrelated(4);
  std::uint64_t seed = 1;
  for (auto _ : state) {
    auto rec = bpl::estimator::mc_moments(fam, scheme, bpl::MomentTarget::Derivative,
                                          10000, seed++);
    benchmark::DoNotOptimize(rec.variance);
  }
  state.SetItemsProcessed(state.iterations() * 10000);
}
BENCHMARK(BM_McMomentsSeparable)->Arg(8)->Arg(60)->Unit(benchmark::kMillisecond);

void BM_SecondMomentQuadrature(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto rec = bpl::estimator::grover_exact_second_moment(
        n, 16, bpl::estimator::IntegrationMethod::Quadrature, 512, 7);
    benchmark::DoNotOptimize(rec.mean);
  }
  state.SetItemsProcessed(state.iterations() * 512);
}
BENCHMARK(BM_SecondMomentQuadrature)->Arg(12)->Arg(24)->Unit(benchmark::kMillisecond);

void BM_MaximizeCorrelatedQaoa(benchmark::State& state) {
  for (auto _ : state) {
    auto m = bpl::statevec::maximize_correlated_qaoa(6, 3);
    benchmark::DoNotOptimize(m.value);
  }
}
BENCHMARK(BM_MaximizeCorrelatedQaoa)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
