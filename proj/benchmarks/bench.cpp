//---------------------------------------------------------------------------//
// SPDX-License-Identifier: Apache-2.0
//! \file bench.cpp
//! Microbenchmarks for the numerical kernels. Run with
//!   build/benchmarks/dephasim_bench [--benchmark_filter=...]
//---------------------------------------------------------------------------//
#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "dephasim/designer.hpp"
#include "dephasim/freq.hpp"
#include "dephasim/ising.hpp"
#include "dephasim/spectral.hpp"

namespace {

using namespace dephasim;

ComplexFreqDistribution gaussian_dist(std::size_t pixels) {
  ComplexFreqDistribution dist;
  const double sigma = 0.05;
  double total = 0.0;
  for (std::size_t j = 0; j < pixels; ++j) {
    const double u = -6.0 * sigma +
                     12.0 * sigma * static_cast<double>(j) /
                         static_cast<double>(pixels - 1);
    dist.u.push_back(u);
    dist.p.push_back(std::exp(-u * u / (2.0 * sigma * sigma)));
    dist.theta.push_back(0.0);
    total += dist.p.back();
  }
  for (auto& p : dist.p) {
    p /= total;
  }
  return dist;
}

std::vector<double> linspace(double maxval, std::size_t n) {
  std::vector<double> out(n);
  for (std::size_t m = 0; m < n; ++m) {
    out[m] = maxval * static_cast<double>(m) / static_cast<double>(n - 1);
  }
  return out;
}

void BM_forward_kappa(benchmark::State& state) {
  const auto dist = gaussian_dist(static_cast<std::size_t>(state.range(0)));
  const auto grid = linspace(10.0, 512);
  for (auto _ : state) {
    auto trace = forward_kappa(dist, grid, ForwardOptions{false});
    benchmark::DoNotOptimize(trace);
  }
}
BENCHMARK(BM_forward_kappa)->Arg(900)->Arg(4096);

void BM_decoherence_fn(benchmark::State& state) {
  IsingChainSpec spec{1.0, 0.9, 0.1, static_cast<int>(state.range(0))};
  const auto times = linspace(30.0, 2048);
  for (auto _ : state) {
    auto trace = decoherence_fn(spec, times);
    benchmark::DoNotOptimize(trace);
  }
}
BENCHMARK(BM_decoherence_fn)->Arg(400)->Arg(4000);

void BM_exact_oracle(benchmark::State& state) {
  IsingChainSpec spec{1.0, 0.9, 0.1, static_cast<int>(state.range(0))};
  const auto times = linspace(10.0, 20);
  for (auto _ : state) {
    auto trace = exact_oracle(spec, times);
    benchmark::DoNotOptimize(trace);
  }
}
BENCHMARK(BM_exact_oracle)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_spectral_ohmic(benchmark::State& state) {
  SpectralDensitySpec spec;
  spec.family = SpectralDensitySpec::Family::Ohmic;
  spec.alpha = 1.0;
  spec.omega_c = 1.0;
  const auto times = linspace(20.0, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto trace = spectral_decoherence(spec, times);
    benchmark::DoNotOptimize(trace);
  }
}
BENCHMARK(BM_spectral_ohmic)->Arg(32)->Arg(128)->Unit(benchmark::kMillisecond);

void BM_invert_target(benchmark::State& state) {
  DesignTarget target;
  for (int m = 0; m < 512; ++m) {
    const double d = 20.0 * m / 511.0;
    target.d.push_back(d);
    target.target.push_back({std::exp(-0.02 * d * d), 0.0});
  }
  for (auto _ : state) {
    auto res = invert_target(target, 900);
    benchmark::DoNotOptimize(res);
  }
}
BENCHMARK(BM_invert_target)->Unit(benchmark::kMillisecond);

void BM_quantize(benchmark::State& state) {
  const auto dist = gaussian_dist(4096);
  HardwareProfile hw;
  hw.bandwidth_u = 900.0 * dist.delta_u();
  for (auto _ : state) {
    auto q = quantize(dist, hw);
    benchmark::DoNotOptimize(q);
  }
}
BENCHMARK(BM_quantize);

}  // namespace

BENCHMARK_MAIN();
