//---------------------------------------------------------------------------//
// SPDX-License-Identifier: Apache-2.0
//! \file dephasim/measurement.hpp
//---------------------------------------------------------------------------//
#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "dephasim/channel.hpp"
#include "dephasim/freq.hpp"

namespace dephasim {

//! Coincidence-counting configuration. Defaults follow the experiment:
//! about 1.8e5 coincidences in 60 s (3000/s) and 10 s per setting.
struct CountingConfig {
  double rate = 3000.0;
  double duration_s = 10.0;
  std::uint64_t seed = 0;
  int mc_samples = 100;

  void validate() const;
  double mean_counts() const { return rate * duration_s; }
};

//! Projector order used throughout: H, V, D, A, R, L with
//! |D/A> = (|H> +- |V>)/sqrt2 and |R/L> = (|H> +- i|V>)/sqrt2.
enum Setting : int { kH = 0, kV, kD, kA, kR, kL };

using SettingCounts = std::array<std::uint64_t, 6>;

//! Tomography of one evolved state.
struct TomographyResult {
  QubitState rho_hat;
  double abs_kappa_hat = 0.0;
  double sigma = 0.0;
};

//! One time sample of the simulated measurement chain.
struct MeasurementRecord {
  double d = 0.0;
  double abs_kappa_true = 0.0;
  double abs_kappa_est = 0.0;
  double sigma = 0.0;
};

//! SplitMix64 mixing step; the basis of all stream derivation here.
std::uint64_t splitmix64(std::uint64_t x);

//! Deterministic substream key from a seed and a path of indices, so that
//! per-setting / per-resample draws are independent and schedule-free.
std::uint64_t derive_stream(std::uint64_t seed,
                            std::initializer_list<std::uint64_t> path);

//! Expectation values of the six projectors for a physical state.
std::array<double, 6> projector_probabilities(const QubitState& state);

//! Independent Poisson counts with mean rate * duration * <projector> per
//! setting; deterministic for a fixed (seed, stream) pair.
SettingCounts simulate_counts(const QubitState& state, const CountingConfig& cfg,
                              std::uint64_t stream);

//! Linear-inversion tomography from the six counts, then projection to the
//! closest physical state (Bloch vector clipped to the unit ball, which is
//! the Frobenius projection for a qubit). Throws AllZeroCounts when a basis
//! pair saw no counts at all.
QubitState reconstruct(const SettingCounts& counts);

//! Trace distance of the reconstructed pair; for the ideal +-45 degree
//! superposition pair under the same dephasing channel this equals |kappa|.
double extract_abs_kappa(const QubitState& rho_plus, const QubitState& rho_minus);

//! Monte Carlo error bar: resample each observed count from a Poisson
//! distribution around it, re-run reconstruction and extraction
//! cfg.mc_samples times and return the sample standard deviation.
double bootstrap_sigma(const SettingCounts& plus, const SettingCounts& minus,
                       const CountingConfig& cfg, std::uint64_t stream);

//! Full readout chain over a simulator trace: evolve the +-45 degree pair
//! with kappa(d_m), draw counts, reconstruct both states, extract
//! |kappa(d_m)| via trace distance, and attach Monte Carlo error bars.
std::vector<MeasurementRecord> measure_trace(const DecoherenceTrace& trace,
                                             const CountingConfig& cfg);

}  // namespace dephasim
