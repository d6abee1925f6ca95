//---------------------------------------------------------------------------//
// SPDX-License-Identifier: Apache-2.0
//! \file measurement.cpp
//---------------------------------------------------------------------------//
#include "dephasim/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "dephasim/errors.hpp"

namespace dephasim {

namespace {
// distinct salts keep the counting and bootstrap streams disjoint
constexpr std::uint64_t kCountSalt = 0x636f756e74ULL;
constexpr std::uint64_t kBootstrapSalt = 0x626f6f74ULL;

std::uint64_t poisson_draw(std::mt19937_64& eng, double mean) {
  if (mean <= 0.0) {
    return 0;
  }
  std::poisson_distribution<std::uint64_t> dist(mean);
  return dist(eng);
}
}  // namespace

void CountingConfig::validate() const {
  if (!(rate > 0.0)) {
    throw Error("counting config: rate must be positive");
  }
  if (!(duration_s > 0.0)) {
    throw Error("counting config: duration must be positive");
  }
  if (mc_samples < 2) {
    throw Error("counting config: mc_samples must be >= 2");
  }
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_stream(std::uint64_t seed,
                            std::initializer_list<std::uint64_t> path) {
  std::uint64_t key = splitmix64(seed);
  for (std::uint64_t part : path) {
    key = splitmix64(key ^ splitmix64(part));
  }
  return key;
}

std::array<double, 6> projector_probabilities(const QubitState& state) {
  if (!state.is_hermitian(1e-9) || !state.is_unit_trace(1e-9) ||
      !state.is_positive_semidefinite(1e-9)) {
    throw InvalidState("projector_probabilities: state is not physical");
  }
  const double x = 2.0 * state.rho01.real();
  const double y = -2.0 * state.rho01.imag();
  std::array<double, 6> p = {state.rho00.real(), state.rho11.real(),
                             0.5 * (1.0 + x),    0.5 * (1.0 - x),
                             0.5 * (1.0 + y),    0.5 * (1.0 - y)};
  for (double& v : p) {
    v = std::clamp(v, 0.0, 1.0);
  }
  return p;
}

SettingCounts simulate_counts(const QubitState& state, const CountingConfig& cfg,
                              std::uint64_t stream) {
  cfg.validate();
  const std::array<double, 6> p = projector_probabilities(state);
  SettingCounts counts{};
  for (int s = 0; s < 6; ++s) {
    std::mt19937_64 eng(derive_stream(
        cfg.seed, {kCountSalt, stream, static_cast<std::uint64_t>(s)}));
    counts[static_cast<std::size_t>(s)] =
        poisson_draw(eng, cfg.mean_counts() * p[static_cast<std::size_t>(s)]);
  }
  return counts;
}

QubitState reconstruct(const SettingCounts& counts) {
  const double nh = static_cast<double>(counts[kH]);
  const double nv = static_cast<double>(counts[kV]);
  const double nd = static_cast<double>(counts[kD]);
  const double na = static_cast<double>(counts[kA]);
  const double nr = static_cast<double>(counts[kR]);
  const double nl = static_cast<double>(counts[kL]);
  if (nh + nv == 0.0 || nd + na == 0.0 || nr + nl == 0.0) {
    throw AllZeroCounts("reconstruct: a measurement basis collected no counts");
  }
  double z = (nh - nv) / (nh + nv);
  double x = (nd - na) / (nd + na);
  double y = (nr - nl) / (nr + nl);
  const double r = std::sqrt(x * x + y * y + z * z);
  if (r > 1.0) {
    x /= r;
    y /= r;
    z /= r;
  }
  return QubitState::from_bloch(x, y, z);
}

double extract_abs_kappa(const QubitState& rho_plus, const QubitState& rho_minus) {
  return trace_distance(rho_plus, rho_minus);
}

double bootstrap_sigma(const SettingCounts& plus, const SettingCounts& minus,
                       const CountingConfig& cfg, std::uint64_t stream) {
  cfg.validate();
  const int n = cfg.mc_samples;
  std::vector<double> values(static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r) {
    std::mt19937_64 eng(derive_stream(
        cfg.seed, {kBootstrapSalt, stream, static_cast<std::uint64_t>(r)}));
    SettingCounts rp{};
    SettingCounts rm{};
    for (int s = 0; s < 6; ++s) {
      rp[static_cast<std::size_t>(s)] = poisson_draw(
          eng, static_cast<double>(plus[static_cast<std::size_t>(s)]));
      rm[static_cast<std::size_t>(s)] = poisson_draw(
          eng, static_cast<double>(minus[static_cast<std::size_t>(s)]));
    }
    values[static_cast<std::size_t>(r)] =
        extract_abs_kappa(reconstruct(rp), reconstruct(rm));
  }
  double mean = 0.0;
  for (double v : values) {
    mean += v;
  }
  mean /= static_cast<double>(n);
  double ss = 0.0;
  for (double v : values) {
    ss += (v - mean) * (v - mean);
  }
  return std::sqrt(ss / static_cast<double>(n - 1));
}

std::vector<MeasurementRecord> measure_trace(const DecoherenceTrace& trace,
                                             const CountingConfig& cfg) {
  trace.validate();
  cfg.validate();
  std::vector<MeasurementRecord> out;
  out.reserve(trace.size());
  for (std::size_t m = 0; m < trace.size(); ++m) {
    const DephasingChannel ch{trace.kappa[m]};
    const QubitState plus = apply_channel(QubitState::superposition(+1), ch);
    const QubitState minus = apply_channel(QubitState::superposition(-1), ch);
    const std::uint64_t tag = static_cast<std::uint64_t>(m);
    const SettingCounts cp = simulate_counts(plus, cfg, 2 * tag);
    const SettingCounts cm = simulate_counts(minus, cfg, 2 * tag + 1);
    MeasurementRecord rec;
    rec.d = trace.d[m];
    rec.abs_kappa_true = std::abs(trace.kappa[m]);
    rec.abs_kappa_est = extract_abs_kappa(reconstruct(cp), reconstruct(cm));
    rec.sigma = bootstrap_sigma(cp, cm, cfg, tag);
    out.push_back(rec);
  }
  return out;
}

}  // namespace dephasim
