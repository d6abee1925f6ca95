//---------------------------------------------------------------------------//
// SPDX-License-Identifier: Apache-2.0
//! \file designer.cpp
//---------------------------------------------------------------------------//
#include "dephasim/designer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "dephasim/errors.hpp"

namespace dephasim {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}  // namespace

void DesignTarget::validate() const {
  const std::size_t n = d.size();
  if (n < 2 || target.size() != n) {
    throw Error("design target needs at least two samples on matching grids");
  }
  const double dd = d[1] - d[0];
  if (!(dd > 0.0)) {
    throw Error("design target grid is not strictly increasing");
  }
  bool has_origin = false;
  for (std::size_t m = 0; m < n; ++m) {
    if (!std::isfinite(d[m]) || !std::isfinite(target[m].real()) ||
        !std::isfinite(target[m].imag())) {
      throw Error("design target contains non-finite entries");
    }
    if (m > 0 && std::abs((d[m] - d[m - 1]) - dd) > 1e-9 * dd) {
      throw Error("design target grid is not uniform");
    }
    if (std::abs(d[m]) <= 1e-12 * std::max(1.0, std::abs(dd))) {
      has_origin = true;
    }
  }
  if (!has_origin) {
    throw MissingOrigin("design target grid does not contain d = 0");
  }
}

void HardwareProfile::validate() const {
  if (pixel_count < 2) {
    throw Error("hardware profile: pixel_count must be >= 2");
  }
  if (!(bandwidth_u > 0.0)) {
    throw Error("hardware profile: bandwidth_u must be positive");
  }
  if (amplitude_levels < 2 || phase_levels < 2) {
    throw Error("hardware profile: level counts must be >= 2");
  }
  if (!(capture_threshold >= 0.0 && capture_threshold <= 1.0)) {
    throw Error("hardware profile: capture_threshold must be in [0, 1]");
  }
}

DesignResult invert_target(const DesignTarget& target, int grid_size,
                           const InvertOptions& opts) {
  target.validate();
  if (grid_size < 2) {
    throw Error("invert_target: grid_size must be >= 2");
  }
  const double dd = target.d[1] - target.d[0];

  // Integer sample indices n_m = d_m / dd; extend Hermitian if d >= 0 only.
  std::vector<long> idx(target.size());
  for (std::size_t m = 0; m < target.size(); ++m) {
    idx[m] = std::lround(target.d[m] / dd);
  }
  std::vector<std::complex<double>> f;
  std::vector<long> n;
  if (idx.front() == 0) {
    // Rotate the global phase so the d = 0 sample is real, then mirror.
    std::complex<double> t0 = target.target.front();
    if (std::abs(t0) == 0.0) {
      throw NonPhysicalTarget("invert_target: target is zero at d = 0");
    }
    const std::complex<double> rot = std::conj(t0) / std::abs(t0);
    const std::size_t m1 = target.size();
    f.reserve(2 * m1 - 1);
    n.reserve(2 * m1 - 1);
    for (std::size_t m = m1 - 1; m >= 1; --m) {
      f.push_back(std::conj(rot * target.target[m]));
      n.push_back(-idx[m]);
    }
    for (std::size_t m = 0; m < m1; ++m) {
      f.push_back(rot * target.target[m]);
      n.push_back(idx[m]);
    }
  } else {
    for (std::size_t m = 0; m < target.size(); ++m) {
      if (idx[m] == 0 && std::abs(target.target[m]) == 0.0) {
        throw NonPhysicalTarget("invert_target: target is zero at d = 0");
      }
    }
    f.assign(target.target.begin(), target.target.end());
    n.assign(idx.begin(), idx.end());
  }

  const long K = static_cast<long>(f.size());
  if (grid_size > K) {
    throw Error("invert_target: grid_size exceeds the available DFT bins (" +
                std::to_string(K) + "); sample the target more densely");
  }
  const long j_lo = -(K / 2);
  const double du = 1.0 / (static_cast<double>(K) * dd);

  std::vector<std::complex<double>> w(static_cast<std::size_t>(K));
  double total_abs = 0.0;
  for (long j = j_lo; j < j_lo + K; ++j) {
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t m = 0; m < f.size(); ++m) {
      const double phase = -kTwoPi * static_cast<double>(j) *
                           static_cast<double>(n[m]) / static_cast<double>(K);
      acc += f[m] * std::polar(1.0, phase);
    }
    acc /= static_cast<double>(K);
    w[static_cast<std::size_t>(j - j_lo)] = acc;
    total_abs += std::abs(acc);
  }
  if (total_abs <= 0.0) {
    throw NonPhysicalTarget("invert_target: inverse transform is identically zero");
  }

  if (opts.check_aliasing) {
    const long edge = std::max<long>(
        1, static_cast<long>(std::floor(opts.edge_fraction * static_cast<double>(K))));
    double edge_abs = 0.0;
    for (long i = 0; i < edge; ++i) {
      edge_abs += std::abs(w[static_cast<std::size_t>(i)]);
      edge_abs += std::abs(w[static_cast<std::size_t>(K - 1 - i)]);
    }
    if (edge_abs > opts.edge_mass_tol * total_abs) {
      throw AliasingError(
          "invert_target: significant weight at the frequency band edges; "
          "the target grid under-samples the distribution (Nyquist bound "
          "1/(2 du_path) violated)");
    }
  }

  // Central grid_size bins.
  const long g_lo = -(grid_size / 2);
  const std::size_t first = static_cast<std::size_t>(g_lo - j_lo);

  DesignResult out;
  out.dist.u.resize(static_cast<std::size_t>(grid_size));
  out.dist.p.resize(static_cast<std::size_t>(grid_size));
  out.dist.theta.resize(static_cast<std::size_t>(grid_size));
  double sel_abs = 0.0;
  for (long g = 0; g < grid_size; ++g) {
    sel_abs += std::abs(w[first + static_cast<std::size_t>(g)]);
  }
  if (sel_abs <= 0.0) {
    throw NonPhysicalTarget("invert_target: selected bins carry no weight");
  }
  std::complex<double> k0{0.0, 0.0};
  for (long g = 0; g < grid_size; ++g) {
    const std::complex<double> wj = w[first + static_cast<std::size_t>(g)];
    out.dist.u[static_cast<std::size_t>(g)] = static_cast<double>(g_lo + g) * du;
    const double pj = std::abs(wj) / sel_abs;
    out.dist.p[static_cast<std::size_t>(g)] = pj;
    out.dist.theta[static_cast<std::size_t>(g)] =
        pj > 0.0 ? wrap_phase(std::arg(wj)) : 0.0;
    k0 += wj / sel_abs;
  }
  out.kappa0 = k0;
  return out;
}

ComplexFreqDistribution quantize(const ComplexFreqDistribution& dist,
                                 const HardwareProfile& hw) {
  dist.validate();
  hw.validate();
  const std::size_t pixels = static_cast<std::size_t>(hw.pixel_count);
  const double du = hw.bandwidth_u / static_cast<double>(hw.pixel_count);
  const double mid = 0.5 * (dist.u.front() + dist.u.back());
  const double c0 = mid - 0.5 * hw.bandwidth_u + 0.5 * du;

  // Pixel centers. When the input grid already is the pixel grid (a second
  // quantize pass), reuse it verbatim so the operation is exactly idempotent.
  std::vector<double> centers(pixels);
  for (std::size_t i = 0; i < pixels; ++i) {
    centers[i] = c0 + static_cast<double>(i) * du;
  }
  if (dist.size() == pixels) {
    double dev = 0.0;
    for (std::size_t i = 0; i < pixels; ++i) {
      dev = std::max(dev, std::abs(dist.u[i] - centers[i]));
    }
    if (dev < 1e-6 * du) {
      centers = dist.u;
    }
  }

  // Nearest-center binning; exact half distances resolve round-half-to-even.
  std::vector<std::complex<double>> binned(pixels, {0.0, 0.0});
  double captured = 0.0;
  for (std::size_t j = 0; j < dist.size(); ++j) {
    const double pos = (dist.u[j] - centers.front()) / du;
    const double r = std::nearbyint(pos);
    if (r < 0.0 || r >= static_cast<double>(pixels)) {
      continue;
    }
    binned[static_cast<std::size_t>(r)] +=
        dist.p[j] * std::polar(1.0, dist.theta[j]);
    captured += dist.p[j];
  }
  if (captured < hw.capture_threshold) {
    throw BandwidthTooNarrow(
        "quantize: hardware window captures " + std::to_string(captured) +
        " of the probability, below the threshold " +
        std::to_string(hw.capture_threshold));
  }

  double amax = 0.0;
  for (const auto& wv : binned) {
    amax = std::max(amax, std::abs(wv));
  }
  if (amax <= 0.0) {
    throw NonPhysicalTarget("quantize: in-window weights cancel to zero");
  }

  // Mid-tread level quantization of the amplitude ratio to the peak, then
  // renormalization directly from the integer levels (the integer ratio is
  // what makes a second pass reproduce itself bit for bit).
  const double alevels = static_cast<double>(hw.amplitude_levels - 1);
  std::vector<double> level(pixels);
  double level_sum = 0.0;
  for (std::size_t i = 0; i < pixels; ++i) {
    level[i] = std::nearbyint(std::abs(binned[i]) / amax * alevels);
    level_sum += level[i];
  }

  const double phase_step = kTwoPi / static_cast<double>(hw.phase_levels);
  ComplexFreqDistribution out;
  out.u = std::move(centers);
  out.p.resize(pixels);
  out.theta.resize(pixels);
  for (std::size_t i = 0; i < pixels; ++i) {
    out.p[i] = level[i] / level_sum;
    if (level[i] > 0.0) {
      double m = std::nearbyint(std::arg(binned[i]) / phase_step);
      if (m <= -0.5 * static_cast<double>(hw.phase_levels)) {
        m += static_cast<double>(hw.phase_levels);
      }
      out.theta[i] = m * phase_step;
    } else {
      out.theta[i] = 0.0;
    }
  }
  return out;
}

double roundtrip_error(const DesignTarget& target,
                       const ComplexFreqDistribution& dist) {
  // Lighter validation than invert_target: any finite grid containing d = 0
  // can be compared, including a single-sample target.
  if (target.size() == 0 || target.target.size() != target.size()) {
    throw Error("roundtrip_error: empty or mismatched target");
  }
  for (std::size_t m = 0; m < target.size(); ++m) {
    if (!std::isfinite(target.d[m]) || !std::isfinite(target.target[m].real()) ||
        !std::isfinite(target.target[m].imag())) {
      throw Error("roundtrip_error: non-finite target entry");
    }
  }
  std::size_t origin = target.size();
  for (std::size_t m = 0; m < target.size(); ++m) {
    if (std::abs(target.d[m]) <= 1e-12) {
      origin = m;
      break;
    }
  }
  if (origin == target.size()) {
    throw MissingOrigin("roundtrip_error: target grid does not contain d = 0");
  }
  const std::complex<double> t0 = target.target[origin];
  if (std::abs(t0) == 0.0) {
    throw NonPhysicalTarget("roundtrip_error: target is zero at d = 0");
  }
  const DecoherenceTrace fwd = forward_kappa(dist, target.d);
  const std::complex<double> k0 = fwd.kappa[origin];
  if (std::abs(k0) <= 1e-9) {
    throw SingularScaling("roundtrip_error: realized |kappa(0)| below tolerance");
  }
  double err = 0.0;
  for (std::size_t m = 0; m < target.size(); ++m) {
    err = std::max(err, std::abs(fwd.kappa[m] / k0 - target.target[m] / t0));
  }
  return err;
}

}  // namespace dephasim
