//---------------------------------------------------------------------------//
// SPDX-License-Identifier: Apache-2.0
//! \file freq.cpp
//---------------------------------------------------------------------------//
#include "dephasim/freq.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "dephasim/errors.hpp"

namespace dephasim {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kSpeedOfLight = 299792458.0;  // m/s
}  // namespace

double wrap_phase(double theta) {
  double t = std::remainder(theta, kTwoPi);
  if (t <= -std::numbers::pi) {
    t += kTwoPi;
  }
  return t;
}

double ComplexFreqDistribution::delta_u() const {
  if (u.size() < 2) {
    throw InvalidDistribution("delta_u: grid has fewer than two points");
  }
  return u[1] - u[0];
}

void ComplexFreqDistribution::validate() const {
  const std::size_t n = u.size();
  if (n == 0 || p.size() != n || theta.size() != n) {
    throw InvalidDistribution("distribution arrays are empty or mismatched");
  }
  double total = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    if (!std::isfinite(u[j]) || !std::isfinite(p[j]) || !std::isfinite(theta[j])) {
      throw InvalidDistribution("distribution contains non-finite entries");
    }
    if (p[j] < 0.0) {
      throw InvalidDistribution("negative probability p_j");
    }
    if (theta[j] <= -std::numbers::pi || theta[j] > std::numbers::pi) {
      throw InvalidDistribution("theta_j outside the canonical branch (-pi, pi]");
    }
    total += p[j];
  }
  if (std::abs(total - 1.0) > 1e-9) {
    throw InvalidDistribution("probabilities do not sum to 1 within 1e-9");
  }
  if (n >= 2) {
    const double du = (u.back() - u.front()) / static_cast<double>(n - 1);
    if (du <= 0.0) {
      throw InvalidDistribution("grid is not strictly increasing");
    }
    // compare against the affine fit; the second term absorbs the
    // representation noise of grid values much larger than the spacing
    const double tol = 1e-12 * du + 8.0 * std::numeric_limits<double>::epsilon() *
                                        std::max(std::abs(u.front()),
                                                 std::abs(u.back()));
    for (std::size_t j = 1; j < n; ++j) {
      if (u[j] <= u[j - 1]) {
        throw InvalidDistribution("grid is not strictly increasing");
      }
      const double expected = u.front() + du * static_cast<double>(j);
      if (std::abs(u[j] - expected) > tol) {
        throw InvalidDistribution("grid is not uniform");
      }
    }
  }
}

double InteractionSpec::path_difference(double t_seconds, double lambda0_m) const {
  return delta_n * kSpeedOfLight * t_seconds / lambda0_m;
}

double InteractionSpec::interaction_time(double path_difference,
                                         double lambda0_m) const {
  if (delta_n == 0.0) {
    throw Error("interaction_time: delta_n must be nonzero");
  }
  return path_difference * lambda0_m / (delta_n * kSpeedOfLight);
}

void DecoherenceTrace::validate() const {
  if (d.size() != kappa.size()) {
    throw Error("trace arrays are mismatched");
  }
  for (std::size_t m = 0; m < d.size(); ++m) {
    if (!std::isfinite(d[m]) || !std::isfinite(kappa[m].real()) ||
        !std::isfinite(kappa[m].imag())) {
      throw Error("trace contains non-finite entries");
    }
    if (m > 0 && d[m] <= d[m - 1]) {
      throw Error("trace grid is not strictly increasing");
    }
  }
}

DecoherenceTrace forward_kappa(const ComplexFreqDistribution& dist,
                               std::span<const double> path_grid,
                               const ForwardOptions& opts) {
  dist.validate();
  for (double d : path_grid) {
    if (!std::isfinite(d)) {
      throw Error("forward_kappa: non-finite path grid entry");
    }
  }
  if (opts.enforce_alias_horizon && dist.size() >= 2) {
    const double horizon = 0.5 / dist.delta_u();
    for (double d : path_grid) {
      if (std::abs(d) > horizon * (1.0 + 1e-12)) {
        throw AliasingError(
            "forward_kappa: path grid exceeds the aliasing horizon 0.5/du; "
            "a uniform grid makes kappa periodic with period 1/du");
      }
    }
  }
  DecoherenceTrace out;
  out.d.assign(path_grid.begin(), path_grid.end());
  out.kappa.resize(path_grid.size());
  const std::size_t n = dist.size();
  for (std::size_t m = 0; m < path_grid.size(); ++m) {
    std::complex<double> acc{0.0, 0.0};
    const double d = path_grid[m];
    for (std::size_t j = 0; j < n; ++j) {
      acc += dist.p[j] * std::polar(1.0, dist.theta[j] + kTwoPi * dist.u[j] * d);
    }
    out.kappa[m] = acc;
  }
  return out;
}

std::complex<double> kappa_zero(const ComplexFreqDistribution& dist) {
  dist.validate();
  std::complex<double> acc{0.0, 0.0};
  for (std::size_t j = 0; j < dist.size(); ++j) {
    acc += dist.p[j] * std::polar(1.0, dist.theta[j]);
  }
  return acc;
}

DecoherenceTrace scaled_decoherence(const DecoherenceTrace& trace, double tol) {
  trace.validate();
  if (trace.size() == 0) {
    throw MissingOrigin("scaled_decoherence: empty trace");
  }
  if (std::abs(trace.d.front()) > 1e-12) {
    throw MissingOrigin("scaled_decoherence: first grid point is not d = 0");
  }
  const std::complex<double> k0 = trace.kappa.front();
  if (std::abs(k0) <= tol) {
    throw SingularScaling("scaled_decoherence: |kappa(0)| below tolerance");
  }
  DecoherenceTrace out;
  out.d = trace.d;
  out.kappa.resize(trace.size());
  for (std::size_t m = 0; m < trace.size(); ++m) {
    out.kappa[m] = trace.kappa[m] / k0;
  }
  out.kappa.front() = {1.0, 0.0};
  return out;
}

}  // namespace dephasim
