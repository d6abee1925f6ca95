//---------------------------------------------------------------------------//
// SPDX-License-Identifier: Apache-2.0
//! \file spectral.cpp
//---------------------------------------------------------------------------//
#include "dephasim/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "dephasim/errors.hpp"

namespace dephasim {

namespace {

// Gauss-Kronrod 7/15 abscissae and weights on [-1, 1] (QUADPACK dqk15).
constexpr double kKronrodX[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.000000000000000};
constexpr double kKronrodW[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
constexpr double kGaussW[4] = {0.129484966168870, 0.279705391489277,
                               0.381830050505119, 0.417959183673469};

struct PanelResult {
  double integral;
  double error;
};

template <typename F>
PanelResult gk15(const F& f, double a, double b) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double kron = 0.0;
  double gauss = 0.0;
  for (int i = 0; i < 8; ++i) {
    const double dx = half * kKronrodX[i];
    const double fsum =
        i == 7 ? f(mid) : f(mid - dx) + f(mid + dx);
    kron += kKronrodW[i] * fsum;
    if (i % 2 == 1) {
      gauss += kGaussW[i / 2] * fsum;
    }
  }
  kron *= half;
  gauss *= half;
  return {kron, std::abs(kron - gauss)};
}

template <typename F>
double adaptive(const F& f, double a, double b, double tol, int depth) {
  const PanelResult r = gk15(f, a, b);
  if (r.error <= tol || depth >= 28) {
    return r.integral;
  }
  const double mid = 0.5 * (a + b);
  return adaptive(f, a, mid, 0.5 * tol, depth + 1) +
         adaptive(f, mid, b, 0.5 * tol, depth + 1);
}

double coth_factor(double beta, double omega) {
  if (std::isinf(beta)) {
    return 1.0;
  }
  const double x = 0.5 * beta * omega;
  if (x < 1e-4) {
    // series expansion below the crossover, avoiding 1/x - 1/x cancellation
    return 1.0 / x + x / 3.0 - x * x * x / 45.0;
  }
  if (x > 350.0) {
    return 1.0;
  }
  return 1.0 + 2.0 / std::expm1(2.0 * x);
}

//! (1 - cos(w t)) / w^2 = (t^2 / 2) sinc^2(w t / 2), stable at w -> 0.
double oscillation_kernel(double omega, double t) {
  const double x = 0.5 * omega * t;
  double sinc;
  if (std::abs(x) < 1e-4) {
    sinc = 1.0 - x * x / 6.0;
  } else {
    sinc = std::sin(x) / x;
  }
  return 0.5 * t * t * sinc * sinc;
}

}  // namespace

void SpectralDensitySpec::validate() const {
  if (!(beta > 0.0)) {
    throw Error("spectral: beta must be positive (or infinity)");
  }
  if (family == Family::Tabulated) {
    if (table_omega.size() < 2 || table_omega.size() != table_j.size()) {
      throw Error("spectral: table needs >= 2 matching (omega, J) samples");
    }
    if (!(table_omega.front() > 0.0)) {
      throw Error("spectral: tabulated omega must start above 0");
    }
    for (std::size_t i = 0; i < table_omega.size(); ++i) {
      if (!std::isfinite(table_omega[i]) || !std::isfinite(table_j[i])) {
        throw Error("spectral: non-finite table entry");
      }
      if (table_j[i] < 0.0) {
        throw Error("spectral: J must be nonnegative");
      }
      if (i > 0 && table_omega[i] <= table_omega[i - 1]) {
        throw Error("spectral: tabulated omega must be strictly increasing");
      }
    }
  } else {
    if (alpha < 0.0) {
      throw Error("spectral: alpha must be nonnegative");
    }
    if (!(omega_c > 0.0)) {
      throw Error("spectral: omega_c must be positive");
    }
    const double s = family == Family::Ohmic ? 1.0 : exponent;
    if (!std::isfinite(s)) {
      throw Error("spectral: exponent must be finite");
    }
    // Integrability of J coth (1-cos)/w^2 ~ w^{s-1} (finite T) or w^s (T=0)
    if (!std::isinf(beta) && s <= 0.0) {
      throw IntegralDiverges(
          "spectral: J ~ w^s with s <= 0 at finite temperature makes the "
          "integrand non-integrable at omega -> 0 (requires s > 0)");
    }
    if (std::isinf(beta) && s <= -1.0) {
      throw IntegralDiverges(
          "spectral: J ~ w^s with s <= -1 is non-integrable at omega -> 0 "
          "even at zero temperature (requires s > -1)");
    }
  }
}

double SpectralDensitySpec::density(double omega) const {
  if (omega <= 0.0) {
    return 0.0;
  }
  switch (family) {
    case Family::Tabulated: {
      if (omega < table_omega.front() || omega > table_omega.back()) {
        return 0.0;
      }
      const auto it =
          std::upper_bound(table_omega.begin(), table_omega.end(), omega);
      const std::size_t hi = static_cast<std::size_t>(
          std::min<std::ptrdiff_t>(it - table_omega.begin(),
                                   static_cast<std::ptrdiff_t>(table_omega.size()) - 1));
      const std::size_t lo = hi - 1;
      const double f =
          (omega - table_omega[lo]) / (table_omega[hi] - table_omega[lo]);
      return table_j[lo] + f * (table_j[hi] - table_j[lo]);
    }
    case Family::Ohmic:
      return alpha * omega * std::exp(-omega / omega_c);
    case Family::PowerLaw:
      return alpha * std::pow(omega, exponent) * std::exp(-omega / omega_c);
  }
  return 0.0;
}

double SpectralDensitySpec::support_max() const {
  if (family == Family::Tabulated) {
    return table_omega.back();
  }
  const double s = family == Family::Ohmic ? 1.0 : exponent;
  return omega_c * (45.0 + 5.0 * std::max(1.0, s));
}

DecoherenceTrace spectral_decoherence(const SpectralDensitySpec& spec,
                                      std::span<const double> times) {
  spec.validate();
  for (double t : times) {
    if (!std::isfinite(t) || t < 0.0) {
      throw Error("spectral: times must be finite and nonnegative");
    }
  }

  const double omega_max = spec.support_max();
  const double omega_min =
      spec.family == SpectralDensitySpec::Family::Tabulated
          ? spec.table_omega.front()
          : 0.0;

  DecoherenceTrace out;
  out.d.assign(times.begin(), times.end());
  out.kappa.resize(times.size());

  for (std::size_t m = 0; m < times.size(); ++m) {
    const double t = times[m];
    if (t == 0.0) {
      out.kappa[m] = {1.0, 0.0};
      continue;
    }
    const auto integrand = [&](double w) {
      return spec.density(w) * coth_factor(spec.beta, w) *
             oscillation_kernel(w, t);
    };
    // Panels no wider than a half oscillation period pi / t.
    const double span = omega_max - omega_min;
    const long n_panels = std::clamp<long>(
        static_cast<long>(std::ceil(span * t / std::numbers::pi)), 16, 200000);
    const double width = span / static_cast<double>(n_panels);
    // Coarse scale sets the absolute tolerance for refinement.
    double coarse = 0.0;
    for (long i = 0; i < n_panels; ++i) {
      coarse += gk15(integrand, omega_min + width * static_cast<double>(i),
                     omega_min + width * static_cast<double>(i + 1))
                    .integral;
    }
    const double tol_total = 1e-9 * std::max(std::abs(coarse), 1e-6);
    double integral = 0.0;
    for (long i = 0; i < n_panels; ++i) {
      integral +=
          adaptive(integrand, omega_min + width * static_cast<double>(i),
                   omega_min + width * static_cast<double>(i + 1),
                   tol_total / static_cast<double>(n_panels), 0);
    }
    out.kappa[m] = {std::exp(-integral), 0.0};
  }
  return out;
}

DesignTarget decoherence_to_design(const DecoherenceTrace& trace) {
  trace.validate();
  DesignTarget target;
  target.d = trace.d;
  target.target.resize(trace.size());
  for (std::size_t m = 0; m < trace.size(); ++m) {
    if (std::abs(trace.kappa[m].imag()) > 1e-9 || trace.kappa[m].real() <= 0.0) {
      throw Error("decoherence_to_design: trace must be real and positive");
    }
    target.target[m] = {trace.kappa[m].real(), 0.0};
  }
  return target;
}

}  // namespace dephasim
