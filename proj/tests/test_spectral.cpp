//---------------------------------------------------------------------------//
// SPDX-License-Identifier: Apache-2.0
//! \file test_spectral.cpp
//---------------------------------------------------------------------------//
#include <doctest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "dephasim/designer.hpp"
#include "dephasim/errors.hpp"
#include "dephasim/spectral.hpp"

using namespace dephasim;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<double> linspace(double tmax, std::size_t n) {
  std::vector<double> t(n);
  for (std::size_t m = 0; m < n; ++m) {
    t[m] = tmax * static_cast<double>(m) / static_cast<double>(n - 1);
  }
  return t;
}

SpectralDensitySpec ohmic(double alpha, double omega_c, double beta = kInf) {
  SpectralDensitySpec s;
  s.family = SpectralDensitySpec::Family::Ohmic;
  s.alpha = alpha;
  s.omega_c = omega_c;
  s.beta = beta;
  return s;
}

SpectralDensitySpec bimodal_table() {
  SpectralDensitySpec s;
  s.family = SpectralDensitySpec::Family::Tabulated;
  for (int i = 0; i <= 80; ++i) {
    const double w = 0.05 + (2.0 - 0.05) * static_cast<double>(i) / 80.0;
    const double j1 = std::exp(-std::pow((w - 0.6) / 0.12, 2) / 2.0);
    const double j2 = 0.6 * std::exp(-std::pow((w - 1.3) / 0.18, 2) / 2.0);
    s.table_omega.push_back(w);
    s.table_j.push_back(0.35 * (j1 + j2));
  }
  return s;
}

}  // namespace

TEST_CASE("zero coupling means no decoherence") {
  const auto tr = spectral_decoherence(ohmic(0.0, 1.0), linspace(10.0, 11));
  for (const auto& k : tr.kappa) {
    CHECK(k.real() == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("D(0) = 1 exactly for any spec") {
  const std::vector<double> t0 = {0.0};
  CHECK(spectral_decoherence(ohmic(1.7, 2.3, 5.0), t0).kappa[0].real() == 1.0);
  CHECK(spectral_decoherence(bimodal_table(), t0).kappa[0].real() == 1.0);
}

TEST_CASE("zero-temperature Ohmic quadrature matches the closed form") {
  // D(t) = (1 + wc^2 t^2)^(-alpha/2)
  const double omega_c = 1.0;
  for (double alpha : {0.1, 1.0, 2.0}) {
    const auto times = linspace(20.0, 81);
    const auto tr = spectral_decoherence(ohmic(alpha, omega_c), times);
    for (std::size_t m = 0; m < times.size(); ++m) {
      const double t = times[m];
      const double closed =
          std::pow(1.0 + omega_c * omega_c * t * t, -alpha / 2.0);
      CHECK(std::abs(tr.kappa[m].real() - closed) / closed < 1e-6);
    }
  }
}

TEST_CASE("the Ohmic closed form also holds for rescaled cutoffs") {
  const double omega_c = 3.7;
  const double alpha = 0.6;
  const auto times = linspace(20.0 / omega_c, 41);
  const auto tr = spectral_decoherence(ohmic(alpha, omega_c), times);
  for (std::size_t m = 0; m < times.size(); ++m) {
    const double closed =
        std::pow(1.0 + omega_c * omega_c * times[m] * times[m], -alpha / 2.0);
    CHECK(std::abs(tr.kappa[m].real() - closed) / closed < 1e-6);
  }
}

TEST_CASE("D decreases with temperature (decreasing beta) pointwise") {
  const auto times = linspace(8.0, 10);
  std::vector<double> betas;
  for (int i = 0; i < 10; ++i) {
    betas.push_back(50.0 / std::pow(2.0, i));
  }
  std::vector<std::vector<double>> rows;
  for (double beta : betas) {
    const auto tr = spectral_decoherence(ohmic(0.4, 1.0, beta), times);
    std::vector<double> row;
    for (const auto& k : tr.kappa) {
      row.push_back(k.real());
    }
    rows.push_back(row);
  }
  for (std::size_t b = 1; b < rows.size(); ++b) {
    for (std::size_t m = 0; m < times.size(); ++m) {
      CHECK(rows[b][m] <= rows[b - 1][m] + 1e-12);
    }
  }
}

TEST_CASE("trace values stay in (0, 1] and are real") {
  const auto tr = spectral_decoherence(bimodal_table(), linspace(20.0, 64));
  for (const auto& k : tr.kappa) {
    CHECK(k.real() > 0.0);
    CHECK(k.real() <= 1.0);
    CHECK(k.imag() == 0.0);
  }
}

TEST_CASE("sub-ohmic exponents diverge only where they should") {
  SpectralDensitySpec s;
  s.family = SpectralDensitySpec::Family::PowerLaw;
  s.alpha = 1.0;
  s.omega_c = 1.0;

  s.exponent = 0.0;
  s.beta = 1.0;  // finite temperature, s <= 0: diverges
  CHECK_THROWS_AS(s.validate(), IntegralDiverges);

  s.beta = kInf;  // zero temperature, s = 0 is integrable
  CHECK_NOTHROW(s.validate());
  const auto tr = spectral_decoherence(s, linspace(5.0, 6));
  CHECK(tr.kappa.back().real() < 1.0);

  s.exponent = -1.0;  // non-integrable even at zero temperature
  CHECK_THROWS_AS(s.validate(), IntegralDiverges);

  s.exponent = 0.5;
  s.beta = 2.0;  // genuinely sub-ohmic but integrable
  CHECK_NOTHROW(spectral_decoherence(s, linspace(3.0, 4)));
}

TEST_CASE("powerlaw with exponent 1 equals the ohmic family") {
  SpectralDensitySpec p;
  p.family = SpectralDensitySpec::Family::PowerLaw;
  p.alpha = 0.8;
  p.omega_c = 1.3;
  p.exponent = 1.0;
  const auto times = linspace(10.0, 21);
  const auto a = spectral_decoherence(p, times);
  const auto b = spectral_decoherence(ohmic(0.8, 1.3), times);
  for (std::size_t m = 0; m < times.size(); ++m) {
    CHECK(a.kappa[m].real() == doctest::Approx(b.kappa[m].real()).epsilon(1e-12));
  }
}

TEST_CASE("the ohmic trace designs back to itself at full resolution") {
  const auto times = linspace(20.0, 512);
  const auto tr = spectral_decoherence(ohmic(1.0, 1.0), times);
  const DesignTarget target = decoherence_to_design(tr);
  const DesignResult res = invert_target(target, 1023);
  CHECK(roundtrip_error(target, res.dist) < 1e-3);
}

TEST_CASE("tabulated bimodal density survives 900-pixel quantization") {
  const auto times = linspace(20.0, 512);
  const auto tr = spectral_decoherence(bimodal_table(), times);
  const DesignTarget target = decoherence_to_design(tr);
  const DesignResult res = invert_target(target, 900);
  HardwareProfile hw;
  hw.bandwidth_u = 900.0 * res.dist.delta_u();
  const ComplexFreqDistribution q = quantize(res.dist, hw);
  CHECK(roundtrip_error(target, q) < 5e-2);
}

TEST_CASE("decoherence_to_design rejects non-positive traces") {
  DecoherenceTrace tr;
  tr.d = {0.0, 1.0};
  tr.kappa = {{1.0, 0.0}, {-0.2, 0.0}};
  CHECK_THROWS_AS(decoherence_to_design(tr), Error);
}

TEST_CASE("spec validation errors") {
  SpectralDensitySpec bad = ohmic(-1.0, 1.0);
  CHECK_THROWS_AS(bad.validate(), Error);
  bad = ohmic(1.0, 0.0);
  CHECK_THROWS_AS(bad.validate(), Error);
  bad = ohmic(1.0, 1.0, 0.0);
  CHECK_THROWS_AS(bad.validate(), Error);

  SpectralDensitySpec table;
  table.family = SpectralDensitySpec::Family::Tabulated;
  table.table_omega = {0.0, 1.0};
  table.table_j = {1.0, 1.0};
  CHECK_THROWS_AS(table.validate(), Error);  // omega must start above 0
}
