//---------------------------------------------------------------------------//
// SPDX-License-Identifier: Apache-2.0
//! \file dephasim/spectral.hpp
//---------------------------------------------------------------------------//
#pragma once

#include <limits>
#include <span>
#include <vector>

#include "dephasim/designer.hpp"
#include "dephasim/freq.hpp"

namespace dephasim {

//! Spectral density of a bosonic dephasing bath, either tabulated on
//! omega > 0 (linear interpolation between samples, zero outside the table)
//! or from a parametric family:
//!   Ohmic:    J(w) = alpha * w * exp(-w / omega_c)
//!   PowerLaw: J(w) = alpha * w^exponent * exp(-w / omega_c)
//! Frequencies are dimensionless in lambda0/c units; beta is the inverse
//! temperature in reciprocal frequency units, infinity meaning zero
//! temperature (coth -> 1). J(w) absorbs all coupling constants.
struct SpectralDensitySpec {
  enum class Family { Tabulated, Ohmic, PowerLaw };

  Family family = Family::Ohmic;
  double alpha = 1.0;
  double omega_c = 1.0;
  double exponent = 1.0;  //!< PowerLaw only; Ohmic is exponent = 1
  double beta = std::numeric_limits<double>::infinity();
  std::vector<double> table_omega;
  std::vector<double> table_j;

  void validate() const;
  //! J(omega), zero outside the tabulated/parametric support.
  double density(double omega) const;
  //! Upper integration limit: table end, or the point where the
  //! exponential envelope is negligible.
  double support_max() const;
};

//! D(t) = exp[ -int_0^inf dw J(w) coth(beta w / 2) (1 - cos(w t)) / w^2 ].
//! Real, D(0) = 1, 0 < D <= 1. Evaluated by adaptive Gauss-Kronrod 7/15
//! quadrature on panels no wider than a half oscillation of cos(w t)
//! (relative tolerance target 1e-8). Throws IntegralDiverges when the
//! omega -> 0 behavior is non-integrable: PowerLaw needs exponent > 0 at
//! finite temperature and exponent > -1 at zero temperature.
DecoherenceTrace spectral_decoherence(const SpectralDensitySpec& spec,
                                      std::span<const double> times);

//! Wrap a real positive decoherence trace as an inverse-design target, so
//! the J(w) -> D(t) -> (p, theta) -> kappa pipeline closes. For such
//! targets the designed phase distribution is constant.
DesignTarget decoherence_to_design(const DecoherenceTrace& trace);

}  // namespace dephasim
