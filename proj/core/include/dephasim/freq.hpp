//---------------------------------------------------------------------------//
// SPDX-License-Identifier: Apache-2.0
//! \file dephasim/freq.hpp
//---------------------------------------------------------------------------//
#pragma once

#include <complex>
#include <span>
#include <vector>

namespace dephasim {

using Complex = std::complex<double>;

//! Wrap an angle to the canonical branch (-pi, pi].
double wrap_phase(double theta);

//! Discretized complex frequency distribution: probability p_j and phase
//! theta_j per pixel, on a strictly increasing uniform grid u_j.
//!
//! Units: u is dimensionless frequency in lambda0/c (lambda0 = 800 nm);
//! path differences d are dimensionless lengths in lambda0. Then the
//! evolution kernel is exp(i 2 pi u d).
struct ComplexFreqDistribution {
  std::vector<double> u;
  std::vector<double> p;
  std::vector<double> theta;

  std::size_t size() const { return u.size(); }
  //! Uniform grid spacing; requires size() >= 2.
  double delta_u() const;
  //! Throws InvalidDistribution unless: sum(p) = 1 within 1e-9, p >= 0,
  //! grid strictly increasing and uniform within 1e-12 relative, and
  //! theta on the canonical branch (-pi, pi].
  void validate() const;
};

//! Physical time <-> effective path difference conversion, d = dn c t / lambda0.
//! Kept out of the core math, which works in dimensionless units throughout.
struct InteractionSpec {
  double delta_n = 0.0;  //!< n_H - n_V of the birefringent medium

  double path_difference(double t_seconds, double lambda0_m = 800e-9) const;
  double interaction_time(double path_difference, double lambda0_m = 800e-9) const;
};

//! Sampled complex decoherence function kappa(d) (or D(d) after scaling)
//! on a strictly increasing path-difference grid.
struct DecoherenceTrace {
  std::vector<double> d;
  std::vector<std::complex<double>> kappa;

  std::size_t size() const { return d.size(); }
  void validate() const;
};

struct ForwardOptions {
  //! A grid of spacing du makes kappa periodic with period 1/du. By default
  //! path grids beyond half that period are refused (AliasingError).
  bool enforce_alias_horizon = true;
};

//! kappa(d_m) = sum_j p_j exp(i theta_j) exp(i 2 pi u_j d_m).
//! |kappa| <= 1 everywhere by normalization.
DecoherenceTrace forward_kappa(const ComplexFreqDistribution& dist,
                               std::span<const double> path_grid,
                               const ForwardOptions& opts = {});

//! kappa(0) = sum_j p_j exp(i theta_j).
std::complex<double> kappa_zero(const ComplexFreqDistribution& dist);

//! Pointwise kappa(d)/kappa(0); the first grid point must be d = 0
//! (MissingOrigin otherwise) and |kappa(0)| must exceed tol
//! (SingularScaling otherwise). The first sample of the result is
//! exactly 1.
DecoherenceTrace scaled_decoherence(const DecoherenceTrace& trace,
                                    double tol = 1e-9);

}  // namespace dephasim
