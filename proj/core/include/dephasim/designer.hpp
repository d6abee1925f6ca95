//---------------------------------------------------------------------------//
// SPDX-License-Identifier: Apache-2.0
//! \file dephasim/designer.hpp
//---------------------------------------------------------------------------//
#pragma once

#include <complex>
#include <vector>

#include "dephasim/freq.hpp"

namespace dephasim {

//! Desired decoherence values D(d_m) on a uniform path-difference grid that
//! contains d = 0. A grid starting at 0 is extended to negative d by
//! Hermitian symmetry kappa(-d) = conj(kappa(d)) before inversion; a grid
//! already spanning negative d is inverted as given (this is the form that
//! recovers general complex phase distributions).
struct DesignTarget {
  std::vector<double> d;
  std::vector<std::complex<double>> target;

  std::size_t size() const { return d.size(); }
  void validate() const;
};

//! SLM emulation profile: finite pixel window plus amplitude/phase depth.
//! The defaults model the experiment: 900 usable pixels across the 3 nm
//! bandwidth at 800 nm (0.00375 in lambda0/c units). The level count per
//! pixel is not published; 256 is a documented assumption.
struct HardwareProfile {
  int pixel_count = 900;
  double bandwidth_u = 3.0 / 800.0;
  int amplitude_levels = 256;
  int phase_levels = 256;
  //! quantize() throws BandwidthTooNarrow when the window captures less
  //! probability than this.
  double capture_threshold = 0.5;

  void validate() const;
};

struct InvertOptions {
  //! Reject inversions whose weight piles up at the edge of the frequency
  //! band (the observable symptom of an under-sampled target).
  bool check_aliasing = true;
  //! Width of each edge band, as a fraction of the full bin count (at
  //! least one bin).
  double edge_fraction = 0.01;
  //! Maximum |w| mass allowed in the edge bands, relative to the total.
  double edge_mass_tol = 1e-3;
};

struct DesignResult {
  ComplexFreqDistribution dist;
  //! kappa(0) realized by the normalized distribution. Magnitude < 1
  //! whenever the inverse transform has sign/phase structure; the scaled
  //! trace (not the raw one) is what reproduces the target.
  std::complex<double> kappa0;
};

//! Inverse DFT of the target into complex weights w_j on the frequency grid
//! u_j = j / (K du_path); p_j = |w_j| / sum|w_j|, theta_j = arg(w_j).
//! grid_size selects the central grid_size bins of the K-bin spectrum
//! (grid_size <= K required). Throws NonPhysicalTarget when the target is 0
//! at d = 0 or the weights vanish, AliasingError per InvertOptions.
DesignResult invert_target(const DesignTarget& target, int grid_size,
                           const InvertOptions& opts = {});

//! Resample onto hw.pixel_count pixels across hw.bandwidth_u (window
//! centered on the input grid midpoint; pixels outside are dropped), then
//! round amplitudes and phases to the hardware level counts and
//! renormalize. Deterministic and exactly idempotent.
ComplexFreqDistribution quantize(const ComplexFreqDistribution& dist,
                                 const HardwareProfile& hw);

//! max_m |forward(dist)(d_m)/forward(dist)(0) - target_m / target_0|.
double roundtrip_error(const DesignTarget& target,
                       const ComplexFreqDistribution& dist);

}  // namespace dephasim
