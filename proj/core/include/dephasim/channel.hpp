//---------------------------------------------------------------------------//
// SPDX-License-Identifier: Apache-2.0
//! \file dephasim/channel.hpp
//---------------------------------------------------------------------------//
#pragma once

#include <array>
#include <complex>

namespace dephasim {

using Complex = std::complex<double>;

//! 2x2 polarization-qubit density matrix in the {H = 0, V = 1} basis.
struct QubitState {
  Complex rho00{0.0, 0.0};
  Complex rho01{0.0, 0.0};
  Complex rho10{0.0, 0.0};
  Complex rho11{0.0, 0.0};

  //! Diagonal (population-only) state diag(p0, 1 - p0).
  static QubitState diagonal(double p0);

  //! Balanced superposition (|H> + s|V>)/sqrt(2) with s = +1 or -1.
  static QubitState superposition(int sign);

  //! Build the Hermitian state 0.5(I + x sx + y sy + z sz) from Bloch coordinates.
  static QubitState from_bloch(double x, double y, double z);

  double trace() const { return rho00.real() + rho11.real(); }
  bool is_hermitian(double tol = 1e-9) const;
  bool is_unit_trace(double tol = 1e-9) const;
  //! det >= -tol and populations >= -tol (positive semidefiniteness).
  bool is_positive_semidefinite(double tol = 1e-9) const;
};

//! Pure dephasing channel at a fixed time, parametrized by the complex
//! decoherence value d. |d| > 1 is representable on purpose: such channels
//! are exactly the non-positive maps this toolkit analyzes.
struct DephasingChannel {
  Complex d{1.0, 0.0};
};

//! Apply the dephasing channel: populations unchanged, rho10 *= d,
//! rho01 *= conj(d). Throws InvalidState if the input is not Hermitian
//! with unit trace (tolerance 1e-9).
QubitState apply_channel(const QubitState& state, const DephasingChannel& ch);

//! Eigenvalues (ascending) of the 4x4 Choi matrix of the channel, in the
//! trace-2 convention (unnormalized maximally entangled input). They sum
//! to 2, and the minimum is negative exactly when |d| > 1.
std::array<double, 4> choi_eigenvalues(const DephasingChannel& ch);

//! |d| <= 1 + tol. For this channel family positivity and complete
//! positivity coincide, so this is also the CP test.
bool is_positive_map(const DephasingChannel& ch, double tol = 1e-9);

//! Trace distance 0.5 * tr|a - b|.
double trace_distance(const QubitState& a, const QubitState& b);

}  // namespace dephasim
