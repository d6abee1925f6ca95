//---------------------------------------------------------------------------//
// SPDX-License-Identifier: Apache-2.0
//! \file channel.cpp
//---------------------------------------------------------------------------//
#include "dephasim/channel.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "dephasim/errors.hpp"

namespace dephasim {

QubitState QubitState::diagonal(double p0) {
  return {Complex{p0, 0.0}, Complex{0.0, 0.0}, Complex{0.0, 0.0},
          Complex{1.0 - p0, 0.0}};
}

QubitState QubitState::superposition(int sign) {
  const double s = sign >= 0 ? 0.5 : -0.5;
  return {Complex{0.5, 0.0}, Complex{s, 0.0}, Complex{s, 0.0},
          Complex{0.5, 0.0}};
}

QubitState QubitState::from_bloch(double x, double y, double z) {
  return {Complex{0.5 * (1.0 + z), 0.0}, 0.5 * Complex{x, -y},
          0.5 * Complex{x, y}, Complex{0.5 * (1.0 - z), 0.0}};
}

bool QubitState::is_hermitian(double tol) const {
  return std::abs(rho10 - std::conj(rho01)) <= tol &&
         std::abs(rho00.imag()) <= tol && std::abs(rho11.imag()) <= tol;
}

bool QubitState::is_unit_trace(double tol) const {
  return std::abs(trace() - 1.0) <= tol;
}

bool QubitState::is_positive_semidefinite(double tol) const {
  const double det = rho00.real() * rho11.real() - std::norm(rho01);
  return det >= -tol && rho00.real() >= -tol && rho11.real() >= -tol;
}

QubitState apply_channel(const QubitState& state, const DephasingChannel& ch) {
  if (!state.is_hermitian(1e-9)) {
    throw InvalidState("apply_channel: input state is not Hermitian");
  }
  if (!state.is_unit_trace(1e-9)) {
    throw InvalidState("apply_channel: input state does not have unit trace");
  }
  QubitState out = state;
  out.rho01 = std::conj(ch.d) * state.rho01;
  out.rho10 = ch.d * state.rho10;
  return out;
}

std::array<double, 4> choi_eigenvalues(const DephasingChannel& ch) {
  // C = sum_ij |i><j| (x) Lambda(|i><j|). Only four entries survive for a
  // dephasing channel: C[00,00] = C[11,11] = 1, C[00,11] = d*, C[11,00] = d.
  Eigen::Matrix4cd choi = Eigen::Matrix4cd::Zero();
  choi(0, 0) = 1.0;
  choi(3, 3) = 1.0;
  choi(0, 3) = std::conj(ch.d);
  choi(3, 0) = ch.d;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(choi,
                                                         Eigen::EigenvaluesOnly);
  std::array<double, 4> out{};
  for (int i = 0; i < 4; ++i) {
    out[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_positive_map(const DephasingChannel& ch, double tol) {
  return std::abs(ch.d) <= 1.0 + tol;
}

double trace_distance(const QubitState& a, const QubitState& b) {
  // Hermitian 2x2 difference: eigenvalues m +- r with
  // m = (d00 + d11)/2, r = sqrt(((d00 - d11)/2)^2 + |d01|^2).
  const double d00 = a.rho00.real() - b.rho00.real();
  const double d11 = a.rho11.real() - b.rho11.real();
  const Complex d01 = a.rho01 - b.rho01;
  const double mid = 0.5 * (d00 + d11);
  const double rad = std::hypot(0.5 * (d00 - d11), std::abs(d01));
  return 0.5 * (std::abs(mid + rad) + std::abs(mid - rad));
}

}  // namespace dephasim
