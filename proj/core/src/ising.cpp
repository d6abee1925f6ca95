//---------------------------------------------------------------------------//
// SPDX-License-Identifier: Apache-2.0
//! \file ising.cpp
//---------------------------------------------------------------------------//
#include "dephasim/ising.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <numbers>

#include "dephasim/errors.hpp"

namespace dephasim {

void IsingChainSpec::validate() const {
  if (!(coupling_J > 0.0)) {
    throw Error("ising: coupling_J must be positive");
  }
  if (delta < 0.0) {
    throw Error("ising: delta must be nonnegative");
  }
  if (n_spins < 2 || n_spins % 2 != 0) {
    throw Error("ising: n_spins must be even and >= 2");
  }
  if (!std::isfinite(lambda)) {
    throw Error("ising: lambda must be finite");
  }
}

namespace {

double branch_field(const IsingChainSpec& spec, BranchShift shift) {
  return spec.lambda +
         (shift == BranchShift::PlusDelta ? 1.0 : 2.0) * spec.delta;
}

//! Bogoliubov angle of the chain with field lam at momentum k.
double bogoliubov_angle(double lam, double k) {
  return std::atan2(std::sin(k), lam - std::cos(k));
}

void check_times(std::span<const double> times) {
  for (double t : times) {
    if (!std::isfinite(t) || t < 0.0) {
      throw Error("ising: times must be finite and nonnegative");
    }
  }
}

}  // namespace

QuasiparticleData quasiparticles(const IsingChainSpec& spec, BranchShift shift) {
  spec.validate();
  const int half = spec.n_spins / 2;
  const double lam_g = spec.lambda;
  const double lam_e = branch_field(spec, shift);
  QuasiparticleData out;
  out.momentum.resize(static_cast<std::size_t>(half));
  out.epsilon.resize(static_cast<std::size_t>(half));
  out.alpha.resize(static_cast<std::size_t>(half));
  for (int a = 1; a <= half; ++a) {
    const double k =
        (2.0 * a - 1.0) * std::numbers::pi / static_cast<double>(spec.n_spins);
    const std::size_t i = static_cast<std::size_t>(a - 1);
    out.momentum[i] = k;
    out.epsilon[i] = 2.0 * spec.coupling_J *
                     std::sqrt(1.0 + lam_e * lam_e - 2.0 * lam_e * std::cos(k));
    out.alpha[i] = 0.5 * (bogoliubov_angle(lam_e, k) - bogoliubov_angle(lam_g, k));
  }
  return out;
}

DecoherenceTrace decoherence_fn(const IsingChainSpec& spec,
                                std::span<const double> times,
                                BranchShift shift, ProductMode mode) {
  check_times(times);
  const QuasiparticleData qp = quasiparticles(spec, shift);
  std::vector<double> s2a(qp.size());
  for (std::size_t i = 0; i < qp.size(); ++i) {
    const double s = std::sin(2.0 * qp.alpha[i]);
    s2a[i] = s * s;
  }

  DecoherenceTrace out;
  out.d.assign(times.begin(), times.end());
  out.kappa.resize(times.size());
  std::vector<double> factors(qp.size());
  for (std::size_t m = 0; m < times.size(); ++m) {
    const double t = times[m];
    bool underflow = false;
    double prod = 1.0;
    for (std::size_t i = 0; i < qp.size(); ++i) {
      const double s = std::sin(qp.epsilon[i] * t);
      double f = 1.0 - s2a[i] * s * s;
      f = std::clamp(f, 0.0, 1.0);
      factors[i] = f;
      prod *= f;
      if (f < 1e-300 || prod < 1e-300) {
        underflow = true;
      }
    }
    double value;
    const bool use_log =
        mode == ProductMode::LogSpace || (mode == ProductMode::Auto && underflow);
    if (use_log) {
      double logsum = 0.0;
      for (double f : factors) {
        logsum += std::log(f);  // log(0) = -inf gives exp -> 0
      }
      value = std::exp(0.5 * logsum);
    } else {
      value = std::sqrt(prod);
    }
    out.kappa[m] = {value, 0.0};
  }
  return out;
}

DecoherenceTrace exact_oracle(const IsingChainSpec& spec,
                              std::span<const double> times) {
  spec.validate();
  check_times(times);
  if (spec.n_spins > 12) {
    throw SizeTooLarge("exact_oracle: dense diagonalization limited to 12 spins");
  }
  const int n = spec.n_spins;
  const long dim = 1L << n;

  // Both branch Hamiltonians are real symmetric in the computational basis:
  // s3 s3 is diagonal, s1 flips one bit.
  const auto build = [&](double lam) {
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
    for (long s = 0; s < dim; ++s) {
      double diag = 0.0;
      for (int j = 0; j < n; ++j) {
        const int jn = (j + 1) % n;
        const double zj = ((s >> j) & 1L) ? -1.0 : 1.0;
        const double zn = ((s >> jn) & 1L) ? -1.0 : 1.0;
        diag -= spec.coupling_J * zj * zn;
        h(s ^ (1L << j), s) -= spec.coupling_J * lam;
      }
      h(s, s) += diag;
    }
    return h;
  };

  const Eigen::MatrixXd hg = build(spec.lambda);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> gsolver(hg);

  // In the ordered phase the two lowest states are quasi-degenerate; project
  // onto even parity under P = prod_j s1_j (global bit flip) to select the
  // antiperiodic-sector ground state the momentum formula describes.
  const long mask = dim - 1;
  const auto parity_flip = [&](const Eigen::VectorXd& v) {
    Eigen::VectorXd out(dim);
    for (long s = 0; s < dim; ++s) {
      out(s) = v(s ^ mask);
    }
    return out;
  };
  Eigen::VectorXd ground = gsolver.eigenvectors().col(0);
  {
    const Eigen::VectorXd flipped = parity_flip(ground);
    const double parity = ground.dot(flipped);
    if (std::abs(parity - 1.0) > 1e-8) {
      Eigen::VectorXd even = ground + flipped;
      if (even.norm() < 1e-8) {
        const Eigen::VectorXd second = gsolver.eigenvectors().col(1);
        even = second + parity_flip(second);
      }
      ground = even.normalized();
    }
  }

  const Eigen::MatrixXd he = build(spec.lambda + spec.delta);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> esolver(he);
  const Eigen::VectorXd overlap2 =
      (esolver.eigenvectors().transpose() * ground).array().square();
  const Eigen::VectorXd& energies = esolver.eigenvalues();

  DecoherenceTrace out;
  out.d.assign(times.begin(), times.end());
  out.kappa.resize(times.size());
  for (std::size_t m = 0; m < times.size(); ++m) {
    std::complex<double> amp{0.0, 0.0};
    for (long i = 0; i < dim; ++i) {
      amp += overlap2(i) * std::polar(1.0, -energies(i) * times[m]);
    }
    out.kappa[m] = {std::abs(amp), 0.0};
  }
  return out;
}

std::string to_string(Regime r) {
  switch (r) {
    case Regime::Revival:
      return "revival";
    case Regime::MonotoneDecay:
      return "monotone_decay";
    case Regime::Trapping:
      return "trapping";
  }
  return "unknown";
}

Regime classify_regime(const DecoherenceTrace& trace,
                       const RegimeThresholds& th) {
  trace.validate();
  if (trace.size() < 2) {
    throw Error("classify_regime: trace too short");
  }
  std::vector<double> v(trace.size());
  for (std::size_t m = 0; m < trace.size(); ++m) {
    if (std::abs(trace.kappa[m].imag()) > 1e-9) {
      throw Error("classify_regime: trace is not real-valued");
    }
    v[m] = trace.kappa[m].real();
  }
  if (std::abs(v.front() - 1.0) > 1e-6) {
    throw Error("classify_regime: trace does not start at 1");
  }

  std::size_t first_low = v.size();
  for (std::size_t m = 0; m < v.size(); ++m) {
    if (v[m] < th.low) {
      first_low = m;
      break;
    }
  }
  if (first_low < v.size()) {
    for (std::size_t m = first_low + 1; m < v.size(); ++m) {
      if (v[m] > th.revival) {
        return Regime::Revival;
      }
    }
  }
  double vmin = v.front();
  for (double x : v) {
    vmin = std::min(vmin, x);
  }
  if (vmin >= th.trapping) {
    return Regime::Trapping;
  }
  return Regime::MonotoneDecay;
}

}  // namespace dephasim
