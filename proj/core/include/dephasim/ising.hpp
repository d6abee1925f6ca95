//---------------------------------------------------------------------------//
// SPDX-License-Identifier: Apache-2.0
//! \file dephasim/ising.hpp
//---------------------------------------------------------------------------//
#pragma once

#include <span>
#include <string>
#include <vector>

#include "dephasim/freq.hpp"

namespace dephasim {

//! Central spin coupled to a periodic transverse-field Ising chain,
//! H = -J sum_j (s3_j s3_{j+1} + lambda s1_j + delta |e><e| s1_j).
struct IsingChainSpec {
  double coupling_J = 1.0;
  double lambda = 1.0;
  double delta = 0.1;
  int n_spins = 4000;

  void validate() const;  //!< J > 0, delta >= 0, N even and >= 2
};

//! Which transverse field the excited branch of the central spin sees.
//! Written as in the Hamiltonian above, |e><e| shifts lambda by delta;
//! the alternative 2*delta convention (|e><e| expressed through the
//! central-spin s3) is kept selectable. PlusDelta is the convention the
//! exact-diagonalization oracle confirms.
enum class BranchShift { PlusDelta, PlusTwoDelta };

//! Quasiparticle data per positive momentum k_a = (2a - 1) pi / N,
//! a = 1 .. N/2 (even-parity / antiperiodic sector): the quasiexcitation
//! energy of the shifted branch and half the Bogoliubov-angle difference
//! between the two branches.
struct QuasiparticleData {
  std::vector<double> momentum;
  std::vector<double> epsilon;
  std::vector<double> alpha;

  std::size_t size() const { return momentum.size(); }
};

QuasiparticleData quasiparticles(const IsingChainSpec& spec,
                                 BranchShift shift = BranchShift::PlusDelta);

//! Evaluation strategy for the product over momentum modes. Auto switches
//! to log-space accumulation as soon as a factor or the running product
//! drops below 1e-300; the other two force one path (used to cross-check
//! that both agree where no underflow occurs).
enum class ProductMode { Auto, Direct, LogSpace };

//! Decoherence amplitude of the central spin,
//!   D(t) = prod_{k>0} sqrt(1 - sin^2(2 alpha_k) sin^2(eps_k t)),
//! i.e. |<G| e^{+i Hg t} e^{-i He t} |G>|. Real-valued, D(0) = 1,
//! 0 <= D <= 1. (The product without the square root is the Loschmidt
//! echo, the squared amplitude.)
DecoherenceTrace decoherence_fn(const IsingChainSpec& spec,
                                std::span<const double> times,
                                BranchShift shift = BranchShift::PlusDelta,
                                ProductMode mode = ProductMode::Auto);

//! Brute-force dense-diagonalization oracle: builds both 2^N branch
//! Hamiltonians from Pauli matrices with periodic boundary conditions,
//! takes the even-parity ground state of the unperturbed branch and
//! returns |<G| e^{+i Hg t} e^{-i He t} |G>|. Throws SizeTooLarge above
//! 12 spins.
DecoherenceTrace exact_oracle(const IsingChainSpec& spec,
                              std::span<const double> times);

enum class Regime { Revival, MonotoneDecay, Trapping };

std::string to_string(Regime r);

struct RegimeThresholds {
  double low = 0.3;       //!< revival requires a dip below this ...
  double revival = 0.5;   //!< ... followed by a sample above this
  double trapping = 0.4;  //!< trapping requires the global minimum >= this
};

//! Classify a real decoherence trace that starts at 1: revival if it drops
//! below `low` and later exceeds `revival`; trapping if the global minimum
//! stays at or above `trapping`; monotone decay otherwise.
Regime classify_regime(const DecoherenceTrace& trace,
                       const RegimeThresholds& thresholds = {});

}  // namespace dephasim
