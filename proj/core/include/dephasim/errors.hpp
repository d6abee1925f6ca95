//---------------------------------------------------------------------------//
// SPDX-License-Identifier: Apache-2.0
//! \file dephasim/errors.hpp
//---------------------------------------------------------------------------//
#pragma once

#include <stdexcept>
#include <string>

namespace dephasim {

//! Base class for all numerical / domain errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

//! A frequency distribution violates normalization, positivity or grid shape.
class InvalidDistribution : public Error {
 public:
  using Error::Error;
};

//! A density matrix fails the Hermiticity / unit-trace preconditions.
class InvalidState : public Error {
 public:
  using Error::Error;
};

//! Scaling by kappa(0) requested but |kappa(0)| is below tolerance.
class SingularScaling : public Error {
 public:
  using Error::Error;
};

//! A trace that must start at path difference 0 does not.
class MissingOrigin : public Error {
 public:
  using Error::Error;
};

//! Requested path grid or design target violates the sampling bound.
class AliasingError : public Error {
 public:
  using Error::Error;
};

//! Inverse design produced an all-zero weight vector (or kappa(0) = 0).
class NonPhysicalTarget : public Error {
 public:
  using Error::Error;
};

//! Hardware window captures less probability than the configured threshold.
class BandwidthTooNarrow : public Error {
 public:
  using Error::Error;
};

//! Dense diagonalization requested beyond the supported chain size.
class SizeTooLarge : public Error {
 public:
  using Error::Error;
};

//! The spectral-density integrand is non-integrable at omega -> 0.
class IntegralDiverges : public Error {
 public:
  using Error::Error;
};

//! Tomography received no counts in at least one measurement basis.
class AllZeroCounts : public Error {
 public:
  using Error::Error;
};

//! Scenario configuration is malformed (maps to CLI exit code 2).
class ConfigError : public Error {
 public:
  using Error::Error;
};

//! File could not be read, parsed or written (maps to CLI exit code 4).
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace dephasim
