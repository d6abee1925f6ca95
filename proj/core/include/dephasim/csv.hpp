//---------------------------------------------------------------------------//
// SPDX-License-Identifier: Apache-2.0
//! \file dephasim/csv.hpp
//---------------------------------------------------------------------------//
#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "dephasim/designer.hpp"
#include "dephasim/freq.hpp"
#include "dephasim/measurement.hpp"

namespace dephasim {

//! Shortest round-trippable decimal rendering of a double ("%.17g" trimmed),
//! locale-independent; the basis of byte-reproducible CSV output.
std::string csv_double(double v);

// Distribution files: header "u,p,theta", one row per pixel.
void write_distribution_csv(const std::filesystem::path& path,
                            const ComplexFreqDistribution& dist);
ComplexFreqDistribution read_distribution_csv(const std::filesystem::path& path);

// Trace files: header "d,re_kappa,im_kappa,abs_kappa".
void write_trace_csv(const std::filesystem::path& path,
                     const DecoherenceTrace& trace);
DecoherenceTrace read_trace_csv(const std::filesystem::path& path);

// Design target files: header "d,re,im".
void write_target_csv(const std::filesystem::path& path,
                      const DesignTarget& target);
DesignTarget read_target_csv(const std::filesystem::path& path);

// Measurement files: header "d,abs_kappa_true,abs_kappa_est,sigma".
void write_measurement_csv(const std::filesystem::path& path,
                           const std::vector<MeasurementRecord>& records);

// Tabulated spectral density: header "omega,J".
std::pair<std::vector<double>, std::vector<double>> read_spectral_table_csv(
    const std::filesystem::path& path);

}  // namespace dephasim
