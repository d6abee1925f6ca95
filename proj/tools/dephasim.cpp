//---------------------------------------------------------------------------//
// SPDX-License-Identifier: Apache-2.0
//! \file dephasim.cpp
//! Command-line front end: scenario runner plus direct subcommands for the
//! forward map, inverse design, Ising environment, spectral densities and
//! the simulated measurement chain. Exit codes: 0 success, 2 configuration
//! error, 3 numerical error, 4 I/O error.
//---------------------------------------------------------------------------//
#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dephasim/csv.hpp"
#include "dephasim/designer.hpp"
#include "dephasim/errors.hpp"
#include "dephasim/freq.hpp"
#include "dephasim/ising.hpp"
#include "dephasim/measurement.hpp"
#include "dephasim/scenario.hpp"
#include "dephasim/spectral.hpp"
#include "dephasim/version.hpp"

namespace {

using namespace dephasim;

std::vector<double> linspace(double maxval, long samples) {
  std::vector<double> out(static_cast<std::size_t>(samples));
  for (long m = 0; m < samples; ++m) {
    out[static_cast<std::size_t>(m)] =
        maxval * static_cast<double>(m) / static_cast<double>(samples - 1);
  }
  return out;
}

double parse_beta(const std::string& text) {
  if (text == "inf" || text == "Inf" || text == "INF") {
    return std::numeric_limits<double>::infinity();
  }
  try {
    return std::stod(text);
  } catch (const std::exception&) {
    throw ConfigError("--beta must be a number or 'inf'");
  }
}

HardwareProfile load_hardware_profile(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open hardware profile " + path);
  }
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(std::string("hardware profile is not valid JSON: ") +
                      e.what());
  }
  HardwareProfile hw;
  hw.pixel_count = j.value("pixel_count", 900);
  hw.bandwidth_u = j.value("bandwidth_u", 0.0);
  hw.amplitude_levels = j.value("amplitude_levels", 256);
  hw.phase_levels = j.value("phase_levels", 256);
  hw.capture_threshold = j.value("capture_threshold", 0.5);
  return hw;
}

int dispatch(int argc, char** argv) {
  CLI::App app{"dephasim: engineered pure-dephasing dynamics toolkit"};
  app.set_version_flag("--version", std::string("dephasim ") + kVersion);
  app.require_subcommand(1);

  // ---- forward ----------------------------------------------------------
  auto* fwd = app.add_subcommand("forward", "Evaluate kappa(d) for a distribution");
  std::string fwd_dist;
  std::string fwd_out = "trace.csv";
  double fwd_dmax = 1.0;
  long fwd_samples = 201;
  bool fwd_no_guard = false;
  fwd->add_option("--dist", fwd_dist, "distribution CSV (u,p,theta)")->required();
  fwd->add_option("--dmax", fwd_dmax, "largest path difference")->required();
  fwd->add_option("--samples", fwd_samples, "number of path samples");
  fwd->add_option("--out", fwd_out, "output trace CSV");
  fwd->add_flag("--no-alias-guard", fwd_no_guard,
                "allow path grids beyond the 0.5/du aliasing horizon");

  // ---- design -----------------------------------------------------------
  auto* des = app.add_subcommand("design", "Invert a target decoherence trace");
  std::string des_target;
  std::string des_out = "distribution.csv";
  std::string des_qout = "quantized_distribution.csv";
  std::string des_hw;
  long des_grid = 900;
  des->add_option("--target", des_target, "target CSV (d,re,im)")->required();
  des->add_option("--grid-size", des_grid, "number of frequency pixels");
  des->add_option("--hardware", des_hw,
                  "hardware profile JSON; also emits the quantized design");
  des->add_option("--out", des_out, "output distribution CSV");
  des->add_option("--quantized-out", des_qout, "output for the quantized design");

  // ---- ising ------------------------------------------------------------
  auto* isg = app.add_subcommand("ising", "Central spin in a transverse-field Ising chain");
  double isg_lambda = 0.9;
  double isg_delta = 0.1;
  double isg_coupling = 1.0;
  long isg_spins = 4000;
  double isg_tmax = 30.0;
  long isg_samples = 6001;
  std::string isg_out = "trace.csv";
  isg->add_option("--lambda", isg_lambda, "transverse field (units of J)")->required();
  isg->add_option("--delta", isg_delta, "system-chain coupling");
  isg->add_option("--spins", isg_spins, "number of chain spins (even)");
  isg->add_option("--coupling", isg_coupling, "nearest-neighbor coupling J");
  isg->add_option("--tmax", isg_tmax, "time window length")->required();
  isg->add_option("--samples", isg_samples, "number of time samples")->required();
  isg->add_option("--out", isg_out, "output trace CSV");

  // ---- spectral ---------------------------------------------------------
  auto* spc = app.add_subcommand("spectral", "Decoherence from a spectral density");
  std::string spc_family = "ohmic";
  double spc_alpha = 1.0;
  double spc_omega_c = 1.0;
  double spc_exponent = 1.0;
  std::string spc_beta = "inf";
  std::string spc_table;
  double spc_tmax = 20.0;
  long spc_samples = 201;
  std::string spc_out = "trace.csv";
  spc->add_option("--family", spc_family, "ohmic or powerlaw");
  spc->add_option("--alpha", spc_alpha, "coupling prefactor");
  spc->add_option("--omega-c", spc_omega_c, "cutoff frequency");
  spc->add_option("--exponent", spc_exponent, "powerlaw exponent s");
  spc->add_option("--beta", spc_beta, "inverse temperature or 'inf'");
  spc->add_option("--table", spc_table, "tabulated J CSV (omega,J); overrides family");
  spc->add_option("--tmax", spc_tmax, "time window length")->required();
  spc->add_option("--samples", spc_samples, "number of time samples");
  spc->add_option("--out", spc_out, "output trace CSV");

  // ---- measure ----------------------------------------------------------
  auto* mea = app.add_subcommand("measure", "Simulate the tomography readout chain");
  std::string mea_trace;
  double mea_rate = 3000.0;
  double mea_duration = 10.0;
  std::uint64_t mea_seed = 0;
  long mea_mc = 100;
  std::string mea_out = "measurement.csv";
  mea->add_option("--trace", mea_trace, "simulator trace CSV")->required();
  mea->add_option("--rate", mea_rate, "coincidence rate per second");
  mea->add_option("--duration", mea_duration, "seconds per setting");
  mea->add_option("--seed", mea_seed, "RNG seed");
  mea->add_option("--mc", mea_mc, "Monte Carlo resamples for error bars");
  mea->add_option("--out", mea_out, "output measurement CSV");

  // ---- run / scenarios --------------------------------------------------
  auto* run = app.add_subcommand("run", "Run a scenario config (or manifest)");
  std::string run_config;
  std::string run_outdir;
  run->add_option("config", run_config, "JSON config or run manifest")->required();
  run->add_option("--output-dir", run_outdir,
                  "override the output directory (else the config's, else "
                  "$DEPHASIM_OUTPUT_DIR, else the working directory)");

  auto* cat = app.add_subcommand("scenarios", "List the built-in scenario templates");
  bool cat_json = false;
  cat->add_flag("--json", cat_json, "machine-readable catalog");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      return app.exit(e);  // --help / --version
    }
    app.exit(e);
    return 2;
  }

  if (fwd->parsed()) {
    const ComplexFreqDistribution dist = read_distribution_csv(fwd_dist);
    ForwardOptions opts;
    opts.enforce_alias_horizon = !fwd_no_guard;
    const auto grid = linspace(fwd_dmax, fwd_samples);
    write_trace_csv(fwd_out, forward_kappa(dist, grid, opts));
    std::cout << "wrote " << fwd_out << "\n";
  } else if (des->parsed()) {
    const DesignTarget target = read_target_csv(des_target);
    const DesignResult result = invert_target(target, static_cast<int>(des_grid));
    write_distribution_csv(des_out, result.dist);
    std::cout << "wrote " << des_out << "  |kappa0| = " << std::abs(result.kappa0)
              << "  roundtrip error = " << roundtrip_error(target, result.dist)
              << "\n";
    if (!des_hw.empty()) {
      HardwareProfile hw = load_hardware_profile(des_hw);
      if (hw.bandwidth_u == 0.0) {
        hw.bandwidth_u =
            static_cast<double>(hw.pixel_count) * result.dist.delta_u();
      }
      const ComplexFreqDistribution q = quantize(result.dist, hw);
      write_distribution_csv(des_qout, q);
      std::cout << "wrote " << des_qout
                << "  quantized roundtrip error = " << roundtrip_error(target, q)
                << "\n";
    }
  } else if (isg->parsed()) {
    IsingChainSpec spec;
    spec.lambda = isg_lambda;
    spec.delta = isg_delta;
    spec.coupling_J = isg_coupling;
    spec.n_spins = static_cast<int>(isg_spins);
    const auto times = linspace(isg_tmax, isg_samples);
    const DecoherenceTrace trace = decoherence_fn(spec, times);
    write_trace_csv(isg_out, trace);
    std::cout << "wrote " << isg_out << "  regime = "
              << to_string(classify_regime(trace)) << "\n";
  } else if (spc->parsed()) {
    SpectralDensitySpec spec;
    if (!spc_table.empty()) {
      spec.family = SpectralDensitySpec::Family::Tabulated;
      const auto [omega, j] = read_spectral_table_csv(spc_table);
      spec.table_omega = omega;
      spec.table_j = j;
    } else if (spc_family == "ohmic") {
      spec.family = SpectralDensitySpec::Family::Ohmic;
    } else if (spc_family == "powerlaw") {
      spec.family = SpectralDensitySpec::Family::PowerLaw;
      spec.exponent = spc_exponent;
    } else {
      throw ConfigError("--family must be ohmic or powerlaw");
    }
    spec.alpha = spc_alpha;
    spec.omega_c = spc_omega_c;
    spec.beta = parse_beta(spc_beta);
    const auto times = linspace(spc_tmax, spc_samples);
    write_trace_csv(spc_out, spectral_decoherence(spec, times));
    std::cout << "wrote " << spc_out << "\n";
  } else if (mea->parsed()) {
    const DecoherenceTrace trace = read_trace_csv(mea_trace);
    CountingConfig cfg;
    cfg.rate = mea_rate;
    cfg.duration_s = mea_duration;
    cfg.seed = mea_seed;
    cfg.mc_samples = static_cast<int>(mea_mc);
    write_measurement_csv(mea_out, measure_trace(trace, cfg));
    std::cout << "wrote " << mea_out << "\n";
  } else if (run->parsed()) {
    std::optional<std::filesystem::path> outdir;
    if (!run_outdir.empty()) {
      outdir = run_outdir;
    }
    const ScenarioResult result = run_scenario(run_config, outdir);
    std::cout << "wrote " << result.manifest_path.string() << " and "
              << result.outputs.size() << " artifact(s) in "
              << result.output_dir.string() << "\n";
  } else if (cat->parsed()) {
    std::cout << render_scenario_catalog(cat_json);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return 4;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
