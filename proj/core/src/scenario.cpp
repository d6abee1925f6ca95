//---------------------------------------------------------------------------//
// SPDX-License-Identifier: Apache-2.0
//! \file scenario.cpp
//---------------------------------------------------------------------------//
#include "dephasim/scenario.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "dephasim/channel.hpp"
#include "dephasim/csv.hpp"
#include "dephasim/designer.hpp"
#include "dephasim/errors.hpp"
#include "dephasim/freq.hpp"
#include "dephasim/ising.hpp"
#include "dephasim/measurement.hpp"
#include "dephasim/spectral.hpp"
#include "dephasim/version.hpp"

namespace dephasim {

namespace {

using nlohmann::json;

//--------------------------------------------------------------------------
// strict config access
//--------------------------------------------------------------------------

void reject_unknown_keys(const json& obj, const std::string& where,
                         std::initializer_list<const char*> allowed) {
  for (const auto& item : obj.items()) {
    bool known = false;
    for (const char* key : allowed) {
      if (item.key() == key) {
        known = true;
        break;
      }
    }
    if (!known) {
      throw ConfigError(where + ": unknown key '" + item.key() + "'");
    }
  }
}

const json& require_key(const json& obj, const std::string& where,
                        const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end()) {
    throw ConfigError(where + ": missing required key '" + key + "'");
  }
  return *it;
}

double get_number(const json& obj, const std::string& where, const char* key) {
  const json& v = require_key(obj, where, key);
  if (!v.is_number()) {
    throw ConfigError(where + ": key '" + std::string(key) + "' must be a number");
  }
  return v.get<double>();
}

double get_number_or(const json& obj, const std::string& where, const char* key,
                     double fallback) {
  if (!obj.contains(key)) {
    return fallback;
  }
  return get_number(obj, where, key);
}

long get_integer(const json& obj, const std::string& where, const char* key) {
  const json& v = require_key(obj, where, key);
  if (!v.is_number_integer()) {
    throw ConfigError(where + ": key '" + std::string(key) +
                      "' must be an integer");
  }
  return v.get<long>();
}

long get_integer_or(const json& obj, const std::string& where, const char* key,
                    long fallback) {
  if (!obj.contains(key)) {
    return fallback;
  }
  return get_integer(obj, where, key);
}

std::string get_string(const json& obj, const std::string& where,
                       const char* key) {
  const json& v = require_key(obj, where, key);
  if (!v.is_string()) {
    throw ConfigError(where + ": key '" + std::string(key) + "' must be a string");
  }
  return v.get<std::string>();
}

std::vector<double> get_number_array(const json& obj, const std::string& where,
                                     const char* key) {
  const json& v = require_key(obj, where, key);
  if (!v.is_array()) {
    throw ConfigError(where + ": key '" + std::string(key) + "' must be an array");
  }
  std::vector<double> out;
  for (const auto& e : v) {
    if (!e.is_number()) {
      throw ConfigError(where + ": array '" + std::string(key) +
                        "' must contain numbers only");
    }
    out.push_back(e.get<double>());
  }
  return out;
}

//--------------------------------------------------------------------------
// shared pieces
//--------------------------------------------------------------------------

std::vector<double> make_time_grid(const json& params, const std::string& where) {
  const double tmax = get_number(params, where, "tmax");
  const long samples = get_integer(params, where, "samples");
  if (!(tmax > 0.0)) {
    throw ConfigError(where + ": tmax must be positive");
  }
  if (samples < 2) {
    throw ConfigError(where + ": samples must be >= 2");
  }
  std::vector<double> t(static_cast<std::size_t>(samples));
  for (long m = 0; m < samples; ++m) {
    t[static_cast<std::size_t>(m)] =
        tmax * static_cast<double>(m) / static_cast<double>(samples - 1);
  }
  return t;
}

IsingChainSpec parse_ising_spec(const json& params, const std::string& where) {
  IsingChainSpec spec;
  spec.lambda = get_number(params, where, "lambda");
  spec.delta = get_number_or(params, where, "delta", 0.1);
  spec.coupling_J = get_number_or(params, where, "coupling", 1.0);
  spec.n_spins = static_cast<int>(get_integer_or(params, where, "spins", 4000));
  spec.validate();
  return spec;
}

SpectralDensitySpec parse_spectral_spec(const json& params,
                                        const std::string& where) {
  SpectralDensitySpec spec;
  if (params.contains("table") || params.contains("table_omega")) {
    spec.family = SpectralDensitySpec::Family::Tabulated;
    if (params.contains("table")) {
      const auto [omega, j] =
          read_spectral_table_csv(get_string(params, where, "table"));
      spec.table_omega = omega;
      spec.table_j = j;
    } else {
      spec.table_omega = get_number_array(params, where, "table_omega");
      spec.table_j = get_number_array(params, where, "table_j");
    }
  } else {
    const std::string family = get_string(params, where, "family");
    if (family == "ohmic") {
      spec.family = SpectralDensitySpec::Family::Ohmic;
    } else if (family == "powerlaw") {
      spec.family = SpectralDensitySpec::Family::PowerLaw;
      spec.exponent = get_number(params, where, "exponent");
    } else {
      throw ConfigError(where + ": family must be 'ohmic' or 'powerlaw'");
    }
    spec.alpha = get_number(params, where, "alpha");
    spec.omega_c = get_number(params, where, "omega_c");
  }
  if (params.contains("beta")) {
    const json& b = params.at("beta");
    if (b.is_string()) {
      if (b.get<std::string>() != "inf") {
        throw ConfigError(where + ": beta must be a number or \"inf\"");
      }
    } else if (b.is_number()) {
      spec.beta = b.get<double>();
    } else {
      throw ConfigError(where + ": beta must be a number or \"inf\"");
    }
  }
  spec.validate();
  return spec;
}

HardwareProfile parse_hardware(const json& hw, const std::string& where) {
  reject_unknown_keys(hw, where,
                      {"pixel_count", "bandwidth_u", "amplitude_levels",
                       "phase_levels", "capture_threshold"});
  HardwareProfile profile;
  profile.pixel_count =
      static_cast<int>(get_integer_or(hw, where, "pixel_count", 900));
  profile.bandwidth_u = get_number_or(hw, where, "bandwidth_u", 0.0);  // 0 = auto
  profile.amplitude_levels =
      static_cast<int>(get_integer_or(hw, where, "amplitude_levels", 256));
  profile.phase_levels =
      static_cast<int>(get_integer_or(hw, where, "phase_levels", 256));
  profile.capture_threshold =
      get_number_or(hw, where, "capture_threshold", 0.5);
  return profile;
}

//! bandwidth_u = 0 means "span exactly pixel_count designed bins", which
//! lines the emulated pixels up with the designed frequency comb.
void resolve_auto_bandwidth(HardwareProfile& hw,
                            const ComplexFreqDistribution& dist) {
  if (hw.bandwidth_u == 0.0) {
    hw.bandwidth_u = static_cast<double>(hw.pixel_count) * dist.delta_u();
  }
  hw.validate();
}

ComplexFreqDistribution make_chirped_gaussian(const json& params,
                                              const std::string& where) {
  reject_unknown_keys(params, where,
                      {"sigma_u", "kappa_peak", "kappa_origin", "center_u",
                       "pixels", "span_sigmas"});
  const double sigma = get_number(params, where, "sigma_u");
  const double peak = get_number(params, where, "kappa_peak");
  const double origin = get_number(params, where, "kappa_origin");
  const double center = get_number_or(params, where, "center_u", 0.0);
  const long pixels = get_integer_or(params, where, "pixels", 4096);
  const double span = get_number_or(params, where, "span_sigmas", 6.0);
  if (!(sigma > 0.0) || pixels < 8 || !(span > 0.0)) {
    throw ConfigError(where + ": sigma_u, pixels and span_sigmas must be positive");
  }
  if (!(peak > 0.0 && peak < 1.0 && origin > 0.0 && origin < peak)) {
    throw ConfigError(where + ": require 0 < kappa_origin < kappa_peak < 1");
  }

  // Gaussian |g|^2 with quadratic (chirp) phase. In the continuum limit
  // |kappa(d)| peaks at the group delay with value (1 + chi^2)^(-1/4); the
  // linear phase term moves that peak away from d = 0 so that
  // |kappa(0)| = kappa_origin < max|kappa| = kappa_peak.
  const double chi = std::sqrt(1.0 / std::pow(peak, 4) - 1.0);
  const double chirp = chi / (2.0 * sigma * sigma);
  const double delay = std::sqrt(2.0 * (1.0 + chi * chi) * std::log(peak / origin)) /
                       (2.0 * std::numbers::pi * sigma);

  ComplexFreqDistribution dist;
  dist.u.resize(static_cast<std::size_t>(pixels));
  dist.p.resize(static_cast<std::size_t>(pixels));
  dist.theta.resize(static_cast<std::size_t>(pixels));
  const double lo = center - span * sigma;
  const double hi = center + span * sigma;
  double total = 0.0;
  for (long j = 0; j < pixels; ++j) {
    const double u = lo + (hi - lo) * static_cast<double>(j) /
                              static_cast<double>(pixels - 1);
    const double v = u - center;
    dist.u[static_cast<std::size_t>(j)] = u;
    const double w = std::exp(-v * v / (2.0 * sigma * sigma));
    dist.p[static_cast<std::size_t>(j)] = w;
    dist.theta[static_cast<std::size_t>(j)] =
        wrap_phase(chirp * v * v - 2.0 * std::numbers::pi * u * delay);
    total += w;
  }
  for (auto& p : dist.p) {
    p /= total;
  }
  return dist;
}

void write_positivity_csv(const std::filesystem::path& path,
                          const DecoherenceTrace& scaled) {
  std::ostringstream body;
  body << "d,abs_D,min_choi_eigenvalue,is_positive\n";
  for (std::size_t m = 0; m < scaled.size(); ++m) {
    const DephasingChannel ch{scaled.kappa[m]};
    const double min_eig = choi_eigenvalues(ch)[0];
    body << csv_double(scaled.d[m]) << ',' << csv_double(std::abs(scaled.kappa[m]))
         << ',' << csv_double(min_eig) << ','
         << (is_positive_map(ch) ? '1' : '0') << '\n';
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot open " + path.string() + " for writing");
  }
  out << body.str();
}

//--------------------------------------------------------------------------
// scenario context
//--------------------------------------------------------------------------

struct Context {
  std::filesystem::path dir;
  json resolved;
  json outputs = json::object();
  json summary = json::object();
  std::vector<std::filesystem::path> files;

  std::filesystem::path emit(const std::string& tag, const std::string& name) {
    const std::filesystem::path p = dir / name;
    outputs[tag] = name;
    files.push_back(p);
    return p;
  }
};

void run_ising(Context& ctx, const json& params, std::uint64_t /*seed*/) {
  const std::string where = "parameters (ising)";
  reject_unknown_keys(params, where,
                      {"lambda", "delta", "spins", "coupling", "tmax", "samples",
                       "thresholds"});
  const IsingChainSpec spec = parse_ising_spec(params, where);
  const std::vector<double> times = make_time_grid(params, where);
  const DecoherenceTrace trace = decoherence_fn(spec, times);

  RegimeThresholds th;
  if (params.contains("thresholds")) {
    const json& t = params.at("thresholds");
    reject_unknown_keys(t, where + ".thresholds", {"low", "revival", "trapping"});
    th.low = get_number_or(t, where, "low", th.low);
    th.revival = get_number_or(t, where, "revival", th.revival);
    th.trapping = get_number_or(t, where, "trapping", th.trapping);
  }
  write_trace_csv(ctx.emit("trace", "trace.csv"), trace);
  ctx.summary["regime"] = to_string(classify_regime(trace, th));
}

void run_spectral(Context& ctx, const json& params, std::uint64_t /*seed*/) {
  const std::string where = "parameters (spectral)";
  reject_unknown_keys(params, where,
                      {"family", "alpha", "omega_c", "exponent", "beta", "table",
                       "table_omega", "table_j", "tmax", "samples"});
  const SpectralDensitySpec spec = parse_spectral_spec(params, where);
  const std::vector<double> times = make_time_grid(params, where);
  const DecoherenceTrace trace = spectral_decoherence(spec, times);
  write_trace_csv(ctx.emit("trace", "trace.csv"), trace);
}

void run_forward(Context& ctx, const json& params, std::uint64_t /*seed*/) {
  const std::string where = "parameters (forward)";
  reject_unknown_keys(params, where,
                      {"dist", "chirped_gaussian", "dmax", "samples"});
  ComplexFreqDistribution dist;
  if (params.contains("dist") && params.contains("chirped_gaussian")) {
    throw ConfigError(where + ": give either 'dist' or 'chirped_gaussian'");
  }
  if (params.contains("dist")) {
    dist = read_distribution_csv(get_string(params, where, "dist"));
  } else if (params.contains("chirped_gaussian")) {
    dist = make_chirped_gaussian(params.at("chirped_gaussian"),
                                 where + ".chirped_gaussian");
  } else {
    throw ConfigError(where + ": missing required key 'dist'");
  }
  const double dmax = get_number(params, where, "dmax");
  const long samples = get_integer(params, where, "samples");
  if (!(dmax > 0.0) || samples < 2) {
    throw ConfigError(where + ": dmax must be positive and samples >= 2");
  }
  std::vector<double> grid(static_cast<std::size_t>(samples));
  for (long m = 0; m < samples; ++m) {
    grid[static_cast<std::size_t>(m)] =
        dmax * static_cast<double>(m) / static_cast<double>(samples - 1);
  }
  const DecoherenceTrace trace = forward_kappa(dist, grid);
  write_trace_csv(ctx.emit("trace", "trace.csv"), trace);

  const DecoherenceTrace scaled = scaled_decoherence(trace);
  write_trace_csv(ctx.emit("scaled_trace", "scaled_trace.csv"), scaled);
  write_positivity_csv(ctx.emit("positivity", "positivity.csv"), scaled);

  double max_abs = 0.0;
  std::size_t nonpositive = 0;
  for (const auto& k : scaled.kappa) {
    max_abs = std::max(max_abs, std::abs(k));
    if (std::abs(k) > 1.0 + 1e-9) {
      ++nonpositive;
    }
  }
  ctx.summary["abs_kappa0"] = std::abs(trace.kappa.front());
  ctx.summary["max_abs_D"] = max_abs;
  ctx.summary["fraction_nonpositive"] =
      static_cast<double>(nonpositive) / static_cast<double>(scaled.size());
}

void run_design(Context& ctx, const json& params, std::uint64_t /*seed*/) {
  const std::string where = "parameters (design)";
  reject_unknown_keys(params, where, {"target", "grid_size", "hardware"});
  const DesignTarget target =
      read_target_csv(get_string(params, where, "target"));
  const long grid_size = get_integer(params, where, "grid_size");
  const DesignResult design =
      invert_target(target, static_cast<int>(grid_size));
  write_distribution_csv(ctx.emit("distribution", "distribution.csv"),
                         design.dist);
  ctx.summary["kappa0_abs"] = std::abs(design.kappa0);
  ctx.summary["roundtrip_error"] = roundtrip_error(target, design.dist);

  if (params.contains("hardware")) {
    HardwareProfile hw = parse_hardware(params.at("hardware"), where + ".hardware");
    resolve_auto_bandwidth(hw, design.dist);
    const ComplexFreqDistribution quantized = quantize(design.dist, hw);
    write_distribution_csv(
        ctx.emit("quantized_distribution", "quantized_distribution.csv"),
        quantized);
    ctx.summary["roundtrip_error_quantized"] = roundtrip_error(target, quantized);
  }
}

void run_measure(Context& ctx, const json& params, std::uint64_t seed) {
  const std::string where = "parameters (measure)";
  reject_unknown_keys(params, where, {"trace", "rate", "duration", "mc"});
  const DecoherenceTrace trace =
      read_trace_csv(get_string(params, where, "trace"));
  CountingConfig cfg;
  cfg.rate = get_number_or(params, where, "rate", 3000.0);
  cfg.duration_s = get_number_or(params, where, "duration", 10.0);
  cfg.mc_samples = static_cast<int>(get_integer_or(params, where, "mc", 100));
  cfg.seed = seed;
  cfg.validate();
  write_measurement_csv(ctx.emit("measurement", "measurement.csv"),
                        measure_trace(trace, cfg));
}

void run_pipeline(Context& ctx, const json& params, std::uint64_t seed) {
  const std::string where = "parameters (pipeline)";
  reject_unknown_keys(params, where,
                      {"source", "tmax", "samples", "grid_size", "hardware",
                       "measure"});
  const json& source = require_key(params, where, "source");
  const std::string source_kind = get_string(source, where + ".source", "kind");
  const std::vector<double> times = make_time_grid(params, where);

  DecoherenceTrace model;
  if (source_kind == "ising") {
    reject_unknown_keys(source, where + ".source",
                        {"kind", "lambda", "delta", "spins", "coupling"});
    model = decoherence_fn(parse_ising_spec(source, where + ".source"), times);
  } else if (source_kind == "spectral") {
    reject_unknown_keys(source, where + ".source",
                        {"kind", "family", "alpha", "omega_c", "exponent", "beta",
                         "table", "table_omega", "table_j"});
    model = spectral_decoherence(parse_spectral_spec(source, where + ".source"),
                                 times);
  } else {
    throw ConfigError(where + ".source: kind must be 'ising' or 'spectral'");
  }

  DesignTarget target;
  target.d = model.d;
  target.target = model.kappa;
  write_target_csv(ctx.emit("target", "target.csv"), target);

  const long grid_size = get_integer_or(params, where, "grid_size", 900);
  const DesignResult design = invert_target(target, static_cast<int>(grid_size));
  write_distribution_csv(ctx.emit("distribution", "distribution.csv"),
                         design.dist);
  ctx.summary["kappa0_abs"] = std::abs(design.kappa0);
  ctx.summary["roundtrip_error_design"] = roundtrip_error(target, design.dist);

  HardwareProfile hw;
  hw.bandwidth_u = 0.0;
  if (params.contains("hardware")) {
    hw = parse_hardware(params.at("hardware"), where + ".hardware");
  }
  resolve_auto_bandwidth(hw, design.dist);
  const ComplexFreqDistribution quantized = quantize(design.dist, hw);
  write_distribution_csv(
      ctx.emit("quantized_distribution", "quantized_distribution.csv"), quantized);
  ctx.summary["roundtrip_error_quantized"] = roundtrip_error(target, quantized);

  const DecoherenceTrace realized = forward_kappa(quantized, target.d);
  write_trace_csv(ctx.emit("simulator_trace", "simulator_trace.csv"), realized);
  write_trace_csv(ctx.emit("scaled_trace", "scaled_trace.csv"),
                  scaled_decoherence(realized));

  if (params.contains("measure")) {
    const json& meas = params.at("measure");
    reject_unknown_keys(meas, where + ".measure", {"rate", "duration", "mc"});
    CountingConfig cfg;
    cfg.rate = get_number_or(meas, where + ".measure", "rate", 3000.0);
    cfg.duration_s = get_number_or(meas, where + ".measure", "duration", 10.0);
    cfg.mc_samples =
        static_cast<int>(get_integer_or(meas, where + ".measure", "mc", 100));
    cfg.seed = seed;
    write_measurement_csv(ctx.emit("measurement", "measurement.csv"),
                          measure_trace(realized, cfg));
  }
}

json parse_config_root(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!root.is_object()) {
    throw ConfigError("config must be a JSON object");
  }
  // A manifest from a previous run is accepted as-is.
  if (root.contains("scenario")) {
    root = root.at("scenario");
    if (!root.is_object()) {
      throw ConfigError("manifest key 'scenario' must be an object");
    }
  }
  return root;
}

}  // namespace

std::vector<ScenarioTemplate> list_scenarios() {
  std::vector<ScenarioTemplate> out;

  const auto ising_template = [](const char* name, double lambda,
                                 const char* description) {
    json cfg = {
        {"kind", "ising"},
        {"seed", 1},
        {"parameters",
         {{"lambda", lambda},
          {"delta", 0.1},
          {"spins", 4000},
          {"coupling", 1.0},
          {"tmax", 30.0},
          {"samples", 6001}}}};
    return ScenarioTemplate{name, description, cfg.dump(2)};
  };
  out.push_back(ising_template(
      "fig2a", 0.01,
      "Ising chain, paramagnetic field: fast decoherence with revival"));
  out.push_back(ising_template(
      "fig2b", 0.9,
      "Ising chain at the environmental phase transition: monotone decay"));
  out.push_back(ising_template(
      "fig2c", 1.8,
      "Ising chain, ferromagnetic field: oscillation with trapping"));

  {
    json cfg = {{"kind", "forward"},
                {"seed", 1},
                {"parameters",
                 {{"chirped_gaussian",
                   {{"sigma_u", 0.05},
                    {"kappa_peak", 0.8},
                    {"kappa_origin", 0.6},
                    {"pixels", 4096},
                    {"span_sigmas", 6.0}}},
                  {"dmax", 10.0},
                  {"samples", 401}}}};
    out.push_back({"nonpositive",
                   "Chirped Gaussian with |kappa(0)| = 0.6 < max|kappa| = 0.8: "
                   "the scaled map has |D| > 1 (non-positive channel)",
                   cfg.dump(2)});
  }

  {
    // A synthetic bimodal spectral density standing in for an arbitrary
    // tabulated J(w); zero temperature.
    json omega = json::array();
    json jval = json::array();
    for (int i = 0; i <= 80; ++i) {
      const double w = 0.05 + (2.0 - 0.05) * static_cast<double>(i) / 80.0;
      const double j1 = std::exp(-std::pow((w - 0.6) / 0.12, 2) / 2.0);
      const double j2 = 0.6 * std::exp(-std::pow((w - 1.3) / 0.18, 2) / 2.0);
      omega.push_back(w);
      jval.push_back(0.35 * (j1 + j2));
    }
    json cfg = {{"kind", "pipeline"},
                {"seed", 1},
                {"parameters",
                 {{"source",
                   {{"kind", "spectral"},
                    {"table_omega", omega},
                    {"table_j", jval},
                    {"beta", "inf"}}},
                  {"tmax", 20.0},
                  {"samples", 512},
                  {"grid_size", 900},
                  {"hardware",
                   {{"pixel_count", 900},
                    {"amplitude_levels", 256},
                    {"phase_levels", 256}}},
                  {"measure", {{"rate", 3000.0}, {"duration", 10.0}, {"mc", 100}}}}}};
    out.push_back({"fig4",
                   "Synthetic tabulated spectral density at zero temperature, "
                   "run through design, 900-pixel quantization, forward map "
                   "and the noisy measurement chain",
                   cfg.dump(2)});
  }

  {
    json cfg = {{"kind", "spectral"},
                {"seed", 1},
                {"parameters",
                 {{"family", "ohmic"},
                  {"alpha", 1.0},
                  {"omega_c", 1.0},
                  {"beta", "inf"},
                  {"tmax", 20.0},
                  {"samples", 201}}}};
    out.push_back({"ohmic-oracle",
                   "Ohmic bath at zero temperature; D(t) has the closed form "
                   "(1 + wc^2 t^2)^(-alpha/2)",
                   cfg.dump(2)});
  }
  return out;
}

std::string render_scenario_catalog(bool as_json) {
  const auto templates = list_scenarios();
  if (as_json) {
    json catalog = json::object();
    for (const auto& t : templates) {
      catalog[t.name] = {{"description", t.description},
                         {"config", json::parse(t.config_json)}};
    }
    return catalog.dump(2) + "\n";
  }
  std::ostringstream text;
  for (const auto& t : templates) {
    text << t.name << "\n  " << t.description << "\n" << t.config_json << "\n\n";
  }
  return text.str();
}

ScenarioResult run_scenario_json(
    const std::string& config_json,
    const std::optional<std::filesystem::path>& output_dir_override) {
  const json config = parse_config_root(config_json);
  reject_unknown_keys(config, "config",
                      {"kind", "seed", "output_dir", "parameters"});
  const std::string kind = get_string(config, "config", "kind");
  const json& seed_json = config.contains("seed") ? config.at("seed") : json(0);
  if (!seed_json.is_number_integer() || seed_json.get<long long>() < 0) {
    throw ConfigError("config: 'seed' must be a nonnegative integer");
  }
  const std::uint64_t seed = seed_json.get<std::uint64_t>();
  const json& params = require_key(config, "config", "parameters");
  if (!params.is_object()) {
    throw ConfigError("config: 'parameters' must be an object");
  }

  Context ctx;
  if (output_dir_override) {
    ctx.dir = *output_dir_override;
  } else if (config.contains("output_dir")) {
    ctx.dir = get_string(config, "config", "output_dir");
  } else if (const char* env = std::getenv("DEPHASIM_OUTPUT_DIR")) {
    ctx.dir = env;
  } else {
    ctx.dir = ".";
  }
  std::error_code ec;
  std::filesystem::create_directories(ctx.dir, ec);
  if (ec) {
    throw IoError("cannot create output directory " + ctx.dir.string());
  }

  // Resolved config echoed into the manifest (with the seed made explicit).
  ctx.resolved = config;
  ctx.resolved["seed"] = seed;
  ctx.resolved.erase("output_dir");

  if (kind == "ising") {
    run_ising(ctx, params, seed);
  } else if (kind == "spectral") {
    run_spectral(ctx, params, seed);
  } else if (kind == "forward") {
    run_forward(ctx, params, seed);
  } else if (kind == "design") {
    run_design(ctx, params, seed);
  } else if (kind == "measure") {
    run_measure(ctx, params, seed);
  } else if (kind == "pipeline") {
    run_pipeline(ctx, params, seed);
  } else {
    throw ConfigError("config: unknown kind '" + kind + "'");
  }

  json manifest = {{"dephasim_version", kVersion},
                   {"scenario", ctx.resolved},
                   {"outputs", ctx.outputs},
                   {"summary", ctx.summary}};
  const std::filesystem::path manifest_path = ctx.dir / "manifest.json";
  {
    std::ofstream out(manifest_path, std::ios::binary);
    if (!out) {
      throw IoError("cannot write " + manifest_path.string());
    }
    out << manifest.dump(2) << '\n';
  }
  return {ctx.dir, manifest_path, ctx.files};
}

ScenarioResult run_scenario(
    const std::filesystem::path& config_path,
    const std::optional<std::filesystem::path>& output_dir_override) {
  std::ifstream in(config_path);
  if (!in) {
    throw IoError("cannot open config " + config_path.string());
  }
  std::ostringstream text;
  text << in.rdbuf();
  return run_scenario_json(text.str(), output_dir_override);
}

}  // namespace dephasim
