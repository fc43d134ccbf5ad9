#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <numbers>

#include "entpow/errors.hpp"
#include "entpow/experiments.hpp"
#include "entpow/io.hpp"

namespace entpow::cli {

namespace {

using nlohmann::ordered_json;

const std::vector<std::string> kExperimentIds{"fig1", "fig2", "fig3", "fig4", "fig5",
                                              "fig6", "fig7a", "fig7b", "epower", "custom"};

struct Curve {
  std::string label;
  Histogram histogram;
  std::map<std::string, double> scalars;
};

// Everything one run emits: the curves (one CSV each) and the JSON manifest.
struct Output {
  std::vector<Curve> curves;
  std::map<std::string, double> scalars;
  ordered_json extra = ordered_json::object();

  void add(std::string label, const ExperimentReport& report, const Histogram& h,
           std::map<std::string, double> scalars_override = {}) {
    Curve c{std::move(label), h, scalars_override.empty() ? report.scalars : std::move(scalars_override)};
    curves.push_back(std::move(c));
  }
};

SamplingPlan make_plan(const RunConfig& cfg, std::uint64_t default_samples) {
  SamplingPlan plan;
  plan.seed = cfg.seed;
  plan.samples = cfg.samples.value_or(default_samples);
  plan.workers = cfg.workers;
  plan.chunk_size = cfg.chunk_size;
  return plan;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw ConfigError(message);
}

// --- per-figure drivers -----------------------------------------------------

Output run_fig1(const RunConfig& cfg) {
  const auto plan = make_plan(cfg, 100000);
  const std::size_t bins = cfg.bins.value_or(kDeltaEBins);
  Output out;
  if (cfg.gate) {
    const auto gate = GateSpec::parse(*cfg.gate);
    const auto r = delta_e_distribution(gate, plan, bins);
    out.add("delta_e", r, r.histogram());
    out.scalars = r.scalars;
    return out;
  }
  constexpr double pi = std::numbers::pi;
  const std::vector<std::pair<std::string, GateSpec>> gates{
      {"cnot", GateSpec::parse("cnot")},
      {"curve1", GateSpec::canonical(pi / 4, pi / 8, 0.0)},
      {"curve2", GateSpec::canonical(pi / 4, pi / 8, pi / 16)},
      {"curve3", GateSpec::canonical(pi / 4, 0.0, 0.0)},
      {"curve4", GateSpec::canonical(pi / 4, pi / 8, -pi / 8)},
      {"curve5", GateSpec::canonical(pi / 8, pi / 8, pi / 8)},
      {"identity", GateSpec::parse("identity")},
  };
  for (const auto& [label, gate] : gates) {
    const auto r = delta_e_distribution(gate, plan, bins);
    out.add(label, r, r.histogram());
  }
  return out;
}

Output run_fig2(const RunConfig& cfg) {
  const auto plan = make_plan(cfg, 10000);
  std::vector<double> xs = cfg.xs;
  if (xs.empty()) {
    for (int k = 0; k <= 20; ++k) xs.push_back(k * (std::numbers::pi / 4.0) / 20.0);
  }
  Output out;
  ordered_json sweeps = ordered_json::object();
  for (SweepBase base : {SweepBase::kCnot, SweepBase::kPi8}) {
    const auto reports = perturbation_sweep(base, xs, plan);
    ordered_json points = ordered_json::array();
    for (std::size_t k = 0; k < reports.size(); ++k) {
      const auto& r = reports[k];
      char label[64];
      std::snprintf(label, sizeof label, "%s_x%02zu", std::string(to_string(base)).c_str(), k);
      out.add(label, r, r.histogram());
      points.push_back({{"x", r.scalar("x")},
                        {"epsilon_p", r.scalar("epsilon_p")},
                        {"epsilon_p_stderr", r.scalar("epsilon_p_stderr")},
                        {"delta_vs_base", r.scalar("delta_vs_base")},
                        {"delta_vs_base_stderr", r.scalar("delta_vs_base_stderr")}});
    }
    sweeps[std::string(to_string(base))] = {{"lambda1", sweep_base_lambda(base)}, {"points", points}};
  }
  out.extra["sweeps"] = sweeps;
  return out;
}

Output run_fig3(const RunConfig& cfg) {
  const auto plan = make_plan(cfg, 100000);
  const std::size_t bins = cfg.bins.value_or(kDeltaEBins);
  std::vector<std::size_t> dims;
  if (cfg.na) {
    require(*cfg.na >= 2 && *cfg.na <= 6, "--na must be in 2..6");
    dims.push_back(*cfg.na);
  } else {
    dims = {2, 3, 4, 5, 6};
  }
  Output out;
  std::vector<double> ns, widths;
  for (auto na : dims) {
    const auto r = random_pair_distribution(na, plan, bins);
    out.add("na" + std::to_string(na), r, r.histogram());
    ns.push_back(static_cast<double>(na));
    widths.push_back(r.scalar("width"));
  }
  if (dims.size() == 1) {
    out.scalars = out.curves.front().scalars;
  } else if (std::all_of(widths.begin(), widths.end(), [](double w) { return w > 0.0; })) {
    const auto fit = power_law_fit(ns, widths);
    out.scalars["power_law_alpha"] = fit.alpha;
    out.scalars["power_law_r_squared"] = fit.r_squared;
  }
  return out;
}

Output run_mixed(const RunConfig& cfg, MetricKind default_metric) {
  const auto plan = make_plan(cfg, 100000);
  const MetricKind metric = cfg.metric ? parse_metric(*cfg.metric) : default_metric;
  const auto r = cnot_mixed_distance(metric, plan, cfg.bins.value_or(kDistanceBins));
  Output out;
  for (const auto& h : r.histograms) out.add(h.meta.label, r, h);
  out.scalars = r.scalars;
  out.scalars["hs_ball_radius"] = separable_ball_hs_radius();
  if (metric == MetricKind::kBures) {
    const auto radius = locate_bures_ball_radius(plan);
    out.scalars["bures_ball_radius_min"] = radius.min;
    out.scalars["bures_ball_radius_max"] = radius.max;
  }
  return out;
}

Output run_fig6(const RunConfig& cfg) {
  const auto plan = make_plan(cfg, 100000);
  const auto r = dw_distribution(plan, cfg.bins.value_or(kResidualBins));
  Output out;
  out.add("dw", r, r.histogram());
  out.scalars = r.scalars;
  return out;
}

Output run_fig7a(const RunConfig& cfg) {
  const auto plan = make_plan(cfg, 100000);
  MultiqubitOptions opt;
  opt.bins = cfg.bins.value_or(kDeltaEBins);
  opt.include_random = true;
  const auto three = multiqubit_delta_e(3, plan, opt);
  Output out;
  for (const auto& h : three.histograms) out.add(h.meta.label, three, h);
  opt.include_random = false;
  const auto two = multiqubit_delta_e(2, plan, opt);
  out.add("two_qubit", two, two.histogram());
  out.scalars = three.scalars;
  out.scalars["width_two_qubit"] = two.scalar("width");
  return out;
}

Output run_fig7b(const RunConfig& cfg) {
  const auto plan = make_plan(cfg, 100000);
  Output out;
  for (std::size_t n : {2u, 3u, 4u}) {
    MultiqubitOptions opt;
    opt.bins = n == 4 ? cfg.bins_n4 : cfg.bins.value_or(kDeltaEBins);
    const auto r = multiqubit_delta_e(n, plan, opt);
    out.add("n" + std::to_string(n), r, r.histogram());
    out.scalars["width_n" + std::to_string(n)] = r.scalar("width");
    out.scalars["bin_width_n" + std::to_string(n)] = r.scalar("bin_width");
  }
  return out;
}

Output run_epower(const RunConfig& cfg) {
  const auto plan = make_plan(cfg, 100000);
  const auto gate = GateSpec::parse(cfg.gate.value_or("cnot"));
  const auto r = entangling_power(gate, plan);
  Output out;
  out.add("entanglement", r, r.histogram());
  out.scalars = r.scalars;
  return out;
}

Output run_custom(const RunConfig& cfg) {
  require(cfg.qubits >= 2 && cfg.qubits <= 4, "--qubits must be 2, 3 or 4");
  const auto plan = make_plan(cfg, 100000);
  const auto gate = GateSpec::parse(cfg.gate.value_or("cnot"));
  MultiqubitOptions opt;
  opt.bins = cfg.bins.value_or(cfg.qubits == 4 ? cfg.bins_n4 : kDeltaEBins);
  const auto r = multiqubit_delta_e(cfg.qubits, plan, opt, gate);
  Output out;
  for (const auto& h : r.histograms) out.add(h.meta.label, r, h);
  out.scalars = r.scalars;
  return out;
}

Output dispatch(const RunConfig& cfg) {
  const auto& id = cfg.experiment;
  if (id == "fig1") return run_fig1(cfg);
  if (id == "fig2") return run_fig2(cfg);
  if (id == "fig3") return run_fig3(cfg);
  if (id == "fig4") return run_mixed(cfg, MetricKind::kBures);
  if (id == "fig5") return run_mixed(cfg, MetricKind::kHilbertSchmidt);
  if (id == "fig6") return run_fig6(cfg);
  if (id == "fig7a") return run_fig7a(cfg);
  if (id == "fig7b") return run_fig7b(cfg);
  if (id == "epower") return run_epower(cfg);
  if (id == "custom") return run_custom(cfg);
  throw ConfigError("unknown experiment '" + id + "'");
}

void validate(const RunConfig& cfg) {
  require(std::find(kExperimentIds.begin(), kExperimentIds.end(), cfg.experiment) != kExperimentIds.end(),
          "unknown experiment '" + cfg.experiment + "'");
  if (cfg.gate) (void)GateSpec::parse(*cfg.gate);
  if (cfg.metric) (void)parse_metric(*cfg.metric);
  require(!cfg.samples || *cfg.samples >= 1, "--samples must be >= 1");
  require(!cfg.bins || *cfg.bins >= 1, "--bins must be >= 1");
  require(cfg.bins_n4 >= 1, "--bins-n4 must be >= 1");
  require(cfg.workers >= 1, "--workers must be >= 1");
  require(cfg.chunk_size >= 1, "--chunk-size must be >= 1");
}

ordered_json scalars_json(const std::map<std::string, double>& scalars) {
  ordered_json j = ordered_json::object();
  for (const auto& [k, v] : scalars) j[k] = std::isfinite(v) ? ordered_json(v) : ordered_json(nullptr);
  return j;
}

void emit(const RunConfig& cfg, const Output& output, double wall_seconds) {
  const std::filesystem::path prefix = cfg.out.empty() ? std::filesystem::path(cfg.experiment) : cfg.out;
  if (prefix.has_parent_path()) std::filesystem::create_directories(prefix.parent_path());
  const bool single = output.curves.size() == 1;

  ordered_json manifest;
  manifest["experiment"] = cfg.experiment;
  manifest["seed"] = cfg.seed;
  manifest["samples"] = output.curves.empty() ? 0 : output.curves.front().scalars.count("samples")
                                                        ? output.curves.front().scalars.at("samples")
                                                        : 0.0;
  manifest["workers"] = cfg.workers;
  manifest["chunk_size"] = cfg.chunk_size;
  manifest["gate"] = cfg.gate.value_or("none");
  manifest["bins"] = output.curves.empty() ? 0 : output.curves.front().histogram.n_bins();
  manifest["wall_time_seconds"] = wall_seconds;

  ordered_json files = ordered_json::array();
  ordered_json curves = ordered_json::array();
  for (const auto& c : output.curves) {
    Histogram h = c.histogram;
    h.meta.experiment = cfg.experiment;
    h.meta.label = c.label;
    const auto path = curve_path(prefix, c.label, single);
    write_csv(h, path);
    files.push_back(path.filename().string());
    curves.push_back({{"label", c.label},
                      {"csv", path.filename().string()},
                      {"samples", h.total()},
                      {"scalars", scalars_json(c.scalars)}});
  }
  manifest["files"] = files;
  manifest["scalars"] = scalars_json(output.scalars);
  manifest["curves"] = curves;
  for (const auto& [k, v] : output.extra.items()) manifest[k] = v;

  std::filesystem::path json_path = prefix;
  json_path += ".json";
  std::ofstream f(json_path, std::ios::trunc);
  if (!f) throw Error("cannot open '" + json_path.string() + "' for writing");
  f << manifest.dump(2) << '\n';
  if (!f) throw Error("failed writing '" + json_path.string() + "'");
}

}  // namespace

const std::vector<std::string>& experiment_ids() { return kExperimentIds; }

int run(const RunConfig& config) {
  try {
    validate(config);
    const auto start = std::chrono::steady_clock::now();
    const Output output = dispatch(config);
    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    emit(config, output, wall);
    return kExitOk;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const OutOfRange& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const NumericalError& e) {
    std::cerr << "numerical invariant violated: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumerical;
  }
}

int main_entry(int argc, char** argv) {
  CLI::App app{"Monte Carlo study of gate-induced entanglement changes"};
  RunConfig cfg;
  std::uint64_t samples = 0;
  std::size_t bins = 0, na = 0;
  std::string gate, metric;

  app.add_option("experiment", cfg.experiment, "fig1|fig2|fig3|fig4|fig5|fig6|fig7a|fig7b|epower|custom")
      ->required();
  auto* o_samples = app.add_option("--samples", samples, "Monte Carlo samples (per sweep point for fig2)");
  auto* o_bins = app.add_option("--bins", bins, "Histogram bins");
  app.add_option("--bins-n4", cfg.bins_n4, "Bins for the four-qubit curve")->capture_default_str();
  app.add_option("--seed", cfg.seed, "64-bit seed")->capture_default_str();
  app.add_option("--workers", cfg.workers, "Worker threads")->capture_default_str();
  app.add_option("--chunk-size", cfg.chunk_size, "Samples per RNG substream")->capture_default_str();
  auto* o_gate = app.add_option("--gate", gate, "cnot | swap | identity | utheta:<rad> | canon:<l1>,<l2>,<l3>");
  auto* o_na = app.add_option("--na", na, "Qudit dimension for fig3 (2..6)");
  auto* o_metric = app.add_option("--metric", metric, "bures | hs");
  app.add_option("--qubits", cfg.qubits, "Register size for custom (2..4)")->capture_default_str();
  app.add_option("--xs", cfg.xs, "fig2 sweep points (radians)")->delimiter(',');
  app.add_option("--out", cfg.out, "Output path prefix");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }
  if (o_samples->count() > 0) cfg.samples = samples;
  if (o_bins->count() > 0) cfg.bins = bins;
  if (o_gate->count() > 0) cfg.gate = gate;
  if (o_na->count() > 0) cfg.na = na;
  if (o_metric->count() > 0) cfg.metric = metric;
  return run(cfg);
}

}  // namespace entpow::cli
