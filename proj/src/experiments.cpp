#include "entpow/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "entpow/errors.hpp"
#include "entpow/measures.hpp"
#include "entpow/tolerances.hpp"

namespace entpow {

const Histogram& ExperimentReport::histogram(std::string_view label) const {
  for (const auto& h : histograms)
    if (h.meta.label == label) return h;
  throw IndexError("ExperimentReport: no histogram labelled '" + std::string(label) + "'");
}

double ExperimentReport::scalar(std::string_view name) const {
  const auto it = scalars.find(std::string(name));
  if (it == scalars.end()) throw IndexError("ExperimentReport: no scalar '" + std::string(name) + "'");
  return it->second;
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string format_real(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

Histogram make_histogram(double lo, double hi, std::size_t bins, const std::string& experiment,
                         const std::string& label, const SamplingPlan& plan) {
  Histogram h(lo, hi, bins);
  h.meta.experiment = experiment;
  h.meta.label = label;
  h.meta.seed = plan.seed;
  h.meta.params["chunk_size"] = std::to_string(plan.chunk_size);
  h.meta.params["bins"] = std::to_string(bins);
  return h;
}

void add_plan_scalars(ExperimentReport& r, const SamplingPlan& plan) {
  r.scalars["samples"] = static_cast<double>(plan.samples);
  r.scalars["seed"] = static_cast<double>(plan.seed);
  r.scalars["workers"] = static_cast<double>(plan.workers);
  r.scalars["chunk_size"] = static_cast<double>(plan.chunk_size);
}

void add_mean(ExperimentReport& r, const std::string& name, const MeanAccumulator& acc) {
  r.scalars[name] = acc.mean();
  r.scalars[name + "_stderr"] = acc.stderr_of_mean();
}

void add_width(ExperimentReport& r, const std::string& prefix, const Histogram& h) {
  const WidthResult w = width_half_height(h);
  r.scalars[prefix] = w.width;
  r.scalars[prefix + "_full_spread"] = w.full_spread;
  r.scalars[prefix + "_peak_to_reference"] = w.peak_to_reference;
  r.scalars[prefix + "_reference_warning"] = w.reference_warning ? 1.0 : 0.0;
}

// Running min/max for invariant diagnostics.
struct Extremes {
  double min = std::numeric_limits<double>::infinity();
  double max = -std::numeric_limits<double>::infinity();
  void add(double x) {
    min = std::min(min, x);
    max = std::max(max, x);
  }
  void merge(const Extremes& o) {
    min = std::min(min, o.min);
    max = std::max(max, o.max);
  }
};

double check_delta_e(double d) {
  if (std::abs(d) > 1.0 + tol::kBinOverflow) {
    throw BinOverflow("ΔE sample " + std::to_string(d) + " outside [-1, 1]");
  }
  return d;
}

}  // namespace

// ---------------------------------------------------------------------------

WidthResult width_half_height(const Histogram& h) {
  if (h.lo() > 0.0 || h.hi() < 0.0) throw EmptyReference("width_half_height: 0 outside histogram range");
  const std::size_t ref_bin = h.bin_of(0.0);
  const auto& counts = h.counts();
  const std::uint64_t ref = counts[ref_bin];
  if (ref == 0) throw EmptyReference("width_half_height: bin containing 0 is empty");

  WidthResult out;
  out.reference_density = h.density(ref_bin);
  std::size_t left = ref_bin, right = ref_bin;
  std::uint64_t peak = 0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    peak = std::max(peak, counts[i]);
    // count >= ref / 2 without rounding
    if (2 * counts[i] >= ref) {
      left = std::min(left, i);
      right = std::max(right, i);
    }
  }
  const double c_left = h.bin_center(left);
  const double c_right = h.bin_center(right);
  out.full_spread = c_right - c_left;
  // largest |ΔE| still at half height
  out.width = std::max(std::abs(c_right), std::abs(c_left));
  out.peak_to_reference = static_cast<double>(peak) / static_cast<double>(ref);
  out.reference_warning = out.peak_to_reference > 1.1;
  return out;
}

// ---------------------------------------------------------------------------

namespace {

struct DeltaEPartial {
  Histogram hist;
  MeanAccumulator delta;
  Extremes extremes;
  void merge(const DeltaEPartial& o) {
    hist.merge(o.hist);
    delta.merge(o.delta);
    extremes.merge(o.extremes);
  }
};

}  // namespace

ExperimentReport delta_e_distribution(const GateSpec& gate, const SamplingPlan& plan, std::size_t bins) {
  const auto start = Clock::now();
  const ComplexMatrix u = gate.matrix();
  const FactoredDims dims{2, 2};
  DeltaEPartial proto{make_histogram(-1.0, 1.0, bins, "delta_e", gate.label(), plan), {}, {}};
  proto.hist.meta.params["gate"] = gate.label();

  auto result = run_chunked(plan, proto, [&](RngStream& rng, std::uint64_t count, DeltaEPartial& p) {
    for (std::uint64_t s = 0; s < count; ++s) {
      const PureState psi = haar_pure_state(dims, rng);
      const double before = pure_state_entanglement(psi).value;
      const double after = pure_state_entanglement(apply(u, psi)).value;
      const double d = check_delta_e(after - before);
      p.hist.add(d);
      p.delta.add(d);
      p.extremes.add(d);
    }
  });

  ExperimentReport r;
  r.experiment = "delta_e";
  add_plan_scalars(r, plan);
  add_mean(r, "mean_delta_e", result.delta);
  r.scalars["max_abs_delta_e"] = std::max(std::abs(result.extremes.min), std::abs(result.extremes.max));
  r.scalars["bin_width"] = result.hist.bin_width();
  r.histograms.push_back(std::move(result.hist));
  add_width(r, "width", r.histograms.front());
  r.runtime_seconds = seconds_since(start);
  return r;
}

// ---------------------------------------------------------------------------

namespace {

struct RandomPairPartial {
  Histogram hist;
  MeanAccumulator entanglement;
  MeanAccumulator delta;
  void merge(const RandomPairPartial& o) {
    hist.merge(o.hist);
    entanglement.merge(o.entanglement);
    delta.merge(o.delta);
  }
};

}  // namespace

ExperimentReport random_pair_distribution(std::size_t n_a, const SamplingPlan& plan, std::size_t bins) {
  if (n_a < 2 || n_a > 6) throw OutOfRange("random_pair_distribution: n_a must be in 2..6");
  const auto start = Clock::now();
  const FactoredDims dims{n_a, n_a};
  const std::string label = "na" + std::to_string(n_a);
  RandomPairPartial proto{make_histogram(-1.0, 1.0, bins, "random_pair", label, plan), {}, {}};
  proto.hist.meta.params["n_a"] = std::to_string(n_a);

  auto result = run_chunked(plan, proto, [&](RngStream& rng, std::uint64_t count, RandomPairPartial& p) {
    for (std::uint64_t s = 0; s < count; ++s) {
      const double e1 = pure_state_entanglement(haar_pure_state(dims, rng)).value;
      const double e2 = pure_state_entanglement(haar_pure_state(dims, rng)).value;
      const double d = check_delta_e(e2 - e1);
      p.hist.add(d);
      p.entanglement.add(e1);
      p.entanglement.add(e2);
      p.delta.add(d);
    }
  });

  ExperimentReport r;
  r.experiment = "random_pair";
  add_plan_scalars(r, plan);
  r.scalars["n_a"] = static_cast<double>(n_a);
  add_mean(r, "mean_e", result.entanglement);
  add_mean(r, "mean_delta_e", result.delta);
  r.scalars["bin_width"] = result.hist.bin_width();
  r.histograms.push_back(std::move(result.hist));
  add_width(r, "width", r.histograms.front());
  r.runtime_seconds = seconds_since(start);
  return r;
}

// ---------------------------------------------------------------------------

namespace {

struct PowerPartial {
  Histogram hist;
  MeanAccumulator e;
  void merge(const PowerPartial& o) {
    hist.merge(o.hist);
    e.merge(o.e);
  }
};

}  // namespace

ExperimentReport entangling_power(const GateSpec& gate, const SamplingPlan& plan) {
  const auto start = Clock::now();
  const ComplexMatrix u = gate.matrix();
  PowerPartial proto{make_histogram(0.0, 1.0, kEntanglementBins, "entangling_power", gate.label(), plan), {}};
  proto.hist.meta.params["gate"] = gate.label();

  auto result = run_chunked(plan, proto, [&](RngStream& rng, std::uint64_t count, PowerPartial& p) {
    for (std::uint64_t s = 0; s < count; ++s) {
      const PureState in = haar_product_pure(2, 2, rng);
      const double e = pure_state_entanglement(apply(u, in)).value;
      p.hist.add(e);
      p.e.add(e);
    }
  });

  ExperimentReport r;
  r.experiment = "entangling_power";
  add_plan_scalars(r, plan);
  add_mean(r, "epsilon_p", result.e);
  r.histograms.push_back(std::move(result.hist));
  r.runtime_seconds = seconds_since(start);
  return r;
}

// ---------------------------------------------------------------------------

std::string_view to_string(SweepBase base) { return base == SweepBase::kCnot ? "cnot" : "pi8"; }

SweepBase parse_sweep_base(std::string_view text) {
  if (text == "cnot") return SweepBase::kCnot;
  if (text == "pi8") return SweepBase::kPi8;
  throw ConfigError("unknown sweep base '" + std::string(text) + "' (expected cnot or pi8)");
}

double sweep_base_lambda(SweepBase base) {
  return base == SweepBase::kCnot ? std::numbers::pi / 4.0 : std::numbers::pi / 8.0;
}

namespace {

struct SweepPartial {
  std::vector<Histogram> hists;
  std::vector<MeanAccumulator> e;
  std::vector<MeanAccumulator> diff;
  void merge(const SweepPartial& o) {
    for (std::size_t k = 0; k < hists.size(); ++k) {
      hists[k].merge(o.hists[k]);
      e[k].merge(o.e[k]);
      diff[k].merge(o.diff[k]);
    }
  }
};

}  // namespace

std::vector<ExperimentReport> perturbation_sweep(SweepBase base, std::span<const double> xs,
                                                 const SamplingPlan& plan) {
  constexpr double kQuarterPi = std::numbers::pi / 4.0;
  for (double x : xs)
    if (!(x > -kQuarterPi && x <= kQuarterPi + 1e-15)) throw OutOfRange("perturbation_sweep: x outside (-pi/4, pi/4]");
  const auto start = Clock::now();
  const double l1 = sweep_base_lambda(base);
  const ComplexMatrix reference = canonical_gate(l1, 0.0, 0.0);
  std::vector<ComplexMatrix> gates;
  SweepPartial proto;
  for (double x : xs) {
    gates.push_back(canonical_gate(l1, x, x));
    auto h = make_histogram(0.0, 1.0, kEntanglementBins, "perturbation_sweep",
                            std::string(to_string(base)) + "_x" + format_real(x), plan);
    h.meta.params["x"] = format_real(x);
    h.meta.params["gate"] = GateSpec::canonical(l1, x, x).label();
    proto.hists.push_back(std::move(h));
  }
  proto.e.resize(xs.size());
  proto.diff.resize(xs.size());

  auto result = run_chunked(plan, proto, [&](RngStream& rng, std::uint64_t count, SweepPartial& p) {
    for (std::uint64_t s = 0; s < count; ++s) {
      const PureState in = haar_product_pure(2, 2, rng);
      const double e_ref = pure_state_entanglement(apply(reference, in)).value;
      for (std::size_t k = 0; k < gates.size(); ++k) {
        const double e = pure_state_entanglement(apply(gates[k], in)).value;
        p.hists[k].add(e);
        p.e[k].add(e);
        p.diff[k].add(e - e_ref);
      }
    }
  });

  const double elapsed = seconds_since(start);
  std::vector<ExperimentReport> out;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    ExperimentReport r;
    r.experiment = "perturbation_sweep";
    add_plan_scalars(r, plan);
    r.scalars["x"] = xs[k];
    r.scalars["lambda1"] = l1;
    r.scalars["lambda2"] = xs[k];
    r.scalars["lambda3"] = xs[k];
    add_mean(r, "epsilon_p", result.e[k]);
    add_mean(r, "delta_vs_base", result.diff[k]);
    r.histograms.push_back(std::move(result.hists[k]));
    r.runtime_seconds = elapsed;
    out.push_back(std::move(r));
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

struct MixedPartial {
  Histogram all, region1, region2;
  MeanAccumulator d_all, d_region1, d_region2;
  std::uint64_t candidates = 0;
  std::uint64_t entangled_after = 0;  // region II states that CNOT made NPT
  double max_purity_drift = 0.0;
  void merge(const MixedPartial& o) {
    all.merge(o.all);
    region1.merge(o.region1);
    region2.merge(o.region2);
    d_all.merge(o.d_all);
    d_region1.merge(o.d_region1);
    d_region2.merge(o.d_region2);
    candidates += o.candidates;
    entangled_after += o.entangled_after;
    max_purity_drift = std::max(max_purity_drift, o.max_purity_drift);
  }
};

}  // namespace

ExperimentReport cnot_mixed_distance(MetricKind metric, const SamplingPlan& plan, std::size_t bins) {
  const auto start = Clock::now();
  const ComplexMatrix gate = cnot();
  const FactoredDims dims{2, 2};
  const double hi = std::numbers::sqrt2;
  const std::string tag(to_string(metric));
  MixedPartial proto{make_histogram(0.0, hi, bins, "cnot_mixed_distance", "all", plan),
                     make_histogram(0.0, hi, bins, "cnot_mixed_distance", "region_I", plan),
                     make_histogram(0.0, hi, bins, "cnot_mixed_distance", "region_II", plan),
                     {}, {}, {}, 0, 0, 0.0};
  for (auto* h : {&proto.all, &proto.region1, &proto.region2}) {
    h->meta.params["metric"] = tag;
    h->meta.params["gate"] = "cnot";
  }

  auto result = run_chunked(plan, proto, [&](RngStream& rng, std::uint64_t count, MixedPartial& p) {
    for (std::uint64_t s = 0; s < count; ++s) {
      const SeparableDraw draw = separable_mixed_2q(rng);
      p.candidates += draw.candidates;
      const ComplexMatrix& rho = draw.state.matrix;
      const ComplexMatrix after = gate * rho * gate.adjoint();

      const double purity_before = purity(rho);
      const double drift = std::abs(purity(after) - purity_before);
      p.max_purity_drift = std::max(p.max_purity_drift, drift);
      if (drift > tol::kPurityConservation) {
        throw InvariantViolation("cnot_mixed_distance: purity changed by " + std::to_string(drift));
      }
      const bool in_ball = separable_ball_contains(rho);
      const bool ppt_after = is_ppt(after, dims);
      if (in_ball && !ppt_after) {
        throw InvariantViolation("cnot_mixed_distance: CNOT entangled a state inside the separable ball");
      }
      const double d = distance(metric, rho, after).value;
      p.all.add(d);
      p.d_all.add(d);
      if (in_ball) {
        p.region1.add(d);
        p.d_region1.add(d);
      } else {
        p.region2.add(d);
        p.d_region2.add(d);
        if (!ppt_after) ++p.entangled_after;
      }
    }
  });

  ExperimentReport r;
  r.experiment = "cnot_mixed_distance";
  add_plan_scalars(r, plan);
  add_mean(r, "mean_distance", result.d_all);
  add_mean(r, "mean_distance_region_I", result.d_region1);
  add_mean(r, "mean_distance_region_II", result.d_region2);
  const double n = static_cast<double>(plan.samples);
  const double frac1 = static_cast<double>(result.d_region1.count()) / n;
  r.scalars["fraction_region_I"] = frac1;
  r.scalars["fraction_region_I_stderr"] = std::sqrt(frac1 * (1.0 - frac1) / n);
  const double acceptance = n / static_cast<double>(result.candidates);
  r.scalars["separable_acceptance"] = acceptance;
  r.scalars["separable_acceptance_stderr"] =
      std::sqrt(acceptance * (1.0 - acceptance) / static_cast<double>(result.candidates));
  r.scalars["entangled_after_region_II"] = static_cast<double>(result.entangled_after);
  r.scalars["max_purity_drift"] = result.max_purity_drift;
  r.scalars["metric_is_bures"] = metric == MetricKind::kBures ? 1.0 : 0.0;
  r.histograms.push_back(std::move(result.all));
  r.histograms.push_back(std::move(result.region1));
  r.histograms.push_back(std::move(result.region2));
  r.runtime_seconds = seconds_since(start);
  return r;
}

// ---------------------------------------------------------------------------

namespace {

struct ResidualPartial {
  Histogram hist;
  MeanAccumulator dw;
  Extremes raw;
  void merge(const ResidualPartial& o) {
    hist.merge(o.hist);
    dw.merge(o.dw);
    raw.merge(o.raw);
  }
};

}  // namespace

ExperimentReport dw_distribution(const SamplingPlan& plan, std::size_t bins) {
  const auto start = Clock::now();
  const FactoredDims dims = FactoredDims::qubits(3);
  ResidualPartial proto{make_histogram(0.0, 1.0, bins, "dw_distribution", "dw", plan), {}, {}};

  auto result = run_chunked(plan, proto, [&](RngStream& rng, std::uint64_t count, ResidualPartial& p) {
    for (std::uint64_t s = 0; s < count; ++s) {
      const double raw = dw_residual_raw(haar_pure_state(dims, rng));
      if (raw < -tol::kBinOverflow || raw > 1.0 + tol::kBinOverflow) {
        throw InvariantViolation("dw_distribution: residual tangle " + std::to_string(raw) +
                                 " violates 0 <= d_W <= 1");
      }
      const double dw = std::clamp(raw, 0.0, 1.0);
      p.hist.add(dw);
      p.dw.add(dw);
      p.raw.add(raw);
    }
  });

  ExperimentReport r;
  r.experiment = "dw_distribution";
  add_plan_scalars(r, plan);
  add_mean(r, "mean_dw", result.dw);
  r.scalars["min_dw_raw"] = result.raw.min;
  r.scalars["max_dw_raw"] = result.raw.max;
  const auto& counts = result.hist.counts();
  const auto mode = static_cast<std::size_t>(std::max_element(counts.begin(), counts.end()) - counts.begin());
  r.scalars["mode_dw"] = result.hist.bin_center(mode);
  r.histograms.push_back(std::move(result.hist));
  r.runtime_seconds = seconds_since(start);
  return r;
}

// ---------------------------------------------------------------------------

namespace {

struct MultiPartial {
  std::vector<Histogram> hists;  // AB, [AC, BC], [random]
  std::vector<MeanAccumulator> delta;
  void merge(const MultiPartial& o) {
    for (std::size_t k = 0; k < hists.size(); ++k) {
      hists[k].merge(o.hists[k]);
      delta[k].merge(o.delta[k]);
    }
  }
};

double pair_eof(const std::vector<Complex>& psi, const FactoredDims& dims, std::size_t i, std::size_t j) {
  const std::size_t keep[] = {i, j};
  return entanglement_of_formation(reduced_density(psi, dims, keep)).value;
}

}  // namespace

ExperimentReport multiqubit_delta_e(std::size_t n_qubits, const SamplingPlan& plan,
                                    const MultiqubitOptions& options, const GateSpec& gate) {
  if (n_qubits < 2 || n_qubits > 4) throw OutOfRange("multiqubit_delta_e: n must be 2, 3 or 4");
  const auto start = Clock::now();
  const FactoredDims dims = FactoredDims::qubits(n_qubits);
  const ComplexMatrix u = embed_gate(gate.matrix(), 0, 1, n_qubits);

  struct Pair {
    std::string label;
    std::size_t i, j;
  };
  std::vector<Pair> pairs{{"AB", 0, 1}};
  if (n_qubits >= 3) {
    pairs.push_back({"AC", 0, 2});
    pairs.push_back({"BC", 1, 2});
  }

  MultiPartial proto;
  const std::string experiment = "multiqubit_delta_e";
  for (const auto& pr : pairs) proto.hists.push_back(make_histogram(-1.0, 1.0, options.bins, experiment, pr.label, plan));
  if (options.include_random) proto.hists.push_back(make_histogram(-1.0, 1.0, options.bins, experiment, "random", plan));
  for (auto& h : proto.hists) {
    h.meta.params["n_qubits"] = std::to_string(n_qubits);
    h.meta.params["gate"] = h.meta.label == "random" ? "none" : gate.label();
  }
  proto.delta.resize(proto.hists.size());

  auto result = run_chunked(plan, proto, [&](RngStream& rng, std::uint64_t count, MultiPartial& p) {
    for (std::uint64_t s = 0; s < count; ++s) {
      const PureState psi = haar_pure_state(dims, rng);
      const PureState out = apply(u, psi);
      double e_ab_before = 0.0;
      for (std::size_t k = 0; k < pairs.size(); ++k) {
        const double before = pair_eof(psi.amplitudes, dims, pairs[k].i, pairs[k].j);
        const double after = pair_eof(out.amplitudes, dims, pairs[k].i, pairs[k].j);
        if (k == 0) e_ab_before = before;
        const double d = check_delta_e(after - before);
        p.hists[k].add(d);
        p.delta[k].add(d);
      }
      if (options.include_random) {
        const PureState other = haar_pure_state(dims, rng);
        const double d = check_delta_e(pair_eof(other.amplitudes, dims, 0, 1) - e_ab_before);
        p.hists.back().add(d);
        p.delta.back().add(d);
      }
    }
  });

  ExperimentReport r;
  r.experiment = experiment;
  add_plan_scalars(r, plan);
  r.scalars["n_qubits"] = static_cast<double>(n_qubits);
  r.scalars["bin_width"] = result.hists.front().bin_width();
  for (std::size_t k = 0; k < result.hists.size(); ++k) {
    const std::string label = result.hists[k].meta.label;
    add_mean(r, "mean_delta_e_" + label, result.delta[k]);
    add_width(r, "width_" + label, result.hists[k]);
    r.histograms.push_back(std::move(result.hists[k]));
  }
  r.scalars["width"] = r.scalars.at("width_AB");
  r.runtime_seconds = seconds_since(start);
  return r;
}

// ---------------------------------------------------------------------------

PowerLawFit power_law_fit(std::span<const double> n_values, std::span<const double> widths) {
  if (n_values.size() != widths.size()) throw DimensionMismatch("power_law_fit: length mismatch");
  if (n_values.size() < 3) throw OutOfRange("power_law_fit: need at least 3 points");
  const std::size_t m = n_values.size();
  std::vector<double> x(m), y(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (!(widths[i] > 0.0)) throw NonPositiveWidth("power_law_fit: width must be positive");
    if (!(n_values[i] > 0.0)) throw OutOfRange("power_law_fit: N must be positive");
    x[i] = std::log(n_values[i]);
    y[i] = std::log(widths[i]);
  }
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(m);
  my /= static_cast<double>(m);
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0.0) throw OutOfRange("power_law_fit: N values must not all coincide");
  const double slope = sxy / sxx;
  PowerLawFit fit;
  fit.alpha = -slope;
  // Constant data is fit exactly by a zero slope.
  fit.r_squared = syy == 0.0 ? 1.0 : (sxy * sxy) / (sxx * syy);
  return fit;
}

// ---------------------------------------------------------------------------

namespace {

struct RadiusPartial {
  Extremes d;
  void merge(const RadiusPartial& o) { d.merge(o.d); }
};

}  // namespace

BuresBallRadius locate_bures_ball_radius(const SamplingPlan& plan) {
  const double target = std::sqrt(1.0 / 12.0);  // |lambda - 1/4| at purity 1/3
  const ComplexMatrix mixed = ComplexMatrix::identity(4) * 0.25;
  auto result = run_chunked(plan, RadiusPartial{}, [&](RngStream& rng, std::uint64_t count, RadiusPartial& p) {
    for (std::uint64_t s = 0; s < count; ++s) {
      auto w = uniform_simplex(4, rng).weights;
      double norm2 = 0.0;
      for (double x : w) norm2 += (x - 0.25) * (x - 0.25);
      if (norm2 == 0.0) continue;
      const double t = target / std::sqrt(norm2);
      bool valid = true;
      for (double& x : w) {
        x = 0.25 + t * (x - 0.25);
        if (x < 0.0) valid = false;
      }
      if (!valid) continue;
      p.d.add(bures_distance(ComplexMatrix::diagonal(w), mixed).value);
    }
  });
  return {result.d.min, result.d.max};
}

// ---------------------------------------------------------------------------

ExperimentReport run_parallel(const ExperimentSpec& spec, unsigned workers, std::uint64_t seed) {
  SamplingPlan plan;
  plan.seed = seed;
  plan.samples = spec.samples;
  plan.workers = workers;
  plan.chunk_size = spec.chunk_size;
  auto bins_or = [&](std::size_t fallback) { return spec.bins == 0 ? fallback : spec.bins; };
  switch (spec.id) {
    case ExperimentId::kDeltaE: return delta_e_distribution(spec.gate, plan, bins_or(kDeltaEBins));
    case ExperimentId::kRandomPair: return random_pair_distribution(spec.n_a, plan, bins_or(kDeltaEBins));
    case ExperimentId::kEntanglingPower: return entangling_power(spec.gate, plan);
    case ExperimentId::kMixedDistance: return cnot_mixed_distance(spec.metric, plan, bins_or(kDistanceBins));
    case ExperimentId::kResidual: return dw_distribution(plan, bins_or(kResidualBins));
    case ExperimentId::kMultiqubit: {
      MultiqubitOptions opt;
      opt.bins = bins_or(kDeltaEBins);
      return multiqubit_delta_e(spec.n_qubits, plan, opt, spec.gate);
    }
  }
  throw ConfigError("run_parallel: unknown experiment");
}

}  // namespace entpow
