#pragma once

// Monte Carlo experiments on gate-induced entanglement changes.
//
// Every experiment runs through run_chunked(), so reports are a pure function
// of the SamplingPlan's (seed, samples, chunk_size).

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "entpow/gates.hpp"
#include "entpow/histogram.hpp"
#include "entpow/metrics.hpp"
#include "entpow/parallel.hpp"

namespace entpow {

inline constexpr std::size_t kDeltaEBins = 201;
inline constexpr std::size_t kDistanceBins = 200;
inline constexpr std::size_t kResidualBins = 100;
inline constexpr std::size_t kEntanglementBins = 100;
inline constexpr std::size_t kFineDeltaEBins = 2001;

struct ExperimentReport {
  std::string experiment;
  std::vector<Histogram> histograms;  // [0] is the primary curve
  std::map<std::string, double> scalars;
  double runtime_seconds = 0.0;

  const Histogram& histogram() const { return histograms.front(); }
  /// Throws IndexError if no histogram carries the label.
  const Histogram& histogram(std::string_view label) const;
  /// Throws IndexError for a missing scalar.
  double scalar(std::string_view name) const;
};

struct WidthResult {
  double width = 0.0;            // max |center| over bins with density >= P(0)/2
  double full_spread = 0.0;      // rightmost - leftmost such center
  double reference_density = 0.0;
  double peak_to_reference = 1.0;
  bool reference_warning = false;  // global peak exceeds P(0) by more than 10%
};

/// Width of a ΔE density at half the height of the bin containing 0.
/// Throws EmptyReference when that bin is empty or 0 is outside the range.
WidthResult width_half_height(const Histogram& h);

/// ΔE = E(U psi) - E(psi) over Haar two-qubit pure states.
ExperimentReport delta_e_distribution(const GateSpec& gate, const SamplingPlan& plan,
                                      std::size_t bins = kDeltaEBins);

/// ΔE between two independent Haar states of an n_a x n_a system, E = S(rho_A)/log N_A.
ExperimentReport random_pair_distribution(std::size_t n_a, const SamplingPlan& plan,
                                          std::size_t bins = kDeltaEBins);

/// Mean output entanglement over Haar product inputs.
ExperimentReport entangling_power(const GateSpec& gate, const SamplingPlan& plan);

enum class SweepBase { kCnot, kPi8 };
std::string_view to_string(SweepBase base);
SweepBase parse_sweep_base(std::string_view text);
double sweep_base_lambda(SweepBase base);

/// Entangling power of canon(base, x, x) for each x. Every point sees the same
/// input states, and each report carries the paired difference against
/// canon(base, 0, 0) with its standard error.
std::vector<ExperimentReport> perturbation_sweep(SweepBase base, std::span<const double> xs,
                                                 const SamplingPlan& plan);

/// Distance d(rho, CNOT rho CNOT) over PPT-separable product-measure states,
/// split into the purity <= 1/3 ball ("region_I") and the rest ("region_II").
ExperimentReport cnot_mixed_distance(MetricKind metric, const SamplingPlan& plan,
                                     std::size_t bins = kDistanceBins);

/// Residual tangle over Haar three-qubit pure states.
ExperimentReport dw_distribution(const SamplingPlan& plan, std::size_t bins = kResidualBins);

struct MultiqubitOptions {
  std::size_t bins = kDeltaEBins;
  bool include_random = false;  // extra "random" curve: AB pair of two independent states
};

/// Pair-entanglement change (EoF) under gate (x) I on qubits (0,1) of Haar
/// n-qubit states, n in {2,3,4}. Curves "AB" and, for n >= 3, "AC" and "BC".
ExperimentReport multiqubit_delta_e(std::size_t n_qubits, const SamplingPlan& plan,
                                    const MultiqubitOptions& options = {},
                                    const GateSpec& gate = GateSpec::parse("cnot"));

struct PowerLawFit {
  double alpha = 0.0;
  double r_squared = 0.0;
};

/// Least-squares fit of log W = c - alpha log N. Throws NonPositiveWidth.
PowerLawFit power_law_fit(std::span<const double> n_values, std::span<const double> widths);

struct BuresBallRadius {
  double min = 0.0;
  double max = 0.0;
};

/// Range of Bures distances from I/4 to two-qubit states of purity exactly
/// 1/3, explored over random spectra (the distance depends on the spectrum only).
BuresBallRadius locate_bures_ball_radius(const SamplingPlan& plan);

enum class ExperimentId { kDeltaE, kRandomPair, kEntanglingPower, kMixedDistance, kResidual, kMultiqubit };

struct ExperimentSpec {
  ExperimentId id = ExperimentId::kDeltaE;
  GateSpec gate = GateSpec::parse("cnot");
  std::size_t bins = 0;  // 0 selects the experiment's default
  std::size_t n_a = 2;
  std::size_t n_qubits = 2;
  MetricKind metric = MetricKind::kBures;
  std::uint64_t samples = 100000;
  std::uint64_t chunk_size = 4096;
};

/// Runs one experiment split across `workers` threads with disjoint substreams.
ExperimentReport run_parallel(const ExperimentSpec& spec, unsigned workers, std::uint64_t seed);

}  // namespace entpow
