#pragma once

// Command-line front end: figure experiments, seeding, parallelism and
// CSV/JSON emission.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace entpow::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNumerical = 1;
inline constexpr int kExitConfig = 2;

struct RunConfig {
  std::string experiment;             // fig1..fig7b, epower, custom
  std::optional<std::string> gate;    // gate grammar string
  std::optional<std::uint64_t> samples;
  std::optional<std::size_t> bins;
  std::size_t bins_n4 = 2001;
  std::uint64_t seed = 1;
  unsigned workers = 1;
  std::uint64_t chunk_size = 4096;
  std::optional<std::size_t> na;
  std::optional<std::string> metric;  // bures | hs
  std::size_t qubits = 3;             // custom experiment register size
  std::vector<double> xs;             // fig2 sweep points; empty selects the default grid
  std::filesystem::path out;          // path prefix; empty selects ./<experiment>
};

const std::vector<std::string>& experiment_ids();

/// Runs the experiment and writes `<out>.json` plus one CSV per curve.
/// Returns kExitOk, kExitConfig for configuration errors or kExitNumerical
/// when a numerical invariant is violated. Diagnostics go to stderr.
int run(const RunConfig& config);

/// Parses argv (CLI11) and calls run().
int main_entry(int argc, char** argv);

}  // namespace entpow::cli
