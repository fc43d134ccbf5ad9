#pragma once

// Text serialization of histograms and reports.
//
// CSV layout (one file per histogram):
//   # experiment: <id>
//   # label: <curve label>
//   # seed: <u64>
//   # samples: <histogram total>
//   # gate: <gate label or none>
//   # bins: <n>
//   # lo: <real>
//   # hi: <real>
//   # <param>: <value>        (remaining parameters, sorted by key)
//   bin_center,density
//   <17 significant digits>,<17 significant digits>   (one row per bin)

#include <filesystem>
#include <string>
#include <vector>

#include "entpow/experiments.hpp"
#include "entpow/histogram.hpp"

namespace entpow {

std::string histogram_csv(const Histogram& h);
/// Throws Error with the path on IO failure.
void write_csv(const Histogram& h, const std::filesystem::path& path);
void write_csv(const ExperimentReport& report, const std::filesystem::path& path);

struct CsvHistogram {
  std::vector<std::pair<std::string, std::string>> metadata;  // in file order
  std::vector<double> bin_centers;
  std::vector<double> densities;

  /// Throws Error for a missing key.
  const std::string& get(const std::string& key) const;
};

CsvHistogram parse_histogram_csv(const std::string& text);
CsvHistogram read_histogram_csv(const std::filesystem::path& path);

/// File name of one curve of a multi-curve report: `<prefix>_<label>.csv`,
/// or `<prefix>.csv` for single-curve reports.
std::filesystem::path curve_path(const std::filesystem::path& prefix, const std::string& label, bool single);

}  // namespace entpow
