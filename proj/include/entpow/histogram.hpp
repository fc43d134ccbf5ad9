#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace entpow {

struct HistogramMeta {
  std::string experiment;
  std::string label;
  std::uint64_t seed = 0;
  std::map<std::string, std::string> params;
};

/// Fixed-width bins over [lo, hi]. Samples within tol::kBinOverflow of the
/// range land in the edge bins; anything further out throws BinOverflow.
class Histogram {
 public:
  Histogram() = default;
  Histogram(double lo, double hi, std::size_t n_bins);

  void add(double x);
  /// Bin-wise count addition; binning must match exactly.
  void merge(const Histogram& other);

  std::size_t bin_of(double x) const;
  double lo() const { return lo_; }
  double hi() const { return hi_; }
  std::size_t n_bins() const { return counts_.size(); }
  double bin_width() const { return (hi_ - lo_) / static_cast<double>(counts_.size()); }
  double bin_center(std::size_t i) const;
  std::uint64_t total() const { return total_; }
  const std::vector<std::uint64_t>& counts() const { return counts_; }
  /// count_i / (total * bin_width); all zeros for an empty histogram.
  double density(std::size_t i) const;
  std::vector<double> densities() const;
  /// sum_i density_i * bin_width
  double integral() const;

  HistogramMeta meta;

 private:
  double lo_ = 0.0;
  double hi_ = 1.0;
  std::vector<std::uint64_t> counts_;
  std::uint64_t total_ = 0;
};

/// Sample mean with its standard error. Merging is exact count/sum addition.
class MeanAccumulator {
 public:
  void add(double x) {
    ++n_;
    sum_ += x;
    sum_sq_ += x * x;
  }
  void merge(const MeanAccumulator& o) {
    n_ += o.n_;
    sum_ += o.sum_;
    sum_sq_ += o.sum_sq_;
  }
  std::uint64_t count() const { return n_; }
  double mean() const;
  double variance() const;  // unbiased sample variance
  double stderr_of_mean() const;

 private:
  std::uint64_t n_ = 0;
  double sum_ = 0.0;
  double sum_sq_ = 0.0;
};

/// Sup-norm comparison of two densities on the same binning.
struct HistogramComparison {
  double sup_difference = 0.0;         // max_i |d1_i - d2_i|
  double combined_stderr = 0.0;        // max_i sqrt(se1_i^2 + se2_i^2)
  std::size_t worst_bin = 0;
  double ratio() const { return combined_stderr > 0 ? sup_difference / combined_stderr : 0.0; }
  bool agree(double n_sigma = 3.0) const { return sup_difference < n_sigma * combined_stderr; }
};

HistogramComparison compare_histograms(const Histogram& a, const Histogram& b);

}  // namespace entpow
