#include "entpow/histogram.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "entpow/errors.hpp"
#include "entpow/tolerances.hpp"

namespace entpow {

Histogram::Histogram(double lo, double hi, std::size_t n_bins) : lo_(lo), hi_(hi), counts_(n_bins, 0) {
  if (n_bins == 0) throw OutOfRange("Histogram: need at least one bin");
  if (!(hi > lo)) throw OutOfRange("Histogram: need hi > lo");
}

std::size_t Histogram::bin_of(double x) const {
  if (!(x >= lo_ - tol::kBinOverflow && x <= hi_ + tol::kBinOverflow)) {
    throw BinOverflow("Histogram: sample " + std::to_string(x) + " outside [" + std::to_string(lo_) +
                      ", " + std::to_string(hi_) + "]");
  }
  const double pos = (x - lo_) / (hi_ - lo_) * static_cast<double>(counts_.size());
  if (pos <= 0.0) return 0;
  return std::min(static_cast<std::size_t>(pos), counts_.size() - 1);
}

void Histogram::add(double x) {
  ++counts_[bin_of(x)];
  ++total_;
}

void Histogram::merge(const Histogram& other) {
  if (other.lo_ != lo_ || other.hi_ != hi_ || other.counts_.size() != counts_.size()) {
    throw DimensionMismatch("Histogram::merge: binning differs");
  }
  for (std::size_t i = 0; i < counts_.size(); ++i) counts_[i] += other.counts_[i];
  total_ += other.total_;
}

double Histogram::bin_center(std::size_t i) const {
  return lo_ + (static_cast<double>(i) + 0.5) * bin_width();
}

double Histogram::density(std::size_t i) const {
  if (total_ == 0) return 0.0;
  return static_cast<double>(counts_[i]) / (static_cast<double>(total_) * bin_width());
}

std::vector<double> Histogram::densities() const {
  std::vector<double> d(counts_.size());
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = density(i);
  return d;
}

double Histogram::integral() const {
  double s = 0.0;
  for (std::size_t i = 0; i < counts_.size(); ++i) s += density(i) * bin_width();
  return s;
}

double MeanAccumulator::mean() const { return n_ == 0 ? 0.0 : sum_ / static_cast<double>(n_); }

double MeanAccumulator::variance() const {
  if (n_ < 2) return 0.0;
  const double n = static_cast<double>(n_);
  const double m = sum_ / n;
  return std::max(0.0, (sum_sq_ - n * m * m) / (n - 1.0));
}

double MeanAccumulator::stderr_of_mean() const {
  if (n_ < 2) return 0.0;
  return std::sqrt(variance() / static_cast<double>(n_));
}

HistogramComparison compare_histograms(const Histogram& a, const Histogram& b) {
  if (a.lo() != b.lo() || a.hi() != b.hi() || a.n_bins() != b.n_bins()) {
    throw DimensionMismatch("compare_histograms: binning differs");
  }
  if (a.total() == 0 || b.total() == 0) throw OutOfRange("compare_histograms: empty histogram");
  const double width = a.bin_width();
  const double na = static_cast<double>(a.total());
  const double nb = static_cast<double>(b.total());
  HistogramComparison out;
  for (std::size_t i = 0; i < a.n_bins(); ++i) {
    const double pa = static_cast<double>(a.counts()[i]) / na;
    const double pb = static_cast<double>(b.counts()[i]) / nb;
    // binomial standard error of each bin's density
    const double se = std::sqrt(pa * (1 - pa) / na + pb * (1 - pb) / nb) / width;
    const double diff = std::abs(pa - pb) / width;
    out.combined_stderr = std::max(out.combined_stderr, se);
    if (diff > out.sup_difference) {
      out.sup_difference = diff;
      out.worst_bin = i;
    }
  }
  return out;
}

}  // namespace entpow
