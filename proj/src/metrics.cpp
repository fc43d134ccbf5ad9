#include "entpow/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "entpow/errors.hpp"
#include "entpow/tolerances.hpp"

namespace entpow {

std::string_view to_string(MetricKind kind) {
  return kind == MetricKind::kBures ? "bures" : "hs";
}

MetricKind parse_metric(std::string_view text) {
  if (text == "bures") return MetricKind::kBures;
  if (text == "hs") return MetricKind::kHilbertSchmidt;
  throw ConfigError("unknown metric '" + std::string(text) + "' (expected bures or hs)");
}

double root_fidelity(const ComplexMatrix& r1, const ComplexMatrix& r2) {
  if (r1.dim() != r2.dim()) throw DimensionMismatch("root_fidelity: dims differ");
  // Tr sqrt(sqrt(r2) r1 sqrt(r2)) is the trace norm of sqrt(r1) sqrt(r2).
  const auto s = singular_values(matrix_sqrt_psd(r1) * matrix_sqrt_psd(r2));
  double tr = 0.0;
  for (double x : s) tr += x;
  return tr;
}

DistanceValue bures_distance(const ComplexMatrix& r1, const ComplexMatrix& r2) {
  const double f = root_fidelity(r1, r2);
  return {std::sqrt(std::max(0.0, 2.0 - 2.0 * f)), MetricKind::kBures};
}

DistanceValue hs_distance(const ComplexMatrix& r1, const ComplexMatrix& r2) {
  if (r1.dim() != r2.dim()) throw DimensionMismatch("hs_distance: dims differ");
  // Tr (r1 - r2)^2 = sum_ij (r1 - r2)_ij (r1 - r2)_ji
  const ComplexMatrix d = r1 - r2;
  Complex tr = 0.0;
  for (std::size_t i = 0; i < d.dim(); ++i)
    for (std::size_t j = 0; j < d.dim(); ++j) tr += d(i, j) * d(j, i);
  return {std::sqrt(std::abs(tr)), MetricKind::kHilbertSchmidt};
}

DistanceValue distance(MetricKind kind, const ComplexMatrix& r1, const ComplexMatrix& r2) {
  return kind == MetricKind::kBures ? bures_distance(r1, r2) : hs_distance(r1, r2);
}

bool separable_ball_contains(const ComplexMatrix& rho) {
  if (rho.dim() != 4) throw DimensionMismatch("separable_ball_contains: expects a 4x4 matrix");
  return purity(rho) <= 1.0 / 3.0 + tol::kSeparableBall;
}

double separable_ball_hs_radius() { return std::sqrt(1.0 / 12.0); }

}  // namespace entpow
