#pragma once

// Distances between density matrices.

#include <string_view>

#include "entpow/linalg.hpp"
#include "entpow/state.hpp"

namespace entpow {

enum class MetricKind { kBures, kHilbertSchmidt };

std::string_view to_string(MetricKind kind);
/// "bures" or "hs". Throws ConfigError.
MetricKind parse_metric(std::string_view text);

struct DistanceValue {
  double value = 0.0;
  MetricKind kind = MetricKind::kBures;
};

/// sqrt(2 - 2 Tr sqrt(sqrt(r2) r1 sqrt(r2))).
DistanceValue bures_distance(const ComplexMatrix& r1, const ComplexMatrix& r2);
/// sqrt(|Tr (r1 - r2)^2|).
DistanceValue hs_distance(const ComplexMatrix& r1, const ComplexMatrix& r2);
DistanceValue distance(MetricKind kind, const ComplexMatrix& r1, const ComplexMatrix& r2);

/// Root fidelity Tr sqrt(sqrt(r2) r1 sqrt(r2)).
double root_fidelity(const ComplexMatrix& r1, const ComplexMatrix& r2);

/// Two-qubit states with Tr rho^2 <= 1/3, all of which are separable.
bool separable_ball_contains(const ComplexMatrix& rho);

/// Hilbert-Schmidt radius of the separable ball around I/4: sqrt(1/3 - 1/4).
double separable_ball_hs_radius();

}  // namespace entpow
