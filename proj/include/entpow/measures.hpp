#pragma once

// Entanglement quantifiers. All logarithms are base 2.

#include <string_view>

#include "entpow/linalg.hpp"
#include "entpow/state.hpp"

namespace entpow {

enum class MeasureKind { kNormalizedEntropy, kConcurrenceSquared, kEntanglementOfFormation, kTangle, kResidual };

std::string_view to_string(MeasureKind kind);

/// A dimensionless entanglement value in [0, 1].
struct EntanglementValue {
  double value = 0.0;
  MeasureKind kind = MeasureKind::kNormalizedEntropy;
};

/// Clamps roundoff excursions within tol::kClamp of [0, 1]; throws
/// OutOfRange beyond that.
EntanglementValue make_entanglement_value(double raw, MeasureKind kind);

/// Eigenvalues below tol::kEntropyZero count as exact zeros.
double von_neumann_entropy(const ComplexMatrix& rho);
double von_neumann_entropy(const DensityMatrix& rho);

/// S(Tr_B |psi><psi|) / log2 N_A for a bipartite state with N_A = N_B.
EntanglementValue pure_state_entanglement(const PureState& psi);
/// Same value computed from the B marginal.
EntanglementValue pure_state_entanglement_from_b(const PureState& psi);

/// Wootters concurrence of a two-qubit state (product basis conjugation).
double concurrence(const ComplexMatrix& rho);
double concurrence(const DensityMatrix& rho);

/// Binary entropy h(x) in bits, with h(0) = h(1) = 0.
double binary_entropy(double x);
double eof_from_concurrence(double c);
EntanglementValue entanglement_of_formation(const ComplexMatrix& rho);
EntanglementValue entanglement_of_formation(const DensityMatrix& rho);

/// 4 det(rho_A) for a single-qubit state.
double tangle_one_vs_rest(const ComplexMatrix& rho_a);

/// 4 det rho_A - C^2(rho_AB) - C^2(rho_AC), unclamped.
double dw_residual_raw(const PureState& psi);
EntanglementValue dw_residual(const PureState& psi);

}  // namespace entpow
