#pragma once

#include <vector>

#include "entpow/linalg.hpp"

namespace entpow {

/// Unit-norm state vector with its tensor-factor structure.
struct PureState {
  std::vector<Complex> amplitudes;
  FactoredDims dims;

  double norm() const;
  ComplexMatrix projector() const { return ComplexMatrix::outer(amplitudes, amplitudes); }
};

/// Hermitian, unit-trace, PSD matrix with its tensor-factor structure.
struct DensityMatrix {
  ComplexMatrix matrix;
  FactoredDims dims;

  static DensityMatrix from_pure(const PureState& psi) { return {psi.projector(), psi.dims}; }
  std::size_t dim() const { return matrix.dim(); }
  /// Hermitian, |Tr - 1| < tol and PSD within tol.
  bool is_valid(double tol) const;
};

/// |b_0 b_1 ...> on n qubits, qubit 0 most significant.
PureState basis_state(const FactoredDims& dims, std::size_t index);
/// U psi, keeping psi's factor structure.
PureState apply(const ComplexMatrix& u, const PureState& psi);
/// U rho U^dagger
DensityMatrix conjugate_by(const ComplexMatrix& u, const DensityMatrix& rho);

}  // namespace entpow
