#include "entpow/state.hpp"

#include <cmath>

#include "entpow/errors.hpp"

namespace entpow {

double PureState::norm() const {
  double s = 0.0;
  for (const auto& a : amplitudes) s += std::norm(a);
  return std::sqrt(s);
}

bool DensityMatrix::is_valid(double tol) const {
  if (matrix.dim() != dims.total()) return false;
  if (std::abs(matrix.trace() - 1.0) > tol) return false;
  return matrix.is_psd(tol);
}

PureState basis_state(const FactoredDims& dims, std::size_t index) {
  if (index >= dims.total()) throw IndexError("basis_state: index out of range");
  PureState psi{std::vector<Complex>(dims.total()), dims};
  psi.amplitudes[index] = 1.0;
  return psi;
}

PureState apply(const ComplexMatrix& u, const PureState& psi) {
  return {u * std::span<const Complex>(psi.amplitudes), psi.dims};
}

DensityMatrix conjugate_by(const ComplexMatrix& u, const DensityMatrix& rho) {
  return {u * rho.matrix * u.adjoint(), rho.dims};
}

}  // namespace entpow
