#include "entpow/measures.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "entpow/errors.hpp"
#include "entpow/tolerances.hpp"

namespace entpow {

std::string_view to_string(MeasureKind kind) {
  switch (kind) {
    case MeasureKind::kNormalizedEntropy: return "normalized-entropy";
    case MeasureKind::kConcurrenceSquared: return "concurrence-squared";
    case MeasureKind::kEntanglementOfFormation: return "eof";
    case MeasureKind::kTangle: return "tangle";
    case MeasureKind::kResidual: return "residual";
  }
  return "unknown";
}

EntanglementValue make_entanglement_value(double raw, MeasureKind kind) {
  if (!(raw >= -tol::kClamp && raw <= 1.0 + tol::kClamp)) {
    throw OutOfRange(std::string(to_string(kind)) + " value " + std::to_string(raw) +
                     " outside [0, 1]");
  }
  return {std::clamp(raw, 0.0, 1.0), kind};
}

namespace {

double entropy_of_spectrum(const std::vector<double>& w) {
  double kept = 0.0;
  for (double x : w) {
    if (x < -tol::kPsdClamp) throw NotPSD("von_neumann_entropy: eigenvalue " + std::to_string(x));
    if (x >= tol::kEntropyZero) kept += x;
  }
  double s = 0.0;
  for (double x : w) {
    if (x < tol::kEntropyZero) continue;
    const double p = x / kept;
    s -= p * std::log2(p);
  }
  return std::max(s, 0.0);
}

void require_two_qubit(const ComplexMatrix& rho, const char* who) {
  if (rho.dim() != 4) throw DimensionMismatch(std::string(who) + ": expects a 4x4 two-qubit matrix");
}

const ComplexMatrix& sigma_y_sigma_y() {
  static const ComplexMatrix yy = [] {
    const ComplexMatrix y{{0.0, Complex(0, -1)}, {Complex(0, 1), 0.0}};
    return kron(y, y);
  }();
  return yy;
}

}  // namespace

double von_neumann_entropy(const ComplexMatrix& rho) {
  return entropy_of_spectrum(hermitian_eigenvalues(rho));
}

double von_neumann_entropy(const DensityMatrix& rho) { return von_neumann_entropy(rho.matrix); }

namespace {

EntanglementValue normalized_marginal_entropy(const PureState& psi, std::size_t keep) {
  if (psi.dims.size() != 2 || psi.dims[0] != psi.dims[1]) {
    throw DimensionMismatch("pure_state_entanglement: needs two equal factors");
  }
  if (psi.amplitudes.size() != psi.dims.total()) {
    throw DimensionMismatch("pure_state_entanglement: amplitude count does not match dims");
  }
  const std::size_t keep_set[] = {keep};
  const auto rho = reduced_density(psi.amplitudes, psi.dims, keep_set);
  const double s = von_neumann_entropy(rho) / std::log2(static_cast<double>(psi.dims[keep]));
  return make_entanglement_value(s, MeasureKind::kNormalizedEntropy);
}

}  // namespace

EntanglementValue pure_state_entanglement(const PureState& psi) {
  return normalized_marginal_entropy(psi, 0);
}

EntanglementValue pure_state_entanglement_from_b(const PureState& psi) {
  return normalized_marginal_entropy(psi, 1);
}

// The decreasing square roots lambda_i of the spectrum of rho*rho~ are the
// singular values of A = sqrt(rho) sqrt(rho~), and sqrt(rho~) = Y sqrt(rho)^* Y.
// They are read off as the top half of the spectrum of the Hermitian dilation
// [[0, A], [A^dagger, 0]], which keeps small lambda_i at absolute accuracy
// instead of taking square roots of roundoff-level eigenvalues.
double concurrence(const ComplexMatrix& rho) {
  require_two_qubit(rho, "concurrence");
  const ComplexMatrix& yy = sigma_y_sigma_y();
  const ComplexMatrix root = matrix_sqrt_psd(rho);
  const ComplexMatrix root_tilde = yy * root.conjugate() * yy;
  const ComplexMatrix a = root * root_tilde;

  const auto l = singular_values(a);
  return std::clamp(l[0] - l[1] - l[2] - l[3], 0.0, 1.0);
}

double concurrence(const DensityMatrix& rho) { return concurrence(rho.matrix); }

double binary_entropy(double x) {
  if (x <= 0.0 || x >= 1.0) return 0.0;
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

double eof_from_concurrence(double c) {
  if (!(c >= 0.0 && c <= 1.0)) throw OutOfRange("eof_from_concurrence: c outside [0, 1]");
  return binary_entropy(0.5 * (1.0 + std::sqrt(1.0 - c * c)));
}

EntanglementValue entanglement_of_formation(const ComplexMatrix& rho) {
  return make_entanglement_value(eof_from_concurrence(concurrence(rho)),
                                 MeasureKind::kEntanglementOfFormation);
}

EntanglementValue entanglement_of_formation(const DensityMatrix& rho) {
  return entanglement_of_formation(rho.matrix);
}

double tangle_one_vs_rest(const ComplexMatrix& rho_a) {
  if (rho_a.dim() != 2) throw DimensionMismatch("tangle_one_vs_rest: expects a 2x2 matrix");
  const Complex det = rho_a(0, 0) * rho_a(1, 1) - rho_a(0, 1) * rho_a(1, 0);
  return 4.0 * det.real();
}

double dw_residual_raw(const PureState& psi) {
  if (psi.amplitudes.size() != 8 || psi.dims != FactoredDims::qubits(3)) {
    throw DimensionMismatch("dw_residual: expects a three-qubit state with dims (2,2,2)");
  }
  const auto rho_a = reduced_density(psi.amplitudes, psi.dims, {0});
  const double c_ab = concurrence(reduced_density(psi.amplitudes, psi.dims, {0, 1}));
  const double c_ac = concurrence(reduced_density(psi.amplitudes, psi.dims, {0, 2}));
  return tangle_one_vs_rest(rho_a) - c_ab * c_ab - c_ac * c_ac;
}

EntanglementValue dw_residual(const PureState& psi) {
  return make_entanglement_value(dw_residual_raw(psi), MeasureKind::kResidual);
}

}  // namespace entpow
