#pragma once

// Two-qubit gate constructors. Basis order |q0 q1>, q0 most significant.

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "entpow/linalg.hpp"

namespace entpow {

ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

ComplexMatrix cnot();
ComplexMatrix swap_gate();
/// Identity on the first two-dimensional block, rotation by theta on the second.
ComplexMatrix u_theta(double theta);

/// exp(-i lambda sigma_k (x) sigma_k) = cos(lambda) I - i sin(lambda) sigma_k (x) sigma_k.
ComplexMatrix canonical_factor(int k, double lambda);
/// exp(-i sum_k lambda_k sigma_k (x) sigma_k), built from the three commuting factors.
ComplexMatrix canonical_gate(double l1, double l2, double l3);

/// l1 >= l2 >= |l3|, l1, l2 in [0, pi/4], l3 in (-pi/4, pi/4].
bool check_lambda_domain(double l1, double l2, double l3);

/// v1 (x) v2. Throws NotUnitary.
ComplexMatrix local_gate(const ComplexMatrix& v1, const ComplexMatrix& v2);

/// 2^n x 2^n operator acting as u on qubits (i, j), i < j, and as identity elsewhere.
ComplexMatrix embed_gate(const ComplexMatrix& u, std::size_t i, std::size_t j, std::size_t n_qubits);

/// Local gates of the CNOT -> U_{pi/2} equivalence.
ComplexMatrix local_equivalence_left();
ComplexMatrix local_equivalence_right();

struct PhaseComparison {
  bool equal = false;
  double residual = 0.0;  // max-abs of a - phase * b
  Complex phase{1.0, 0.0};
};

/// Compares a and b modulo one global phase, taken from b's largest-modulus entry.
PhaseComparison equal_up_to_phase(const ComplexMatrix& a, const ComplexMatrix& b, double tol);

/// Checks left * CNOT * right == u_theta(pi/2) up to a global phase.
PhaseComparison verify_local_equivalence();
PhaseComparison verify_local_equivalence(const ComplexMatrix& left, const ComplexMatrix& right);

/// A gate given either as an explicit unitary or by canonical parameters.
class GateSpec {
 public:
  enum class Kind { kExplicit, kCanonical };

  static GateSpec explicit_matrix(ComplexMatrix m, std::string label);
  static GateSpec canonical(double l1, double l2, double l3);
  /// `cnot`, `swap`, `identity`, `utheta:<radians>`, `canon:<l1>,<l2>,<l3>`.
  /// Throws ConfigError on malformed input.
  static GateSpec parse(std::string_view text);

  Kind kind() const { return kind_; }
  const std::optional<ComplexMatrix>& matrix_spec() const { return matrix_; }
  const std::optional<std::array<double, 3>>& lambdas() const { return lambdas_; }
  const std::string& label() const { return label_; }
  /// The 4x4 unitary this spec denotes.
  ComplexMatrix matrix() const;

 private:
  Kind kind_ = Kind::kExplicit;
  std::optional<ComplexMatrix> matrix_;
  std::optional<std::array<double, 3>> lambdas_;
  std::string label_;
};

}  // namespace entpow
