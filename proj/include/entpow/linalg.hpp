#pragma once

// Dense complex linear algebra for the small matrices (dim <= 64) that carry
// states, gates and reduced operators.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace entpow {

using Complex = std::complex<double>;

/// Square, row-major complex matrix.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t dim);
  ComplexMatrix(std::size_t dim, std::vector<Complex> entries);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::span<const double> values);
  static ComplexMatrix diagonal(std::initializer_list<double> values);
  /// |v><w|
  static ComplexMatrix outer(std::span<const Complex> v, std::span<const Complex> w);

  std::size_t dim() const { return dim_; }
  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }
  std::span<const Complex> entries() const { return data_; }
  std::span<Complex> entries() { return data_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix conjugate() const;
  ComplexMatrix transpose() const;
  Complex trace() const;
  double max_abs() const;
  double frobenius_norm() const;

  bool is_hermitian(double tol) const;
  bool is_unitary(double tol) const;
  /// Hermitian with every eigenvalue >= -tol.
  bool is_psd(double tol) const;

  ComplexMatrix& operator+=(const ComplexMatrix& o);
  ComplexMatrix& operator-=(const ComplexMatrix& o);
  ComplexMatrix& operator*=(Complex s);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  friend std::vector<Complex> operator*(const ComplexMatrix& a, std::span<const Complex> v);
  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> data_;
};

/// Largest entrywise modulus of a - b.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// Subsystem dimensions of a tensor-product space; subsystem 0 is the most
/// significant digit of the computational-basis index.
class FactoredDims {
 public:
  FactoredDims() = default;
  FactoredDims(std::initializer_list<std::size_t> dims);
  explicit FactoredDims(std::vector<std::size_t> dims);

  static FactoredDims qubits(std::size_t n);

  std::size_t size() const { return dims_.size(); }
  std::size_t operator[](std::size_t i) const { return dims_[i]; }
  std::size_t total() const { return total_; }
  const std::vector<std::size_t>& dims() const { return dims_; }
  /// Dimensions of the listed subsystems, in the listed order.
  FactoredDims subset(std::span<const std::size_t> keep) const;

  friend bool operator==(const FactoredDims&, const FactoredDims&) = default;

 private:
  std::vector<std::size_t> dims_;
  std::size_t total_ = 1;
};

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
std::vector<Complex> kron(std::span<const Complex> a, std::span<const Complex> b);

struct HermitianEig {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // column k is the eigenvector of values[k]
};

/// Cyclic complex Jacobi diagonalization. Throws NotHermitian.
HermitianEig hermitian_eig(const ComplexMatrix& h);
/// Eigenvalues only (ascending).
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h);

/// Singular values in descending order, read from the spectrum of the
/// Hermitian dilation [[0, A], [A^dagger, 0]] so that small values keep
/// absolute accuracy.
std::vector<double> singular_values(const ComplexMatrix& a);

/// Principal square root of a PSD matrix. Eigenvalues at roundoff level
/// relative to the largest are treated as exact zeros. Throws NotPSD.
ComplexMatrix matrix_sqrt_psd(const ComplexMatrix& a);

/// Trace over every subsystem not in `keep`. The kept factors appear in
/// ascending index order in the result.
ComplexMatrix partial_trace(const ComplexMatrix& rho, const FactoredDims& dims,
                            std::span<const std::size_t> keep);
ComplexMatrix partial_trace(const ComplexMatrix& rho, const FactoredDims& dims,
                            std::initializer_list<std::size_t> keep);

/// Reduced density matrix of the pure state psi on the `keep` subsystems,
/// without materializing |psi><psi|.
ComplexMatrix reduced_density(std::span<const Complex> psi, const FactoredDims& dims,
                              std::span<const std::size_t> keep);
ComplexMatrix reduced_density(std::span<const Complex> psi, const FactoredDims& dims,
                              std::initializer_list<std::size_t> keep);

ComplexMatrix partial_transpose(const ComplexMatrix& rho, const FactoredDims& dims,
                                std::size_t subsystem);

/// Tr(rho^2). Requires unit trace.
double purity(const ComplexMatrix& rho);

/// Smallest eigenvalue of the partial transpose on the second factor of a
/// bipartite operator.
double min_partial_transpose_eigenvalue(const ComplexMatrix& rho, const FactoredDims& dims);
/// Positive partial transpose within tol::kPpt.
bool is_ppt(const ComplexMatrix& rho, const FactoredDims& dims);

}  // namespace entpow
