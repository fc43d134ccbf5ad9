#include "entpow/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "entpow/errors.hpp"
#include "entpow/tolerances.hpp"

namespace entpow {

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), data_(std::move(entries)) {
  if (data_.size() != dim * dim) {
    throw DimensionMismatch("ComplexMatrix: " + std::to_string(data_.size()) +
                            " entries for dim " + std::to_string(dim));
  }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : dim_(rows.size()) {
  data_.reserve(dim_ * dim_);
  for (const auto& row : rows) {
    if (row.size() != dim_) throw DimensionMismatch("ComplexMatrix: ragged initializer");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix m(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::initializer_list<double> values) {
  return diagonal(std::span<const double>(values.begin(), values.size()));
}

ComplexMatrix ComplexMatrix::outer(std::span<const Complex> v, std::span<const Complex> w) {
  if (v.size() != w.size()) throw DimensionMismatch("outer: vector sizes differ");
  ComplexMatrix m(v.size());
  for (std::size_t r = 0; r < v.size(); ++r)
    for (std::size_t c = 0; c < w.size(); ++c) m(r, c) = v[r] * std::conj(w[c]);
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix m(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) m(c, r) = std::conj((*this)(r, c));
  return m;
}

ComplexMatrix ComplexMatrix::conjugate() const {
  ComplexMatrix m(dim_);
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = std::conj(data_[i]);
  return m;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix m(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) m(c, r) = (*this)(r, c);
  return m;
}

Complex ComplexMatrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& z : data_) m = std::max(m, std::abs(z));
  return m;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& z : data_) s += std::norm(z);
  return std::sqrt(s);
}

bool ComplexMatrix::is_hermitian(double tol) const {
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = r; c < dim_; ++c)
      if (std::abs((*this)(r, c) - std::conj((*this)(c, r))) > tol) return false;
  return true;
}

bool ComplexMatrix::is_unitary(double tol) const {
  return max_abs_diff(adjoint() * (*this), identity(dim_)) <= tol;
}

bool ComplexMatrix::is_psd(double tol) const {
  if (!is_hermitian(tol)) return false;
  return hermitian_eigenvalues(*this).front() >= -tol;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
  if (o.dim_ != dim_) throw DimensionMismatch("matrix +: dims differ");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
  if (o.dim_ != dim_) throw DimensionMismatch("matrix -: dims differ");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
  for (auto& z : data_) z *= s;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim_ != b.dim_) throw DimensionMismatch("matrix *: dims differ");
  const std::size_t n = a.dim_;
  ComplexMatrix m(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex ark = a(r, k);
      if (ark == Complex(0.0)) continue;
      for (std::size_t c = 0; c < n; ++c) m(r, c) += ark * b(k, c);
    }
  }
  return m;
}

std::vector<Complex> operator*(const ComplexMatrix& a, std::span<const Complex> v) {
  if (a.dim_ != v.size()) throw DimensionMismatch("matrix-vector *: dims differ");
  std::vector<Complex> out(a.dim_);
  for (std::size_t r = 0; r < a.dim_; ++r) {
    Complex s = 0.0;
    for (std::size_t c = 0; c < a.dim_; ++c) s += a(r, c) * v[c];
    out[r] = s;
  }
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("max_abs_diff: dims differ");
  double m = 0.0;
  auto ea = a.entries();
  auto eb = b.entries();
  for (std::size_t i = 0; i < ea.size(); ++i) m = std::max(m, std::abs(ea[i] - eb[i]));
  return m;
}

// ---------------------------------------------------------------------------

FactoredDims::FactoredDims(std::initializer_list<std::size_t> dims)
    : FactoredDims(std::vector<std::size_t>(dims)) {}

FactoredDims::FactoredDims(std::vector<std::size_t> dims) : dims_(std::move(dims)) {
  for (auto d : dims_) {
    if (d == 0) throw DimensionMismatch("FactoredDims: zero-dimensional factor");
    total_ *= d;
  }
}

FactoredDims FactoredDims::qubits(std::size_t n) {
  return FactoredDims(std::vector<std::size_t>(n, 2));
}

FactoredDims FactoredDims::subset(std::span<const std::size_t> keep) const {
  std::vector<std::size_t> d;
  d.reserve(keep.size());
  for (auto k : keep) {
    if (k >= dims_.size()) throw DimensionMismatch("FactoredDims::subset: bad index");
    d.push_back(dims_[k]);
  }
  return FactoredDims(std::move(d));
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t na = a.dim(), nb = b.dim();
  ComplexMatrix m(na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j) {
      const Complex aij = a(i, j);
      for (std::size_t k = 0; k < nb; ++k)
        for (std::size_t l = 0; l < nb; ++l) m(i * nb + k, j * nb + l) = aij * b(k, l);
    }
  return m;
}

std::vector<Complex> kron(std::span<const Complex> a, std::span<const Complex> b) {
  std::vector<Complex> out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) out.push_back(x * y);
  return out;
}

// ---------------------------------------------------------------------------
// Jacobi eigensolver

namespace {

double off_diagonal_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.dim(); ++c)
      if (r != c) s += std::norm(a(r, c));
  return std::sqrt(s);
}

// Annihilates a(p,q) with the unitary G = D R, where D rephases column q so
// that a(p,q) becomes real and R is the real Jacobi rotation for that 2x2 block.
void jacobi_rotate(ComplexMatrix& a, ComplexMatrix* v, std::size_t p, std::size_t q) {
  const std::size_t n = a.dim();
  const Complex apq = a(p, q);
  const double g = std::abs(apq);
  const Complex phase = apq / g;  // e^{i phi}
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();

  const double theta = (aqq - app) / (2.0 * g);
  const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  // G columns: g_p = c e_p - s e^{-i phi} e_q ; g_q = s e_p + c e^{-i phi} e_q
  const Complex gqp = -s * std::conj(phase);
  const Complex gqq = c * std::conj(phase);

  // A <- A G
  for (std::size_t k = 0; k < n; ++k) {
    const Complex akp = a(k, p), akq = a(k, q);
    a(k, p) = akp * c + akq * gqp;
    a(k, q) = akp * s + akq * gqq;
  }
  // A <- G^dagger A
  for (std::size_t k = 0; k < n; ++k) {
    const Complex apk = a(p, k), aqk = a(q, k);
    a(p, k) = c * apk + std::conj(gqp) * aqk;
    a(q, k) = s * apk + std::conj(gqq) * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = app - t * g;
  a(q, q) = aqq + t * g;

  if (v != nullptr) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex vkp = (*v)(k, p), vkq = (*v)(k, q);
      (*v)(k, p) = vkp * c + vkq * gqp;
      (*v)(k, q) = vkp * s + vkq * gqq;
    }
  }
}

HermitianEig jacobi(const ComplexMatrix& h, bool want_vectors) {
  if (!h.is_hermitian(tol::kHermitian)) throw NotHermitian("hermitian_eig: input is not Hermitian");
  const std::size_t n = h.dim();
  ComplexMatrix a = h;
  // Symmetrize so that roundoff-level asymmetry does not leak into the result.
  for (std::size_t r = 0; r < n; ++r) {
    a(r, r) = a(r, r).real();
    for (std::size_t c = r + 1; c < n; ++c) {
      const Complex m = 0.5 * (a(r, c) + std::conj(a(c, r)));
      a(r, c) = m;
      a(c, r) = std::conj(m);
    }
  }
  ComplexMatrix v = want_vectors ? ComplexMatrix::identity(n) : ComplexMatrix();
  const double threshold = tol::kJacobiOffDiagonal * std::max(1.0, a.frobenius_norm());

  for (int sweep = 0; sweep < tol::kJacobiMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a) < threshold) break;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q)
        if (std::abs(a(p, q)) > 0.0) jacobi_rotate(a, want_vectors ? &v : nullptr, p, q);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

  HermitianEig out;
  out.values.reserve(n);
  for (auto i : order) out.values.push_back(a(i, i).real());
  if (want_vectors) {
    out.vectors = ComplexMatrix(n);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = v(r, order[k]);
  }
  return out;
}

}  // namespace

HermitianEig hermitian_eig(const ComplexMatrix& h) { return jacobi(h, true); }

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h) {
  return jacobi(h, false).values;
}

std::vector<double> singular_values(const ComplexMatrix& a) {
  const std::size_t n = a.dim();
  ComplexMatrix dilation(2 * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      dilation(r, n + c) = a(r, c);
      dilation(n + c, r) = std::conj(a(r, c));
    }
  const auto w = hermitian_eigenvalues(dilation);  // -s_1..-s_n, s_n..s_1
  std::vector<double> s(w.rbegin(), w.rbegin() + static_cast<std::ptrdiff_t>(n));
  for (auto& x : s) x = std::max(x, 0.0);
  return s;
}

ComplexMatrix matrix_sqrt_psd(const ComplexMatrix& a) {
  const auto eig = hermitian_eig(a);
  const std::size_t n = a.dim();
  const double scale = std::max(std::abs(eig.values.front()), std::abs(eig.values.back()));
  std::vector<double> roots(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double w = eig.values[k];
    if (w < -tol::kPsdClamp) {
      throw NotPSD("matrix_sqrt_psd: eigenvalue " + std::to_string(w));
    }
    roots[k] = w > tol::kSqrtZero * scale ? std::sqrt(w) : 0.0;
  }
  ComplexMatrix out(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = r; c < n; ++c) {
      Complex s = 0.0;
      for (std::size_t k = 0; k < n; ++k)
        s += eig.vectors(r, k) * roots[k] * std::conj(eig.vectors(c, k));
      out(r, c) = s;
      out(c, r) = std::conj(s);
    }
  return out;
}

// ---------------------------------------------------------------------------
// Subsystem index arithmetic

namespace {

struct SplitIndex {
  std::vector<std::size_t> kept;     // index into the kept-subsystem space
  std::vector<std::size_t> traced;   // index into the traced-subsystem space
  std::size_t kept_dim = 1;
};

std::vector<std::size_t> normalized_keep(const FactoredDims& dims,
                                         std::span<const std::size_t> keep) {
  if (keep.empty()) throw DimensionMismatch("partial trace: empty keep set");
  std::vector<std::size_t> k(keep.begin(), keep.end());
  std::sort(k.begin(), k.end());
  if (std::adjacent_find(k.begin(), k.end()) != k.end())
    throw DimensionMismatch("partial trace: duplicate subsystem index");
  if (k.back() >= dims.size()) throw DimensionMismatch("partial trace: subsystem index out of range");
  return k;
}

SplitIndex split_indices(const FactoredDims& dims, const std::vector<std::size_t>& keep) {
  const std::size_t n = dims.total();
  std::vector<bool> is_kept(dims.size(), false);
  for (auto k : keep) is_kept[k] = true;

  SplitIndex s;
  s.kept.resize(n);
  s.traced.resize(n);
  for (auto k : keep) s.kept_dim *= dims[k];

  std::vector<std::size_t> digits(dims.size());
  for (std::size_t idx = 0; idx < n; ++idx) {
    std::size_t rem = idx;
    for (std::size_t f = dims.size(); f-- > 0;) {
      digits[f] = rem % dims[f];
      rem /= dims[f];
    }
    std::size_t ki = 0, ti = 0;
    for (std::size_t f = 0; f < dims.size(); ++f) {
      if (is_kept[f]) {
        ki = ki * dims[f] + digits[f];
      } else {
        ti = ti * dims[f] + digits[f];
      }
    }
    s.kept[idx] = ki;
    s.traced[idx] = ti;
  }
  return s;
}

}  // namespace

ComplexMatrix partial_trace(const ComplexMatrix& rho, const FactoredDims& dims,
                            std::span<const std::size_t> keep) {
  if (dims.total() != rho.dim()) throw DimensionMismatch("partial_trace: dims do not match matrix");
  const auto k = normalized_keep(dims, keep);
  const auto s = split_indices(dims, k);
  const std::size_t n = rho.dim();
  ComplexMatrix out(s.kept_dim);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (s.traced[i] == s.traced[j]) out(s.kept[i], s.kept[j]) += rho(i, j);
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, const FactoredDims& dims,
                            std::initializer_list<std::size_t> keep) {
  return partial_trace(rho, dims, std::span<const std::size_t>(keep.begin(), keep.size()));
}

ComplexMatrix reduced_density(std::span<const Complex> psi, const FactoredDims& dims,
                              std::span<const std::size_t> keep) {
  if (dims.total() != psi.size()) throw DimensionMismatch("reduced_density: dims do not match state");
  const auto k = normalized_keep(dims, keep);
  const auto s = split_indices(dims, k);
  const std::size_t traced_dim = psi.size() / s.kept_dim;
  // Arrange amplitudes as a kept_dim x traced_dim matrix M; result is M M^dagger.
  std::vector<Complex> m(psi.size());
  for (std::size_t idx = 0; idx < psi.size(); ++idx) m[s.kept[idx] * traced_dim + s.traced[idx]] = psi[idx];
  ComplexMatrix out(s.kept_dim);
  for (std::size_t r = 0; r < s.kept_dim; ++r)
    for (std::size_t c = r; c < s.kept_dim; ++c) {
      Complex acc = 0.0;
      for (std::size_t t = 0; t < traced_dim; ++t) acc += m[r * traced_dim + t] * std::conj(m[c * traced_dim + t]);
      out(r, c) = acc;
      out(c, r) = std::conj(acc);
    }
  return out;
}

ComplexMatrix reduced_density(std::span<const Complex> psi, const FactoredDims& dims,
                              std::initializer_list<std::size_t> keep) {
  return reduced_density(psi, dims, std::span<const std::size_t>(keep.begin(), keep.size()));
}

ComplexMatrix partial_transpose(const ComplexMatrix& rho, const FactoredDims& dims,
                                std::size_t subsystem) {
  if (dims.total() != rho.dim()) throw DimensionMismatch("partial_transpose: dims do not match matrix");
  if (subsystem >= dims.size()) throw DimensionMismatch("partial_transpose: subsystem index out of range");
  std::size_t stride = 1;
  for (std::size_t f = subsystem + 1; f < dims.size(); ++f) stride *= dims[f];
  const std::size_t d = dims[subsystem];
  const std::size_t n = rho.dim();
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t di = (i / stride) % d;
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t dj = (j / stride) % d;
      // swap the subsystem digit between row and column
      const std::size_t src_i = i + (dj - di) * stride;
      const std::size_t src_j = j + (di - dj) * stride;
      out(i, j) = rho(src_i, src_j);
    }
  }
  return out;
}

double purity(const ComplexMatrix& rho) {
  if (std::abs(rho.trace() - 1.0) > tol::kTrace) throw OutOfRange("purity: trace is not 1");
  // Tr(rho^2) = sum |rho_ij|^2 for Hermitian rho
  double s = 0.0;
  for (const auto& z : rho.entries()) s += std::norm(z);
  return s;
}

double min_partial_transpose_eigenvalue(const ComplexMatrix& rho, const FactoredDims& dims) {
  if (dims.size() != 2) throw DimensionMismatch("min_partial_transpose_eigenvalue: needs two factors");
  return hermitian_eigenvalues(partial_transpose(rho, dims, 1)).front();
}

bool is_ppt(const ComplexMatrix& rho, const FactoredDims& dims) {
  return min_partial_transpose_eigenvalue(rho, dims) >= -tol::kPpt;
}

}  // namespace entpow
