#include "entpow/random.hpp"

#include <algorithm>
#include <cmath>

#include "entpow/errors.hpp"

namespace entpow {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

void require_dim(std::size_t dim, const char* who) {
  if (dim < 2) throw OutOfRange(std::string(who) + ": dimension must be >= 2");
}

}  // namespace

std::uint64_t derive_stream_seed(std::uint64_t seed, std::uint64_t stream_id) {
  return splitmix64(splitmix64(seed) ^ splitmix64(stream_id ^ 0x6a09e667f3bcc909ULL));
}

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_id)
    : seed_(seed), stream_id_(stream_id), engine_(derive_stream_seed(seed, stream_id)) {}

double RngStream::uniform() {
  // 53 random mantissa bits
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

Complex RngStream::complex_normal() {
  constexpr double kScale = 0.70710678118654752440;
  const double re = normal();
  const double im = normal();
  return {re * kScale, im * kScale};
}

PureState haar_pure_state(std::size_t dim, RngStream& rng) {
  return haar_pure_state(FactoredDims{dim}, rng);
}

PureState haar_pure_state(const FactoredDims& dims, RngStream& rng) {
  const std::size_t dim = dims.total();
  require_dim(dim, "haar_pure_state");
  PureState psi{std::vector<Complex>(dim), dims};
  double norm2 = 0.0;
  for (auto& a : psi.amplitudes) {
    a = rng.complex_normal();
    norm2 += std::norm(a);
  }
  const double inv = 1.0 / std::sqrt(norm2);
  for (auto& a : psi.amplitudes) a *= inv;
  return psi;
}

QrResult householder_qr(const ComplexMatrix& a) {
  const std::size_t n = a.dim();
  ComplexMatrix r = a;
  ComplexMatrix q = ComplexMatrix::identity(n);
  std::vector<Complex> v(n);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    double xnorm2 = 0.0;
    for (std::size_t i = k; i < n; ++i) xnorm2 += std::norm(r(i, k));
    const double xnorm = std::sqrt(xnorm2);
    if (xnorm == 0.0) continue;
    const Complex x0 = r(k, k);
    const Complex phase = std::abs(x0) > 0.0 ? x0 / std::abs(x0) : Complex(1.0);
    const Complex alpha = -phase * xnorm;

    // v = x - alpha e_k, normalized
    double vnorm2 = 0.0;
    for (std::size_t i = k; i < n; ++i) {
      v[i] = r(i, k) - (i == k ? alpha : Complex(0.0));
      vnorm2 += std::norm(v[i]);
    }
    if (vnorm2 == 0.0) continue;
    const double vinv = 1.0 / std::sqrt(vnorm2);
    for (std::size_t i = k; i < n; ++i) v[i] *= vinv;

    // r <- (I - 2 v v^dagger) r
    for (std::size_t c = 0; c < n; ++c) {
      Complex dot = 0.0;
      for (std::size_t i = k; i < n; ++i) dot += std::conj(v[i]) * r(i, c);
      for (std::size_t i = k; i < n; ++i) r(i, c) -= 2.0 * v[i] * dot;
    }
    // q <- q (I - 2 v v^dagger)
    for (std::size_t row = 0; row < n; ++row) {
      Complex dot = 0.0;
      for (std::size_t i = k; i < n; ++i) dot += q(row, i) * v[i];
      for (std::size_t i = k; i < n; ++i) q(row, i) -= 2.0 * dot * std::conj(v[i]);
    }
  }
  for (std::size_t rr = 1; rr < n; ++rr)
    for (std::size_t c = 0; c < rr; ++c) r(rr, c) = 0.0;
  return {std::move(q), std::move(r)};
}

ComplexMatrix haar_unitary(std::size_t dim, RngStream& rng) {
  require_dim(dim, "haar_unitary");
  ComplexMatrix g(dim);
  for (auto& z : g.entries()) z = rng.complex_normal();
  auto [q, r] = householder_qr(g);
  // Q -> Q diag(r_jj / |r_jj|) so that the factorization has a positive R diagonal.
  for (std::size_t c = 0; c < dim; ++c) {
    const Complex rjj = r(c, c);
    const Complex phase = std::abs(rjj) > 0.0 ? rjj / std::abs(rjj) : Complex(1.0);
    for (std::size_t row = 0; row < dim; ++row) q(row, c) *= phase;
  }
  return q;
}

SimplexPoint uniform_simplex(std::size_t n, RngStream& rng) {
  if (n == 0) throw OutOfRange("uniform_simplex: n must be >= 1");
  // Spacings of n-1 sorted uniforms on [0, 1].
  std::vector<double> cuts(n + 1);
  cuts[0] = 0.0;
  cuts[n] = 1.0;
  for (std::size_t i = 1; i < n; ++i) cuts[i] = rng.uniform();
  std::sort(cuts.begin() + 1, cuts.end() - 1);
  SimplexPoint p;
  p.weights.resize(n);
  for (std::size_t i = 0; i < n; ++i) p.weights[i] = cuts[i + 1] - cuts[i];
  return p;
}

DensityMatrix product_measure_mixed(std::size_t dim, RngStream& rng) {
  return product_measure_mixed(FactoredDims{dim}, rng);
}

DensityMatrix product_measure_mixed(const FactoredDims& dims, RngStream& rng) {
  const std::size_t dim = dims.total();
  require_dim(dim, "product_measure_mixed");
  const ComplexMatrix u = haar_unitary(dim, rng);
  const SimplexPoint lambda = uniform_simplex(dim, rng);
  ComplexMatrix rho(dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = r; c < dim; ++c) {
      Complex s = 0.0;
      for (std::size_t k = 0; k < dim; ++k) s += u(r, k) * lambda.weights[k] * std::conj(u(c, k));
      rho(r, c) = s;
      rho(c, r) = std::conj(s);
    }
  return {std::move(rho), dims};
}

PureState haar_product_pure(std::size_t dim_a, std::size_t dim_b, RngStream& rng) {
  const PureState a = haar_pure_state(dim_a, rng);
  const PureState b = haar_pure_state(dim_b, rng);
  return {kron(std::span<const Complex>(a.amplitudes), std::span<const Complex>(b.amplitudes)),
          FactoredDims{dim_a, dim_b}};
}

SeparableDraw separable_mixed_2q(RngStream& rng) {
  const FactoredDims two_qubits{2, 2};
  SeparableDraw draw;
  while (true) {
    ++draw.candidates;
    DensityMatrix rho = product_measure_mixed(two_qubits, rng);
    if (is_ppt(rho.matrix, two_qubits)) {
      draw.state = std::move(rho);
      return draw;
    }
  }
}

}  // namespace entpow
