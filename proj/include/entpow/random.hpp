#pragma once

// Seeded samplers for pure states, unitaries, simplex points and mixed states.

#include <cstdint>
#include <random>
#include <vector>

#include "entpow/linalg.hpp"
#include "entpow/state.hpp"

namespace entpow {

/// Independent random stream selected by (seed, stream_id). Identical pairs
/// replay identical draws; distinct stream ids give decorrelated streams.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream_id);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_id() const { return stream_id_; }

  /// Uniform in [0, 1).
  double uniform();
  double normal() { return normal_(engine_); }
  /// Standard complex Gaussian: real and imaginary parts N(0, 1/2).
  Complex complex_normal();

 private:
  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_;
};

/// Engine seed derived from (seed, stream_id) by SplitMix64 mixing.
std::uint64_t derive_stream_seed(std::uint64_t seed, std::uint64_t stream_id);

struct SimplexPoint {
  std::vector<double> weights;
};

PureState haar_pure_state(std::size_t dim, RngStream& rng);
/// Haar state on a space with the given factor structure.
PureState haar_pure_state(const FactoredDims& dims, RngStream& rng);
ComplexMatrix haar_unitary(std::size_t dim, RngStream& rng);
SimplexPoint uniform_simplex(std::size_t n, RngStream& rng);
/// rho = U diag(lambda) U^dagger with U Haar and lambda uniform on the simplex.
DensityMatrix product_measure_mixed(std::size_t dim, RngStream& rng);
DensityMatrix product_measure_mixed(const FactoredDims& dims, RngStream& rng);
/// |a> (x) |b> with independent Haar factors.
PureState haar_product_pure(std::size_t dim_a, std::size_t dim_b, RngStream& rng);

struct SeparableDraw {
  DensityMatrix state;
  std::uint64_t candidates = 0;  // product-measure draws consumed, including the accepted one
};

/// Product-measure two-qubit state conditioned on PPT (rejection sampling).
SeparableDraw separable_mixed_2q(RngStream& rng);

/// Householder QR of a square matrix: a = q r with q unitary, r upper triangular.
struct QrResult {
  ComplexMatrix q;
  ComplexMatrix r;
};
QrResult householder_qr(const ComplexMatrix& a);

}  // namespace entpow
