#pragma once

#include <cmath>
#include <vector>

#include "entpow/linalg.hpp"
#include "entpow/random.hpp"
#include "entpow/state.hpp"

namespace entpow::testing {

inline PureState make_state(std::vector<Complex> amps, FactoredDims dims) {
  double n = 0.0;
  for (const auto& a : amps) n += std::norm(a);
  for (auto& a : amps) a /= std::sqrt(n);
  return PureState{std::move(amps), std::move(dims)};
}

inline PureState bell_phi_plus() { return make_state({1, 0, 0, 1}, {2, 2}); }

inline ComplexMatrix werner(double p) {
  ComplexMatrix rho = bell_phi_plus().projector() * Complex(p);
  rho += ComplexMatrix::identity(4) * Complex((1.0 - p) / 4.0);
  return rho;
}

inline ComplexMatrix random_hermitian(std::size_t n, RngStream& rng) {
  ComplexMatrix h(n);
  for (std::size_t r = 0; r < n; ++r) {
    h(r, r) = rng.normal();
    for (std::size_t c = r + 1; c < n; ++c) {
      h(r, c) = rng.complex_normal();
      h(c, r) = std::conj(h(r, c));
    }
  }
  return h;
}

}  // namespace entpow::testing
