#include <doctest.h>

#include <numbers>

#include "entpow/errors.hpp"
#include "entpow/gates.hpp"
#include "entpow/linalg.hpp"
#include "support.hpp"

using namespace entpow;
using entpow::testing::bell_phi_plus;
using entpow::testing::make_state;
using entpow::testing::random_hermitian;

TEST_CASE("kron of identities and Paulis") {
  CHECK(kron(ComplexMatrix::identity(2), ComplexMatrix::identity(2)) == ComplexMatrix::identity(4));

  const auto xx = kron(pauli_x(), pauli_x());
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) CHECK(xx(r, c) == Complex(r + c == 3 ? 1.0 : 0.0));

  const auto yy = kron(pauli_y(), pauli_y());
  CHECK(max_abs_diff(yy * yy, ComplexMatrix::identity(4)) < 1e-15);
}

TEST_CASE("kron of vectors orders subsystem 0 first") {
  const std::vector<Complex> zero{1, 0}, one{0, 1};
  const auto v = kron(one, zero);  // |10>
  CHECK(v == std::vector<Complex>{0, 0, 1, 0});
}

TEST_CASE("hermitian_eig on simple inputs") {
  auto e = hermitian_eig(ComplexMatrix::diagonal({3, 1, 2}));
  REQUIRE(e.values.size() == 3);
  CHECK(e.values[0] == doctest::Approx(1.0));
  CHECK(e.values[1] == doctest::Approx(2.0));
  CHECK(e.values[2] == doctest::Approx(3.0));

  const auto x = hermitian_eigenvalues(pauli_x());
  CHECK(x[0] == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(x[1] == doctest::Approx(1.0).epsilon(1e-14));

  const auto y = hermitian_eigenvalues(pauli_y());
  CHECK(y[0] == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(y[1] == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("hermitian_eig reconstructs random matrices") {
  RngStream rng(11, 0);
  for (std::size_t n : {2u, 4u, 8u, 16u, 36u}) {
    const auto h = random_hermitian(n, rng);
    const auto e = hermitian_eig(h);
    CHECK(e.vectors.is_unitary(1e-10));
    ComplexMatrix rebuilt = e.vectors * ComplexMatrix::diagonal(e.values) * e.vectors.adjoint();
    CHECK(max_abs_diff(rebuilt, h) < 1e-10);
    for (std::size_t k = 1; k < n; ++k) CHECK(e.values[k - 1] <= e.values[k]);
  }
}

TEST_CASE("hermitian_eig handles degenerate spectra") {
  RngStream rng(12, 0);
  const auto u = haar_unitary(6, rng);
  const auto h = u * ComplexMatrix::diagonal({1, 1, 1, -2, -2, 5}) * u.adjoint();
  const auto e = hermitian_eig(h);
  CHECK(e.values[0] == doctest::Approx(-2.0).epsilon(1e-12));
  CHECK(e.values[2] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(e.values[5] == doctest::Approx(5.0).epsilon(1e-12));
  CHECK(max_abs_diff(e.vectors * ComplexMatrix::diagonal(e.values) * e.vectors.adjoint(), h) < 1e-10);
}

TEST_CASE("hermitian_eig rejects non-Hermitian input") {
  ComplexMatrix a{{1, 2}, {0, 1}};
  CHECK_THROWS_AS(hermitian_eig(a), NotHermitian);
}

TEST_CASE("matrix_sqrt_psd") {
  const auto quarter = ComplexMatrix::identity(4) * Complex(0.25);
  CHECK(max_abs_diff(matrix_sqrt_psd(quarter), ComplexMatrix::identity(4) * Complex(0.5)) < 1e-12);

  const auto p = bell_phi_plus().projector();
  CHECK(max_abs_diff(matrix_sqrt_psd(p), p) < 1e-8);

  CHECK(max_abs_diff(matrix_sqrt_psd(ComplexMatrix::diagonal({4, 1, 0, 0})),
                     ComplexMatrix::diagonal({2, 1, 0, 0})) < 1e-12);

  RngStream rng(13, 0);
  const auto rho = product_measure_mixed(4, rng).matrix;
  const auto s = matrix_sqrt_psd(rho);
  CHECK(max_abs_diff(s * s, rho) < 1e-8);

  CHECK_THROWS_AS(matrix_sqrt_psd(ComplexMatrix::diagonal({1, -0.5})), NotPSD);
}

TEST_CASE("partial_trace examples") {
  const FactoredDims d2{2, 2};
  CHECK(max_abs_diff(partial_trace(bell_phi_plus().projector(), d2, {0}),
                     ComplexMatrix::identity(2) * Complex(0.5)) < 1e-15);

  RngStream rng(14, 0);
  const auto ra = product_measure_mixed(2, rng).matrix;
  const auto rb = product_measure_mixed(3, rng).matrix;
  const auto rab = kron(ra, rb);
  CHECK(max_abs_diff(partial_trace(rab, {2, 3}, {0}), ra) < 1e-14);
  CHECK(max_abs_diff(partial_trace(rab, {2, 3}, {1}), rb) < 1e-14);

  // GHZ: keep {A,B} -> (|00><00| + |11><11|)/2
  const auto ghz = make_state({1, 0, 0, 0, 0, 0, 0, 1}, FactoredDims::qubits(3));
  const auto ab = partial_trace(ghz.projector(), ghz.dims, {0, 1});
  CHECK(max_abs_diff(ab, ComplexMatrix::diagonal({0.5, 0, 0, 0.5})) < 1e-15);

  CHECK_THROWS_AS(partial_trace(ab, {2, 3}, {0}), DimensionMismatch);
  CHECK_THROWS_AS(partial_trace(ab, d2, {2}), DimensionMismatch);
}

TEST_CASE("partial_trace matches a hand index sum on a random 3-qubit state") {
  RngStream rng(15, 0);
  const auto psi = haar_pure_state(FactoredDims::qubits(3), rng);
  const auto rho = psi.projector();
  // keep {0,2}: out(a c, a' c') = sum_b rho(a b c, a' b c')
  ComplexMatrix expect(4);
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t c = 0; c < 2; ++c)
      for (std::size_t a2 = 0; a2 < 2; ++a2)
        for (std::size_t c2 = 0; c2 < 2; ++c2)
          for (std::size_t b = 0; b < 2; ++b)
            expect(a * 2 + c, a2 * 2 + c2) += rho(a * 4 + b * 2 + c, a2 * 4 + b * 2 + c2);
  CHECK(max_abs_diff(partial_trace(rho, psi.dims, {0, 2}), expect) < 1e-15);
  CHECK(max_abs_diff(reduced_density(psi.amplitudes, psi.dims, {0, 2}), expect) < 1e-15);
  CHECK(max_abs_diff(reduced_density(psi.amplitudes, psi.dims, {1}), partial_trace(rho, psi.dims, {1})) < 1e-15);
}

TEST_CASE("partial_transpose") {
  const FactoredDims d2{2, 2};
  const auto bell = bell_phi_plus().projector();
  CHECK(min_partial_transpose_eigenvalue(bell, d2) == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK_FALSE(is_ppt(bell, d2));

  RngStream rng(16, 0);
  const auto prod = kron(product_measure_mixed(2, rng).matrix, product_measure_mixed(2, rng).matrix);
  CHECK(is_ppt(prod, d2));

  const auto rho = product_measure_mixed(FactoredDims{2, 3}, rng).matrix;
  CHECK(max_abs_diff(partial_transpose(partial_transpose(rho, {2, 3}, 1), {2, 3}, 1), rho) == 0.0);
  // transposing both factors is the full transpose
  CHECK(max_abs_diff(partial_transpose(partial_transpose(rho, {2, 3}, 0), {2, 3}, 1), rho.transpose()) == 0.0);
}

TEST_CASE("purity") {
  CHECK(purity(ComplexMatrix::identity(4) * Complex(0.25)) == doctest::Approx(0.25));
  CHECK(purity(bell_phi_plus().projector()) == doctest::Approx(1.0));
  CHECK(purity(ComplexMatrix::diagonal({0.5, 0.5, 0, 0})) == doctest::Approx(0.5));
  CHECK_THROWS_AS(purity(ComplexMatrix::identity(4)), OutOfRange);
}

TEST_CASE("singular_values") {
  const auto s = singular_values(ComplexMatrix{{0, 3}, {-2, 0}});
  CHECK(s[0] == doctest::Approx(3.0));
  CHECK(s[1] == doctest::Approx(2.0));

  RngStream rng(17, 0);
  ComplexMatrix a(4);
  for (auto& z : a.entries()) z = rng.complex_normal();
  const auto sv = singular_values(a);
  const auto w = hermitian_eigenvalues(a.adjoint() * a);
  for (std::size_t k = 0; k < 4; ++k) CHECK(sv[k] == doctest::Approx(std::sqrt(w[3 - k])).epsilon(1e-12));

  // rank one: the zero singular values stay at roundoff, not its square root
  const auto p = bell_phi_plus().projector();
  const auto sp = singular_values(p);
  CHECK(sp[0] == doctest::Approx(1.0));
  CHECK(sp[1] < 1e-14);
}
