#pragma once

// Numerical tolerances shared by the library and its tests.

namespace entpow::tol {

inline constexpr double kHermitian = 1e-10;
inline constexpr double kUnitary = 1e-10;
inline constexpr double kGateUnitary = 1e-12;
inline constexpr double kTrace = 1e-10;
inline constexpr double kNorm = 1e-12;

// Eigenvalues in (-kPsdClamp, 0) are roundoff and clamp to 0; below that is an error.
inline constexpr double kPsdClamp = 1e-9;
// matrix_sqrt_psd treats eigenvalues below kSqrtZero * (largest |eigenvalue|) as 0.
inline constexpr double kSqrtZero = 1e-14;
// Minimum partial-transpose eigenvalue still counted as PPT.
inline constexpr double kPpt = 1e-12;
// Eigenvalues below this are treated as exact zeros in entropies.
inline constexpr double kEntropyZero = 1e-13;

inline constexpr double kJacobiOffDiagonal = 1e-12;
inline constexpr int kJacobiMaxSweeps = 100;

inline constexpr double kEigReconstruction = 1e-10;
inline constexpr double kMatrixSqrt = 1e-8;
inline constexpr double kPartialTranspose = 1e-14;
inline constexpr double kTraceConservation = 1e-12;

// Entanglement values in [-kClamp, 0) and (1, 1 + kClamp] are clamped.
inline constexpr double kClamp = 1e-10;
inline constexpr double kBures = 1e-9;
inline constexpr double kPurityConservation = 1e-12;
inline constexpr double kSeparableBall = 1e-12;
inline constexpr double kBinOverflow = 1e-9;
inline constexpr double kDensityNormalization = 1e-9;
inline constexpr double kGlobalPhase = 1e-12;

}  // namespace entpow::tol
