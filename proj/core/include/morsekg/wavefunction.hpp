#pragma once

#include <vector>

#include "morsekg/potential.hpp"

namespace morsekg {

/// One row of the coefficient recurrence
///   X_n a_n + Y_{n+1} a_{n+1} + Z_{n+2} a_{n+2} = 0
/// with
///   X_n = 2q(2n + L + 1) - A3
///   Y_n = A2 + p(4n + 2L + 1)
///   Z_n = 4n(n + L) + 2L^2.
struct RecurrenceRow {
    int index = 0;
    cplx x, y, z;
};

RecurrenceRow recurrence_row(int n, const ReducedParams& rp, cplx L);

/// Truncated series solution
///   phi(z) = e^{p z + q z^2/2} sum_k a_k z^{2k + L + 1/2}
/// with a0 = 1 and the startup relation a1 = -Y0 a0 / Z1 (the first row
/// of the determinant condition). truncated_exactly is set when the two
/// coefficients past truncation_index are below 1e-9 of the largest
/// retained coefficient.
struct WavefunctionSeries {
    cplx p, q, L;
    std::vector<cplx> coefficients;  ///< a_0 .. a_N
    int truncation_index = 0;        ///< N
    bool truncated_exactly = false;
};

/// Build a_0..a_N from the startup relation and the recurrence.
/// Requires N >= 2. A vanishing pivot Z_k for a needed index k raises
/// DegenerateRecurrenceError naming k (except Z_1 = 0 with Y_0 = 0,
/// where a_1 = 0 is the truncating choice).
WavefunctionSeries build_series(const ReducedParams& rp, cplx L, int N);

/// Relative magnitude of the banded determinant
///   | Y_0 Z_1           |
///   | X_0 Y_1 Z_2       |
///   |     ...           |
///   |      X_{n-1} Y_n  |
/// scaled by the product of row magnitudes. Zero exactly when a
/// nontrivial coefficient vector (a_0..a_n, a_{n+1} = 0) exists.
double determinant_residual(const ReducedParams& rp, cplx L, int n);

/// Evaluate phi at z. z = 0 requires Re(L) + 1/2 > 0 (else
/// DivergenceError); the series limit there is 0.
cplx evaluate_phi(const WavefunctionSeries& ws, cplx z);

/// psi(x) = phi(e^{-beta x}) / sqrt(e^{-beta x}), x >= 0.
cplx evaluate_psi(const WavefunctionSeries& ws, double x, double beta);

/// Scale factor s such that the L2 norm of s*psi over x in [0, inf) is 1,
/// computed by adaptive quadrature through the z = e^{-beta x} map.
/// Requires a real-valued series with Re(L) > 0 (integrable tail).
double normalize_numeric(const WavefunctionSeries& ws, double beta);

}  // namespace morsekg
