#pragma once

#include <vector>

namespace morsekg {

/// Symmetric tridiagonal matrix: diag.size() = n, off.size() = n - 1.
struct SymTridiag {
    std::vector<double> diag;
    std::vector<double> off;
};

/// Number of eigenvalues strictly below x (Sturm sequence count with
/// the LAPACK-style pivot substitution).
int sturm_count(const SymTridiag& t, double x);

/// The k smallest eigenvalues, ascending, by bisection on the Sturm
/// count between the Gershgorin bounds.
std::vector<double> lowest_eigenvalues(const SymTridiag& t, int k);

/// Eigenvector for an eigenvalue estimate, by inverse iteration with a
/// partially pivoted tridiagonal factorization. Returned with unit
/// Euclidean norm.
std::vector<double> inverse_iteration(const SymTridiag& t, double lambda);

}  // namespace morsekg
